#include "fcair/config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "fcair/error.hpp"

namespace fcair {

std::optional<std::string> getenv_lookup(const std::string& name) {
    if (const char* v = std::getenv(name.c_str()); v && *v) return std::string(v);
    return std::nullopt;
}

Config load_config(const std::optional<std::string>& path, const EnvLookup& env) {
    Config cfg;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw Error(ErrorCode::io_error, "cannot open config '" + *path + "'");
        auto j = nlohmann::json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw Error(ErrorCode::parse_error, "config '" + *path + "' is not a JSON object");
        auto read = [&](const char* key, std::optional<std::string>& dst) {
            if (j.contains(key) && j[key].is_string()) dst = j[key].get<std::string>();
        };
        if (j.contains("listen") && j["listen"].is_string()) cfg.listen = j["listen"].get<std::string>();
        read("corpus", cfg.corpus);
        read("ontology", cfg.ontology);
        read("stoplist", cfg.stoplist);
        read("index", cfg.index);
    }
    if (auto v = env("FCAIR_LISTEN")) cfg.listen = *v;
    if (auto v = env("FCAIR_CORPUS")) cfg.corpus = v;
    if (auto v = env("FCAIR_ONTOLOGY")) cfg.ontology = v;
    if (auto v = env("FCAIR_STOPLIST")) cfg.stoplist = v;
    if (auto v = env("FCAIR_INDEX")) cfg.index = v;
    return cfg;
}

std::pair<std::string, int> parse_listen(const std::string& listen) {
    auto colon = listen.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == listen.size())
        throw Error(ErrorCode::invalid_argument, "listen address must be host:port, got '" + listen + "'");
    int port = 0;
    try {
        std::size_t used = 0;
        port = std::stoi(listen.substr(colon + 1), &used);
        if (used != listen.size() - colon - 1) throw std::invalid_argument(listen);
    } catch (const std::exception&) {
        throw Error(ErrorCode::invalid_argument, "invalid port in '" + listen + "'");
    }
    if (port < 0 || port > 65535) throw Error(ErrorCode::invalid_argument, "port out of range in '" + listen + "'");
    return {listen.substr(0, colon), port};
}

}  // namespace fcair
