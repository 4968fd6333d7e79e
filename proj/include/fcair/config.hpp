#pragma once

#include <functional>
#include <optional>
#include <string>

namespace fcair {

struct Config {
    std::string listen = "127.0.0.1:8080";
    std::optional<std::string> corpus;
    std::optional<std::string> ontology;
    std::optional<std::string> stoplist;
    std::optional<std::string> index;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Process environment.
std::optional<std::string> getenv_lookup(const std::string& name);

/// Reads a JSON config file (keys: listen, corpus, ontology, stoplist, index),
/// then applies FCAIR_LISTEN, FCAIR_CORPUS, FCAIR_ONTOLOGY, FCAIR_STOPLIST and
/// FCAIR_INDEX overrides. Without a path only the environment is consulted.
Config load_config(const std::optional<std::string>& path, const EnvLookup& env = getenv_lookup);

/// Splits "host:port"; throws Error(invalid_argument) when malformed.
std::pair<std::string, int> parse_listen(const std::string& listen);

}  // namespace fcair
