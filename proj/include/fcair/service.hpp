#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "fcair/index.hpp"

namespace httplib {
class Server;
}

namespace fcair::service {

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

/// Sources for POST /api/index: file paths, inline content, or a mix.
struct IndexRequest {
    std::optional<std::string> corpus_path;
    std::optional<std::string> corpus_xml;
    std::optional<std::string> ontology_path;
    std::optional<std::string> ontology_text;
    std::optional<std::string> stoplist_path;
    std::optional<std::string> stoplist_text;
};

/// HTTP JSON front end over a shared, immutable index.
///
/// Requests read a snapshot of the active index; POST /api/index builds a new
/// one and swaps it in, so in-flight searches finish against the index they
/// started with. Error bodies are {"error": {"code": ..., "message": ...}}.
class Service {
public:
    explicit Service(std::shared_ptr<const Index> index = nullptr);

    std::shared_ptr<const Index> current() const;
    void replace(std::shared_ptr<const Index> index);

    ApiResponse post_index(const IndexRequest& request);
    ApiResponse get_lattice() const;
    ApiResponse get_concept(const std::string& id) const;
    ApiResponse post_search(const nlohmann::json& body) const;
    ApiResponse get_document(const std::string& id) const;
    ApiResponse get_ontology() const;

    /// Registers the /api routes on a server.
    void mount(httplib::Server& server);

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const Index> index_;
};

ApiResponse error_response(int status, std::string_view code, const std::string& message);

nlohmann::json index_summary(const Index& index);

}  // namespace fcair::service
