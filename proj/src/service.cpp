#include "fcair/service.hpp"

#include <httplib.h>

#include <sstream>

#include "fcair/error.hpp"
#include "fcair/query.hpp"

namespace fcair::service {

using nlohmann::json;

namespace {

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::not_found: return 404;
        case ErrorCode::no_known_terms: return 422;
        default: return 400;
    }
}

ApiResponse from_error(const Error& e) { return error_response(status_for(e.code()), to_string(e.code()), e.what()); }

ApiResponse no_index() { return error_response(503, "no_index", "no index is loaded"); }

json concept_json(const FormalContext& ctx, const ConceptLattice& lat, std::size_t c) {
    const auto& concept_ = lat.concepts()[c];
    return {{"id", c},
            {"intent", ctx.attribute_names(concept_.intent)},
            {"extent", ctx.object_names(concept_.extent)},
            {"upper", lat.upper(c)},
            {"lower", lat.lower(c)}};
}

std::optional<std::size_t> parse_id(const std::string& text) {
    if (text.empty() || text.size() > 18) return std::nullopt;
    std::size_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

void send(httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json");
}

template <typename F>
void guarded(httplib::Response& res, F&& f) {
    try {
        send(res, f());
    } catch (const Error& e) {
        send(res, from_error(e));
    } catch (const std::exception& e) {
        send(res, error_response(500, "internal", e.what()));
    }
}

}  // namespace

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
    return {status, {{"error", {{"code", std::string(code)}, {"message", message}}}}};
}

json index_summary(const Index& index) {
    return {{"objects", index.context.object_count()},
            {"attributes", index.context.attribute_count()},
            {"concepts", index.lattice.size()},
            {"edges", index.lattice.edge_count()},
            {"ontology", index.ontology.has_value()}};
}

Service::Service(std::shared_ptr<const Index> index) : index_(std::move(index)) {}

std::shared_ptr<const Index> Service::current() const {
    std::lock_guard lock(mutex_);
    return index_;
}

void Service::replace(std::shared_ptr<const Index> index) {
    std::lock_guard lock(mutex_);
    index_ = std::move(index);
}

ApiResponse Service::post_index(const IndexRequest& request) {
    try {
        std::optional<ontology::OntologyTree> tree;
        if (request.ontology_text)
            tree = ontology::OntologyTree::parse(*request.ontology_text);
        else if (request.ontology_path)
            tree = ontology::OntologyTree::load(*request.ontology_path);

        corpus::StopList stops = corpus::StopList::defaults();
        if (request.stoplist_text) {
            std::istringstream in(*request.stoplist_text);
            stops.merge(corpus::StopList::parse(in));
        } else if (request.stoplist_path) {
            stops.merge(corpus::StopList::load(*request.stoplist_path));
        }

        Index built;
        if (request.corpus_xml) {
            built = build_index(corpus::parse_corpus(std::string_view(*request.corpus_xml)), std::move(stops),
                                std::move(tree));
        } else if (request.corpus_path) {
            IndexSources sources{*request.corpus_path, request.ontology_path, request.stoplist_path};
            if (request.ontology_text || request.stoplist_text) {
                built = build_index(corpus::load_corpus(*request.corpus_path), std::move(stops), std::move(tree));
            } else {
                built = build_index(sources);
            }
        } else {
            return error_response(400, "invalid_argument", "a corpus path or corpus content is required");
        }
        auto shared = std::make_shared<const Index>(std::move(built));
        replace(shared);
        return {200, index_summary(*shared)};
    } catch (const Error& e) {
        return from_error(e);
    }
}

ApiResponse Service::get_lattice() const {
    auto index = current();
    if (!index) return no_index();
    const auto& ctx = index->context;
    const auto& lat = index->lattice;
    ReducedLabels labels = reduced_labels(ctx, lat);
    json concepts = json::array();
    for (std::size_t c = 0; c < lat.size(); ++c) {
        json j = concept_json(ctx, lat, c);
        j["labels"] = {{"attributes", labels.attributes[c]}, {"objects", labels.objects[c]}};
        concepts.push_back(std::move(j));
    }
    json covers = json::array();
    for (auto [child, parent] : lat.edges()) covers.push_back({child, parent});
    return {200, {{"concepts", std::move(concepts)}, {"covers", std::move(covers)}, {"top", lat.top()}, {"bottom", lat.bottom()}}};
}

ApiResponse Service::get_concept(const std::string& id) const {
    auto index = current();
    if (!index) return no_index();
    auto c = parse_id(id);
    if (!c || *c >= index->lattice.size()) return error_response(404, "not_found", "no concept with id '" + id + "'");
    return {200, concept_json(index->context, index->lattice, *c)};
}

ApiResponse Service::post_search(const json& body) const {
    auto index = current();
    if (!index) return no_index();
    try {
        if (!body.is_object() || !body.contains("terms") || !body["terms"].is_array())
            return error_response(400, "invalid_query", "body must be an object with a 'terms' array");
        query::Query q;
        for (const auto& t : body["terms"]) {
            if (!t.is_string()) return error_response(400, "invalid_query", "terms must be strings");
            q.terms.push_back(t.get<std::string>());
        }
        if (body.contains("mode")) {
            if (!body["mode"].is_string()) return error_response(400, "invalid_query", "mode must be a string");
            q.mode = query::parse_mode(body["mode"].get<std::string>());
        }

        auto outcome = query::search(*index, q);
        const auto& overlay = outcome.overlay;
        json out = query::to_json(outcome.result);
        for (auto& e : out["entries"]) {
            const auto* doc = index->document(e["doc"].get<std::string>());
            e["title"] = doc ? doc->title : "";
        }
        for (auto& step : out["trail"]) {
            std::size_t c = step["concept"].get<std::size_t>();
            step["intent"] = overlay.context.attribute_names(overlay.lattice.concepts()[c].intent);
            step["extent"] = overlay.context.object_names(overlay.lattice.concepts()[c].extent);
        }
        out["mode"] = std::string(query::to_string(q.mode));
        out["query_object"] = overlay.context.object(overlay.query_object);
        out["query_concept"] = concept_json(overlay.context, overlay.lattice, overlay.query_concept);
        return {200, std::move(out)};
    } catch (const Error& e) {
        return from_error(e);
    }
}

ApiResponse Service::get_document(const std::string& id) const {
    auto index = current();
    if (!index) return no_index();
    const auto* doc = index->document(id);
    if (!doc) return error_response(404, "not_found", "no document with id '" + id + "'");
    return {200, {{"id", doc->id}, {"title", doc->title}, {"authors", doc->authors}}};
}

ApiResponse Service::get_ontology() const {
    auto index = current();
    if (!index) return no_index();
    if (!index->ontology) return error_response(404, "not_found", "the index has no ontology");
    return {200, index->ontology->to_json()};
}

void Service::mount(httplib::Server& server) {
    server.Post("/api/index", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            IndexRequest request;
            if (req.is_multipart_form_data()) {
                auto field = [&](const char* name) -> std::optional<std::string> {
                    if (req.has_file(name)) return req.get_file_value(name).content;
                    return std::nullopt;
                };
                request.corpus_xml = field("corpus");
                request.ontology_text = field("ontology");
                request.stoplist_text = field("stoplist");
                if (!request.corpus_xml) request.corpus_path = field("corpus_path");
                if (!request.ontology_text) request.ontology_path = field("ontology_path");
                if (!request.stoplist_text) request.stoplist_path = field("stoplist_path");
            } else {
                json body = json::parse(req.body, nullptr, false);
                if (body.is_discarded() || !body.is_object())
                    return error_response(400, "invalid_argument", "body must be a JSON object");
                auto read = [&](const char* key) -> std::optional<std::string> {
                    if (body.contains(key) && body[key].is_string()) return body[key].get<std::string>();
                    return std::nullopt;
                };
                request.corpus_path = read("corpus_path");
                request.corpus_xml = read("corpus_xml");
                request.ontology_path = read("ontology_path");
                request.ontology_text = read("ontology");
                request.stoplist_path = read("stoplist_path");
                request.stoplist_text = read("stoplist");
            }
            return post_index(request);
        });
    });
    server.Get("/api/lattice", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] { return get_lattice(); });
    });
    server.Get(R"(/api/concepts/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return get_concept(req.matches[1]); });
    });
    server.Post("/api/search", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            json body = json::parse(req.body, nullptr, false);
            if (body.is_discarded()) return error_response(400, "invalid_query", "body is not valid JSON");
            return post_search(body);
        });
    });
    server.Get(R"(/api/documents/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { return get_document(req.matches[1]); });
    });
    server.Get("/api/ontology", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] { return get_ontology(); });
    });
}

}  // namespace fcair::service
