#include "fcair/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>

#include "fcair/corpus.hpp"
#include "fcair/error.hpp"

namespace fcair::ontology {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key, const std::string& owner) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array())
        throw Error(ErrorCode::validation_error, "ontology node '" + owner + "': '" + key + "' must be an array");
    for (const auto& s : j[key]) {
        if (!s.is_string())
            throw Error(ErrorCode::validation_error,
                        "ontology node '" + owner + "': '" + key + "' entries must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

}  // namespace

OntologyTree OntologyTree::from_json(const json& doc) {
    const json* root = &doc;
    if (doc.is_array()) {
        if (doc.size() != 1)
            throw Error(ErrorCode::validation_error,
                        "ontology must have exactly one root, found " + std::to_string(doc.size()));
        root = &doc[0];
    }

    OntologyTree tree;
    // Terms on the current root-to-node path, for telling cycles from plain duplicates.
    std::vector<std::string> path;

    std::function<std::size_t(const json&, std::optional<std::size_t>)> visit =
        [&](const json& j, std::optional<std::size_t> parent) -> std::size_t {
        if (!j.is_object() || !j.contains("term") || !j["term"].is_string())
            throw Error(ErrorCode::validation_error, "ontology node without a string 'term'");
        OntologyNode node;
        node.term = corpus::normalize_phrase(j["term"].get<std::string>());
        if (node.term.empty()) throw Error(ErrorCode::validation_error, "ontology node with an empty term");
        for (auto& s : string_list(j, "synonyms", node.term)) node.synonyms.push_back(corpus::normalize_phrase(s));
        if (j.contains("attributes")) {
            if (!j["attributes"].is_array())
                throw Error(ErrorCode::validation_error,
                            "ontology node '" + node.term + "': 'attributes' must be an array");
            for (const auto& a : j["attributes"])
                node.attributes.push_back({a.value("name", std::string{}), a.value("type", std::string{})});
        }
        node.parent = parent;

        std::size_t index = tree.nodes_.size();
        std::vector<std::string> names{node.term};
        names.insert(names.end(), node.synonyms.begin(), node.synonyms.end());
        for (const auto& name : names) {
            if (std::find(path.begin(), path.end(), name) != path.end())
                throw Error(ErrorCode::validation_error, "ontology cycle: '" + name + "' is its own descendant");
            if (!tree.lookup_.emplace(name, index).second)
                throw Error(ErrorCode::validation_error, "duplicate ontology term '" + name + "'");
        }
        tree.nodes_.push_back(std::move(node));

        path.insert(path.end(), names.begin(), names.end());
        if (j.contains("children")) {
            if (!j["children"].is_array())
                throw Error(ErrorCode::validation_error,
                            "ontology node '" + tree.nodes_[index].term + "': 'children' must be an array");
            for (const auto& child : j["children"]) {
                std::size_t c = visit(child, index);
                tree.nodes_[index].children.push_back(c);
            }
        }
        path.resize(path.size() - names.size());
        return index;
    };
    visit(*root, std::nullopt);
    return tree;
}

OntologyTree OntologyTree::parse(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::parse_error, "ontology is not valid JSON");
    return from_json(doc);
}

OntologyTree OntologyTree::parse(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(std::string_view(text));
}

OntologyTree OntologyTree::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open ontology '" + path + "'");
    return parse(in);
}

json OntologyTree::to_json() const {
    std::function<json(std::size_t)> emit = [&](std::size_t i) {
        const auto& n = nodes_[i];
        json j = json::object();
        j["term"] = n.term;
        if (!n.synonyms.empty()) j["synonyms"] = n.synonyms;
        if (!n.attributes.empty()) {
            json attrs = json::array();
            for (const auto& a : n.attributes) attrs.push_back({{"name", a.name}, {"type", a.type}});
            j["attributes"] = std::move(attrs);
        }
        if (!n.children.empty()) {
            json kids = json::array();
            for (std::size_t c : n.children) kids.push_back(emit(c));
            j["children"] = std::move(kids);
        }
        return j;
    };
    return nodes_.empty() ? json() : emit(0);
}

void OntologyTree::write(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

std::optional<std::size_t> OntologyTree::locate(std::string_view term) const {
    auto it = lookup_.find(corpus::normalize_phrase(term));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> OntologyTree::vocabulary() const {
    std::vector<std::string> out;
    for (const auto& n : nodes_) {
        out.push_back(n.term);
        out.insert(out.end(), n.synonyms.begin(), n.synonyms.end());
    }
    return out;
}

std::set<std::string> generalize(const OntologyTree& tree, const std::set<std::string>& query) {
    std::set<std::string> out = query;
    for (const auto& term : query) {
        auto located = tree.locate(term);
        if (!located) continue;
        for (auto p = tree.node(*located).parent; p; p = tree.node(*p).parent) out.insert(tree.node(*p).term);
    }
    return out;
}

std::set<std::string> specialize(const OntologyTree& tree, const std::set<std::string>& query, SpecializeMode mode) {
    std::set<std::string> out = query;
    for (const auto& term : query) {
        auto located = tree.locate(term);
        if (!located) continue;
        std::vector<std::size_t> stack(tree.node(*located).children.begin(), tree.node(*located).children.end());
        while (!stack.empty()) {
            std::size_t n = stack.back();
            stack.pop_back();
            const auto& node = tree.node(n);
            if (mode == SpecializeMode::subtree || node.children.empty()) out.insert(node.term);
            stack.insert(stack.end(), node.children.begin(), node.children.end());
        }
    }
    return out;
}

}  // namespace fcair::ontology
