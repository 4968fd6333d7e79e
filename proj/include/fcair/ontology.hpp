#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace fcair::ontology {

struct Descriptor {
    std::string name;
    std::string type;

    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

struct OntologyNode {
    std::string term;
    std::vector<std::string> synonyms;
    std::vector<Descriptor> attributes;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;

    friend bool operator==(const OntologyNode&, const OntologyNode&) = default;
};

enum class SpecializeMode { subtree, leaves };

/// Rooted taxonomy, stored flat with node 0 as the root. Immutable once built.
///
/// File format (JSON): a node is an object
///   { "term": "...", "synonyms": [...], "attributes": [{"name": .., "type": ..}],
///     "children": [ node, ... ] }
/// where only "term" is required. The document is either one node or an
/// array holding exactly one node.
class OntologyTree {
public:
    static OntologyTree parse(std::istream& in);
    static OntologyTree parse(std::string_view text);
    static OntologyTree from_json(const nlohmann::json& j);
    static OntologyTree load(const std::string& path);

    nlohmann::json to_json() const;
    void write(std::ostream& out) const;

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t root() const noexcept { return 0; }
    const OntologyNode& node(std::size_t i) const { return nodes_.at(i); }
    const std::vector<OntologyNode>& nodes() const noexcept { return nodes_; }

    /// Node whose term or synonym equals the normalized input.
    std::optional<std::size_t> locate(std::string_view term) const;

    /// Every primary term and synonym (normalized).
    std::vector<std::string> vocabulary() const;

    friend bool operator==(const OntologyTree& a, const OntologyTree& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<OntologyNode> nodes_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

/// Adds the terms of every ancestor of each located query term, up to and
/// including the root. Unlocated terms pass through.
std::set<std::string> generalize(const OntologyTree& tree, const std::set<std::string>& query);

/// Adds the terms of the subtree below each located query term (every
/// descendant, or only leaves with SpecializeMode::leaves).
std::set<std::string> specialize(const OntologyTree& tree, const std::set<std::string>& query,
                                 SpecializeMode mode = SpecializeMode::subtree);

}  // namespace fcair::ontology
