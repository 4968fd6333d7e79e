#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcair/context.hpp"
#include "fcair/corpus.hpp"
#include "fcair/lattice.hpp"
#include "fcair/ontology.hpp"

namespace fcair {

inline constexpr int index_format_version = 1;

/// A searchable index: the document/term context, its lattice, the display
/// metadata of the documents and the vocabulary settings used to build it.
struct Index {
    FormalContext context;
    ConceptLattice lattice;
    std::vector<corpus::Document> documents;  // same order as context objects; may be empty
    corpus::StopList stopwords;
    std::optional<ontology::OntologyTree> ontology;

    const corpus::Document* document(std::string_view id) const;
};

struct IndexSources {
    std::string corpus_path;  // corpus XML, or a Burmeister .cxt context
    std::optional<std::string> ontology_path;
    std::optional<std::string> stoplist_path;  // added to the built-in list
};

/// Parses, tokenizes and indexes a document corpus. Ontology terms are
/// matched as whole phrases against titles and become attributes.
Index build_index(std::vector<corpus::Document> documents, corpus::StopList stopwords,
                  std::optional<ontology::OntologyTree> tree = std::nullopt);
Index build_index(const IndexSources& sources);
/// Index over a bare context (no document metadata).
Index build_index(FormalContext ctx);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail = {};
};

/// Structural checks of a lattice against its context: closure of every
/// concept, distinct intents/extents, completeness, exact cover relation,
/// top and bottom. Cheap enough to run on every load.
std::vector<CheckResult> check_lattice(const FormalContext& ctx, const ConceptLattice& lat);

/// Throws Error(validation_error) naming the first failed check.
void validate(const Index& index);

nlohmann::json to_json(const Index& index);
/// Raw decoding; no lattice checks beyond index ranges.
Index from_json(const nlohmann::json& j);

/// Writes the versioned JSON format. Validates first; nothing is written on failure.
void save_index(const Index& index, std::ostream& out);
void save_index(const Index& index, const std::string& path);

enum class LoadCheck { full, none };
/// Reads and (by default) validates, raising corruption errors.
Index load_index(std::istream& in, LoadCheck check = LoadCheck::full);
Index load_index(const std::string& path, LoadCheck check = LoadCheck::full);

/// Lattice as order-independent JSON: concepts as sorted name lists, numbered
/// canonically, and covers between canonical ids.
nlohmann::json canonical_lattice_json(const FormalContext& ctx, const ConceptLattice& lat);

struct ReducedLabels {
    std::vector<std::vector<std::string>> attributes;  // per concept
    std::vector<std::vector<std::string>> objects;     // per concept
};

/// Each attribute at its attribute concept (largest extent containing it),
/// each object at its object concept (smallest extent containing it).
ReducedLabels reduced_labels(const FormalContext& ctx, const ConceptLattice& lat);

struct DotOptions {
    bool full_labels = false;  // list whole extents and intents instead of reduced labels
    std::string graph_name = "lattice";
};

/// Graphviz line diagram: one node per concept, one edge per cover, nodes of
/// equal intent size on the same rank, top drawn uppermost.
std::string export_dot(const Index& index, const DotOptions& options = {});

}  // namespace fcair
