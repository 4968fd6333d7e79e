#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcair/context.hpp"
#include "fcair/corpus.hpp"
#include "fcair/index.hpp"
#include "fcair/lattice.hpp"
#include "fcair/ontology.hpp"

namespace fcair::query {

enum class Mode { none, generalize, specialize };

std::string_view to_string(Mode mode) noexcept;
/// Accepts "none", "generalize", "specialize"; throws Error(invalid_query).
Mode parse_mode(std::string_view text);

struct Query {
    std::vector<std::string> terms;  // raw terms; see normalize_terms
    Mode mode = Mode::none;
};

/// Splits free text into raw terms. Quoted spans ('...' or "...") stay one
/// term and keep their quotes so normalize_terms treats them as phrases.
std::vector<std::string> split_query(std::string_view text);

/// Quoted terms and terms containing whitespace are phrases: lowercased and
/// whitespace-collapsed only. Everything else goes through the corpus
/// tokenizer and stop list.
std::set<std::string> normalize_terms(const std::vector<std::string>& raw, const corpus::StopList& stops);

/// Transient copy of an index lattice with the query inserted as an object.
struct Overlay {
    FormalContext context;
    ConceptLattice lattice;
    std::size_t query_object = 0;
    std::size_t query_concept = 0;
};

/// Identifier given to the inserted query; never clashes with a document.
std::string pseudo_object_id(const FormalContext& ctx);

Overlay insert_query(const ConceptLattice& lat, const FormalContext& ctx, const std::set<std::string>& terms);

struct RankedEntry {
    std::size_t rank = 0;
    std::string doc;

    friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct TrailStep {
    std::size_t concept_id = 0;  // overlay numbering
    std::size_t level = 0;
    std::vector<std::string> new_documents;

    friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

struct RankedResult {
    std::vector<RankedEntry> entries;
    std::vector<std::string> dropped_terms;
    std::vector<std::string> effective_terms;
    // Overlay concepts visited by the traversal, in visiting order.
    std::vector<TrailStep> trail;

    friend bool operator==(const RankedResult&, const RankedResult&) = default;
};

struct RankOptions {
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
};

/// Breadth-first walk over cover edges in both directions from the query
/// concept. Concepts whose intent misses every query term, and the top and
/// bottom concepts, are neither ranked nor walked through; the query concept
/// itself is always the level-0 start. A document's rank is the level of
/// the first visited concept containing it.
RankedResult rank_documents(const Overlay& overlay, const std::set<std::string>& query_terms,
                            const RankOptions& options = {});

struct SearchOptions {
    RankOptions rank;
    ontology::SpecializeMode specialize = ontology::SpecializeMode::subtree;
};

struct SearchOutcome {
    RankedResult result;
    Overlay overlay;
};

/// Normalize, reformulate, drop unknown terms, insert and rank. The index is
/// only read.
SearchOutcome search(const Index& index, const Query& q, const SearchOptions& options = {});

nlohmann::json to_json(const RankedResult& result);

}  // namespace fcair::query
