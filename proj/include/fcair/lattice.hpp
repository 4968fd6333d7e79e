#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fcair/context.hpp"

namespace fcair {

struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// c is a subconcept of d iff extent(c) is contained in extent(d).
inline bool is_subconcept(const FormalConcept& c, const FormalConcept& d) { return c.extent.is_subset_of(d.extent); }

struct Neighbors {
    std::vector<std::size_t> upper;
    std::vector<std::size_t> lower;
};

/// Concepts plus their Hasse diagram.
///
/// Concept indices are stable under add_object: concepts whose extent grows
/// are updated in place and new concepts are appended. build_lattice returns
/// the canonical numbering (see canonicalize).
class ConceptLattice {
public:
    ConceptLattice() = default;

    std::size_t size() const noexcept { return concepts_.size(); }
    const FormalConcept& concept_at(std::size_t c) const;
    const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }

    std::size_t top() const noexcept { return top_; }
    std::size_t bottom() const noexcept { return bottom_; }

    // Cover parents / children, sorted ascending.
    const std::vector<std::size_t>& upper(std::size_t c) const;
    const std::vector<std::size_t>& lower(std::size_t c) const;
    Neighbors neighbors(std::size_t c) const;

    std::size_t edge_count() const noexcept;
    // Cover edges as (child, parent), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    // Index of the concept with exactly this intent, or size() if absent.
    std::size_t find_intent(const AttributeSet& intent) const;

    /// Raw assembly used by deserialization; performs no validation.
    static ConceptLattice assemble(std::vector<FormalConcept> concepts,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers, std::size_t top,
                                   std::size_t bottom);

    friend bool operator==(const ConceptLattice&, const ConceptLattice&) = default;

private:
    friend ConceptLattice empty_lattice(const FormalContext& ctx);
    friend std::size_t add_object(ConceptLattice& lat, FormalContext& ctx, std::string object,
                                  const AttributeSet& intent);
    friend ConceptLattice canonicalize(const ConceptLattice& lat, const FormalContext& ctx);
    friend class AddIntent;

    std::vector<FormalConcept> concepts_;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<std::vector<std::size_t>> lower_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

/// Lattice of a context with no objects: the single concept (empty, M).
ConceptLattice empty_lattice(const FormalContext& ctx);

/// Inserts one object with its attribute row into both the context and the
/// lattice (AddIntent). Returns the index of the new object's concept, whose
/// intent equals `intent` exactly.
std::size_t add_object(ConceptLattice& lat, FormalContext& ctx, std::string object, const AttributeSet& intent);
std::size_t add_object(ConceptLattice& lat, FormalContext& ctx, std::string object,
                       const std::vector<std::string>& attributes);

/// Builds the lattice by inserting the objects of ctx one at a time, in
/// context order, then renumbers canonically.
ConceptLattice build_lattice(const FormalContext& ctx);

/// Renumbers concepts by (intent size, sorted intent names). The result
/// depends only on the concept set, not on insertion history.
ConceptLattice canonicalize(const ConceptLattice& lat, const FormalContext& ctx);

/// Cover relation of an arbitrary concept family, computed from extent
/// inclusion. Returns (child, parent) pairs, sorted.
std::vector<std::pair<std::size_t, std::size_t>> compute_covers(const std::vector<FormalConcept>& concepts);

/// Batch enumeration of all concepts in lectic order (NextClosure).
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx);

}  // namespace fcair
