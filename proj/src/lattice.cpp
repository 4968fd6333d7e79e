#include "fcair/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fcair/error.hpp"

namespace fcair {

namespace {

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
}

bool erase_sorted(std::vector<std::size_t>& v, std::size_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return false;
    v.erase(it);
    return true;
}

}  // namespace

const FormalConcept& ConceptLattice::concept_at(std::size_t c) const {
    if (c >= concepts_.size()) throw Error(ErrorCode::invalid_argument, "concept index out of range");
    return concepts_[c];
}

const std::vector<std::size_t>& ConceptLattice::upper(std::size_t c) const {
    if (c >= upper_.size()) throw Error(ErrorCode::invalid_argument, "concept index out of range");
    return upper_[c];
}

const std::vector<std::size_t>& ConceptLattice::lower(std::size_t c) const {
    if (c >= lower_.size()) throw Error(ErrorCode::invalid_argument, "concept index out of range");
    return lower_[c];
}

Neighbors ConceptLattice::neighbors(std::size_t c) const { return {upper(c), lower(c)}; }

std::size_t ConceptLattice::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& u : upper_) n += u.size();
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count());
    for (std::size_t c = 0; c < upper_.size(); ++c)
        for (std::size_t p : upper_[c]) out.emplace_back(c, p);
    return out;
}

std::size_t ConceptLattice::find_intent(const AttributeSet& intent) const {
    for (std::size_t c = 0; c < concepts_.size(); ++c)
        if (concepts_[c].intent == intent) return c;
    return concepts_.size();
}

ConceptLattice ConceptLattice::assemble(std::vector<FormalConcept> concepts,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                        std::size_t top, std::size_t bottom) {
    ConceptLattice lat;
    lat.concepts_ = std::move(concepts);
    lat.upper_.assign(lat.concepts_.size(), {});
    lat.lower_.assign(lat.concepts_.size(), {});
    for (auto [child, parent] : covers) {
        if (child >= lat.concepts_.size() || parent >= lat.concepts_.size())
            throw Error(ErrorCode::corruption, "cover edge references a missing concept");
        insert_sorted(lat.upper_[child], parent);
        insert_sorted(lat.lower_[parent], child);
    }
    lat.top_ = top;
    lat.bottom_ = bottom;
    return lat;
}

ConceptLattice empty_lattice(const FormalContext& ctx) {
    ConceptLattice lat;
    lat.concepts_.push_back({ObjectSet(ctx.object_count()), AttributeSet::full(ctx.attribute_count())});
    lat.upper_.emplace_back();
    lat.lower_.emplace_back();
    lat.top_ = lat.bottom_ = 0;
    if (ctx.object_count() != 0)
        throw Error(ErrorCode::invalid_argument, "empty_lattice requires a context without objects");
    return lat;
}

// Incremental insertion of one intent, after van der Merwe, Obiedkov and
// Kourie. Works on the lattice in place; concepts are identified by index.
class AddIntent {
public:
    explicit AddIntent(ConceptLattice& lat) : lat_(lat) {}

    std::size_t run(const AttributeSet& intent, std::size_t generator) {
        generator = maximal_concept(intent, generator);
        if (lat_.concepts_[generator].intent == intent) return generator;

        std::vector<std::size_t> new_parents;
        const std::vector<std::size_t> generator_parents = lat_.upper_[generator];
        for (std::size_t candidate : generator_parents) {
            if (!lat_.concepts_[candidate].intent.is_subset_of(intent))
                candidate = run(lat_.concepts_[candidate].intent & intent, candidate);

            const AttributeSet& cand_intent = lat_.concepts_[candidate].intent;
            bool add_parent = true;
            for (auto it = new_parents.begin(); it != new_parents.end();) {
                const AttributeSet& parent_intent = lat_.concepts_[*it].intent;
                if (cand_intent.is_subset_of(parent_intent)) {
                    add_parent = false;
                    break;
                }
                if (parent_intent.is_subset_of(cand_intent))
                    it = new_parents.erase(it);
                else
                    ++it;
            }
            if (add_parent) new_parents.push_back(candidate);
        }

        std::size_t created = lat_.concepts_.size();
        lat_.concepts_.push_back({lat_.concepts_[generator].extent, intent});
        lat_.upper_.emplace_back();
        lat_.lower_.emplace_back();
        for (std::size_t parent : new_parents) {
            unlink(generator, parent);
            link(created, parent);
        }
        link(generator, created);
        return created;
    }

private:
    std::size_t maximal_concept(const AttributeSet& intent, std::size_t generator) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t parent : lat_.upper_[generator]) {
                if (intent.is_subset_of(lat_.concepts_[parent].intent)) {
                    generator = parent;
                    moved = true;
                    break;
                }
            }
        }
        return generator;
    }

    void link(std::size_t child, std::size_t parent) {
        insert_sorted(lat_.upper_[child], parent);
        insert_sorted(lat_.lower_[parent], child);
    }

    void unlink(std::size_t child, std::size_t parent) {
        if (erase_sorted(lat_.upper_[child], parent)) erase_sorted(lat_.lower_[parent], child);
    }

    ConceptLattice& lat_;
};

std::size_t add_object(ConceptLattice& lat, FormalContext& ctx, std::string object, const AttributeSet& intent) {
    if (ctx.has_object(object))
        throw Error(ErrorCode::invalid_argument, "duplicate object identifier '" + object + "'");
    if (intent.size() != ctx.attribute_count())
        throw Error(ErrorCode::invalid_argument, "object row width does not match the attribute count");
    if (lat.concepts_.empty()) lat = empty_lattice(FormalContext(ctx.attributes()));

    std::size_t g = ctx.add_object(std::move(object), intent);
    for (auto& c : lat.concepts_) c.extent.resize(ctx.object_count());

    std::size_t object_concept = AddIntent(lat).run(intent, lat.bottom_);

    // The new object joins the extent of its concept and of every concept above.
    std::vector<char> seen(lat.concepts_.size(), 0);
    std::vector<std::size_t> stack{object_concept};
    seen[object_concept] = 1;
    while (!stack.empty()) {
        std::size_t c = stack.back();
        stack.pop_back();
        lat.concepts_[c].extent.set(g);
        for (std::size_t p : lat.upper_[c])
            if (!seen[p]) {
                seen[p] = 1;
                stack.push_back(p);
            }
    }

    std::size_t top = lat.top_;
    while (!lat.upper_[top].empty()) top = lat.upper_[top].front();
    lat.top_ = top;
    return object_concept;
}

std::size_t add_object(ConceptLattice& lat, FormalContext& ctx, std::string object,
                       const std::vector<std::string>& attributes) {
    if (ctx.has_object(object))
        throw Error(ErrorCode::invalid_argument, "duplicate object identifier '" + object + "'");
    return add_object(lat, ctx, std::move(object), ctx.attribute_set(attributes));
}

ConceptLattice build_lattice(const FormalContext& ctx) {
    FormalContext growing(ctx.attributes());
    ConceptLattice lat = empty_lattice(growing);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) add_object(lat, growing, ctx.object(g), ctx.row(g));
    return canonicalize(lat, growing);
}

ConceptLattice canonicalize(const ConceptLattice& lat, const FormalContext& ctx) {
    const std::size_t n = lat.concepts_.size();
    std::vector<std::vector<std::string>> keys(n);
    for (std::size_t c = 0; c < n; ++c) keys[c] = ctx.attribute_names(lat.concepts_[c].intent);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
        return keys[a] < keys[b];
    });
    std::vector<std::size_t> renumber(n);
    for (std::size_t i = 0; i < n; ++i) renumber[order[i]] = i;

    ConceptLattice out;
    out.concepts_.reserve(n);
    out.upper_.assign(n, {});
    out.lower_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) out.concepts_.push_back(lat.concepts_[order[i]]);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t p : lat.upper_[c]) out.upper_[renumber[c]].push_back(renumber[p]);
        for (std::size_t ch : lat.lower_[c]) out.lower_[renumber[c]].push_back(renumber[ch]);
    }
    for (auto& v : out.upper_) std::sort(v.begin(), v.end());
    for (auto& v : out.lower_) std::sort(v.begin(), v.end());
    out.top_ = renumber[lat.top_];
    out.bottom_ = renumber[lat.bottom_];
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> compute_covers(const std::vector<FormalConcept>& concepts) {
    const std::size_t n = concepts.size();
    std::vector<std::size_t> by_size(n);
    std::iota(by_size.begin(), by_size.end(), std::size_t{0});
    std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        return concepts[a].extent.count() < concepts[b].extent.count();
    });

    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t c = 0; c < n; ++c) {
        // Strict supersets in ascending extent size; a superset is a cover
        // iff it contains none of the covers found so far.
        std::vector<std::size_t> found;
        for (std::size_t d : by_size) {
            if (d == c || !concepts[c].extent.is_proper_subset_of(concepts[d].extent)) continue;
            bool minimal = std::none_of(found.begin(), found.end(), [&](std::size_t f) {
                return concepts[f].extent.is_subset_of(concepts[d].extent);
            });
            if (minimal) found.push_back(d);
        }
        for (std::size_t d : found) covers.emplace_back(c, d);
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx) {
    const std::size_t m = ctx.attribute_count();
    std::vector<FormalConcept> out;

    AttributeSet current = closure_attributes(ctx, AttributeSet(m));
    out.push_back({derive_extent(ctx, current), current});
    while (!current.all()) {
        bool advanced = false;
        for (std::size_t i = m; i-- > 0;) {
            if (current.test(i)) {
                current.reset(i);
                continue;
            }
            AttributeSet candidate = current;
            candidate.set(i);
            ObjectSet extent = derive_extent(ctx, candidate);
            AttributeSet closed = derive_intent(ctx, extent);
            // Lectic successor: closing must not add anything below i.
            if (closed.equal_below(current, i)) {
                current = std::move(closed);
                out.push_back({std::move(extent), current});
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

}  // namespace fcair
