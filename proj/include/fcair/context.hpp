#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcair/bitset.hpp"

namespace fcair {

using ObjectSet = Bitset;     // indexed by object position
using AttributeSet = Bitset;  // indexed by attribute position

/// Binary object/attribute incidence relation (G, M, I).
///
/// Rows and columns are both kept as bit vectors so that either derivation
/// operator is a word-parallel intersection. The attribute universe is fixed
/// at construction; objects may be appended.
class FormalContext {
public:
    FormalContext() = default;
    explicit FormalContext(std::vector<std::string> attributes);
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t attribute_count() const noexcept { return attributes_.size(); }

    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const std::vector<std::string>& attributes() const noexcept { return attributes_; }
    const std::string& object(std::size_t i) const { return objects_.at(i); }
    const std::string& attribute(std::size_t j) const { return attributes_.at(j); }

    bool has_object(std::string_view name) const;
    bool has_attribute(std::string_view name) const;
    // Throw Error(invalid_argument) for unknown names.
    std::size_t object_index(std::string_view name) const;
    std::size_t attribute_index(std::string_view name) const;

    bool incident(std::size_t object, std::size_t attribute) const { return rows_[object].test(attribute); }
    void set_incident(std::size_t object, std::size_t attribute, bool value = true);

    const AttributeSet& row(std::size_t object) const { return rows_.at(object); }
    const ObjectSet& column(std::size_t attribute) const { return columns_.at(attribute); }

    /// Appends an object with the given attribute row; returns its index.
    std::size_t add_object(std::string name, const AttributeSet& intent);

    AttributeSet empty_intent() const { return AttributeSet(attribute_count()); }
    ObjectSet empty_extent() const { return ObjectSet(object_count()); }

    AttributeSet attribute_set(const std::vector<std::string>& names) const;
    ObjectSet object_set(const std::vector<std::string>& names) const;
    std::vector<std::string> attribute_names(const AttributeSet& set) const;
    std::vector<std::string> object_names(const ObjectSet& set) const;

    friend bool operator==(const FormalContext& a, const FormalContext& b) {
        return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
    }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> columns_;
    std::unordered_map<std::string, std::size_t> object_lookup_;
    std::unordered_map<std::string, std::size_t> attribute_lookup_;
};

// Derivation operators. A' = attributes shared by every object of A,
// B' = objects having every attribute of B.
AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& objects);
ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& attributes);
AttributeSet closure_attributes(const FormalContext& ctx, const AttributeSet& attributes);
ObjectSet closure_objects(const FormalContext& ctx, const ObjectSet& objects);

// Name-based overloads; unknown identifiers raise Error(invalid_argument).
std::vector<std::string> derive_intent(const FormalContext& ctx, const std::vector<std::string>& objects);
std::vector<std::string> derive_extent(const FormalContext& ctx, const std::vector<std::string>& attributes);
std::vector<std::string> closure_attributes(const FormalContext& ctx, const std::vector<std::string>& attributes);

}  // namespace fcair
