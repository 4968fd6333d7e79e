#include "fcair/context.hpp"

#include <algorithm>

#include "fcair/error.hpp"

namespace fcair {

namespace {

void index_names(const std::vector<std::string>& names, std::unordered_map<std::string, std::size_t>& lookup,
                 const char* kind) {
    lookup.clear();
    lookup.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!lookup.emplace(names[i], i).second)
            throw Error(ErrorCode::invalid_argument, std::string("duplicate ") + kind + " identifier '" + names[i] + "'");
    }
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> attributes) : FormalContext({}, std::move(attributes)) {}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
    index_names(objects_, object_lookup_, "object");
    index_names(attributes_, attribute_lookup_, "attribute");
    rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
    columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
}

bool FormalContext::has_object(std::string_view name) const { return object_lookup_.contains(std::string(name)); }

bool FormalContext::has_attribute(std::string_view name) const {
    return attribute_lookup_.contains(std::string(name));
}

std::size_t FormalContext::object_index(std::string_view name) const {
    auto it = object_lookup_.find(std::string(name));
    if (it == object_lookup_.end())
        throw Error(ErrorCode::invalid_argument, "unknown object '" + std::string(name) + "'");
    return it->second;
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
    auto it = attribute_lookup_.find(std::string(name));
    if (it == attribute_lookup_.end())
        throw Error(ErrorCode::invalid_argument, "unknown attribute '" + std::string(name) + "'");
    return it->second;
}

void FormalContext::set_incident(std::size_t object, std::size_t attribute, bool value) {
    rows_.at(object).set(attribute, value);
    columns_.at(attribute).set(object, value);
}

std::size_t FormalContext::add_object(std::string name, const AttributeSet& intent) {
    if (intent.size() != attributes_.size())
        throw Error(ErrorCode::invalid_argument, "object row width does not match the attribute count");
    if (object_lookup_.contains(name))
        throw Error(ErrorCode::invalid_argument, "duplicate object identifier '" + name + "'");
    std::size_t idx = objects_.size();
    object_lookup_.emplace(name, idx);
    objects_.push_back(std::move(name));
    rows_.push_back(intent);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        columns_[j].resize(idx + 1);
        columns_[j].set(idx, intent.test(j));
    }
    return idx;
}

AttributeSet FormalContext::attribute_set(const std::vector<std::string>& names) const {
    AttributeSet out(attribute_count());
    for (const auto& n : names) out.set(attribute_index(n));
    return out;
}

ObjectSet FormalContext::object_set(const std::vector<std::string>& names) const {
    ObjectSet out(object_count());
    for (const auto& n : names) out.set(object_index(n));
    return out;
}

std::vector<std::string> FormalContext::attribute_names(const AttributeSet& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t j) { out.push_back(attributes_[j]); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> FormalContext::object_names(const ObjectSet& set) const {
    std::vector<std::string> out;
    set.for_each([&](std::size_t i) { out.push_back(objects_[i]); });
    std::sort(out.begin(), out.end());
    return out;
}

AttributeSet derive_intent(const FormalContext& ctx, const ObjectSet& objects) {
    AttributeSet out = AttributeSet::full(ctx.attribute_count());
    objects.for_each([&](std::size_t g) { out &= ctx.row(g); });
    return out;
}

ObjectSet derive_extent(const FormalContext& ctx, const AttributeSet& attributes) {
    ObjectSet out = ObjectSet::full(ctx.object_count());
    attributes.for_each([&](std::size_t m) { out &= ctx.column(m); });
    return out;
}

AttributeSet closure_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
    return derive_intent(ctx, derive_extent(ctx, attributes));
}

ObjectSet closure_objects(const FormalContext& ctx, const ObjectSet& objects) {
    return derive_extent(ctx, derive_intent(ctx, objects));
}

std::vector<std::string> derive_intent(const FormalContext& ctx, const std::vector<std::string>& objects) {
    return ctx.attribute_names(derive_intent(ctx, ctx.object_set(objects)));
}

std::vector<std::string> derive_extent(const FormalContext& ctx, const std::vector<std::string>& attributes) {
    return ctx.object_names(derive_extent(ctx, ctx.attribute_set(attributes)));
}

std::vector<std::string> closure_attributes(const FormalContext& ctx, const std::vector<std::string>& attributes) {
    return ctx.attribute_names(closure_attributes(ctx, ctx.attribute_set(attributes)));
}

}  // namespace fcair
