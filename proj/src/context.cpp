#include "fca/context.hpp"

#include <stdexcept>
#include <unordered_set>

#include "fca/errors.hpp"

namespace fca {

namespace {

void check_names(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty()) throw ParseError(ParseErrc::InvalidName, 0, std::string("empty ") + what + " name");
        if (!seen.insert(name).second)
            throw ParseError(ParseErrc::InvalidName, 0, std::string("duplicate ") + what + " name '" + name + "'");
    }
}

template <typename Set>
std::string join_names(const std::vector<std::string>& names, const Set& set, std::string_view sep) {
    std::string out;
    bool first = true;
    set.for_each([&](std::size_t i) {
        if (!first) out += sep;
        out += names[i];
        first = false;
    });
    return out;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> object_names, std::vector<std::string> attribute_names,
                             std::vector<AttrSet> rows)
    : object_names_(std::move(object_names)), attribute_names_(std::move(attribute_names)), rows_(std::move(rows)) {
    check_names(object_names_, "object");
    check_names(attribute_names_, "attribute");
    if (rows_.size() != object_names_.size())
        throw ParseError(ParseErrc::DimensionMismatch, 0, "incidence rows do not match object count");

    const std::size_t n_obj = object_names_.size();
    const std::size_t n_attr = attribute_names_.size();
    columns_.assign(n_attr, ObjSet(n_obj));
    for (std::size_t g = 0; g < n_obj; ++g) {
        if (rows_[g].universe() != n_attr)
            throw ParseError(ParseErrc::DimensionMismatch, 0, "incidence row width does not match attribute count");
        rows_[g].for_each([&](std::size_t m) {
            columns_[m].insert(g);
            ++incidence_count_;
        });
    }
}

std::optional<AttributeId> FormalContext::find_attribute(std::string_view name) const {
    for (std::size_t m = 0; m < attribute_names_.size(); ++m)
        if (attribute_names_[m] == name) return AttributeId{m};
    return std::nullopt;
}

std::optional<ObjectId> FormalContext::find_object(std::string_view name) const {
    for (std::size_t g = 0; g < object_names_.size(); ++g)
        if (object_names_[g] == name) return ObjectId{g};
    return std::nullopt;
}

// Both operators pick whichever storage view touches fewer words.

AttrSet FormalContext::derive_intent(const ObjSet& objs) const {
    assert(objs.universe() == num_objects());
    const std::size_t n_sel = objs.count();
    const std::size_t row_cost = n_sel * AttrSet::word_count(num_attributes());
    const std::size_t col_cost = num_attributes() * ObjSet::word_count(num_objects());
    if (row_cost <= col_cost) {
        AttrSet out = all_attributes();
        objs.for_each([&](std::size_t g) { out &= rows_[g]; });
        return out;
    }
    AttrSet out = no_attributes();
    for (std::size_t m = 0; m < num_attributes(); ++m)
        if (objs.is_subset_of(columns_[m])) out.insert(m);
    return out;
}

ObjSet FormalContext::derive_extent(const AttrSet& attrs) const {
    assert(attrs.universe() == num_attributes());
    const std::size_t n_sel = attrs.count();
    const std::size_t col_cost = n_sel * ObjSet::word_count(num_objects());
    const std::size_t row_cost = num_objects() * AttrSet::word_count(num_attributes());
    if (col_cost <= row_cost) {
        ObjSet out = all_objects();
        attrs.for_each([&](std::size_t m) { out &= columns_[m]; });
        return out;
    }
    ObjSet out = no_objects();
    for (std::size_t g = 0; g < num_objects(); ++g)
        if (attrs.is_subset_of(rows_[g])) out.insert(g);
    return out;
}

AttrSet FormalContext::close_attrs(const AttrSet& attrs) const { return derive_intent(derive_extent(attrs)); }

ObjSet FormalContext::close_objs(const ObjSet& objs) const { return derive_extent(derive_intent(objs)); }

Rational FormalContext::density() const {
    const std::size_t cells = num_objects() * num_attributes();
    if (cells == 0) throw DomainError(DomainErrc::EmptyContext, "density of a context with no cells");
    return Rational(static_cast<std::int64_t>(incidence_count_), static_cast<std::int64_t>(cells));
}

bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.object_names_ == b.object_names_ && a.attribute_names_ == b.attribute_names_ && a.rows_ == b.rows_;
}

std::string format_attrs(const FormalContext& ctx, const AttrSet& attrs, std::string_view sep) {
    return join_names(ctx.attribute_names(), attrs, sep);
}

std::string format_objs(const FormalContext& ctx, const ObjSet& objs, std::string_view sep) {
    return join_names(ctx.object_names(), objs, sep);
}

AttrSet attrs_by_name(const FormalContext& ctx, std::initializer_list<std::string_view> names) {
    AttrSet out = ctx.no_attributes();
    for (auto name : names) {
        const auto m = ctx.find_attribute(name);
        if (!m) throw std::out_of_range("unknown attribute '" + std::string(name) + "'");
        out.insert(m->index);
    }
    return out;
}

ObjSet objs_by_name(const FormalContext& ctx, std::initializer_list<std::string_view> names) {
    ObjSet out = ctx.no_objects();
    for (auto name : names) {
        const auto g = ctx.find_object(name);
        if (!g) throw std::out_of_range("unknown object '" + std::string(name) + "'");
        out.insert(g->index);
    }
    return out;
}

}  // namespace fca
