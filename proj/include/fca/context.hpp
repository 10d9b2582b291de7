#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "fca/bitset.hpp"

namespace fca {

using Rational = boost::rational<std::int64_t>;

struct ObjectId {
    std::size_t index;
    auto operator<=>(const ObjectId&) const = default;
};

struct AttributeId {
    std::size_t index;
    auto operator<=>(const AttributeId&) const = default;
};

/// A binary formal context (G, M, I).
///
/// The incidence is held twice: one attribute set per object (rows) and one
/// object set per attribute (columns), so both derivation operators work a
/// machine word at a time. Immutable once constructed.
class FormalContext {
public:
    FormalContext() = default;

    /// `rows[g]` is the attribute set of object g. Names must be unique and
    /// non-empty within each list; throws ParseError(InvalidName) otherwise.
    FormalContext(std::vector<std::string> object_names, std::vector<std::string> attribute_names,
                  std::vector<AttrSet> rows);

    std::size_t num_objects() const { return object_names_.size(); }
    std::size_t num_attributes() const { return attribute_names_.size(); }
    std::size_t incidence_count() const { return incidence_count_; }

    const std::vector<std::string>& object_names() const { return object_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }
    const std::string& object_name(ObjectId g) const { return object_names_[g.index]; }
    const std::string& attribute_name(AttributeId m) const { return attribute_names_[m.index]; }
    std::optional<AttributeId> find_attribute(std::string_view name) const;
    std::optional<ObjectId> find_object(std::string_view name) const;

    bool incident(ObjectId g, AttributeId m) const { return rows_[g.index].contains(m.index); }
    const AttrSet& row(ObjectId g) const { return rows_[g.index]; }
    const ObjSet& column(AttributeId m) const { return columns_[m.index]; }

    AttrSet no_attributes() const { return AttrSet(num_attributes()); }
    AttrSet all_attributes() const { return AttrSet::full(num_attributes()); }
    ObjSet no_objects() const { return ObjSet(num_objects()); }
    ObjSet all_objects() const { return ObjSet::full(num_objects()); }

    /// A' : attributes shared by every object in `objs` (all of M for the empty set).
    AttrSet derive_intent(const ObjSet& objs) const;
    /// B' : objects having every attribute in `attrs` (all of G for the empty set).
    ObjSet derive_extent(const AttrSet& attrs) const;
    /// B''
    AttrSet close_attrs(const AttrSet& attrs) const;
    /// A''
    ObjSet close_objs(const ObjSet& objs) const;

    /// |I| / (|G| |M|); throws DomainError(EmptyContext) when |G| |M| = 0.
    Rational density() const;

    friend bool operator==(const FormalContext& a, const FormalContext& b);

private:
    std::vector<std::string> object_names_;
    std::vector<std::string> attribute_names_;
    std::vector<AttrSet> rows_;
    std::vector<ObjSet> columns_;
    std::size_t incidence_count_ = 0;
};

// Readers. All throw ParseError; orders follow the file.
FormalContext parse_cxt(std::string_view text);
FormalContext parse_csv(std::string_view text);
FormalContext parse_fimi(std::string_view text);

/// Burmeister .cxt with '\n' line endings; parse_cxt(serialize_cxt(c)) == c.
std::string serialize_cxt(const FormalContext& ctx);

/// Member names joined by `sep`, in file order.
std::string format_attrs(const FormalContext& ctx, const AttrSet& attrs, std::string_view sep = ",");
std::string format_objs(const FormalContext& ctx, const ObjSet& objs, std::string_view sep = ",");

/// Builds an attribute set from names; throws std::out_of_range on an unknown name.
AttrSet attrs_by_name(const FormalContext& ctx, std::initializer_list<std::string_view> names);
ObjSet objs_by_name(const FormalContext& ctx, std::initializer_list<std::string_view> names);

}  // namespace fca
