#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kodim/errors.hpp"

namespace kodim {

// Structural class of a model geometry. The class alone decides which
// classification axiom applies.
enum class GeometryClass {
    Point,                   // the 0-dimensional geometry
    Compact,                 // compact model space (spheres, CP2, ...)
    Euclidean,               // flat R^n
    Nilpotent,               // nilpotent Lie model, not abelian
    Solvable,                // solvable-but-not-nilpotent Lie model
    IrrSymmetricNoncompact,  // irreducible symmetric space of non-compact type
    Fibered,                 // everything classified through fibration data
};

// Classification axiom, derived from the structural class.
enum class Axiom { A0, A1, A2, A3, A4 };

Axiom axiom_of(GeometryClass cls) noexcept;

// True for the amenable-model classes: euclidean, nilpotent, solvable.
bool is_solvable_family(GeometryClass cls) noexcept;

// Tag <-> enum for the catalog text format.
std::string_view class_tag(GeometryClass cls) noexcept;
std::optional<GeometryClass> class_from_tag(std::string_view tag) noexcept;

std::string_view axiom_label(Axiom axiom) noexcept;

// One way of writing a geometry as fiber-over-base. `note` records how the
// decomposition arises; a note whose first word is "product" marks a direct
// product splitting (used by the volume rules).
struct Decomposition {
    std::string fiber;
    std::string base;
    std::string note;

    bool is_product() const noexcept;

    bool operator==(const Decomposition&) const = default;
};

// A catalog record: one model geometry.
struct Geometry {
    std::string name;
    int dim = 0;
    GeometryClass cls = GeometryClass::Point;
    std::vector<Decomposition> decompositions;  // non-empty iff cls == Fibered
    bool has_compact_representative = true;
    std::vector<std::string> aliases;
    std::string note;

    bool operator==(const Geometry&) const = default;
};

// Canonical lookup key: ASCII-lowercased with spaces and tabs removed.
std::string normalize_name(std::string_view name);

// One validation or parse problem. line == 0 means "not tied to a line".
struct Diagnostic {
    int line = 0;
    std::string record;  // record name when known
    std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

struct ValidationReport {
    std::vector<Diagnostic> issues;
    bool ok() const noexcept { return issues.empty(); }
};

// Structural validation of a record list:
//   - names and aliases unique after normalization
//   - class tags consistent with decomposition presence
//   - decomposition references resolve, dimensions add up and decrease
//   - dimensions within 0..7, names free of format metacharacters
ValidationReport validate(const std::vector<Geometry>& records);

// An indexed, validated set of geometry records.
class Catalog {
public:
    Catalog() = default;

    // Indexes the records. Throws Error when validation fails; use the
    // parse/extend entry points to obtain diagnostics instead.
    static Catalog from_records(std::vector<Geometry> records);

    const std::vector<Geometry>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }

    // nullptr when the (normalized) name resolves to nothing.
    const Geometry* find(std::string_view name) const;

    // Throws NotFoundError carrying close-match suggestions.
    const Geometry& lookup(std::string_view name) const;

    // Records of the given dimension, in catalog order.
    std::vector<const Geometry*> in_dimension(int dim) const;

    int max_dimension() const noexcept;

    // Up to `limit` canonical names closest to `name` in edit distance.
    std::vector<std::string> suggestions_for(std::string_view name,
                                             std::size_t limit = 3) const;

    bool operator==(const Catalog& other) const { return records_ == other.records_; }

private:
    std::vector<Geometry> records_;
    std::unordered_map<std::string, std::size_t> index_;  // normalized key -> record
};

}  // namespace kodim
