#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kodim/catalog.hpp"
#include "kodim/ext_kappa.hpp"

namespace kodim {

// Result of classifying one geometry.
struct KappaResult {
    ExtKappa value;
    Axiom axiom = Axiom::A0;
    GeometryClass cls = GeometryClass::Point;
    // For fibered geometries: the first decomposition (in declaration
    // order) realizing the supremum.
    std::optional<Decomposition> witness;

    bool operator==(const KappaResult&) const = default;
};

// A manifold described through the catalog: a geometry name, an optional
// chain of finite covers (recorded for provenance; the value is a
// commensurability invariant, so covers never change it), and optionally
// one chosen decomposition to evaluate alongside the supremum.
struct ManifoldSpec {
    std::string geometry;
    std::vector<std::string> cover_chain;
    std::optional<std::size_t> chosen_decomposition;
};

struct ManifoldKappa {
    KappaResult result;  // the geometry's classification (the supremum)
    // Present iff a decomposition was chosen: that decomposition and the
    // value it alone contributes. Never replaces the supremum.
    std::optional<Decomposition> chosen;
    std::optional<ExtKappa> chosen_value;
};

// Kappa classification driven entirely by a catalog's structural data.
// Values are memoized per geometry; safe for concurrent use.
class KappaEngine {
public:
    explicit KappaEngine(const Catalog& catalog) : catalog_(&catalog) {}

    const Catalog& catalog() const noexcept { return *catalog_; }

    // Classify by name (aliases resolve). Throws NotFoundError.
    KappaResult kappa(std::string_view name) const;

    // Classify a manifold description. Throws InvalidDecompositionIndexError
    // when the chosen index does not name a decomposition.
    ManifoldKappa kappa_manifold(const ManifoldSpec& spec) const;

    // All catalog geometries of a dimension, grouped by value (ascending)
    // with names sorted within each group. Throws InputError when the
    // dimension is negative or exceeds the catalog's maximum.
    std::map<ExtKappa, std::vector<std::string>> classify_table(int dim) const;

private:
    KappaResult evaluate(const Geometry& geometry) const;
    KappaResult compute(const Geometry& geometry) const;

    const Catalog* catalog_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, KappaResult> memo_;
};

}  // namespace kodim
