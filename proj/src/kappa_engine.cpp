#include "kodim/kappa_engine.hpp"

#include <algorithm>

namespace kodim {

KappaResult KappaEngine::kappa(std::string_view name) const {
    return evaluate(catalog_->lookup(name));
}

KappaResult KappaEngine::evaluate(const Geometry& geometry) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(geometry.name); it != memo_.end()) return it->second;
    }
    KappaResult result = compute(geometry);
    {
        std::lock_guard lock(mutex_);
        memo_.emplace(geometry.name, result);
    }
    return result;
}

KappaResult KappaEngine::compute(const Geometry& g) const {
    KappaResult r;
    r.cls = g.cls;
    r.axiom = axiom_of(g.cls);
    switch (g.cls) {
        case GeometryClass::Point:
            r.value = ExtKappa::finite(0);
            return r;
        case GeometryClass::Compact:
            r.value = ExtKappa::bottom();
            return r;
        case GeometryClass::Euclidean:
        case GeometryClass::Nilpotent:
        case GeometryClass::Solvable:
            r.value = ExtKappa::finite(0);
            return r;
        case GeometryClass::IrrSymmetricNoncompact:
            // dim/2, i.e. numerator == dim.
            r.value = ExtKappa::finite(g.dim);
            return r;
        case GeometryClass::Fibered:
            break;
    }
    if (g.decompositions.empty()) {
        throw EmptyDecompositionsError("fibered geometry '" + g.name +
                                       "' has no decompositions");
    }
    // Supremum over decompositions of kappa(fiber) + kappa(base); the
    // witness is the first decomposition attaining it. Recursion terminates
    // because decompositions strictly reduce dimension.
    bool have = false;
    ExtKappa best;
    const Decomposition* best_d = nullptr;
    for (const Decomposition& d : g.decompositions) {
        ExtKappa fiber = evaluate(catalog_->lookup(d.fiber)).value;
        ExtKappa base = evaluate(catalog_->lookup(d.base)).value;
        ExtKappa v = fiber + base;
        if (!have || v > best) {
            have = true;
            best = v;
            best_d = &d;
        }
    }
    r.value = best;
    r.witness = *best_d;
    return r;
}

ManifoldKappa KappaEngine::kappa_manifold(const ManifoldSpec& spec) const {
    const Geometry& g = catalog_->lookup(spec.geometry);
    // Finite covers share the model geometry and the value is invariant
    // under them, so the cover chain is provenance only.
    ManifoldKappa out;
    out.result = evaluate(g);
    if (spec.chosen_decomposition) {
        std::size_t idx = *spec.chosen_decomposition;
        if (g.cls != GeometryClass::Fibered || idx >= g.decompositions.size()) {
            throw InvalidDecompositionIndexError(
                "geometry '" + g.name + "' has no decomposition #" + std::to_string(idx));
        }
        const Decomposition& d = g.decompositions[idx];
        out.chosen = d;
        out.chosen_value = evaluate(catalog_->lookup(d.fiber)).value +
                           evaluate(catalog_->lookup(d.base)).value;
    }
    return out;
}

std::map<ExtKappa, std::vector<std::string>> KappaEngine::classify_table(int dim) const {
    if (dim < 0 || dim > catalog_->max_dimension()) {
        throw InputError("dimension out of range for this catalog: " + std::to_string(dim));
    }
    std::map<ExtKappa, std::vector<std::string>> table;
    for (const Geometry* g : catalog_->in_dimension(dim)) {
        table[evaluate(*g).value].push_back(g->name);
    }
    for (auto& [value, names] : table) {
        std::sort(names.begin(), names.end());
    }
    return table;
}

}  // namespace kodim
