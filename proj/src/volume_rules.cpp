#include "kodim/volume_rules.hpp"

namespace kodim {

std::string_view volume_status_label(VolumeStatus status) noexcept {
    switch (status) {
        case VolumeStatus::Zero: return "zero";
        case VolumeStatus::Positive: return "positive";
        case VolumeStatus::Unknown: return "unknown";
    }
    return "unknown";  // unreachable
}

VolumeVerdict VolumeClassifier::status(std::string_view name) const {
    const Geometry& g = catalog_->lookup(name);
    if (!g.has_compact_representative) {
        throw NoCompactRepresentativeError(
            "geometry '" + g.name +
            "' has no compact representative; its simplicial-volume class is undefined");
    }
    return classify(g);
}

VolumeVerdict VolumeClassifier::classify(const Geometry& geometry) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(geometry.name); it != memo_.end()) return it->second;
    }
    VolumeVerdict verdict = compute(geometry);
    {
        std::lock_guard lock(mutex_);
        memo_.emplace(geometry.name, verdict);
    }
    return verdict;
}

VolumeVerdict VolumeClassifier::compute(const Geometry& g) const {
    std::vector<RuleMatch> positive, zero;

    // Recursion over decomposition factors terminates because valid
    // decompositions strictly reduce dimension.
    auto factor_status = [this](const std::string& name) {
        return classify(catalog_->lookup(name)).status;
    };
    auto is_amenable_class = [](GeometryClass cls) {
        return cls == GeometryClass::Point || is_solvable_family(cls);
    };

    // P1: irreducible symmetric model of non-compact type.
    if (g.cls == GeometryClass::IrrSymmetricNoncompact) {
        positive.push_back({"P1", "modeled on an irreducible symmetric space of non-compact type"});
    }

    // P2: direct product with every factor of positive volume.
    for (const Decomposition& d : g.decompositions) {
        if (!d.is_product()) continue;
        if (factor_status(d.fiber) == VolumeStatus::Positive &&
            factor_status(d.base) == VolumeStatus::Positive) {
            positive.push_back(
                {"P2", "product of positive-volume factors " + d.fiber + " and " + d.base});
            break;
        }
    }

    // Z1: a compact model, or a decomposition involving one.
    if (g.cls == GeometryClass::Compact) {
        zero.push_back({"Z1", "modeled on a compact space"});
    } else {
        for (const Decomposition& d : g.decompositions) {
            if (catalog_->lookup(d.fiber).cls == GeometryClass::Compact ||
                catalog_->lookup(d.base).cls == GeometryClass::Compact) {
                zero.push_back({"Z1", "decomposition " + d.fiber + " | " + d.base +
                                          " involves a compact model"});
                break;
            }
        }
    }

    // Z2: amenable model class.
    if (is_solvable_family(g.cls)) {
        zero.push_back({"Z2", "amenable model class (" + std::string(class_tag(g.cls)) + ")"});
    }

    // Z3: some decomposition has an amenable fiber. The hypothesis is on
    // the fiber only; an amenable base says nothing.
    for (const Decomposition& d : g.decompositions) {
        if (is_amenable_class(catalog_->lookup(d.fiber).cls)) {
            zero.push_back({"Z3", "decomposition " + d.fiber + " | " + d.base +
                                      " has amenable fiber " + d.fiber});
            break;
        }
    }

    // Z4: direct product with a vanishing factor.
    for (const Decomposition& d : g.decompositions) {
        if (!d.is_product()) continue;
        std::string vanishing;
        if (factor_status(d.fiber) == VolumeStatus::Zero) {
            vanishing = d.fiber;
        } else if (factor_status(d.base) == VolumeStatus::Zero) {
            vanishing = d.base;
        }
        if (!vanishing.empty()) {
            zero.push_back({"Z4", "product factor " + vanishing + " has vanishing simplicial volume"});
            break;
        }
    }

    if (!positive.empty() && !zero.empty()) {
        std::string rules;
        for (const RuleMatch& m : positive) rules += (rules.empty() ? "" : ", ") + m.rule;
        for (const RuleMatch& m : zero) rules += ", " + m.rule;
        throw InconsistentRulesError("volume rules conflict on '" + g.name + "' (" + rules + ")");
    }

    VolumeVerdict verdict;
    if (!positive.empty()) {
        verdict.status = VolumeStatus::Positive;
        verdict.trace = std::move(positive);
    } else if (!zero.empty()) {
        verdict.status = VolumeStatus::Zero;
        verdict.trace = std::move(zero);
    }
    return verdict;
}

CrosscheckReport volume_kappa_crosscheck(const Catalog& catalog, int dim) {
    if (dim < 2 || dim > catalog.max_dimension()) {
        throw InputError("crosscheck dimension must be between 2 and the catalog maximum, got " +
                         std::to_string(dim));
    }
    VolumeClassifier volume(catalog);
    KappaEngine engine(catalog);
    CrosscheckReport report;
    report.dim = dim;
    for (const Geometry* g : catalog.in_dimension(dim)) {
        if (!g->has_compact_representative) continue;
        ++report.checked;
        ExtKappa kappa = engine.kappa(g->name).value;
        const bool kappa_top = kappa.is_finite() && kappa.numerator() == dim;
        try {
            VolumeVerdict verdict = volume.status(g->name);
            if (verdict.status == VolumeStatus::Unknown) {
                report.failures.push_back(
                    {g->name, kappa.str(), verdict.status, "no volume rule applies"});
            } else if ((verdict.status == VolumeStatus::Positive) != kappa_top) {
                std::string problem = "volume " + std::string(volume_status_label(verdict.status)) +
                                      " but kappa " + kappa.str() + " is " +
                                      (kappa_top ? "" : "not ") + "the top value " +
                                      std::to_string(dim) + "/2";
                report.failures.push_back({g->name, kappa.str(), verdict.status, std::move(problem)});
            }
        } catch (const InconsistentRulesError& e) {
            report.failures.push_back({g->name, kappa.str(), VolumeStatus::Unknown, e.what()});
        }
    }
    return report;
}

}  // namespace kodim
