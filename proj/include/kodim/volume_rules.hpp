#pragma once

#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kodim/catalog.hpp"
#include "kodim/kappa_engine.hpp"

namespace kodim {

enum class VolumeStatus { Zero, Positive, Unknown };

std::string_view volume_status_label(VolumeStatus status) noexcept;

// One fired rule: its id plus the premise it matched.
struct RuleMatch {
    std::string rule;     // "P1", "P2", "Z1", "Z2", "Z3", "Z4"
    std::string premise;  // human-readable description of the match

    bool operator==(const RuleMatch&) const = default;
};

struct VolumeVerdict {
    VolumeStatus status = VolumeStatus::Unknown;
    std::vector<RuleMatch> trace;  // every fired rule, in rule order

    bool operator==(const VolumeVerdict&) const = default;
};

// Simplicial-volume sign classifier. Evaluates a fixed rule set:
//
//   P1  irreducible symmetric model of non-compact type     -> positive
//   P2  direct product, every factor positive               -> positive
//   Z1  compact model, or a decomposition involving one     -> zero
//   Z2  amenable model class (euclidean/nilpotent/solvable) -> zero
//   Z3  some decomposition has an amenable fiber            -> zero
//   Z4  direct product with a vanishing factor              -> zero
//
// All rules are evaluated on every query; the trace records each match.
// A simultaneous positive and zero match throws InconsistentRulesError.
class VolumeClassifier {
public:
    explicit VolumeClassifier(const Catalog& catalog) : catalog_(&catalog) {}

    const Catalog& catalog() const noexcept { return *catalog_; }

    // Classify by name. The sign of the simplicial volume is a statement
    // about closed manifolds, so geometries without a compact
    // representative are rejected (NoCompactRepresentativeError); the
    // internal recursion over decomposition factors has no such gate.
    VolumeVerdict status(std::string_view name) const;

private:
    VolumeVerdict classify(const Geometry& geometry) const;
    VolumeVerdict compute(const Geometry& geometry) const;

    const Catalog* catalog_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::string, VolumeVerdict> memo_;
};

// One record that fails the volume/kappa consistency audit.
struct CrosscheckFailure {
    std::string name;
    std::string kappa;   // rendered value
    VolumeStatus volume = VolumeStatus::Unknown;
    std::string problem;  // what went wrong
};

struct CrosscheckReport {
    int dim = 0;
    int checked = 0;
    std::vector<CrosscheckFailure> failures;
    bool ok() const noexcept { return failures.empty(); }
};

// Audits one dimension of a catalog: every geometry with a compact
// representative must classify to a definite volume status, with
// positivity holding exactly when kappa attains its top value dim/2.
// Inconsistent-rule records are reported as failures, not thrown.
// Accepts 2 <= dim <= catalog.max_dimension().
CrosscheckReport volume_kappa_crosscheck(const Catalog& catalog, int dim);

}  // namespace kodim
