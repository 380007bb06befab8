#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kodim/catalog.hpp"
#include "kodim/ext_kappa.hpp"
#include "kodim/kappa_engine.hpp"
#include "kodim/volume_rules.hpp"

namespace kodim {

// Verdict on "does some closed M of geometry m admit a non-zero-degree
// map onto some closed N of geometry n?". The oracle only ever certifies
// obstructions; NotForbidden is absence of an obstruction, not existence
// of a map.
enum class DominationStatus { ForbiddenByKappa, ForbiddenByVolume, NotForbidden };

std::string_view domination_status_label(DominationStatus status) noexcept;

struct Obstruction {
    std::string id;      // "kappa", "volume", "heuristic"
    std::string detail;

    bool operator==(const Obstruction&) const = default;
};

struct DominationVerdict {
    DominationStatus status = DominationStatus::NotForbidden;
    std::vector<Obstruction> reasons;
};

// One level of the domination preorder: all geometries sharing a value.
struct PreorderLevel {
    ExtKappa kappa;
    std::vector<std::string> geometries;  // sorted canonical names

    bool operator==(const PreorderLevel&) const = default;
};

class DominationOracle {
public:
    explicit DominationOracle(const Catalog& catalog)
        : catalog_(&catalog), engine_(catalog), volume_(catalog) {}

    const Catalog& catalog() const noexcept { return *catalog_; }

    // Compares two geometries of equal dimension, both with compact
    // representatives. Monotonicity under non-zero-degree maps: kappa may
    // only drop, so kappa(m) < kappa(n) forbids m -> n. Vanishing
    // simplicial volume upstream of a positive one forbids it too. Both
    // obstructions are reported when both apply (status prefers kappa).
    // Beyond dimension 5 the kappa obstruction is flagged as heuristic.
    DominationVerdict check(std::string_view m, std::string_view n) const;

    // Compact-representable geometries of one dimension grouped by value,
    // ascending; within a level all geometries are mutually comparable in
    // both directions, across levels maps from lower to higher are
    // forbidden.
    std::vector<PreorderLevel> preorder_levels(int dim) const;

    // Graphviz rendering: one cluster per level, one edge between
    // consecutive levels (drawn cluster-to-cluster via ltail/lhead).
    std::string preorder_dot(int dim) const;

    // {"levels": [{"kappa": "...", "geometries": [...]}, ...]}
    std::string preorder_json(int dim) const;

private:
    const Catalog* catalog_;
    KappaEngine engine_;
    VolumeClassifier volume_;
};

}  // namespace kodim
