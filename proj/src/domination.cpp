#include "kodim/domination.hpp"

#include <algorithm>

#include <json.hpp>

namespace kodim {

std::string_view domination_status_label(DominationStatus status) noexcept {
    switch (status) {
        case DominationStatus::ForbiddenByKappa: return "forbidden_by_kappa";
        case DominationStatus::ForbiddenByVolume: return "forbidden_by_volume";
        case DominationStatus::NotForbidden: return "not_forbidden";
    }
    return "not_forbidden";  // unreachable
}

DominationVerdict DominationOracle::check(std::string_view m, std::string_view n) const {
    const Geometry& gm = catalog_->lookup(m);
    const Geometry& gn = catalog_->lookup(n);
    if (gm.dim != gn.dim) {
        throw DimensionMismatchError("domination compares equal dimensions, got " + gm.name +
                                     " (dim " + std::to_string(gm.dim) + ") vs " + gn.name +
                                     " (dim " + std::to_string(gn.dim) + ")");
    }

    ExtKappa km = engine_.kappa(gm.name).value;
    ExtKappa kn = engine_.kappa(gn.name).value;
    const bool kappa_less = km < kn;

    // status() enforces the compact-representative requirement for both.
    VolumeStatus vm = volume_.status(gm.name).status;
    VolumeStatus vn = volume_.status(gn.name).status;
    const bool volume_obstructed = vm == VolumeStatus::Zero && vn == VolumeStatus::Positive;

    DominationVerdict verdict;
    if (kappa_less) {
        verdict.reasons.push_back({"kappa", km.str() + " < " + kn.str()});
    }
    if (volume_obstructed) {
        verdict.reasons.push_back({"volume", "0 vs positive"});
    }
    if (kappa_less && gm.dim > 5) {
        verdict.reasons.push_back(
            {"heuristic", "kappa monotonicity under non-zero-degree maps is established through "
                          "dimension 5 and is conjectural in dimension " +
                              std::to_string(gm.dim)});
    }
    if (kappa_less) {
        verdict.status = DominationStatus::ForbiddenByKappa;
    } else if (volume_obstructed) {
        verdict.status = DominationStatus::ForbiddenByVolume;
    }
    return verdict;
}

std::vector<PreorderLevel> DominationOracle::preorder_levels(int dim) const {
    if (dim < 0 || dim > catalog_->max_dimension()) {
        throw InputError("dimension out of range for this catalog: " + std::to_string(dim));
    }
    std::map<ExtKappa, std::vector<std::string>> grouped;
    for (const Geometry* g : catalog_->in_dimension(dim)) {
        if (!g->has_compact_representative) continue;
        grouped[engine_.kappa(g->name).value].push_back(g->name);
    }
    std::vector<PreorderLevel> levels;
    levels.reserve(grouped.size());
    for (auto& [kappa, names] : grouped) {
        std::sort(names.begin(), names.end());
        levels.push_back({kappa, std::move(names)});
    }
    return levels;
}

std::string DominationOracle::preorder_dot(int dim) const {
    std::vector<PreorderLevel> levels = preorder_levels(dim);
    std::string out;
    out += "digraph preorder_dim" + std::to_string(dim) + " {\n";
    out += "  // edge a -> b: maps of non-zero degree from level a to level b are forbidden\n";
    out += "  compound=true;\n";
    out += "  node [shape=box];\n";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        out += "  subgraph cluster_" + std::to_string(i) + " {\n";
        out += "    label=\"kappa = " + levels[i].kappa.str() + "\";\n";
        for (const std::string& name : levels[i].geometries) {
            out += "    \"" + name + "\";\n";
        }
        out += "  }\n";
    }
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        // One representative edge per consecutive pair, lifted to the
        // clusters themselves.
        out += "  \"" + levels[i].geometries.front() + "\" -> \"" +
               levels[i + 1].geometries.front() + "\" [ltail=cluster_" + std::to_string(i) +
               ", lhead=cluster_" + std::to_string(i + 1) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string DominationOracle::preorder_json(int dim) const {
    nlohmann::ordered_json doc;
    doc["levels"] = nlohmann::ordered_json::array();
    for (const PreorderLevel& level : preorder_levels(dim)) {
        nlohmann::ordered_json entry;
        entry["kappa"] = level.kappa.str();
        entry["geometries"] = level.geometries;
        doc["levels"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace kodim
