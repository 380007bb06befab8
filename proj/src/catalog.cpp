#include "kodim/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kodim {

Axiom axiom_of(GeometryClass cls) noexcept {
    switch (cls) {
        case GeometryClass::Point: return Axiom::A0;
        case GeometryClass::Compact: return Axiom::A1;
        case GeometryClass::Euclidean:
        case GeometryClass::Nilpotent:
        case GeometryClass::Solvable: return Axiom::A2;
        case GeometryClass::IrrSymmetricNoncompact: return Axiom::A3;
        case GeometryClass::Fibered: return Axiom::A4;
    }
    return Axiom::A0;  // unreachable
}

bool is_solvable_family(GeometryClass cls) noexcept {
    return cls == GeometryClass::Euclidean || cls == GeometryClass::Nilpotent ||
           cls == GeometryClass::Solvable;
}

std::string_view class_tag(GeometryClass cls) noexcept {
    switch (cls) {
        case GeometryClass::Point: return "point";
        case GeometryClass::Compact: return "compact";
        case GeometryClass::Euclidean: return "euclidean";
        case GeometryClass::Nilpotent: return "nilpotent";
        case GeometryClass::Solvable: return "solvable";
        case GeometryClass::IrrSymmetricNoncompact: return "irr_symmetric_noncompact";
        case GeometryClass::Fibered: return "fibered";
    }
    return "point";  // unreachable
}

std::optional<GeometryClass> class_from_tag(std::string_view tag) noexcept {
    if (tag == "point") return GeometryClass::Point;
    if (tag == "compact") return GeometryClass::Compact;
    if (tag == "euclidean") return GeometryClass::Euclidean;
    if (tag == "nilpotent") return GeometryClass::Nilpotent;
    if (tag == "solvable") return GeometryClass::Solvable;
    if (tag == "irr_symmetric_noncompact") return GeometryClass::IrrSymmetricNoncompact;
    if (tag == "fibered") return GeometryClass::Fibered;
    return std::nullopt;
}

std::string_view axiom_label(Axiom axiom) noexcept {
    switch (axiom) {
        case Axiom::A0: return "A0";
        case Axiom::A1: return "A1";
        case Axiom::A2: return "A2";
        case Axiom::A3: return "A3";
        case Axiom::A4: return "A4";
    }
    return "A0";  // unreachable
}

bool Decomposition::is_product() const noexcept {
    std::size_t start = note.find_first_not_of(" \t");
    if (start == std::string::npos) return false;
    std::size_t end = note.find_first_of(" \t", start);
    std::string_view first = std::string_view(note).substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    return first == "product";
}

std::string normalize_name(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (c == ' ' || c == '\t') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out;
    if (d.line > 0) out += "line " + std::to_string(d.line) + ": ";
    if (!d.record.empty()) out += "[" + d.record + "] ";
    out += d.message;
    return out;
}

namespace {

bool name_has_metachar(std::string_view s) {
    return s.find_first_of("|#\n") != std::string_view::npos;
}

// Levenshtein distance, capped implicitly by small input sizes.
std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t prev = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t cur = row[j];
            std::size_t sub = prev + (a[i - 1] == b[j - 1] ? 0 : 1);
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
            prev = cur;
        }
    }
    return row[b.size()];
}

}  // namespace

ValidationReport validate(const std::vector<Geometry>& records) {
    ValidationReport report;
    auto issue = [&report](const std::string& record, std::string message) {
        report.issues.push_back({0, record, std::move(message)});
    };

    // Pass 1: names, keys, local shape.
    std::unordered_map<std::string, std::string> seen;  // normalized -> display
    std::unordered_map<std::string, int> dims;          // normalized -> dim
    for (const Geometry& g : records) {
        if (g.name.empty()) {
            issue("", "record with empty name");
            continue;
        }
        if (name_has_metachar(g.name)) {
            issue(g.name, "name contains a reserved character ('|', '#', or newline)");
        }
        if (g.dim < 0 || g.dim > 7) {
            issue(g.name, "dimension out of range 0..7: " + std::to_string(g.dim));
        }
        auto claim = [&](const std::string& display) {
            std::string key = normalize_name(display);
            auto [it, inserted] = seen.emplace(key, display);
            if (!inserted) {
                issue(g.name, "duplicate name or alias '" + display + "' (collides with '" +
                                  it->second + "')");
            } else {
                dims.emplace(key, g.dim);
            }
        };
        claim(g.name);
        for (const std::string& alias : g.aliases) {
            if (name_has_metachar(alias)) {
                issue(g.name, "alias contains a reserved character: '" + alias + "'");
            }
            claim(alias);
        }
        if (g.cls == GeometryClass::Fibered && g.decompositions.empty()) {
            issue(g.name, "fibered record has no decompositions");
        }
        if (g.cls != GeometryClass::Fibered && !g.decompositions.empty()) {
            issue(g.name, "non-fibered record carries decompositions");
        }
        if (g.note.find('\n') != std::string::npos) {
            issue(g.name, "note contains a newline");
        }
    }

    // Pass 2: decomposition references.
    for (const Geometry& g : records) {
        for (const Decomposition& d : g.decompositions) {
            auto fit = dims.find(normalize_name(d.fiber));
            auto bit = dims.find(normalize_name(d.base));
            if (fit == dims.end()) {
                issue(g.name, "dangling decomposition reference: fiber '" + d.fiber + "'");
            }
            if (bit == dims.end()) {
                issue(g.name, "dangling decomposition reference: base '" + d.base + "'");
            }
            if (fit == dims.end() || bit == dims.end()) continue;
            if (fit->second + bit->second != g.dim) {
                issue(g.name, "dimension mismatch: " + d.fiber + " | " + d.base + " sums to " +
                                  std::to_string(fit->second + bit->second) + ", record has dim " +
                                  std::to_string(g.dim));
            }
            if (fit->second >= g.dim || bit->second >= g.dim) {
                issue(g.name, "decomposition does not reduce dimension: " + d.fiber + " | " +
                                  d.base);
            }
            if (d.note.find('\n') != std::string::npos) {
                issue(g.name, "decomposition note contains a newline");
            }
        }
    }

    return report;
}

Catalog Catalog::from_records(std::vector<Geometry> records) {
    ValidationReport report = validate(records);
    if (!report.ok()) {
        std::string msg = "invalid catalog:";
        for (const Diagnostic& d : report.issues) {
            msg += "\n  " + format_diagnostic(d);
        }
        throw Error(msg);
    }
    Catalog cat;
    cat.records_ = std::move(records);
    for (std::size_t i = 0; i < cat.records_.size(); ++i) {
        cat.index_.emplace(normalize_name(cat.records_[i].name), i);
        for (const std::string& alias : cat.records_[i].aliases) {
            cat.index_.emplace(normalize_name(alias), i);
        }
    }
    return cat;
}

const Geometry* Catalog::find(std::string_view name) const {
    auto it = index_.find(normalize_name(name));
    if (it == index_.end()) return nullptr;
    return &records_[it->second];
}

const Geometry& Catalog::lookup(std::string_view name) const {
    if (const Geometry* g = find(name)) return *g;
    throw NotFoundError(std::string(name), suggestions_for(name));
}

std::vector<const Geometry*> Catalog::in_dimension(int dim) const {
    std::vector<const Geometry*> out;
    for (const Geometry& g : records_) {
        if (g.dim == dim) out.push_back(&g);
    }
    return out;
}

int Catalog::max_dimension() const noexcept {
    int m = -1;
    for (const Geometry& g : records_) m = std::max(m, g.dim);
    return m;
}

std::vector<std::string> Catalog::suggestions_for(std::string_view name,
                                                  std::size_t limit) const {
    std::string key = normalize_name(name);
    std::vector<std::pair<std::size_t, std::string>> scored;
    scored.reserve(records_.size());
    for (const Geometry& g : records_) {
        scored.emplace_back(edit_distance(key, normalize_name(g.name)), g.name);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    // Only offer plausible matches: within half the query length + 1 edits.
    const std::size_t cutoff = key.size() / 2 + 1;
    std::vector<std::string> out;
    for (const auto& [dist, candidate] : scored) {
        if (out.size() >= limit || dist > cutoff) break;
        out.push_back(candidate);
    }
    return out;
}

}  // namespace kodim
