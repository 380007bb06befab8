#include "kodim/bundle4.hpp"

#include <algorithm>
#include <charconv>

#include "kodim/errors.hpp"

namespace kodim {

std::string_view piece_tag_label(PieceTag tag) noexcept {
    switch (tag) {
        case PieceTag::H3: return "h3";
        case PieceTag::H2xR: return "h2xr";
        case PieceTag::SL2t: return "sl2";
        case PieceTag::Other: return "other";
    }
    return "other";  // unreachable
}

BundleFactor BundleFactor::circle() {
    BundleFactor f;
    f.kind_ = Kind::Circle;
    return f;
}

BundleFactor BundleFactor::surface(int genus) {
    if (genus < 0) {
        throw InputError("surface genus must be non-negative, got " + std::to_string(genus));
    }
    BundleFactor f;
    f.kind_ = Kind::Surface;
    f.genus_ = genus;
    return f;
}

BundleFactor BundleFactor::three_manifold(std::vector<PieceTag> pieces, bool virtually_s2xs1_sum) {
    if (virtually_s2xs1_sum && !pieces.empty()) {
        throw InputError("a virtually-S2xS1-sum 3-manifold takes no piece list");
    }
    BundleFactor f;
    f.kind_ = Kind::ThreeManifold;
    f.s2xs1_ = virtually_s2xs1_sum;
    std::sort(pieces.begin(), pieces.end());
    f.pieces_ = std::move(pieces);
    return f;
}

int BundleFactor::dim() const noexcept {
    switch (kind_) {
        case Kind::Circle: return 1;
        case Kind::Surface: return 2;
        case Kind::ThreeManifold: return 3;
    }
    return 0;  // unreachable
}

int BundleFactor::genus() const {
    if (kind_ != Kind::Surface) {
        throw InputError("genus() is only defined for surface factors");
    }
    return genus_;
}

bool BundleFactor::has_piece(PieceTag tag) const noexcept {
    return std::find(pieces_.begin(), pieces_.end(), tag) != pieces_.end();
}

bool BundleFactor::is_spherical_like() const noexcept {
    return (kind_ == Kind::Surface && genus_ == 0) ||
           (kind_ == Kind::ThreeManifold && s2xs1_);
}

std::string BundleFactor::str() const {
    switch (kind_) {
        case Kind::Circle: return "circle";
        case Kind::Surface: return "surface:" + std::to_string(genus_);
        case Kind::ThreeManifold: break;
    }
    if (s2xs1_) return "3m:s2xs1sum";
    std::string out = "3m:[";
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) out += ",";
        out += piece_tag_label(pieces_[i]);
    }
    out += "]";
    return out;
}

namespace {

PieceTag parse_piece(std::string_view token) {
    if (token == "h3") return PieceTag::H3;
    if (token == "h2xr") return PieceTag::H2xR;
    if (token == "sl2" || token == "sl2t") return PieceTag::SL2t;
    if (token == "other") return PieceTag::Other;
    throw InputError("unknown 3-manifold piece '" + std::string(token) +
                     "' (expected h3, h2xr, sl2, or other)");
}

}  // namespace

BundleFactor BundleFactor::parse(std::string_view text) {
    if (text == "circle") return circle();
    constexpr std::string_view kSurface = "surface:";
    if (text.substr(0, kSurface.size()) == kSurface) {
        std::string_view rest = text.substr(kSurface.size());
        int genus = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), genus);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            throw InputError("bad surface genus '" + std::string(rest) + "'");
        }
        return surface(genus);
    }
    constexpr std::string_view k3m = "3m:";
    if (text.substr(0, k3m.size()) == k3m) {
        std::string_view rest = text.substr(k3m.size());
        if (rest == "s2xs1sum") return three_manifold({}, true);
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
            throw InputError("bad 3-manifold factor '" + std::string(text) +
                             "' (expected 3m:[...] or 3m:s2xs1sum)");
        }
        std::string_view body = rest.substr(1, rest.size() - 2);
        std::vector<PieceTag> pieces;
        while (!body.empty()) {
            auto comma = body.find(',');
            std::string_view token = body.substr(0, comma);
            if (token.empty()) throw InputError("empty piece name in '" + std::string(text) + "'");
            pieces.push_back(parse_piece(token));
            if (comma == std::string_view::npos) break;
            body = body.substr(comma + 1);
            if (body.empty()) {
                throw InputError("empty piece name in '" + std::string(text) + "'");
            }
        }
        return three_manifold(std::move(pieces));
    }
    throw InputError("bad bundle factor '" + std::string(text) +
                     "' (expected circle, surface:<genus>, 3m:[...], or 3m:s2xs1sum)");
}

ExtKappa bundle_kappa(const BundleFactor& fiber, const BundleFactor& base) {
    if (fiber.dim() + base.dim() != 4) {
        throw DimensionMismatchError("bundle factors must have total dimension 4, got " +
                                     std::to_string(fiber.dim()) + " + " +
                                     std::to_string(base.dim()));
    }
    if (fiber.is_spherical_like() || base.is_spherical_like()) {
        return ExtKappa::bottom();
    }
    if (fiber.kind() == BundleFactor::Kind::Surface &&
        base.kind() == BundleFactor::Kind::Surface) {
        const int big = (fiber.genus() >= 2) + (base.genus() >= 2);
        if (big == 2) return ExtKappa::finite(4);  // 2
        if (big == 1) return ExtKappa::finite(2);  // 1
        return ExtKappa::finite(0);                // torus over torus
    }
    // Circle/3-manifold pair (in either order).
    const BundleFactor& m3 =
        fiber.kind() == BundleFactor::Kind::ThreeManifold ? fiber : base;
    if (m3.has_piece(PieceTag::H3)) return ExtKappa::finite(3);  // 3/2
    if (m3.has_piece(PieceTag::H2xR) || m3.has_piece(PieceTag::SL2t)) {
        return ExtKappa::finite(2);  // 1
    }
    return ExtKappa::finite(0);
}

bool bundle_volume_positive(const BundleFactor& fiber, const BundleFactor& base) {
    if (fiber.dim() + base.dim() != 4) {
        throw DimensionMismatchError("bundle factors must have total dimension 4, got " +
                                     std::to_string(fiber.dim()) + " + " +
                                     std::to_string(base.dim()));
    }
    return fiber.kind() == BundleFactor::Kind::Surface && fiber.genus() >= 2 &&
           base.kind() == BundleFactor::Kind::Surface && base.genus() >= 2;
}

bool is_degenerate_three_manifold(const BundleFactor& factor) noexcept {
    return factor.kind() == BundleFactor::Kind::ThreeManifold &&
           !factor.virtually_s2xs1_sum() && factor.pieces().empty();
}

}  // namespace kodim
