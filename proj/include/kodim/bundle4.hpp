#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kodim/ext_kappa.hpp"

namespace kodim {

// Geometric-decomposition pieces of a closed 3-manifold that matter for
// the 4-dimensional bundle table.
enum class PieceTag { H3, H2xR, SL2t, Other };

std::string_view piece_tag_label(PieceTag tag) noexcept;

// A fiber or base of a 4-dimensional bundle: a circle, a closed
// orientable surface of given genus, or a closed 3-manifold summarized by
// its decomposition pieces (with a flag for the virtually-S2xS1-connected-
// sum case, which behaves like a spherical factor).
class BundleFactor {
public:
    enum class Kind { Circle, Surface, ThreeManifold };

    static BundleFactor circle();
    static BundleFactor surface(int genus);  // genus >= 0, else InputError
    static BundleFactor three_manifold(std::vector<PieceTag> pieces,
                                       bool virtually_s2xs1_sum = false);

    // Textual syntax:
    //   circle
    //   surface:<genus>
    //   3m:[h3,h2xr,sl2,other,...]   (possibly empty: "3m:[]")
    //   3m:s2xs1sum
    // Throws InputError on anything else.
    static BundleFactor parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    int dim() const noexcept;
    int genus() const;                         // surface only
    bool virtually_s2xs1_sum() const noexcept { return s2xs1_; }
    const std::vector<PieceTag>& pieces() const noexcept { return pieces_; }
    bool has_piece(PieceTag tag) const noexcept;

    // True when the factor forces the bottom value: a sphere (genus-0
    // surface) or a virtually-S2xS1-connected-sum 3-manifold.
    bool is_spherical_like() const noexcept;

    // Canonical rendering in the textual syntax (pieces sorted).
    std::string str() const;

    bool operator==(const BundleFactor&) const = default;

private:
    BundleFactor() = default;

    Kind kind_ = Kind::Circle;
    int genus_ = 0;
    bool s2xs1_ = false;
    std::vector<PieceTag> pieces_;  // kept sorted
};

// Kappa of the total space of a fiber bundle with the given fiber and
// base. Dimensions must sum to 4 (else DimensionMismatchError):
//
//   either factor spherical-like                      -> -inf
//   surface over surface, both genus 1                -> 0
//   surface over surface, exactly one genus >= 2      -> 1
//   surface over surface, both genus >= 2             -> 2
//   circle/3-manifold with a hyperbolic piece         -> 3/2
//   circle/3-manifold with an H2xR or SL2t piece      -> 1
//   circle/3-manifold otherwise                       -> 0
ExtKappa bundle_kappa(const BundleFactor& fiber, const BundleFactor& base);

// Positive simplicial volume for such a bundle happens exactly in the
// surface-over-surface case with both genera >= 2 (equivalently, exactly
// when bundle_kappa attains the top value 2).
bool bundle_volume_positive(const BundleFactor& fiber, const BundleFactor& base);

// A factor that is a 3-manifold with an empty piece list and no
// spherical flag is accepted (it lands in the "otherwise" row) but is
// worth warning about, since it usually means a forgotten piece list.
bool is_degenerate_three_manifold(const BundleFactor& factor) noexcept;

}  // namespace kodim
