#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace kodim {

// Three-way comparison result for extended kappa values.
enum class Ordering { Less, Equal, Greater };

// An extended Kodaira dimension: either bottom (-infinity, the value of
// geometries with no interesting fibration data) or a non-negative
// half-integer n/2 stored exactly as the integer numerator n.
//
// The representation is a single integer with -1 standing for bottom, so
// the built-in integer order coincides with the semantic total order
// bottom < 0 < 1/2 < 1 < 3/2 < ...
class ExtKappa {
public:
    // Default-constructed values are bottom.
    constexpr ExtKappa() noexcept = default;

    static constexpr ExtKappa bottom() noexcept { return ExtKappa{}; }

    // The half-integer numerator/2. Throws InputError when numerator < 0.
    static ExtKappa finite(std::int64_t numerator);

    constexpr bool is_bottom() const noexcept { return num_ == kBottom; }
    constexpr bool is_finite() const noexcept { return num_ != kBottom; }

    // Numerator of a finite value (the value is numerator/2).
    // Throws EmptySetError-style logic only in code bugs; enforced by throw.
    std::int64_t numerator() const;

    // "-inf", "2", "5/2", ...
    std::string str() const;

    // Inverse of str(): accepts "-inf", decimal integers, and "n/2" with
    // n odd or even. Surrounding ASCII whitespace is ignored.
    static std::optional<ExtKappa> parse(std::string_view text);

    // Addition with bottom absorbing: bottom + x == bottom.
    friend ExtKappa operator+(ExtKappa a, ExtKappa b) noexcept {
        if (a.is_bottom() || b.is_bottom()) return bottom();
        ExtKappa r;
        r.num_ = a.num_ + b.num_;
        return r;
    }

    friend constexpr bool operator==(ExtKappa, ExtKappa) noexcept = default;
    friend constexpr auto operator<=>(ExtKappa, ExtKappa) noexcept = default;

private:
    static constexpr std::int64_t kBottom = -1;
    std::int64_t num_ = kBottom;
};

// Named three-way comparison (convenience over operator<=>).
Ordering compare(ExtKappa a, ExtKappa b) noexcept;

// Least upper bound of a non-empty set. Throws EmptySetError when empty.
ExtKappa ext_sup(std::span<const ExtKappa> values);

}  // namespace kodim
