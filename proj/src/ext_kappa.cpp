#include "kodim/ext_kappa.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "kodim/errors.hpp"

namespace kodim {

ExtKappa ExtKappa::finite(std::int64_t numerator) {
    if (numerator < 0) {
        throw InputError("finite kappa numerator must be non-negative, got " +
                         std::to_string(numerator));
    }
    ExtKappa v;
    v.num_ = numerator;
    return v;
}

std::int64_t ExtKappa::numerator() const {
    if (is_bottom()) {
        throw InputError("numerator() called on -inf");
    }
    return num_;
}

std::string ExtKappa::str() const {
    if (is_bottom()) return "-inf";
    if (num_ % 2 == 0) return std::to_string(num_ / 2);
    return std::to_string(num_) + "/2";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t out = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return out;
}

}  // namespace

std::optional<ExtKappa> ExtKappa::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) return std::nullopt;
    if (s == "-inf") return bottom();
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        if (s.substr(slash + 1) != "2") return std::nullopt;
        auto n = parse_int(s.substr(0, slash));
        if (!n || *n < 0) return std::nullopt;
        return finite(*n);
    }
    auto whole = parse_int(s);
    if (!whole || *whole < 0) return std::nullopt;
    return finite(*whole * 2);
}

Ordering compare(ExtKappa a, ExtKappa b) noexcept {
    if (a < b) return Ordering::Less;
    if (a == b) return Ordering::Equal;
    return Ordering::Greater;
}

ExtKappa ext_sup(std::span<const ExtKappa> values) {
    if (values.empty()) {
        throw EmptySetError("supremum of an empty set of kappa values");
    }
    return *std::max_element(values.begin(), values.end());
}

}  // namespace kodim
