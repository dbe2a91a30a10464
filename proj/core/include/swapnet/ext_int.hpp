#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace swapnet {

// Integer extended with +infinity and -infinity sentinels that order above
// (respectively below) every finite value. Used for distance sums and cost
// deltas on possibly disconnected graphs.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(std::int64_t v) : v_(v) {}  // finite value, implicit

    static constexpr ExtInt infinity() {
        return ExtInt(std::numeric_limits<std::int64_t>::max(), Raw{});
    }
    static constexpr ExtInt minus_infinity() {
        return ExtInt(std::numeric_limits<std::int64_t>::min(), Raw{});
    }

    constexpr bool is_finite() const {
        return v_ != infinity().v_ && v_ != minus_infinity().v_;
    }
    constexpr bool is_plus_infinity() const { return v_ == infinity().v_; }
    constexpr bool is_minus_infinity() const { return v_ == minus_infinity().v_; }

    // Only meaningful when is_finite().
    constexpr std::int64_t value() const { return v_; }

    friend constexpr bool operator==(ExtInt a, ExtInt b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(ExtInt a, ExtInt b) { return a.v_ <=> b.v_; }

private:
    struct Raw {};
    constexpr ExtInt(std::int64_t v, Raw) : v_(v) {}
    std::int64_t v_ = 0;
};

// after - before with the disconnection conventions of the games:
// inf - inf = 0 (staying disconnected is not an improvement),
// inf - finite = +inf, finite - inf = -inf.
constexpr ExtInt ext_delta(ExtInt after, ExtInt before) {
    if (after.is_plus_infinity() && before.is_plus_infinity()) return ExtInt(0);
    if (after.is_plus_infinity()) return ExtInt::infinity();
    if (before.is_plus_infinity()) return ExtInt::minus_infinity();
    return ExtInt(after.value() - before.value());
}

inline std::string to_string(ExtInt x) {
    if (x.is_plus_infinity()) return "inf";
    if (x.is_minus_infinity()) return "-inf";
    return std::to_string(x.value());
}

}  // namespace swapnet
