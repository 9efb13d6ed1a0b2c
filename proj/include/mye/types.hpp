#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mye {

/// Calendar year (Gregorian).
using Year = int;

/// Estimated year of one missing-year paper; std::nullopt means Uncovered.
using Estimate = std::optional<Year>;

/// Closed interval of accepted input years.
struct YearRange {
    Year min = 1900;
    Year max = 2013;

    bool contains(Year y) const { return y >= min && y <= max; }
    friend bool operator==(const YearRange&, const YearRange&) = default;
};

/// One side of a year window: either Open (no information) or a finite year.
///
/// An open lower bound behaves as -inf, an open upper bound as +inf. Which
/// side a bound sits on is decided by the caller, so the helpers below come
/// in lower/upper pairs.
class Bound {
public:
    constexpr Bound() = default;
    static constexpr Bound open() { return Bound{}; }
    static constexpr Bound at(Year y) { return Bound{y}; }

    constexpr bool is_open() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }
    constexpr Year value() const { return *value_; }
    constexpr const std::optional<Year>& raw() const { return value_; }

    friend constexpr bool operator==(const Bound&, const Bound&) = default;

    /// Raise a lower bound to at least `other` (open counts as -inf).
    /// Returns true when the bound moved.
    constexpr bool raise_lower(const Bound& other) {
        if (other.is_open()) return false;
        if (is_open() || other.value() > value()) {
            value_ = other.value_;
            return true;
        }
        return false;
    }

    /// Lower an upper bound to at most `other` (open counts as +inf).
    constexpr bool lower_upper(const Bound& other) {
        if (other.is_open()) return false;
        if (is_open() || other.value() < value()) {
            value_ = other.value_;
            return true;
        }
        return false;
    }

private:
    constexpr explicit Bound(Year y) : value_(y) {}
    std::optional<Year> value_;
};

enum class WindowType : std::uint8_t {
    Type1 = 1,  ///< [lower, upper]
    Type2 = 2,  ///< [lower, +inf)
    Type3 = 3,  ///< (-inf, upper]
    Type4 = 4,  ///< (-inf, +inf): no information
};

std::string_view to_string(WindowType t);

/// A year estimation window. The type is derived from bound openness.
struct YearWindow {
    Bound lower;
    Bound upper;

    static constexpr YearWindow unbounded() { return {}; }
    static constexpr YearWindow closed(Year lo, Year hi) { return {Bound::at(lo), Bound::at(hi)}; }

    constexpr WindowType type() const {
        if (lower.is_finite() && upper.is_finite()) return WindowType::Type1;
        if (lower.is_finite()) return WindowType::Type2;
        if (upper.is_finite()) return WindowType::Type3;
        return WindowType::Type4;
    }

    /// True when `y` lies inside the window (open ends are unbounded).
    constexpr bool contains(Year y) const {
        return (lower.is_open() || lower.value() <= y) && (upper.is_open() || y <= upper.value());
    }

    /// True when this window is a subset of `outer`.
    constexpr bool within(const YearWindow& outer) const {
        const bool lower_ok = outer.lower.is_open() || (lower.is_finite() && lower.value() >= outer.lower.value());
        const bool upper_ok = outer.upper.is_open() || (upper.is_finite() && upper.value() <= outer.upper.value());
        return lower_ok && upper_ok;
    }

    /// Swap finite bounds if they are inverted. Returns true when a swap happened.
    bool normalize() {
        if (lower.is_finite() && upper.is_finite() && lower.value() > upper.value()) {
            const Year lo = upper.value();
            const Year hi = lower.value();
            lower = Bound::at(lo);
            upper = Bound::at(hi);
            return true;
        }
        return false;
    }

    friend constexpr bool operator==(const YearWindow&, const YearWindow&) = default;
};

/// Integer floor division (rounds toward -inf).
constexpr long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

/// Midpoint of two years, half-years rounded up to the later year.
constexpr Year midpoint_year(Year lo, Year hi) {
    return static_cast<Year>(floor_div(static_cast<long long>(lo) + hi + 1, 2));
}

/// Round a real-valued year to the nearest integer, halves toward the later year.
/// A 1e-9 slack absorbs representation error in exact halves.
inline Year round_year(double y) { return static_cast<Year>(std::floor(y + 0.5 + 1e-9)); }

/// Counters raised by estimators when they normalize or clamp values.
struct Diagnostics {
    std::size_t swapped_windows = 0;
    std::size_t clamped_estimates = 0;
    std::size_t rounds = 0;
    bool hit_round_cap = false;

    friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

}  // namespace mye
