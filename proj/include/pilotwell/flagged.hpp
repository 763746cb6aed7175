#pragma once

namespace pilotwell {

/// Why a pointwise evaluation is not trustworthy (or not defined).
enum class ValueFlag {
    ok = 0,
    outside_well,    ///< x outside the classically allowed interval
    turning_zone,    ///< inside the turning-point exclusion zone
    density_node,    ///< local density below the node threshold
    undefined        ///< quantity has no value here (e.g. one-sided density)
};

/// A value paired with a validity flag.  Callers decide what to do with
/// flagged values; numerically they are still filled in when the formula
/// is evaluable.
template <typename T>
struct Flagged {
    T value{};
    ValueFlag flag = ValueFlag::ok;

    bool ok() const { return flag == ValueFlag::ok; }
};

template <typename T>
Flagged<T> make_ok(T v) { return {v, ValueFlag::ok}; }

template <typename T>
Flagged<T> make_flagged(T v, ValueFlag f) { return {v, f}; }

} // namespace pilotwell
