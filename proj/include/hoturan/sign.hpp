#pragma once

#include "hoturan/elementary.hpp"

#include <algorithm>
#include <type_traits>

namespace hoturan {

enum class SignVerdict { Positive, Negative, Zero, Undecided };

inline const char* to_string(SignVerdict s)
{
    switch (s) {
    case SignVerdict::Positive: return "positive";
    case SignVerdict::Negative: return "negative";
    case SignVerdict::Zero: return "zero";
    case SignVerdict::Undecided: return "undecided";
    }
    return "?";
}

struct SignDecision {
    SignVerdict verdict = SignVerdict::Undecided;
    RatInterval enclosure;  ///< last evaluated enclosure
    unsigned bits_used = 0; ///< precision of the last evaluation
};

namespace detail {

template <class T>
RatInterval as_interval(const T& v)
{
    if constexpr (std::is_same_v<T, Enclosure>)
        return v.interval();
    else
        return RatInterval(v);
}

} // namespace detail

/// Adaptive sign decision. `expr(Precision)` must return an enclosure
/// (RatInterval or Enclosure) that never widens as precision grows.
/// Precision doubles from `start` until the sign is certain or `max_bits`
/// is exceeded. A point interval at zero means the value is exactly zero.
template <class Expr>
SignDecision decide_sign(Expr&& expr, Precision start = Precision(kDefaultBits), unsigned max_bits = kMaxBits)
{
    SignDecision out;
    const unsigned cap = std::max(max_bits, start.bits());
    for (unsigned bits = start.bits(); bits <= cap; bits *= 2) {
        out.enclosure = detail::as_interval(expr(Precision(bits)));
        out.bits_used = bits;
        const RatInterval& v = out.enclosure;
        if (v.positive()) {
            out.verdict = SignVerdict::Positive;
            return out;
        }
        if (v.negative()) {
            out.verdict = SignVerdict::Negative;
            return out;
        }
        if (v.is_point()) { // exactly zero
            out.verdict = SignVerdict::Zero;
            return out;
        }
    }
    out.verdict = SignVerdict::Undecided;
    return out;
}

} // namespace hoturan
