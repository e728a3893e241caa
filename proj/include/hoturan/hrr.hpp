#pragma once

// Two-term Hardy-Ramanujan-Rademacher data: mu(n), the B1/B2 sandwich for
// p(n), Lehmer's remainder bound, the truncated main term, and T(n).

#include "hoturan/partition.hpp"
#include "hoturan/report.hpp"

#include <stdexcept>

namespace hoturan {

struct MuValue {
    Index n = 0;
    RatInterval enclosure; ///< (pi/6) sqrt(24n - 1)
};

struct BoundPair {
    Index n = 0;
    RatInterval b1;
    RatInterval b2;
};

namespace detail {

inline void require_positive_index(Index n, const char* what)
{
    if (n < 1)
        throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

} // namespace detail

/// (pi/6) sqrt(24n - 1).
inline Enclosure mu_enclosure(Index n, Precision p)
{
    detail::require_positive_index(n, "mu");
    Precision wp = p.plus(8);
    Enclosure root = sqrt(Enclosure::exact(Rational(24 * n - 1), wp));
    return pi(wp) * root / 6L;
}

inline MuValue mu(Index n, Precision p) { return {n, mu_enclosure(n, p).interval()}; }

namespace detail {

// sqrt(12) e^mu / (24n - 1)
inline Enclosure hrr_prefactor(Index n, const Enclosure& m)
{
    Precision wp = m.precision();
    return sqrt(Enclosure::exact(Rational(12), wp)) * exp(m) / Rational(24 * n - 1);
}

} // namespace detail

/// sqrt(12) e^mu/(24n-1) (1 - 1/mu - 1/mu^10)
inline Enclosure b1_enclosure(Index n, Precision p)
{
    Enclosure m = mu_enclosure(n, p.plus(16));
    return detail::hrr_prefactor(n, m) * (1L - 1L / m - 1L / pow(m, 10));
}

/// sqrt(12) e^mu/(24n-1) (1 - 1/mu + 1/mu^10)
inline Enclosure b2_enclosure(Index n, Precision p)
{
    Enclosure m = mu_enclosure(n, p.plus(16));
    return detail::hrr_prefactor(n, m) * (1L - 1L / m + 1L / pow(m, 10));
}

inline RatInterval b1(Index n, Precision p) { return b1_enclosure(n, p).interval(); }
inline RatInterval b2(Index n, Precision p) { return b2_enclosure(n, p).interval(); }
inline BoundPair bounds(Index n, Precision p) { return {n, b1(n, p), b2(n, p)}; }

/// Lehmer's bound on |R_2(n, N)|:
/// (pi^2 N^(-2/3) / sqrt 3) [ (N/mu)^3 sinh(mu/N) + 1/6 - (N/mu)^2 ].
inline RatInterval lehmer_bound(Index n, Index N, Precision p)
{
    detail::require_positive_index(n, "lehmer_bound");
    if (N < 1)
        throw std::invalid_argument("lehmer_bound: N must be >= 1");
    Precision wp = p.plus(16);
    Enclosure m = mu_enclosure(n, wp);
    Enclosure ratio = Rational(N) / m;
    Enclosure n_pow = Enclosure(root_enclosure(RatInterval(Rational(1, N * N)), 3, wp), wp);
    Enclosure bracket = pow(ratio, 3) * sinh(m / Rational(N)) + Rational(1, 6) - square(ratio);
    Enclosure lead = square(pi(wp)) * n_pow / sqrt(Enclosure::exact(Rational(3), wp));
    return (lead * bracket).interval();
}

/// The k = 1, 2 terms of the Rademacher series (A_1 = 1, A_2 = (-1)^n).
inline RatInterval rademacher_main(Index n, Precision p)
{
    detail::require_positive_index(n, "rademacher_main");
    Precision wp = p.plus(16);
    Enclosure m = mu_enclosure(n, wp);
    Enclosure k1 = (1L - 1L / m) * exp(m) + (1L + 1L / m) * exp(-m);
    Enclosure half = m / 2L;
    Enclosure k2 = ((1L - 2L / m) * exp(half) + (1L + 2L / m) * exp(-half)) /
                   sqrt(Enclosure::exact(Rational(2), wp));
    if (n % 2 != 0)
        k2 = -k2;
    Enclosure lead = sqrt(Enclosure::exact(Rational(12), wp)) / Rational(24 * n - 1);
    return (lead * (k1 + k2)).interval();
}

/// T(n) = p(n)(24n - 1)/(sqrt(12) e^mu) - 1 + 1/mu, measured from the exact p(n).
inline Enclosure t_of_n_enclosure(Index n, const PartitionTable& table, Precision p)
{
    detail::require_positive_index(n, "t_of_n");
    Precision wp = p.plus(16);
    Enclosure m = mu_enclosure(n, wp);
    Enclosure ratio = Enclosure::exact(Rational(table.at(n)), wp) / detail::hrr_prefactor(n, m);
    return ratio - 1L + 1L / m;
}

inline RatInterval t_of_n(Index n, const PartitionTable& table, Precision p)
{
    return t_of_n_enclosure(n, table, p).interval();
}

/// Per-n sandwich B1(n) < p(n) < B2(n). Margin: 1 - |mu^10 T(n)|.
inline VerdictEntry sandwich_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    const Rational pn(table.at(n));
    auto lower = decide_sign([&](Precision p) { return pn - b1_enclosure(n, p); }, opts.precision, opts.max_bits);
    auto upper = decide_sign([&](Precision p) { return b2_enclosure(n, p) - pn; }, opts.precision, opts.max_bits);
    VerdictEntry e;
    e.n = n;
    e.verdict = combine(positive_verdict(lower.verdict), positive_verdict(upper.verdict));
    Precision mp(std::max(lower.bits_used, upper.bits_used));
    Enclosure m = mu_enclosure(n, mp);
    Enclosure scaled = pow(m, 10) * t_of_n_enclosure(n, table, mp);
    e.margin = (1L - Enclosure(abs(scaled.interval()), mp)).interval();
    return e;
}

inline InequalityReport verify_sandwich(Index lo, Index hi, const PartitionTable& table, const CheckOptions& opts = {})
{
    if (lo < 1)
        throw std::invalid_argument("verify_sandwich: n_lo must be >= 1");
    return run_range("sandwich", lo, hi, opts, [&](Index n) { return sandwich_check(n, table, opts); });
}

} // namespace hoturan
