#pragma once

// Turan-type inequalities for p(n): u_n, log-concavity, the higher order
// Turan inequality and the cubic invariant, the f/g bounds for u_n, Q/psi/F,
// the DeSalvo-Pak inequalities and the final chain u_n < u_{n+1} < Q(u_n).

#include "hoturan/hrr.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hoturan {

namespace detail {

inline void require_table(const PartitionTable& table, Index need, const char* what)
{
    if (need > table.max_index())
        throw std::out_of_range(std::string(what) + ": partition table must reach n=" + std::to_string(need));
}

inline void require_unit(const Rational& t, const char* what)
{
    if (t <= 0 || t >= 1)
        throw std::domain_error(std::string(what) + ": argument must lie in (0, 1)");
}

inline VerdictEntry exact_entry(Index n, const Rational& margin)
{
    VerdictEntry e;
    e.n = n;
    e.verdict = margin > 0 ? Verdict::Holds : Verdict::Fails;
    e.margin = RatInterval(margin);
    return e;
}

inline Verdict verdict_of(SignVerdict s) { return positive_verdict(s); }

} // namespace detail

struct UnValue {
    Index n = 0;
    Rational value;
};

/// u_n = p(n+1) p(n-1) / p(n)^2.
inline Rational u(Index n, const PartitionTable& table)
{
    if (n < 1)
        throw std::invalid_argument("u: n must be >= 1");
    detail::require_table(table, n + 1, "u");
    Rational r(table.at(n + 1) * table.at(n - 1), table.at(n) * table.at(n));
    r.canonicalize();
    return r;
}

inline UnValue u_value(Index n, const PartitionTable& table) { return {n, u(n, table)}; }

/// p(n)^2 - p(n-1) p(n+1) > 0. Margin: 1 - u_n.
inline VerdictEntry log_concave_check(Index n, const PartitionTable& table)
{
    return detail::exact_entry(n, 1 - u(n, table));
}

/// 4(a_n^2 - a_{n-1}a_{n+1})(a_{n+1}^2 - a_n a_{n+2}) - (a_n a_{n+1} - a_{n-1}a_{n+2})^2 with a = p.
inline Integer higher_turan_form(Index n, const PartitionTable& table)
{
    if (n < 1)
        throw std::invalid_argument("higher_turan_form: n must be >= 1");
    detail::require_table(table, n + 2, "higher_turan_form");
    const Integer &a0 = table.at(n - 1), &a1 = table.at(n), &a2 = table.at(n + 1), &a3 = table.at(n + 2);
    Integer d = a1 * a2 - a0 * a3;
    return 4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3) - d * d;
}

/// 4(1 - u_n)(1 - u_{n+1}) - (1 - u_n u_{n+1})^2.
inline Rational theorem13_value(Index n, const PartitionTable& table)
{
    Rational a = u(n, table), b = u(n + 1, table);
    Rational d = 1 - a * b;
    return 4 * (1 - a) * (1 - b) - d * d;
}

/// Strict higher order Turan inequality, decided on the integer form.
/// Margin: the normalized form 4(1-u_n)(1-u_{n+1}) - (1-u_n u_{n+1})^2.
inline VerdictEntry higher_turan_check(Index n, const PartitionTable& table)
{
    VerdictEntry e;
    e.n = n;
    e.verdict = higher_turan_form(n, table) > 0 ? Verdict::Holds : Verdict::Fails;
    e.margin = RatInterval(theorem13_value(n, table));
    return e;
}

inline VerdictEntry theorem13_check(Index n, const PartitionTable& table)
{
    return detail::exact_entry(n, theorem13_value(n, table));
}

/// 4(a1^2 - a0 a2)(a2^2 - a1 a3) - (a1 a2 - a0 a3)^2.
inline Rational cubic_invariant_factored(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
{
    Rational d = a1 * a2 - a0 * a3;
    return 4 * (a1 * a1 - a0 * a2) * (a2 * a2 - a1 * a3) - d * d;
}

/// I(a0, a1, a2, a3) = 3a1^2a2^2 - 4a1^3a3 - 4a0a2^3 - a0^2a3^2 + 6a0a1a2a3.
/// Cross-checked against the factored form on every call.
inline Rational cubic_invariant(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
{
    Rational i = 3 * a1 * a1 * a2 * a2 - 4 * a1 * a1 * a1 * a3 - 4 * a0 * a2 * a2 * a2 - a0 * a0 * a3 * a3 +
                 6 * a0 * a1 * a2 * a3;
    if (i != cubic_invariant_factored(a0, a1, a2, a3))
        throw std::logic_error("cubic_invariant: expanded and factored forms disagree");
    return i;
}

// ---------------------------------------------------------------------------
// f(n) and g(n)

namespace detail {

/// x - 2y + z = (pi/6)(sqrt(24n-25) - 2 sqrt(24n-1) + sqrt(24n+23)), as one
/// interval.
inline Enclosure second_difference(Index n, Precision wp)
{
    auto s = [&](Index m) { return sqrt(Enclosure::exact(Rational(24 * m - 1), wp)); };
    return pi(wp) * (s(n - 1) - 2L * s(n) + s(n + 1)) / 6L;
}

inline Enclosure alpha(const Enclosure& t) { return pow(t, 10) - pow(t, 9) + 1L; }
inline Enclosure beta(const Enclosure& t) { return pow(t, 10) - pow(t, 9) - 1L; }

} // namespace detail

/// f(n) = e^{x-2y+z} beta(x) y^24 beta(z) / (x^12 alpha(y)^2 z^12), with
/// x, y, z = mu(n-1), mu(n), mu(n+1), alpha(t) = t^10 - t^9 + 1 and
/// beta(t) = t^10 - t^9 - 1.
inline Enclosure f_enclosure(Index n, Precision p)
{
    if (n < 2)
        throw std::invalid_argument("f: n must be >= 2");
    Precision wp = p.plus(32);
    Enclosure x = mu_enclosure(n - 1, wp), y = mu_enclosure(n, wp), z = mu_enclosure(n + 1, wp);
    Enclosure e = exp(detail::second_difference(n, wp));
    return e * detail::beta(x) * pow(y, 24) * detail::beta(z) /
           (pow(x, 12) * square(detail::alpha(y)) * pow(z, 12));
}

/// g(n): f(n) with alpha and beta exchanged.
inline Enclosure g_enclosure(Index n, Precision p)
{
    if (n < 2)
        throw std::invalid_argument("g: n must be >= 2");
    Precision wp = p.plus(32);
    Enclosure x = mu_enclosure(n - 1, wp), y = mu_enclosure(n, wp), z = mu_enclosure(n + 1, wp);
    Enclosure e = exp(detail::second_difference(n, wp));
    return e * detail::alpha(x) * pow(y, 24) * detail::alpha(z) /
           (pow(x, 12) * square(detail::beta(y)) * pow(z, 12));
}

inline RatInterval f_bound(Index n, Precision p) { return f_enclosure(n, p).interval(); }
inline RatInterval g_bound(Index n, Precision p) { return g_enclosure(n, p).interval(); }

/// B1(n-1) B1(n+1) / B2(n)^2, the unsimplified form of f(n).
inline Enclosure f_from_sandwich(Index n, Precision p)
{
    return b1_enclosure(n - 1, p) * b1_enclosure(n + 1, p) / square(b2_enclosure(n, p));
}

/// f(n) < u_n < g(n). Margin: min of the two slacks.
inline VerdictEntry fg_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    const Rational un = u(n, table);
    auto lower = decide_sign([&](Precision p) { return un - f_enclosure(n, p); }, opts.precision, opts.max_bits);
    auto upper = decide_sign([&](Precision p) { return g_enclosure(n, p) - un; }, opts.precision, opts.max_bits);
    VerdictEntry e;
    e.n = n;
    e.verdict = combine(positive_verdict(lower.verdict), positive_verdict(upper.verdict));
    const RatInterval& a = lower.enclosure;
    const RatInterval& b = upper.enclosure;
    e.margin = RatInterval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
    return e;
}

/// f(n) + 110/mu(n-1)^5 - g(n+1).
inline Enclosure theorem31_margin(Index n, Precision p)
{
    Precision wp = p.plus(8);
    Enclosure x = mu_enclosure(n - 1, wp);
    return f_enclosure(n, wp) + 110L / pow(x, 5) - g_enclosure(n + 1, wp);
}

/// g(n+1) < f(n) + 110/mu(n-1)^5, evaluated directly.
inline VerdictEntry theorem31_check(Index n, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("theorem31: n must be >= 2");
    auto d = decide_sign([&](Precision p) { return theorem31_margin(n, p); }, opts.precision, opts.max_bits);
    return {n, positive_verdict(d.verdict), d.enclosure, {}};
}

// ---------------------------------------------------------------------------
// Q, psi, P and F

/// Exact sign of Q(u) - s, where Q(u) = (3u + 2 sqrt((1-u)^3) - 2)/u^2 and
/// 0 < u < 1. Uses Q(u) - s = (2 sqrt((1-u)^3) - L)/u^2 with L = s u^2 - 3u + 2.
inline int sign_q_minus(const Rational& u_val, const Rational& s)
{
    detail::require_unit(u_val, "Q");
    Rational L = s * u_val * u_val - 3 * u_val + 2;
    if (L < 0)
        return 1;
    Rational c = 1 - u_val;
    return sgn(Rational(4 * c * c * c - L * L));
}

/// Exact sign of s - P(u) for P(u) = (3u - 2 sqrt((1-u)^3) - 2)/u^2.
inline int sign_minus_p(const Rational& u_val, const Rational& s)
{
    detail::require_unit(u_val, "P");
    Rational L = s * u_val * u_val - 3 * u_val + 2; // s - P = (L + 2 sqrt(...))/u^2
    if (L > 0)
        return 1;
    Rational c = 1 - u_val;
    return sgn(Rational(4 * c * c * c - L * L));
}

/// Verdict for s < Q(u) when s is only known as an enclosure.
inline SignVerdict sign_q_minus(const Rational& u_val, const RatInterval& s)
{
    if (sign_q_minus(u_val, s.hi()) > 0)
        return SignVerdict::Positive;
    int at_lo = sign_q_minus(u_val, s.lo());
    if (at_lo < 0)
        return SignVerdict::Negative;
    if (at_lo == 0 && s.is_point())
        return SignVerdict::Zero;
    return SignVerdict::Undecided;
}

namespace detail {

inline RatInterval cube_root_term(const Rational& t, Precision wp)
{
    Rational c = 1 - t;
    return sqrt_enclosure(RatInterval(Rational(c * c * c)), wp);
}

} // namespace detail

/// Q(t) = (3t + 2 sqrt((1-t)^3) - 2)/t^2 on 0 < t < 1.
inline RatInterval q_func(const Rational& t, Precision p)
{
    detail::require_unit(t, "Q");
    RatInterval r = detail::cube_root_term(t, p.plus(16));
    return round_outward((RatInterval(3 * t - 2) + RatInterval(2L) * r) / RatInterval(Rational(t * t)), p);
}

/// P(t) = (3t - 2 sqrt((1-t)^3) - 2)/t^2, the smaller root of F.
inline RatInterval p_func(const Rational& t, Precision p)
{
    detail::require_unit(t, "P");
    RatInterval r = detail::cube_root_term(t, p.plus(16));
    return round_outward((RatInterval(3 * t - 2) - RatInterval(2L) * r) / RatInterval(Rational(t * t)), p);
}

/// psi(t) = Q(t) - t.
inline RatInterval psi_func(const Rational& t, Precision p)
{
    detail::require_unit(t, "psi");
    RatInterval r = detail::cube_root_term(t, p.plus(16));
    Rational t2 = t * t;
    return round_outward((RatInterval(Rational(3 * t - t2 * t - 2)) + RatInterval(2L) * r) / RatInterval(t2), p);
}

/// Q over an interval of arguments; Q is increasing on (0, 1).
inline RatInterval q_func(const RatInterval& t, Precision p)
{
    return {q_func(t.lo(), p).lo(), q_func(t.hi(), p).hi()};
}

/// psi over an interval of arguments; psi is decreasing on (0, 1).
inline RatInterval psi_func(const RatInterval& t, Precision p)
{
    return {psi_func(t.hi(), p).lo(), psi_func(t.lo(), p).hi()};
}

/// F(u, t) = 4(1-u)(1-t) - (1-ut)^2.
inline Rational F_func(const Rational& u_val, const Rational& t)
{
    Rational d = 1 - u_val * t;
    return 4 * (1 - u_val) * (1 - t) - d * d;
}

struct FRoots {
    RatInterval p_root;
    RatInterval q_root;
};

/// The two roots P(u) < Q(u) of t -> F(u, t). Throws std::logic_error if
/// P(u) < u < Q(u) cannot be confirmed from F(u, u) = (1-u)^3 (u+3) > 0.
inline FRoots F_roots(const Rational& u_val, Precision p)
{
    detail::require_unit(u_val, "F_roots");
    Rational c = 1 - u_val;
    if (F_func(u_val, u_val) != c * c * c * (u_val + 3) || F_func(u_val, u_val) <= 0)
        throw std::logic_error("F_roots: F(u, u) identity failed");
    return {p_func(u_val, p), q_func(u_val, p)};
}

// ---------------------------------------------------------------------------
// DeSalvo-Pak bound and its strengthened form

namespace detail {

/// pi / sqrt(24 n^3)
inline Enclosure dp_term(Index n, Precision p)
{
    Precision wp = p.plus(16);
    Rational n3 = Rational(n) * n * n;
    return pi(wp) / sqrt(Enclosure::exact(Rational(24 * n3), wp));
}

} // namespace detail

/// p(n-1)/p(n) (1 + pi/(sqrt 24 n^{3/2})) > p(n)/p(n+1), i.e.
/// pi/sqrt(24 n^3) > 1/u_n - 1.
inline VerdictEntry desalvo_pak_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("desalvo_pak: n must be >= 2");
    const Rational rhs = 1 / u(n, table) - 1;
    auto d = decide_sign([&](Precision p) { return detail::dp_term(n, p) - rhs; }, opts.precision, opts.max_bits);
    return {n, positive_verdict(d.verdict), d.enclosure, {}};
}

/// p(n-1)/p(n) (1 + 1/n) > p(n)/p(n+1), i.e. (1 + 1/n) u_n > 1. Exact.
inline VerdictEntry desalvo_pak_weak_check(Index n, const PartitionTable& table)
{
    if (n < 2)
        throw std::invalid_argument("desalvo_pak_weak: n must be >= 2");
    return detail::exact_entry(n, (1 + Rational(1, n)) * u(n, table) - 1);
}

/// 4(1-u_n)(1-u_{n+1}) < (1 + pi/(sqrt 24 n^{3/2}))(1 - u_n u_{n+1})^2.
inline VerdictEntry conjecture2_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("conjecture2: n must be >= 2");
    const Rational a = u(n, table), b = u(n + 1, table);
    const Rational d = 1 - a * b;
    const Rational d2 = d * d;
    const Rational lhs = 4 * (1 - a) * (1 - b);
    auto s = decide_sign([&](Precision p) { return (1L + detail::dp_term(n, p)) * d2 - lhs; }, opts.precision,
                         opts.max_bits);
    return {n, positive_verdict(s.verdict), s.enclosure, {}};
}

// ---------------------------------------------------------------------------
// Gate below Q and the final chain

/// f(n) + 110/mu(n-1)^5 < Q(u_n). The comparison against Q is exact given
/// an enclosure of the left side. Margin: Q(u_n) - f(n) - 110/mu(n-1)^5.
inline VerdictEntry theorem41_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("theorem41: n must be >= 2");
    const Rational un = u(n, table);
    VerdictEntry e;
    e.n = n;
    if (un >= 1) {
        e.verdict = Verdict::Fails;
        e.note = "u_n >= 1, Q undefined";
        return e;
    }
    const unsigned cap = std::max(opts.max_bits, opts.precision.bits());
    SignVerdict v = SignVerdict::Undecided;
    RatInterval lhs;
    unsigned bits = opts.precision.bits();
    for (; bits <= cap; bits *= 2) {
        Precision p(bits);
        lhs = (f_enclosure(n, p) + 110L / pow(mu_enclosure(n - 1, p.plus(8)), 5)).interval();
        v = sign_q_minus(un, lhs);
        if (v != SignVerdict::Undecided)
            break;
    }
    e.verdict = positive_verdict(v);
    Precision mp(std::min(bits, cap));
    e.margin = q_func(un, mp) - lhs;
    return e;
}

/// Left half of the chain: u_n < u_{n+1}. Exact.
inline VerdictEntry chain_left_check(Index n, const PartitionTable& table)
{
    return detail::exact_entry(n, u(n + 1, table) - u(n, table));
}

/// u_n < u_{n+1} < Q(u_n). Both halves exact (the right one via squared forms).
inline VerdictEntry chain_check(Index n, const PartitionTable& table, const CheckOptions& opts)
{
    const Rational a = u(n, table), b = u(n + 1, table);
    VerdictEntry e;
    e.n = n;
    if (a >= 1) {
        e.verdict = Verdict::Fails;
        e.note = "u_n >= 1, Q undefined";
        return e;
    }
    bool left = a < b;
    bool right = sign_q_minus(a, b) > 0;
    e.verdict = left && right ? Verdict::Holds : Verdict::Fails;
    RatInterval q = q_func(a, opts.precision);
    RatInterval slack = q - RatInterval(b);
    e.margin = RatInterval(std::min(Rational(b - a), slack.lo()), std::min(Rational(b - a), slack.hi()));
    return e;
}

// ---------------------------------------------------------------------------
// Threshold search

struct ThresholdResult {
    std::string name;
    Index n_lo = 0;
    Index n_max = 0;
    /// Smallest N with the predicate holding on [N, n_max]; n_max + 1 when
    /// the predicate fails at n_max.
    Index threshold = 0;
    std::vector<Index> failures; ///< failing n below the threshold, ascending
    bool found() const { return threshold <= n_max; }
    std::string label() const { return "empirical up to n_max=" + std::to_string(n_max); }
};

class UndecidedError : public std::runtime_error {
public:
    UndecidedError(std::string name, Index n)
        : std::runtime_error("threshold search '" + name + "': undecided verdict at n=" + std::to_string(n) +
                             "; retry with higher precision"),
          n_(n)
    {
    }
    Index n() const { return n_; }

private:
    Index n_;
};

/// Scans an already computed report. Any Undecided verdict aborts.
inline ThresholdResult threshold_from_report(const InequalityReport& report)
{
    ThresholdResult r;
    r.name = report.name();
    r.n_lo = report.n_lo();
    r.n_max = report.n_hi();
    r.threshold = report.n_lo();
    for (const auto& e : report.verdicts()) {
        if (e.verdict == Verdict::Undecided)
            throw UndecidedError(report.name(), e.n);
        if (e.verdict == Verdict::Fails) {
            r.failures.push_back(e.n);
            r.threshold = e.n + 1;
        }
    }
    return r;
}

template <class Check>
ThresholdResult threshold_search(std::string name, Index lo, Index n_max, const CheckOptions& opts, Check&& check)
{
    return threshold_from_report(run_range(std::move(name), lo, n_max, opts, std::forward<Check>(check)));
}

} // namespace hoturan
