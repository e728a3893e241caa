#pragma once

// Replay of the reduction steps behind the large-n proofs: truncated series
// bounds for y, z, w in terms of x, Taylor bounds for e^t on t < 0, the eta
// bounds, exact expansion of the H(x)/G(x) polynomials over Q[pi], and
// tail-dominance positivity on a ray.
//
// Throughout x = mu(n-1), y = mu(n), z = mu(n+1), w = mu(n+2), so that
// y^2 = x^2 + 2pi^2/3, z^2 = x^2 + 4pi^2/3, w^2 = x^2 + 2pi^2.

#include "hoturan/pi_number.hpp"
#include "hoturan/turan.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoturan {

// ---------------------------------------------------------------------------
// Series bounds

enum class Radical { Y = 0, Z = 1, W = 2 };
enum class Side { Lower, Upper };

inline const char* to_string(Radical r)
{
    switch (r) {
    case Radical::Y: return "y";
    case Radical::Z: return "z";
    case Radical::W: return "w";
    }
    return "?";
}

/// c with radical^2 = x^2 + c.
inline PiNumber radical_constant(Radical r)
{
    static const Rational k[] = {Rational(2, 3), Rational(4, 3), Rational(2)};
    return pi_power(2, k[static_cast<int>(r)]);
}

/// x^2 + c as a polynomial in x.
inline XPoly radical_square(Radical r) { return x_power(2) + XPoly(radical_constant(r)); }

struct SeriesBound {
    Radical kind = Radical::Y;
    Side side = Side::Lower;
    XPoly poly; ///< x + sum_j b_j x^{1-2j}
};

/// Binomial truncation of sqrt(x^2 + c) = x sum_j C(1/2, j) c^j x^{-2j}:
/// through x^{-11} for the lower bound, x^{-9} for the upper.
inline SeriesBound series_bound(Radical kind, Side side)
{
    const unsigned last = side == Side::Lower ? 6 : 5;
    const PiNumber c = radical_constant(kind);
    XPoly out;
    Rational binom = 1; // C(1/2, j)
    PiNumber cj(1L);
    for (unsigned j = 0; j <= last; ++j) {
        if (j > 0) {
            binom *= (Rational(1, 2) - (j - 1));
            binom /= j;
            cj = cj * c;
        }
        out += x_power(1 - 2 * static_cast<long>(j), cj.scaled(binom));
    }
    return {kind, side, out};
}

struct SeriesCheck {
    Verdict verdict = Verdict::Undecided;
    std::array<Verdict, 6> parts{}; ///< y1<y, y<y2, z1<z, z<z2, w1<w, w<w2
    std::string note;
};

/// Certified radical_1(x) < radical < radical_2(x) for all three radicals at
/// the point x (an enclosure).
inline SeriesCheck check_series_sandwich_at(const std::function<Enclosure(Precision)>& x_of, const CheckOptions& opts)
{
    SeriesCheck out;
    Verdict all = Verdict::Holds;
    for (int r = 0; r < 3; ++r) {
        Radical kind = static_cast<Radical>(r);
        XPoly lo = series_bound(kind, Side::Lower).poly, hi = series_bound(kind, Side::Upper).poly;
        auto radical = [&](Precision p) {
            Enclosure x = x_of(p);
            return sqrt(square(x) + eval_pinumber(radical_constant(kind), p));
        };
        auto a = decide_sign([&](Precision p) { return radical(p) - eval_xpoly(lo, x_of(p), p); }, opts.precision,
                             opts.max_bits);
        auto b = decide_sign([&](Precision p) { return eval_xpoly(hi, x_of(p), p) - radical(p); }, opts.precision,
                             opts.max_bits);
        out.parts[2 * r] = positive_verdict(a.verdict);
        out.parts[2 * r + 1] = positive_verdict(b.verdict);
        all = combine(all, combine(out.parts[2 * r], out.parts[2 * r + 1]));
    }
    out.verdict = all;
    return out;
}

inline SeriesCheck check_series_sandwich_at(const Rational& x, const CheckOptions& opts = {})
{
    SeriesCheck c = check_series_sandwich_at([&](Precision p) { return Enclosure::exact(x, p); }, opts);
    if (x < 4)
        c.note = "x < 4: outside the stated domain";
    return c;
}

/// Series sandwich at x = mu(n-1).
inline VerdictEntry series_check(Index n, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("series: n must be >= 2");
    SeriesCheck c = check_series_sandwich_at([&](Precision p) { return mu_enclosure(n - 1, p.plus(16)); }, opts);
    VerdictEntry e{n, c.verdict, std::nullopt, {}};
    if (mu_enclosure(n - 1, opts.precision).hi() < 4)
        e.note = "x < 4: outside the stated domain";
    return e;
}

// ---------------------------------------------------------------------------
// Taylor bounds for e^t, t < 0

struct TTag;
using TaylorPoly = Polynomial<Rational, TTag>;

/// Truncated exponential series of the given degree.
inline TaylorPoly taylor_exp(unsigned degree)
{
    std::vector<Rational> c(degree + 1);
    Rational f = 1;
    for (unsigned k = 0; k <= degree; ++k) {
        if (k > 0)
            f /= k;
        c[k] = f;
    }
    return TaylorPoly(std::move(c));
}

/// Degree-6 truncation: e^t < Phi(t) for t < 0.
inline TaylorPoly taylor_upper() { return taylor_exp(6); }
/// Degree-7 truncation: phi(t) < e^t for t < 0.
inline TaylorPoly taylor_lower() { return taylor_exp(7); }

struct TaylorCheck {
    Verdict lower = Verdict::Undecided; ///< phi(t) < e^t
    Verdict upper = Verdict::Undecided; ///< e^t < Phi(t)
    Verdict verdict() const { return combine(lower, upper); }
};

inline TaylorCheck taylor_exp_bounds_check(const Rational& t, const CheckOptions& opts = {})
{
    if (t >= 0)
        throw std::invalid_argument("taylor bounds are stated for t < 0");
    Rational big = horner(taylor_upper(), t, [](const Rational& q) { return q; });
    Rational small = horner(taylor_lower(), t, [](const Rational& q) { return q; });
    auto e = [&](Precision p) { return exp_enclosure(RatInterval(t), p); };
    TaylorCheck c;
    c.lower = positive_verdict(decide_sign([&](Precision p) { return e(p) - RatInterval(small); }, opts.precision,
                                           opts.max_bits)
                                   .verdict);
    c.upper = positive_verdict(decide_sign([&](Precision p) { return RatInterval(big) - e(p); }, opts.precision,
                                           opts.max_bits)
                                   .verdict);
    return c;
}

/// Registry form: t = -n/10.
inline VerdictEntry taylor_check(Index n, const CheckOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("taylor: n must be >= 1 (t = -n/10)");
    return {n, taylor_exp_bounds_check(Rational(-n, 10), opts).verdict(), std::nullopt, {}};
}

// ---------------------------------------------------------------------------
// Radical bookkeeping over Q[pi][x]

/// Element of Q[pi][x, y, z, w] / (y^2 - x^2 - 2pi^2/3, ...), stored as eight
/// Laurent polynomials in x indexed by the parity of the y, z, w exponents.
class RadicalForm {
public:
    RadicalForm() = default;
    RadicalForm(XPoly p) { parts_[0] = std::move(p); }
    RadicalForm(long c) : RadicalForm(XPoly(PiNumber(c))) {}

    /// r^k.
    static RadicalForm power(Radical r, unsigned k)
    {
        RadicalForm out;
        XPoly even = pow(radical_square(r), k / 2);
        out.parts_[k % 2 ? bit(r) : 0] = std::move(even);
        return out;
    }

    static RadicalForm x_pow(long k) { return RadicalForm(x_power(k)); }

    friend RadicalForm operator+(RadicalForm a, const RadicalForm& b)
    {
        for (std::size_t i = 0; i < 8; ++i)
            a.parts_[i] += b.parts_[i];
        return a;
    }
    friend RadicalForm operator-(RadicalForm a, const RadicalForm& b)
    {
        for (std::size_t i = 0; i < 8; ++i)
            a.parts_[i] -= b.parts_[i];
        return a;
    }
    RadicalForm operator-() const { return RadicalForm() - *this; }

    friend RadicalForm operator+(RadicalForm a, long b)
    {
        a.parts_[0] += XPoly(PiNumber(b));
        return a;
    }
    friend RadicalForm operator-(RadicalForm a, long b) { return a + (-b); }
    friend RadicalForm operator*(long a, const RadicalForm& b) { return b.scaled(PiNumber(a)); }

    friend RadicalForm operator*(const RadicalForm& a, const RadicalForm& b)
    {
        RadicalForm out;
        for (unsigned i = 0; i < 8; ++i) {
            if (a.parts_[i].is_zero())
                continue;
            for (unsigned j = 0; j < 8; ++j) {
                if (b.parts_[j].is_zero())
                    continue;
                XPoly term = a.parts_[i] * b.parts_[j];
                unsigned common = i & j;
                for (int r = 0; r < 3; ++r)
                    if (common & (1u << r))
                        term = term * radical_square(static_cast<Radical>(r));
                out.parts_[i ^ j] += term;
            }
        }
        return out;
    }

    RadicalForm scaled(const PiNumber& s) const
    {
        RadicalForm r = *this;
        for (auto& p : r.parts_)
            p = p.scaled(s);
        return r;
    }

    /// The radical-free value; std::logic_error if any odd power survived.
    XPoly rational_part() const
    {
        for (unsigned i = 1; i < 8; ++i)
            if (!parts_[i].is_zero())
                throw std::logic_error("RadicalForm: odd power of a radical survived expansion (parity mask " +
                                       std::to_string(i) + ")");
        return parts_[0];
    }

    const std::array<XPoly, 8>& parts() const { return parts_; }

private:
    static unsigned bit(Radical r) { return 1u << static_cast<int>(r); }
    std::array<XPoly, 8> parts_;
};

inline RadicalForm pow(const RadicalForm& a, unsigned e)
{
    RadicalForm result(1L), base = a;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// The eta polynomials, generic over the value type (symbolic or numeric).

template <class T>
struct RadicalValues {
    T x, y, z, w;
    T y1, y2, z1, z2, w1, w2;
};

namespace detail {

template <class T>
T tpow(const T& t, unsigned e)
{
    return pow(t, e);
}

template <class T>
T alpha_of(const T& t)
{
    return tpow(t, 10) - tpow(t, 9) + 1L;
}
template <class T>
T beta_of(const T& t)
{
    return tpow(t, 10) - tpow(t, 9) - 1L;
}

} // namespace detail

template <class T>
T eta1(const RadicalValues<T>& v)
{
    using detail::tpow;
    return tpow(v.w, 10) - v.w1 * tpow(v.w, 8) + 1L;
}

template <class T>
T eta2(const RadicalValues<T>& v)
{
    using detail::tpow;
    const T& y = v.y;
    const T& y1 = v.y1;
    return tpow(y, 30) - 3L * y1 * tpow(y, 28) + 3L * tpow(y, 28) - y1 * tpow(y, 26) + 3L * tpow(y, 20) -
           6L * y1 * tpow(y, 18) + 3L * tpow(y, 18) + 3L * tpow(y, 10) - 3L * y1 * tpow(y, 8) + 1L;
}

template <class T>
T eta3(const RadicalValues<T>& v)
{
    using detail::tpow;
    const T& z = v.z;
    return tpow(z, 30) - 3L * v.z2 * tpow(z, 28) + 3L * tpow(z, 28) - v.z2 * tpow(z, 26) - 3L * tpow(z, 20) +
           6L * v.z1 * tpow(z, 18) - 3L * tpow(z, 18) + 3L * tpow(z, 10) - 3L * v.z2 * tpow(z, 8) - 1L;
}

template <class T>
T eta4(const RadicalValues<T>& v)
{
    using detail::tpow;
    const T& y = v.y;
    return tpow(y, 20) - 2L * v.y2 * tpow(y, 18) + tpow(y, 18) + 2L * tpow(y, 10) - 2L * v.y2 * tpow(y, 8) +
           1L;
}

template <class T>
T eta5(const RadicalValues<T>& v)
{
    using detail::tpow;
    const T& z = v.z;
    return tpow(z, 20) - 2L * v.z2 * tpow(z, 18) + tpow(z, 18) - 2L * tpow(z, 10) + 2L * v.z1 * tpow(z, 8) +
           1L;
}

/// Lower bound of e^{x-2y+z}: phi(z1 + x - 2 y2).
template <class T, class Lift>
T lower_exp_factor(const RadicalValues<T>& v, Lift lift)
{
    return horner(taylor_lower(), v.z1 + v.x - 2L * v.y2, lift);
}

/// Upper bound of e^{w+y-2z}: Phi(w2 + y2 - 2 z1).
template <class T, class Lift>
T upper_exp_factor_sec3(const RadicalValues<T>& v, Lift lift)
{
    return horner(taylor_upper(), v.w2 + v.y2 - 2L * v.z1, lift);
}

/// Upper bound of e^{x-2y+z}: Phi(x - 2 y1 + z2).
template <class T, class Lift>
T upper_exp_factor_sec4(const RadicalValues<T>& v, Lift lift)
{
    return horner(taylor_upper(), v.x - 2L * v.y1 + v.z2, lift);
}

/// -Phi(w2+y2-2z1) x^12 z^36 eta1 eta2 + phi(z1+x-2y2) beta(x) y^36 w^12 eta3
/// + 110 x^7 y^12 z^12 w^12 eta4 eta5.
template <class T, class Lift>
T sec3_expression(const RadicalValues<T>& v, Lift lift)
{
    using detail::tpow;
    T a = upper_exp_factor_sec3(v, lift) * tpow(v.x, 12) * tpow(v.z, 36) * eta1(v) * eta2(v);
    T b = lower_exp_factor(v, lift) * detail::beta_of(v.x) * tpow(v.y, 36) * tpow(v.w, 12) * eta3(v);
    T c = 110L * tpow(v.x, 7) * tpow(v.y, 12) * tpow(v.z, 12) * tpow(v.w, 12) * eta4(v) * eta5(v);
    return b + c - a;
}

/// Numerator and denominator of the upper bound for f(n):
/// Phi(x-2y1+z2) y^24 beta(x) (z^10 - z^8 z1 - 1)  over  x^12 z^12 eta4.
template <class T, class Lift>
std::pair<T, T> sec4_ratio(const RadicalValues<T>& v, Lift lift)
{
    using detail::tpow;
    T num = upper_exp_factor_sec4(v, lift) * tpow(v.y, 24) * detail::beta_of(v.x) *
            (tpow(v.z, 10) - tpow(v.z, 8) * v.z1 - 1L);
    T den = tpow(v.x, 12) * tpow(v.z, 12) * eta4(v);
    return {num, den};
}

inline RadicalValues<RadicalForm> symbolic_values()
{
    auto s = [](Radical r, Side side) { return RadicalForm(series_bound(r, side).poly); };
    return {RadicalForm::x_pow(1),
            RadicalForm::power(Radical::Y, 1),
            RadicalForm::power(Radical::Z, 1),
            RadicalForm::power(Radical::W, 1),
            s(Radical::Y, Side::Lower),
            s(Radical::Y, Side::Upper),
            s(Radical::Z, Side::Lower),
            s(Radical::Z, Side::Upper),
            s(Radical::W, Side::Lower),
            s(Radical::W, Side::Upper)};
}

/// Numeric values with y, z, w = sqrt(x^2 + c) and the truncations at x.
inline RadicalValues<Enclosure> numeric_values(const Enclosure& x, Precision p)
{
    auto rad = [&](Radical r) { return sqrt(square(x) + eval_pinumber(radical_constant(r), p)); };
    auto s = [&](Radical r, Side side) { return eval_xpoly(series_bound(r, side).poly, x, p); };
    return {x,
            rad(Radical::Y),
            rad(Radical::Z),
            rad(Radical::W),
            s(Radical::Y, Side::Lower),
            s(Radical::Y, Side::Upper),
            s(Radical::Z, Side::Lower),
            s(Radical::Z, Side::Upper),
            s(Radical::W, Side::Lower),
            s(Radical::W, Side::Upper)};
}

inline RadicalValues<Enclosure> numeric_values_at(Index n, Precision p)
{
    return {mu_enclosure(n - 1, p),
            mu_enclosure(n, p),
            mu_enclosure(n + 1, p),
            mu_enclosure(n + 2, p),
            {},
            {},
            {},
            {},
            {},
            {}};
}

inline RadicalValues<Enclosure> with_truncations(RadicalValues<Enclosure> v, Precision p)
{
    auto s = [&](Radical r, Side side) { return eval_xpoly(series_bound(r, side).poly, v.x, p); };
    v.y1 = s(Radical::Y, Side::Lower);
    v.y2 = s(Radical::Y, Side::Upper);
    v.z1 = s(Radical::Z, Side::Lower);
    v.z2 = s(Radical::Z, Side::Upper);
    v.w1 = s(Radical::W, Side::Lower);
    v.w2 = s(Radical::W, Side::Upper);
    return v;
}

inline auto enclosure_lift(Precision p)
{
    return [p](const Rational& q) { return Enclosure::exact(q, p); };
}

inline RadicalForm radical_lift(const Rational& q) { return RadicalForm(XPoly(PiNumber(q))); }

// ---------------------------------------------------------------------------
// Eta bounds and the t-factor inequality

struct EtaCheck {
    std::array<Verdict, 5> parts{}; ///< alpha(w)<eta1, alpha(y)^3<eta2, beta(z)^3>eta3, alpha(y)^2>eta4, beta(z)^2>eta5
    Verdict verdict() const
    {
        Verdict v = Verdict::Holds;
        for (auto p : parts)
            v = combine(v, p);
        return v;
    }
};

inline EtaCheck eta_checks(Index n, const CheckOptions& opts)
{
    if (n < 2)
        throw std::invalid_argument("eta: n must be >= 2");
    auto vals = [&](Precision p) { return with_truncations(numeric_values_at(n, p.plus(32)), p.plus(32)); };
    using detail::alpha_of;
    using detail::beta_of;
    std::array<std::function<Enclosure(Precision)>, 5> diffs = {
        [&](Precision p) { auto v = vals(p); return eta1(v) - alpha_of(v.w); },
        [&](Precision p) { auto v = vals(p); return eta2(v) - pow(alpha_of(v.y), 3); },
        [&](Precision p) { auto v = vals(p); return pow(beta_of(v.z), 3) - eta3(v); },
        [&](Precision p) { auto v = vals(p); return square(alpha_of(v.y)) - eta4(v); },
        [&](Precision p) { auto v = vals(p); return square(beta_of(v.z)) - eta5(v); },
    };
    EtaCheck c;
    for (std::size_t i = 0; i < 5; ++i)
        c.parts[i] = positive_verdict(decide_sign(diffs[i], opts.precision, opts.max_bits).verdict);
    return c;
}

inline VerdictEntry eta_check(Index n, const CheckOptions& opts)
{
    VerdictEntry e{n, eta_checks(n, opts).verdict(), std::nullopt, {}};
    if (mu_enclosure(n - 1, opts.precision).hi() < 4)
        e.note = "x < 4: outside the stated domain";
    return e;
}

/// -e^{w+y-2z} t1 + e^{z+x-2y} t2 + 110 t3 with
/// t1 = x^12 z^36 alpha(y)^3 alpha(w), t2 = y^36 w^12 beta(x) beta(z)^3,
/// t3 = x^7 y^12 z^12 w^12 alpha(y)^2 beta(z)^2.
inline Enclosure t_factor_value(Index n, Precision p)
{
    if (n < 2)
        throw std::invalid_argument("t_factor: n must be >= 2");
    Precision wp = p.plus(32);
    auto v = numeric_values_at(n, wp);
    using detail::alpha_of;
    using detail::beta_of;
    auto s = [&](Index m) { return sqrt(Enclosure::exact(Rational(24 * m - 1), wp)); };
    Enclosure e1 = exp(pi(wp) * (s(n + 2) + s(n) - 2L * s(n + 1)) / 6L);
    Enclosure e2 = exp(detail::second_difference(n, wp));
    Enclosure t1 = pow(v.x, 12) * pow(v.z, 36) * pow(alpha_of(v.y), 3) * alpha_of(v.w);
    Enclosure t2 = pow(v.y, 36) * pow(v.w, 12) * beta_of(v.x) * pow(beta_of(v.z), 3);
    Enclosure t3 = pow(v.x, 7) * pow(v.y, 12) * pow(v.z, 12) * pow(v.w, 12) * square(alpha_of(v.y)) *
                   square(beta_of(v.z));
    // Divided by t3: x^5 (f(n) - g(n+1)) + 110.
    return (e2 * t2 - e1 * t1) / t3 + 110L;
}

inline VerdictEntry t_factor_positivity(Index n, const CheckOptions& opts)
{
    auto d = decide_sign([&](Precision p) { return t_factor_value(n, p); }, opts.precision, opts.max_bits);
    return {n, positive_verdict(d.verdict), d.enclosure, {}};
}

// ---------------------------------------------------------------------------
// Exact expansions

enum class Expansion { Sec3, Sec4Lemma, Sec4Gamma };

inline const char* to_string(Expansion e)
{
    switch (e) {
    case Expansion::Sec3: return "sec3";
    case Expansion::Sec4Lemma: return "sec4-lemma";
    case Expansion::Sec4Gamma: return "sec4-gamma";
    }
    return "?";
}

inline std::optional<Expansion> parse_expansion(const std::string& s)
{
    if (s == "sec3")
        return Expansion::Sec3;
    if (s == "sec4-lemma")
        return Expansion::Sec4Lemma;
    if (s == "sec4-gamma")
        return Expansion::Sec4Gamma;
    return std::nullopt;
}

/// Positive normalizing constants: the sec3 constant is the least common
/// denominator of the expanded expression; the sec4 constant is 2^24 3^37 5.
inline const Integer& sec3_scale()
{
    static const Integer k("39686201656473354776757087428535162639482880");
    return k;
}
inline const Integer& sec4_scale()
{
    static const Integer k("37772551752284676072407040");
    return k;
}

struct HGPair {
    XPoly H;
    XPoly G; ///< empty for the gamma expansion
};

/// Least common multiple of every rational coefficient's denominator.
inline Integer coefficient_denominator_lcm(const XPoly& f)
{
    Integer l = 1;
    for (const auto& c : f.raw())
        for (const auto& q : c.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

namespace detail {

inline XPoly sec3_raw()
{
    return sec3_expression(symbolic_values(), radical_lift).rational_part();
}

inline HGPair compute_expansion(Expansion which);

inline const HGPair& cached_expansion(Expansion which)
{
    static std::mutex mu;
    static std::map<Expansion, HGPair> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(which);
        if (it != cache.end())
            return it->second;
    }
    HGPair r = compute_expansion(which);
    std::lock_guard lock(mu);
    return cache.emplace(which, std::move(r)).first->second;
}

inline HGPair compute_expansion(Expansion which)
{
    switch (which) {
    case Expansion::Sec3: {
        XPoly e = sec3_raw();
        long shift = -e.valuation();
        PiNumber k{Rational(sec3_scale())};
        return {e.shifted(shift).scaled(k), x_power(shift, k)};
    }
    case Expansion::Sec4Lemma: {
        auto [num, den] = sec4_ratio(symbolic_values(), radical_lift);
        XPoly n = num.rational_part(), d = den.rational_part();
        long shift = -std::min(n.valuation(), d.valuation());
        PiNumber k{Rational(sec4_scale())};
        return {n.shifted(shift).scaled(k), d.shifted(shift).scaled(k)};
    }
    case Expansion::Sec4Gamma: {
        const HGPair& hg = cached_expansion(Expansion::Sec4Lemma);
        XPoly diff = hg.G - hg.H;
        XPoly g3 = hg.G * hg.G * hg.G;
        return {(diff * diff * diff).shifted(10) - g3.scaled(PiNumber(12100L)), {}};
    }
    }
    throw std::logic_error("unknown expansion");
}

} // namespace detail

/// H and G for sec3 / sec4-lemma; for sec4-gamma, H holds
/// x^10 (G - H)^3 - 110^2 G^3 and G is empty. Results are cached.
inline const HGPair& expand_HG(Expansion which) { return detail::cached_expansion(which); }

// ---------------------------------------------------------------------------
// Tail dominance

struct TailDominanceResult {
    Index k0 = 0;
    Rational x0;
    Index count = 0;                   ///< k0 + 1 low-order terms bounded by |a_k0| x^k0
    RatInterval max_threshold;         ///< max_k (|a_k| / |a_k0|)^(1/(k0-k))
    Index argmax_k = -1;
    std::vector<Index> insufficient;   ///< k with |a_k| x0^k >= |a_k0| x0^k0 (or undecided)
    RatInterval root;                  ///< larger root of a_{k0+2} x^2 - |a_{k0+1}| x - count |a_k0|
    Integer ray_start = 0;             ///< positivity certified for x >= ray_start
    Verdict verdict = Verdict::Undecided;
    std::string note;
};

/// Coefficient enclosure source: coeff(k, p) must contain a_k.
template <class Coeff>
TailDominanceResult tail_dominance_positivity(Coeff&& coeff, Index degree, Index k0, const Rational& x0,
                                              const CheckOptions& opts = {})
{
    if (k0 + 2 != degree)
        throw std::invalid_argument("tail_dominance: requires degree == k0 + 2");
    TailDominanceResult r;
    r.k0 = k0;
    r.x0 = x0;
    r.count = k0 + 1;

    for (unsigned bits = opts.precision.bits(); bits <= std::max(opts.max_bits, opts.precision.bits()); bits *= 2) {
        Precision p(bits);
        RatInterval lead = coeff(degree, p);
        RatInterval ak0 = abs(coeff(k0, p));
        RatInterval ak1 = abs(coeff(k0 + 1, p));
        if (!lead.positive() || !ak0.positive()) {
            r.note = "leading or pivot coefficient sign not certified";
            continue;
        }
        r.insufficient.clear();
        r.max_threshold = RatInterval(Rational(0));
        r.argmax_k = -1;
        bool decided = true;
        for (Index k = 0; k < k0; ++k) {
            RatInterval ak = abs(coeff(k, p));
            if (ak.hi() == 0)
                continue;
            unsigned gap = static_cast<unsigned>(k0 - k);
            RatInterval bound = ak0 * RatInterval(rpow(x0, gap));
            if (!(ak.hi() < bound.lo())) {
                r.insufficient.push_back(k);
                if (!(ak.lo() >= bound.hi()))
                    decided = false;
            }
            if (ak.lo() == 0)
                continue;
            RatInterval t = root_enclosure(ak / ak0, gap, p);
            if (r.argmax_k < 0 || t.hi() > r.max_threshold.hi()) {
                r.max_threshold = t;
                r.argmax_k = k;
            }
        }
        if (!decided && bits * 2 <= opts.max_bits)
            continue;
        // x = (|a_{k0+1}| + sqrt(a_{k0+1}^2 + 4 count a_{k0+2} |a_k0|)) / (2 a_{k0+2})
        RatInterval disc = square(ak1) + RatInterval(4 * r.count) * lead * ak0;
        r.root = round_outward((ak1 + sqrt_enclosure(disc, p.plus(16))) / (RatInterval(2L) * lead), p);
        r.ray_start = floor_of(r.root.hi()) + 1;
        if (r.ray_start < ceil_of(x0))
            r.ray_start = ceil_of(x0);
        r.verdict = r.insufficient.empty() ? Verdict::Holds : (decided ? Verdict::Fails : Verdict::Undecided);
        r.note.clear();
        return r;
    }
    r.verdict = Verdict::Undecided;
    return r;
}

inline TailDominanceResult tail_dominance_positivity(const XPoly& f, Index k0, const Rational& x0,
                                                     const CheckOptions& opts = {})
{
    if (f.valuation() < 0)
        throw std::invalid_argument("tail_dominance: polynomial expected");
    return tail_dominance_positivity([&](Index k, Precision p) { return eval_pinumber(f.coeff(k), p).interval(); },
                                     f.degree(), k0, x0, opts);
}

/// Enclosure of sqrt(5).
inline RatInterval sqrt5(Precision p) { return sqrt_enclosure(RatInterval(Rational(5)), p); }

/// Coefficients of 2H - (sqrt5 - 1) G for the sec4 pair.
inline auto golden_coefficients(const HGPair& hg)
{
    return [&hg](Index k, Precision p) {
        Precision wp = p.plus(16);
        RatInterval b = eval_pinumber(hg.H.coeff(k), wp).interval();
        RatInterval c = eval_pinumber(hg.G.coeff(k), wp).interval();
        return round_outward(RatInterval(2L) * b - (sqrt5(wp) - RatInterval(1L)) * c, p);
    };
}

// ---------------------------------------------------------------------------
// Upper bound for f(n) and the golden range

/// f(n) < R(x) < 1 with R the explicit upper bound, and for x >= 134 also
/// 2H - (sqrt5-1)G > 0 and psi(H/G) > (1 - H/G)^{3/2}.
inline VerdictEntry lemma42_check(Index n, const CheckOptions& opts)
{
    if (n < 4)
        throw std::invalid_argument("lemma42: n must be >= 4");
    auto ratio = [&](Precision p) {
        Precision wp = p.plus(32);
        auto v = with_truncations(numeric_values_at(n, wp), wp);
        auto [num, den] = sec4_ratio(v, enclosure_lift(wp));
        return num / den;
    };
    auto first = decide_sign([&](Precision p) { return ratio(p) - f_enclosure(n, p); }, opts.precision, opts.max_bits);
    auto second = decide_sign([&](Precision p) { return 1L - ratio(p); }, opts.precision, opts.max_bits);
    VerdictEntry e;
    e.n = n;
    e.verdict = combine(positive_verdict(first.verdict), positive_verdict(second.verdict));
    e.margin = second.enclosure;

    if (mu_enclosure(n - 1, opts.precision).lo() >= 134) {
        const HGPair& hg = expand_HG(Expansion::Sec4Lemma);
        auto hg_at = [&](Precision p) {
            Enclosure x = mu_enclosure(n - 1, p.plus(32));
            return std::pair{eval_xpoly(hg.H, x, p.plus(32)), eval_xpoly(hg.G, x, p.plus(32))};
        };
        auto golden = decide_sign(
            [&](Precision p) {
                auto [h, g] = hg_at(p);
                Enclosure s5(sqrt5(p.plus(32)), p.plus(32));
                return 2L * h - (s5 - 1L) * g;
            },
            opts.precision, opts.max_bits);
        auto psi_gap = decide_sign(
            [&](Precision p) {
                auto [h, g] = hg_at(p);
                RatInterval t = (h / g).interval();
                if (t.lo() <= 0 || t.hi() >= 1)
                    return RatInterval(Rational(-1), Rational(1));
                RatInterval c = RatInterval(1L) - t;
                RatInterval rhs = sqrt_enclosure(c * c * c, p);
                return psi_func(t, p) - rhs;
            },
            opts.precision, opts.max_bits);
        e.verdict = combine(e.verdict, combine(positive_verdict(golden.verdict), positive_verdict(psi_gap.verdict)));
    }
    return e;
}

} // namespace hoturan
