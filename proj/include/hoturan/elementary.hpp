#pragma once

// Certified enclosures of pi, sqrt, k-th roots, exp and sinh, plus the
// Enclosure value type that rounds outward after every operation.

#include "hoturan/interval.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hoturan {

namespace detail {

// arctan(1/x) * 2^w as an integer interval, via the alternating series
// sum (-1)^k / ((2k+1) x^(2k+1)) with the first omitted term as tail bound.
inline std::pair<Integer, Integer> scaled_arctan_inv(unsigned long x, unsigned long w)
{
    const Integer one = pow2(w);
    const Integer x2 = Integer(x) * x;
    Integer power = x; // x^(2k+1)
    Integer lo = 0, hi = 0;
    for (unsigned long k = 0;; ++k) {
        Integer denom = power * (2 * k + 1);
        Integer t_lo = floor_div(one, denom);
        Integer t_hi = ceil_div(one, denom);
        if (t_hi <= 1) {
            // Remaining tail is bounded by this term (< 1 ulp).
            lo -= 1;
            hi += 1;
            break;
        }
        if (k % 2 == 0) {
            lo += t_lo;
            hi += t_hi;
        } else {
            lo -= t_hi;
            hi -= t_lo;
        }
        power *= x2;
    }
    return {lo, hi};
}

inline RatInterval compute_pi(unsigned bits)
{
    const unsigned long w = bits + 24;
    auto [a_lo, a_hi] = scaled_arctan_inv(5, w);
    auto [b_lo, b_hi] = scaled_arctan_inv(239, w);
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    Integer lo = 16 * a_lo - 4 * b_hi;
    Integer hi = 16 * a_hi - 4 * b_lo;
    return {dyadic(lo, static_cast<long>(w)), dyadic(hi, static_cast<long>(w))};
}

// floor(sqrt(q) * 2^s) for q >= 0.
inline Integer scaled_isqrt(const Rational& q, unsigned long s)
{
    Integer num = q.get_num() * pow2(2 * s);
    return isqrt(floor_div(num, q.get_den()));
}

inline long sqrt_scale(const Rational& q, unsigned bits)
{
    // Absolute spacing 2^-(bits+4), tightened further for small values.
    long e = q == 0 ? 0 : approx_log2(q) / 2;
    return static_cast<long>(bits) + 4 + std::max(0L, -e);
}

inline Rational sqrt_bound(const Rational& q, unsigned bits, bool up)
{
    if (q < 0)
        throw std::domain_error("sqrt of a negative number");
    if (q == 0)
        return Rational(0);
    if (is_perfect_square(q.get_num()) && is_perfect_square(q.get_den()))
        return Rational(isqrt(q.get_num()), isqrt(q.get_den()));
    long s = sqrt_scale(q, bits);
    Integer m = scaled_isqrt(q, static_cast<unsigned long>(s));
    return dyadic(up ? Integer(m + 1) : m, s);
}

inline Rational root_bound(const Rational& q, unsigned k, unsigned bits, bool up)
{
    if (q < 0)
        throw std::domain_error("root of a negative number");
    if (q == 0)
        return Rational(0);
    Integer rn = iroot(q.get_num(), k), rd = iroot(q.get_den(), k);
    if (ipow(rn, k) == q.get_num() && ipow(rd, k) == q.get_den())
        return Rational(rn, rd);
    long e = approx_log2(q) / static_cast<long>(k);
    long s = static_cast<long>(bits) + 4 + std::max(0L, -e);
    Integer num = q.get_num() * pow2(static_cast<unsigned long>(s) * k);
    Integer m = iroot(floor_div(num, q.get_den()), k);
    return dyadic(up ? Integer(m + 1) : m, s);
}

// Enclosure of exp(r) for a rational point r with relative width about 2^-bits.
inline RatInterval exp_point(const Rational& r, unsigned bits)
{
    if (r == 0)
        return RatInterval(1L);
    // Reduce to |s| <= 1/2 with s = r / 2^k, then square k times.
    long mag = approx_log2(r);
    unsigned long k = mag + 2 > 0 ? static_cast<unsigned long>(mag + 2) : 0;
    const unsigned wp = bits + static_cast<unsigned>(k) + 24;
    const Rational s = r / Rational(pow2(k));
    const Rational eps = Rational(1, pow2(wp + 2));

    RatInterval sum(1L), term(1L);
    for (unsigned long j = 1;; ++j) {
        term = round_outward(term * RatInterval(s) / RatInterval(static_cast<long>(j)), wp);
        Rational m = term.magnitude();
        if (m < eps) {
            // |tail from term j on| <= 2 |term_j| since |s| / (j+1) <= 1/2.
            sum += RatInterval(Rational(-2 * m), Rational(2 * m));
            break;
        }
        sum = round_outward(sum + term, wp);
    }
    for (unsigned long i = 0; i < k; ++i)
        sum = round_outward(square(sum), wp);
    return round_outward(sum, bits + 8);
}

} // namespace detail

/// [lo, hi] with lo < pi < hi and hi - lo <= 2^-bits. Cached per precision.
inline RatInterval pi_enclosure(Precision p)
{
    static std::mutex mu;
    static std::map<unsigned, RatInterval> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(p.bits()); it != cache.end())
            return it->second;
    }
    RatInterval v = detail::compute_pi(p.bits());
    std::lock_guard lock(mu);
    return cache.emplace(p.bits(), std::move(v)).first->second;
}

inline RatInterval sqrt_enclosure(const RatInterval& v, Precision p)
{
    if (v.lo() < 0)
        throw std::domain_error("sqrt_enclosure: negative input");
    return {detail::sqrt_bound(v.lo(), p.bits(), false), detail::sqrt_bound(v.hi(), p.bits(), true)};
}

/// Enclosure of v^(1/k) for v >= 0.
inline RatInterval root_enclosure(const RatInterval& v, unsigned k, Precision p)
{
    if (k == 0)
        throw std::invalid_argument("root_enclosure: k must be positive");
    if (v.lo() < 0)
        throw std::domain_error("root_enclosure: negative input");
    if (k == 1)
        return v;
    return {detail::root_bound(v.lo(), k, p.bits(), false), detail::root_bound(v.hi(), k, p.bits(), true)};
}

inline RatInterval exp_enclosure(const RatInterval& v, Precision p)
{
    if (v.is_point())
        return detail::exp_point(v.lo(), p.bits());
    return {detail::exp_point(v.lo(), p.bits()).lo(), detail::exp_point(v.hi(), p.bits()).hi()};
}

inline RatInterval sinh_enclosure(const RatInterval& v, Precision p)
{
    auto sinh_point = [&](const Rational& r) {
        if (r == 0)
            return RatInterval(0L);
        // Guard bits against cancellation in (e^r - e^-r)/2 for small |r|.
        long mag = approx_log2(r);
        unsigned extra = 8 + static_cast<unsigned>(std::max(0L, -mag));
        unsigned wp = p.bits() + extra;
        RatInterval diff = detail::exp_point(r, wp) - detail::exp_point(Rational(-r), wp);
        return round_outward(diff / RatInterval(2L), p.bits() + 8);
    };
    // sinh is increasing.
    return {sinh_point(v.lo()).lo(), sinh_point(v.hi()).hi()};
}

/// An interval tied to a working precision; arithmetic rounds outward.
class Enclosure {
public:
    Enclosure() = default;
    Enclosure(RatInterval v, Precision p) : v_(round_outward(v, p)), p_(p) {}
    static Enclosure exact(const Rational& q, Precision p) { return Enclosure(RatInterval(q), p); }

    const RatInterval& interval() const { return v_; }
    Precision precision() const { return p_; }
    const Rational& lo() const { return v_.lo(); }
    const Rational& hi() const { return v_.hi(); }
    bool positive() const { return v_.positive(); }
    bool negative() const { return v_.negative(); }

    Enclosure operator-() const { return Enclosure(-v_, p_); }

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.v_ + b.v_, max(a.p_, b.p_)}; }
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.v_ - b.v_, max(a.p_, b.p_)}; }
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b) { return {a.v_ * b.v_, max(a.p_, b.p_)}; }
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b) { return {a.v_ / b.v_, max(a.p_, b.p_)}; }

    friend Enclosure operator+(const Enclosure& a, const Rational& b) { return {a.v_ + RatInterval(b), a.p_}; }
    friend Enclosure operator-(const Enclosure& a, const Rational& b) { return {a.v_ - RatInterval(b), a.p_}; }
    friend Enclosure operator*(const Enclosure& a, const Rational& b) { return {a.v_ * RatInterval(b), a.p_}; }
    friend Enclosure operator/(const Enclosure& a, const Rational& b) { return {a.v_ / RatInterval(b), a.p_}; }
    friend Enclosure operator+(const Rational& a, const Enclosure& b) { return {RatInterval(a) + b.v_, b.p_}; }
    friend Enclosure operator-(const Rational& a, const Enclosure& b) { return {RatInterval(a) - b.v_, b.p_}; }
    friend Enclosure operator*(const Rational& a, const Enclosure& b) { return {RatInterval(a) * b.v_, b.p_}; }
    friend Enclosure operator/(const Rational& a, const Enclosure& b) { return {RatInterval(a) / b.v_, b.p_}; }

    friend Enclosure operator+(const Enclosure& a, long b) { return a + Rational(b); }
    friend Enclosure operator-(const Enclosure& a, long b) { return a - Rational(b); }
    friend Enclosure operator*(const Enclosure& a, long b) { return a * Rational(b); }
    friend Enclosure operator/(const Enclosure& a, long b) { return a / Rational(b); }
    friend Enclosure operator+(long a, const Enclosure& b) { return Rational(a) + b; }
    friend Enclosure operator-(long a, const Enclosure& b) { return Rational(a) - b; }
    friend Enclosure operator*(long a, const Enclosure& b) { return Rational(a) * b; }
    friend Enclosure operator/(long a, const Enclosure& b) { return Rational(a) / b; }

    friend Enclosure square(const Enclosure& a) { return {square(a.v_), a.p_}; }
    friend Enclosure pow(const Enclosure& a, unsigned e) { return {pow(a.v_, e, a.p_.bits()), a.p_}; }
    friend Enclosure sqrt(const Enclosure& a) { return {sqrt_enclosure(a.v_, a.p_), a.p_}; }
    friend Enclosure exp(const Enclosure& a) { return {exp_enclosure(a.v_, a.p_), a.p_}; }
    friend Enclosure sinh(const Enclosure& a) { return {sinh_enclosure(a.v_, a.p_), a.p_}; }

private:
    RatInterval v_;
    Precision p_;
};

inline Enclosure pi(Precision p) { return Enclosure(pi_enclosure(p), p); }

} // namespace hoturan
