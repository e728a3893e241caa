#pragma once

// Closed intervals with exact rational endpoints.
//
// Arithmetic on RatInterval is exact: the result is the tightest interval
// containing every pointwise result. Endpoint sizes are kept in check by
// round_outward(), which snaps large endpoints outward onto a dyadic grid
// with a relative spacing of 2^-(bits+2). Small endpoints are left alone so
// that exact rational computations stay exact.

#include "hoturan/numeric.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hoturan {

inline constexpr unsigned kDefaultBits = 128;
inline constexpr unsigned kMaxBits = 4096;
inline constexpr unsigned kMinBits = 8;

/// Target working precision: enclosures aim for width <= 2^-bits (relative
/// for magnitudes above one).
class Precision {
public:
    Precision() = default;
    explicit Precision(unsigned bits) : bits_(bits)
    {
        if (bits < kMinBits)
            throw std::invalid_argument("precision must be at least 8 bits");
    }

    unsigned bits() const { return bits_; }
    Precision doubled() const { return Precision(bits_ * 2); }
    Precision plus(unsigned extra) const { return Precision(bits_ + extra); }

    friend bool operator==(Precision a, Precision b) { return a.bits_ == b.bits_; }
    friend Precision max(Precision a, Precision b) { return a.bits_ >= b.bits_ ? a : b; }

private:
    unsigned bits_ = kDefaultBits;
};

class RatInterval {
public:
    RatInterval() = default;
    RatInterval(const Rational& point) : lo_(point), hi_(point) {}
    RatInterval(const Integer& point) : lo_(point), hi_(point) {}
    RatInterval(long point) : lo_(point), hi_(point) {}
    RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (lo_ > hi_)
            throw std::invalid_argument("RatInterval: lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const RatInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// Largest absolute value attained.
    Rational magnitude() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

    RatInterval operator-() const { return {-hi_, -lo_}; }

    RatInterval& operator+=(const RatInterval& o)
    {
        lo_ += o.lo_;
        hi_ += o.hi_;
        return *this;
    }
    RatInterval& operator-=(const RatInterval& o)
    {
        Rational nlo = lo_ - o.hi_;
        hi_ -= o.lo_;
        lo_ = std::move(nlo);
        return *this;
    }

    friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
    friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }

    friend RatInterval operator*(const RatInterval& a, const RatInterval& b)
    {
        if (a.is_point() && b.is_point())
            return RatInterval(Rational(a.lo_ * b.lo_));
        Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
    }

    friend RatInterval operator/(const RatInterval& a, const RatInterval& b)
    {
        if (b.contains_zero())
            throw std::domain_error("RatInterval: division by an interval containing zero");
        RatInterval inv(Rational(1 / b.hi_), Rational(1 / b.lo_));
        return a * inv;
    }

    friend bool operator==(const RatInterval& a, const RatInterval& b)
    {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatInterval& v)
    {
        return os << '[' << to_scientific(v.lo_) << ", " << to_scientific(v.hi_) << ']';
    }

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// Tight square (handles intervals straddling zero).
inline RatInterval square(const RatInterval& v)
{
    Rational a = v.lo() * v.lo(), b = v.hi() * v.hi();
    if (v.contains_zero())
        return {Rational(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

inline RatInterval abs(const RatInterval& v)
{
    if (v.lo() >= 0)
        return v;
    if (v.hi() <= 0)
        return -v;
    return {Rational(0), std::max(Rational(-v.lo()), v.hi())};
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

namespace detail {

inline bool endpoint_is_small(const Rational& q, unsigned bits)
{
    std::size_t nb = bit_length(abs(q.get_num()));
    std::size_t db = bit_length(q.get_den());
    if (nb + db <= 2 * static_cast<std::size_t>(bits) + 64)
        return true;
    // Already on a dyadic grid with a short mantissa.
    bool dyadic_den = mpz_scan1(q.get_den().get_mpz_t(), 0) + 1 == db;
    return dyadic_den && nb <= bits + 4;
}

inline Rational round_endpoint(const Rational& q, unsigned bits, bool up)
{
    if (q == 0 || endpoint_is_small(q, bits))
        return q;
    long s = static_cast<long>(bits) + 2 - approx_log2(q);
    Integer num = q.get_num(), den = q.get_den();
    if (s >= 0)
        num *= pow2(static_cast<unsigned long>(s));
    else
        den *= pow2(static_cast<unsigned long>(-s));
    Integer m = up ? ceil_div(num, den) : floor_div(num, den);
    return dyadic(m, s);
}

} // namespace detail

inline Rational round_down(const Rational& q, unsigned bits) { return detail::round_endpoint(q, bits, false); }
inline Rational round_up(const Rational& q, unsigned bits) { return detail::round_endpoint(q, bits, true); }

/// Outward rounding: the result contains v and has bounded endpoint size.
inline RatInterval round_outward(const RatInterval& v, unsigned bits)
{
    return {round_down(v.lo(), bits), round_up(v.hi(), bits)};
}
inline RatInterval round_outward(const RatInterval& v, Precision p) { return round_outward(v, p.bits()); }

/// v^e with intermediate outward rounding.
inline RatInterval pow(const RatInterval& v, unsigned e, unsigned bits)
{
    if (e == 0)
        return RatInterval(1L);
    if (e % 2 == 0) {
        RatInterval half = pow(v, e / 2, bits);
        return round_outward(square(half), bits);
    }
    if (v.lo() >= 0 || v.hi() <= 0) {
        // Monotone on sign-definite intervals: compute through the odd factor.
        return round_outward(pow(v, e - 1, bits) * v, bits);
    }
    // Odd power of a straddling interval is monotone increasing.
    RatInterval lo_pow = pow(RatInterval(v.lo()), e, bits);
    RatInterval hi_pow = pow(RatInterval(v.hi()), e, bits);
    return {lo_pow.lo(), hi_pow.hi()};
}

} // namespace hoturan
