#pragma once

// Exact elements of Q[pi] and Laurent polynomials in x over Q[pi].

#include "hoturan/elementary.hpp"
#include "hoturan/polynomial.hpp"

#include <sstream>
#include <string>

namespace hoturan {

struct PiTag;

/// sum c_i pi^i with exact rational c_i.
using PiNumber = Polynomial<Rational, PiTag>;

/// sum_k a_k x^k with a_k in Q[pi]; negative k allowed (finite 1/x tails).
using XPoly = LaurentPolynomial<PiNumber>;

inline PiNumber pi_power(unsigned k, const Rational& c = Rational(1)) { return PiNumber::monomial(c, k); }

inline XPoly x_power(long k, const PiNumber& c = PiNumber(1L)) { return XPoly::monomial(c, k); }

inline Enclosure eval_pinumber(const PiNumber& c, Precision p)
{
    if (c.is_zero())
        return Enclosure::exact(Rational(0), p);
    if (c.degree() == 0)
        return Enclosure::exact(c[0], p);
    // Extra bits absorb cancellation between large coefficients.
    Precision wp = p.plus(16);
    Enclosure pi_v = pi(wp);
    return horner(c, pi_v, [&](const Rational& q) { return Enclosure::exact(q, wp); });
}

inline Enclosure eval_xpoly(const XPoly& f, const Enclosure& x, Precision p)
{
    if (f.is_zero())
        return Enclosure::exact(Rational(0), p);
    Precision wp = p.plus(16);
    const auto& raw = f.raw();
    Enclosure acc = eval_pinumber(raw.back(), wp);
    Enclosure xw(x.interval(), max(wp, x.precision()));
    for (std::size_t i = raw.size() - 1; i-- > 0;)
        acc = acc * xw + eval_pinumber(raw[i], wp);
    long v = f.valuation();
    if (v > 0)
        acc = acc * pow(xw, static_cast<unsigned>(v));
    else if (v < 0)
        acc = acc / pow(xw, static_cast<unsigned>(-v));
    return acc;
}

inline Enclosure eval_xpoly(const XPoly& f, const RatInterval& x, Precision p)
{
    return eval_xpoly(f, Enclosure(x, p.plus(16)), p);
}

/// Human-readable rendering, e.g. "990 - pi^6".
inline std::string to_string(const PiNumber& c)
{
    if (c.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = c.degree(); i >= 0; --i) {
        const Rational& q = c.coeffs()[static_cast<std::size_t>(i)];
        if (q == 0)
            continue;
        Rational mag = abs(q);
        if (first)
            os << (q < 0 ? "-" : "");
        else
            os << (q < 0 ? " - " : " + ");
        first = false;
        if (i == 0)
            os << mag.get_str();
        else {
            if (mag != 1)
                os << mag.get_str() << "*";
            os << "pi";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

} // namespace hoturan
