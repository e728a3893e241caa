#pragma once

// Exact integer/rational aliases over GMP plus the handful of bit-level
// helpers the interval layer needs.

#include <gmpxx.h>

#include <cstddef>
#include <cstdio>
#include <cstring>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hoturan {

using Integer = mpz_class;
using Rational = mpq_class;

/// Index type for sequence positions (n in p(n), shifts, ranges).
using Index = long;

inline std::size_t bit_length(const Integer& z)
{
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline Integer pow2(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rpow(const Rational& base, unsigned long e)
{
    Integer n = ipow(base.get_num(), e);
    Integer d = ipow(base.get_den(), e);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer floor_of(const Rational& q) { return floor_div(q.get_num(), q.get_den()); }
inline Integer ceil_of(const Rational& q) { return ceil_div(q.get_num(), q.get_den()); }

/// Rational m / 2^s for signed s.
inline Rational dyadic(const Integer& m, long s)
{
    Rational r;
    if (s >= 0)
        r = Rational(m, pow2(static_cast<unsigned long>(s)));
    else
        r = Rational(m * pow2(static_cast<unsigned long>(-s)));
    r.canonicalize();
    return r;
}

/// floor(log2 |q|) up to an error of one; q must be nonzero.
inline long approx_log2(const Rational& q)
{
    return static_cast<long>(bit_length(abs(q.get_num()))) - static_cast<long>(bit_length(q.get_den()));
}

inline bool is_perfect_square(const Integer& z)
{
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& z)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

/// floor(z^(1/k)) for z >= 0.
inline Integer iroot(const Integer& z, unsigned long k)
{
    Integer r;
    mpz_root(r.get_mpz_t(), z.get_mpz_t(), k);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Exact "num/den" (or "num" for integers).
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Approximate scientific rendering of an exact rational, e.g. "3.14159265358979323846e+00".
inline std::string to_scientific(const Rational& q, int digits = 20)
{
    if (q == 0)
        return "0";
    mpf_class f(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    f = q;
    mp_exp_t exp10 = 0;
    char* raw = mpf_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), f.get_mpf_t());
    std::string mant(raw);
    void (*freefn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, std::strlen(raw) + 1);

    std::string out;
    if (!mant.empty() && mant[0] == '-') {
        out += '-';
        mant.erase(0, 1);
    }
    out += mant.substr(0, 1);
    if (mant.size() > 1) {
        out += '.';
        out += mant.substr(1);
    }
    long e = static_cast<long>(exp10) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out += buf;
    return out;
}

/// Scientific rendering rounded down (up = false) or up (up = true), so a
/// printed interval still contains the exact one.
inline std::string to_scientific_directed(const Rational& q, bool up, int digits = 20)
{
    std::string s = to_scientific(q, digits);
    if (q == 0)
        return s;
    auto epos = s.find('e');
    std::string mant = s.substr(0, epos);
    long e = std::stol(s.substr(epos + 1));
    bool neg = mant[0] == '-';
    if (neg)
        mant.erase(0, 1);
    std::string digits_only;
    for (char ch : mant)
        if (ch != '.')
            digits_only += ch;
    long scale = e - static_cast<long>(digits_only.size()) + 1;
    Integer m(digits_only, 10);
    auto value = [&](const Integer& mm) {
        Rational v(mm);
        Integer p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
        if (scale < 0)
            v /= Rational(p10);
        else
            v *= Rational(p10);
        return neg ? Rational(-v) : v;
    };
    Rational printed = value(m);
    // Moving the magnitude outward: away from zero for the side that needs it.
    bool too_low = printed < q, too_high = printed > q;
    if ((up && too_low) || (!up && too_high)) {
        bool grow = neg ? !up : up;
        m += grow ? 1 : -1;
        std::string ds = m.get_str();
        if (ds.size() > digits_only.size()) {
            ++e;
            ds.pop_back();
        } else if (ds.size() < digits_only.size()) {
            --e;
        }
        std::string out = neg ? "-" : "";
        out += ds.substr(0, 1);
        if (ds.size() > 1)
            out += "." + ds.substr(1);
        char buf[32];
        std::snprintf(buf, sizeof buf, "e%+03ld", e);
        return out + buf;
    }
    return s;
}

inline double to_double(const Rational& q) { return mpf_class(q, 128).get_d(); }

} // namespace hoturan
