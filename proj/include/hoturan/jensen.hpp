#pragma once

// Jensen polynomials of p(n) and exact real-root counting by Sturm chains.
//
// Root counts use the half-open convention (a, b].

#include "hoturan/partition.hpp"
#include "hoturan/polynomial.hpp"
#include "hoturan/report.hpp"
#include "hoturan/turan.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hoturan {

struct XTag {};
using RatPoly = Polynomial<Rational, XTag>;

/// sum_{k=0}^{m} C(m, k) p(shift + k) x^k.
inline RatPoly jensen_poly(unsigned m, Index shift, const PartitionTable& table)
{
    if (m < 1)
        throw std::invalid_argument("jensen_poly: degree must be >= 1");
    if (shift < 0)
        throw std::invalid_argument("jensen_poly: shift must be >= 0");
    if (shift + static_cast<Index>(m) > table.max_index())
        throw std::out_of_range("jensen_poly: partition table too short");
    std::vector<Rational> c(m + 1);
    for (unsigned k = 0; k <= m; ++k)
        c[k] = Rational(binomial(m, k) * table.at(shift + k));
    return RatPoly(std::move(c));
}

namespace detail {

using IntCoeffs = std::vector<Integer>;

/// Positive multiple of f with coprime integer coefficients.
inline IntCoeffs primitive_part(const RatPoly& f)
{
    Integer l = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntCoeffs out;
    out.reserve(f.coeffs().size());
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (g > 1)
        for (auto& v : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

inline void make_primitive(IntCoeffs& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
    Integer g = 0;
    for (const auto& v : f)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : f)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// lc(b)^steps a  mod  b over the integers; `steps` receives the number of
/// multiplications by lc(b) actually performed.
inline IntCoeffs pseudo_remainder(IntCoeffs a, const IntCoeffs& b, unsigned& steps)
{
    steps = 0;
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t shift = a.size() - 1 - db;
        Integer la = a.back();
        for (auto& v : a)
            v *= lb;
        ++steps;
        for (std::size_t i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        a.pop_back();
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    return a;
}

inline IntCoeffs derivative(const IntCoeffs& f)
{
    IntCoeffs d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * static_cast<unsigned long>(i));
    return d;
}

/// Sign of f(q) for rational q = num/den, den > 0.
inline int sign_at(const IntCoeffs& f, const Rational& q)
{
    const Integer &p = q.get_num(), &d = q.get_den();
    Integer acc = 0, dpow = 1;
    // sum c_i p^i d^(n-i), evaluated by Horner in p with powers of d.
    for (std::size_t i = f.size(); i-- > 0;) {
        acc = acc * p + f[i] * dpow;
        dpow *= d;
    }
    return sgn(acc);
}

} // namespace detail

/// Signed remainder sequence f, f', -rem(f, f'), ... with each element
/// replaced by its primitive part (positive rescaling keeps the sign
/// structure). The last element is gcd(f, f') up to a constant.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& f)
    {
        if (f.is_zero())
            throw std::invalid_argument("SturmChain: zero polynomial");
        polys_.push_back(detail::primitive_part(f));
        auto d = detail::derivative(polys_[0]);
        detail::make_primitive(d);
        if (d.empty())
            return;
        polys_.push_back(std::move(d));
        for (;;) {
            const auto& a = polys_[polys_.size() - 2];
            const auto& b = polys_.back();
            unsigned steps = 0;
            auto r = detail::pseudo_remainder(a, b, steps);
            if (r.empty())
                break;
            // r carries lc(b)^steps; undo a negative factor.
            bool flip = b.back() < 0 && steps % 2 == 1;
            if (!flip)
                for (auto& v : r)
                    v = -v;
            detail::make_primitive(r);
            polys_.push_back(std::move(r));
        }
    }

    std::size_t size() const { return polys_.size(); }
    const std::vector<detail::IntCoeffs>& polys() const { return polys_; }
    long degree() const { return static_cast<long>(polys_.front().size()) - 1; }
    /// Degree of gcd(f, f').
    long gcd_degree() const { return static_cast<long>(polys_.back().size()) - 1; }

    int variations_at(const Rational& q) const
    {
        std::vector<int> signs;
        for (const auto& p : polys_)
            signs.push_back(detail::sign_at(p, q));
        return count(signs);
    }

    int variations_at_infinity(bool positive) const
    {
        std::vector<int> signs;
        for (const auto& p : polys_) {
            int s = sgn(p.back());
            if (!positive && (p.size() - 1) % 2 == 1)
                s = -s;
            signs.push_back(s);
        }
        return count(signs);
    }

private:
    static int count(const std::vector<int>& signs)
    {
        int v = 0, prev = 0;
        for (int s : signs) {
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++v;
            prev = s;
        }
        return v;
    }

    std::vector<detail::IntCoeffs> polys_;
};

inline SturmChain sturm_chain(const RatPoly& f) { return SturmChain(f); }

/// Distinct real roots in (a, b].
inline int count_real_roots(const SturmChain& chain, const Rational& a, const Rational& b)
{
    if (a > b)
        throw std::invalid_argument("count_real_roots: a > b");
    return chain.variations_at(a) - chain.variations_at(b);
}

/// Distinct real roots on the whole line.
inline int count_real_roots(const SturmChain& chain)
{
    return chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
}

enum class RealRooted { Yes, No };

inline const char* to_string(RealRooted r) { return r == RealRooted::Yes ? "yes" : "no"; }

/// Yes iff every complex root is real (with multiplicity): the square-free
/// part f / gcd(f, f') must have as many distinct real roots as its degree.
inline RealRooted is_real_rooted(const RatPoly& f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("is_real_rooted: degree must be >= 1");
    SturmChain chain(f);
    long squarefree_degree = chain.degree() - chain.gcd_degree();
    return count_real_roots(chain) == squarefree_degree ? RealRooted::Yes : RealRooted::No;
}

enum class CubicVerdict { YesDistinct, Boundary, No };

inline const char* to_string(CubicVerdict v)
{
    switch (v) {
    case CubicVerdict::YesDistinct: return "yes-distinct";
    case CubicVerdict::Boundary: return "boundary";
    case CubicVerdict::No: return "no";
    }
    return "?";
}

/// Sign of I for a0 + 3a1 x + 3a2 x^2 + a3 x^3; 27 I is its discriminant.
inline CubicVerdict cubic_verdict(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
{
    int s = sgn(cubic_invariant(a0, a1, a2, a3));
    return s > 0 ? CubicVerdict::YesDistinct : s == 0 ? CubicVerdict::Boundary : CubicVerdict::No;
}

/// Discriminant verdict for p(shift) + 3p(shift+1)x + 3p(shift+2)x^2 + p(shift+3)x^3,
/// cross-checked against the Sturm route (std::logic_error on disagreement).
inline CubicVerdict cubic_real_rooted_via_discriminant(Index shift, const PartitionTable& table)
{
    RatPoly f = jensen_poly(3, shift, table);
    CubicVerdict v = cubic_verdict(Rational(table.at(shift)), Rational(table.at(shift + 1)),
                                   Rational(table.at(shift + 2)), Rational(table.at(shift + 3)));
    SturmChain chain(f);
    int distinct = count_real_roots(chain);
    bool agree = (v == CubicVerdict::YesDistinct) == (distinct == 3) &&
                 (v == CubicVerdict::No) == (distinct == 1 && chain.gcd_degree() == 0);
    if (!agree)
        throw std::logic_error("cubic discriminant and Sturm count disagree at shift " + std::to_string(shift));
    return v;
}

struct JensenThreshold {
    unsigned m = 0;
    Index n_max = 0;
    Index N = 0;                 ///< smallest shift with real-rootedness on [N, n_max]
    std::vector<Index> failures; ///< shifts below N that are not real-rooted
    bool conclusive = true;      ///< false when the last shift fails
    std::string label() const { return "empirical up to n_max=" + std::to_string(n_max); }
};

/// Real-rootedness of jensen_poly(m, n) for 0 <= n <= n_max.
inline InequalityReport jensen_report(unsigned m, Index n_max, const PartitionTable& table, const CheckOptions& opts = {})
{
    return run_range("jensen-m" + std::to_string(m), 0, n_max, opts, [&](Index n) {
        VerdictEntry e;
        e.n = n;
        e.verdict = is_real_rooted(jensen_poly(m, n, table)) == RealRooted::Yes ? Verdict::Holds : Verdict::Fails;
        return e;
    });
}

/// Empirical N(m): the table must reach n_max + m.
inline JensenThreshold find_N_of_m(unsigned m, Index n_max, const PartitionTable& table, const CheckOptions& opts = {})
{
    if (m < 2 || m > 8)
        throw std::invalid_argument("find_N_of_m: m must be in 2..8");
    auto report = jensen_report(m, n_max, table, opts);
    ThresholdResult t = threshold_from_report(report);
    JensenThreshold r;
    r.m = m;
    r.n_max = n_max;
    r.N = t.threshold;
    r.failures = t.failures;
    r.conclusive = t.found();
    return r;
}

} // namespace hoturan
