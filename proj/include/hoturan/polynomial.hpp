#pragma once

// Dense univariate polynomials and Laurent polynomials over an exact ring.
// The Tag parameter keeps algebraically identical but semantically distinct
// polynomial types apart (a polynomial in pi is not a polynomial in x).

#include "hoturan/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hoturan {

namespace detail {

template <class R>
bool coeff_is_zero(const R& c)
{
    if constexpr (requires { c.is_zero(); })
        return c.is_zero();
    else
        return c == 0;
}

} // namespace detail

template <class R, class Tag = void>
class Polynomial {
public:
    using coeff_type = R;

    Polynomial() = default;
    Polynomial(const R& constant) : c_{constant} { normalize(); }
    Polynomial(long constant) : c_{R(constant)} { normalize(); }
    Polynomial(std::initializer_list<R> coeffs) : c_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial monomial(const R& c, std::size_t k)
    {
        std::vector<R> v(k + 1, R(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(R(1), 1); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& leading() const
    {
        if (c_.empty())
            throw std::logic_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// Coefficient of t^k (zero beyond the degree).
    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    R operator[](std::size_t k) const { return coeff(k); }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const R& s) const
    {
        Polynomial r = *this;
        for (auto& c : r.c_)
            c *= s;
        r.normalize();
        return r;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<R> d(c_.size() - 1, R(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * R(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void normalize()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R, class Tag>
Polynomial<R, Tag> pow(const Polynomial<R, Tag>& p, unsigned e)
{
    Polynomial<R, Tag> result(1L), base = p;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

/// Horner evaluation p(x) in any ring T that accepts the coefficients.
template <class R, class Tag, class T, class Lift>
T horner(const Polynomial<R, Tag>& p, const T& x, Lift lift)
{
    const auto& c = p.coeffs();
    if (c.empty())
        return lift(R(0));
    T acc = lift(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = acc * x + lift(c[i]);
    return acc;
}

/// Laurent polynomial sum_{k=lo}^{hi} c_k x^k.
template <class R>
class LaurentPolynomial {
public:
    using coeff_type = R;

    LaurentPolynomial() = default;
    LaurentPolynomial(const R& constant) : c_{constant} { normalize(); }
    LaurentPolynomial(long constant) : c_{R(constant)} { normalize(); }
    LaurentPolynomial(long valuation, std::vector<R> coeffs) : low_(valuation), c_(std::move(coeffs)) { normalize(); }

    static LaurentPolynomial monomial(const R& c, long k) { return LaurentPolynomial(k, std::vector<R>{c}); }
    static LaurentPolynomial variable() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    long valuation() const { return low_; }
    /// Highest exponent with a nonzero coefficient.
    long degree() const { return c_.empty() ? -1 : low_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& raw() const { return c_; }

    R coeff(long k) const
    {
        if (c_.empty() || k < low_ || k > degree())
            return R(0);
        return c_[static_cast<std::size_t>(k - low_)];
    }
    R operator[](long k) const { return coeff(k); }

    /// Multiply by x^k.
    LaurentPolynomial shifted(long k) const
    {
        LaurentPolynomial r = *this;
        if (!r.c_.empty())
            r.low_ += k;
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return accumulate(o, false); }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return accumulate(o, true); }
    LaurentPolynomial operator-() const
    {
        LaurentPolynomial r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentPolynomial(a.low_ + b.low_, std::move(out));
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    LaurentPolynomial scaled(const R& s) const
    {
        LaurentPolynomial r = *this;
        for (auto& c : r.c_)
            c *= s;
        r.normalize();
        return r;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

private:
    LaurentPolynomial& accumulate(const LaurentPolynomial& o, bool subtract)
    {
        if (o.is_zero())
            return *this;
        if (is_zero()) {
            *this = subtract ? -o : o;
            return *this;
        }
        long lo = std::min(low_, o.low_);
        long hi = std::max(degree(), o.degree());
        std::vector<R> out(static_cast<std::size_t>(hi - lo + 1), R(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            out[static_cast<std::size_t>(low_ - lo) + i] = std::move(c_[i]);
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            auto& slot = out[static_cast<std::size_t>(o.low_ - lo) + i];
            if (subtract)
                slot -= o.c_[i];
            else
                slot += o.c_[i];
        }
        low_ = lo;
        c_ = std::move(out);
        normalize();
        return *this;
    }

    void normalize()
    {
        while (!c_.empty() && detail::coeff_is_zero(c_.back()))
            c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && detail::coeff_is_zero(c_[lead]))
            ++lead;
        if (lead == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            low_ += static_cast<long>(lead);
        }
    }

    long low_ = 0;
    std::vector<R> c_;
};

template <class R>
LaurentPolynomial<R> pow(const LaurentPolynomial<R>& p, unsigned e)
{
    LaurentPolynomial<R> result(1L), base = p;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

} // namespace hoturan
