#include "hoturan/jensen.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hoturan;

namespace {

const PartitionTable& table()
{
    static const PartitionTable t(10010);
    return t;
}

RatPoly poly(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPoly(std::move(v));
}

} // namespace

TEST(JensenPoly, Coefficients)
{
    EXPECT_EQ(jensen_poly(1, 0, table()), poly({1, 1}));
    RatPoly f = jensen_poly(3, 94, table());
    EXPECT_EQ(f.coeff(0), Rational(table().at(94)));
    EXPECT_EQ(f.coeff(1), Rational(3 * table().at(95)));
    EXPECT_EQ(f.coeff(2), Rational(3 * table().at(96)));
    EXPECT_EQ(f.coeff(3), Rational(table().at(97)));
    EXPECT_THROW(jensen_poly(0, 0, table()), std::invalid_argument);
}

TEST(JensenPoly, QuadraticDiscriminantIsTuran)
{
    for (Index n : {0L, 10L, 25L, 100L}) {
        RatPoly f = jensen_poly(2, n, table());
        Rational disc4 = (f.coeff(1) * f.coeff(1) - 4 * f.coeff(0) * f.coeff(2)) / 4;
        Integer turan = table().at(n + 1) * table().at(n + 1) - table().at(n) * table().at(n + 2);
        EXPECT_EQ(disc4, Rational(turan)) << n;
    }
}

TEST(Sturm, Examples)
{
    EXPECT_EQ(count_real_roots(sturm_chain(poly({-2, 0, 1}))), 2);
    EXPECT_EQ(count_real_roots(sturm_chain(poly({1, 0, 1}))), 0);
    // Roots of x^3 - x are -1, 0, 1; counts are over (a, b].
    SturmChain c = sturm_chain(poly({0, -1, 0, 1}));
    EXPECT_EQ(count_real_roots(c, Rational(0), Rational(2)), 1);
    EXPECT_EQ(count_real_roots(c, Rational(-1), Rational(2)), 2);
    EXPECT_EQ(count_real_roots(c, Rational(-2), Rational(2)), 3);
    EXPECT_THROW(sturm_chain(RatPoly()), std::invalid_argument);
}

TEST(Sturm, RealRootedness)
{
    EXPECT_EQ(is_real_rooted(poly({1, 3, 3, 1})), RealRooted::Yes);
    EXPECT_EQ(is_real_rooted(poly({0, 1, 0, 1})), RealRooted::No);
    EXPECT_EQ(is_real_rooted(jensen_poly(3, 94, table())), RealRooted::Yes);
    // (x^2 + 1)^2 has a repeated non-real pair.
    EXPECT_EQ(is_real_rooted(poly({1, 0, 2, 0, 1})), RealRooted::No);
    // (x - 1)^2 (x + 2)
    EXPECT_EQ(is_real_rooted(poly({2, -3, 0, 1})), RealRooted::Yes);
}

TEST(Sturm, AdditiveOverSubintervals)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-20, 20), pt(-400, 400);
    for (int i = 0; i < 300; ++i) {
        std::vector<Rational> c;
        for (int k = 0; k < 6; ++k)
            c.emplace_back(coef(rng));
        c.back() = c.back() == 0 ? Rational(1) : c.back();
        RatPoly f{c};
        SturmChain ch(f);
        long a = pt(rng), b = pt(rng), d = pt(rng);
        long lo = std::min({a, b, d}), hi = std::max({a, b, d}), mid = a + b + d - lo - hi;
        Rational A(lo, 37), B(mid, 37), C(hi, 37);
        ASSERT_EQ(count_real_roots(ch, A, B) + count_real_roots(ch, B, C), count_real_roots(ch, A, C));
        ASSERT_EQ(count_real_roots(SturmChain(f.scaled(Rational(-7, 3)))), count_real_roots(ch));
    }
}

TEST(Cubic, DiscriminantExamples)
{
    EXPECT_EQ(cubic_verdict(1, 1, 1, 1), CubicVerdict::Boundary);
    EXPECT_EQ(cubic_real_rooted_via_discriminant(94, table()), CubicVerdict::YesDistinct);
}

TEST(Cubic, DiscriminantAgreesWithSturmTo2000)
{
    for (Index s = 0; s <= 2000; ++s) {
        CubicVerdict v = cubic_real_rooted_via_discriminant(s, table());
        if (s >= 94)
            ASSERT_EQ(v, CubicVerdict::YesDistinct) << s;
    }
}

TEST(Cubic, RandomCubicsAgree)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int i = 0; i < 2000; ++i) {
        long a0 = coef(rng), a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
        if (a3 == 0)
            continue;
        CubicVerdict v = cubic_verdict(a0, a1, a2, a3);
        SturmChain ch(poly({a0, 3 * a1, 3 * a2, a3}));
        int distinct = count_real_roots(ch);
        if (v == CubicVerdict::YesDistinct)
            ASSERT_EQ(distinct, 3);
        if (v == CubicVerdict::No)
            ASSERT_EQ(distinct, 1);
        if (v == CubicVerdict::Boundary)
            ASSERT_GT(ch.gcd_degree(), 0);
    }
}

TEST(Jensen, QuadraticMatchesTuranTo5000)
{
    for (Index s = 0; s <= 5000; ++s) {
        bool rooted = is_real_rooted(jensen_poly(2, s, table())) == RealRooted::Yes;
        bool turan = table().at(s + 1) * table().at(s + 1) >= table().at(s) * table().at(s + 2);
        ASSERT_EQ(rooted, turan) << s;
    }
}

TEST(Jensen, ThresholdForCubic)
{
    auto r = find_N_of_m(3, 2000, table());
    EXPECT_EQ(r.N, 94);
    EXPECT_TRUE(r.conclusive);
    EXPECT_NE(r.label().find("empirical"), std::string::npos);
    EXPECT_THROW(find_N_of_m(1, 10, table()), std::invalid_argument);
}
