#include "hoturan/pi_number.hpp"
#include "hoturan/sign.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

using namespace hoturan;

namespace {

const Precision P128(128);

// 60 correct decimals of pi and e, truncated; the true value is within 1e-60.
const char* kPiDigits = "3141592653589793238462643383279502884197169399375105820974944";
const char* kEDigits = "2718281828459045235360287471352662497757247093699959574966967";

RatInterval decimal_bracket(const char* digits)
{
    Integer m(digits, 10);
    Integer scale = 1;
    for (std::size_t i = 1; i < std::strlen(digits); ++i)
        scale *= 10;
    return {Rational(m, scale), Rational(m + 1, scale)};
}

Rational parse_decimal(const std::string& s)
{
    auto dot = s.find('.');
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer scale = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i)
        scale *= 10;
    return Rational(Integer(digits, 10), scale);
}

} // namespace

TEST(Precision, RejectsTinyWorkingPrecision)
{
    EXPECT_THROW(Precision(4), std::invalid_argument);
    EXPECT_NO_THROW(Precision(8));
}

TEST(Interval, ExactArithmetic)
{
    RatInterval a(Rational(1, 3), Rational(1, 2)), b(Rational(-2), Rational(1));
    EXPECT_EQ(a + b, RatInterval(Rational(-5, 3), Rational(3, 2)));
    EXPECT_EQ(a * b, RatInterval(Rational(-1), Rational(1, 2)));
    EXPECT_EQ(a - a, RatInterval(Rational(-1, 6), Rational(1, 6)));
    EXPECT_THROW(a / b, std::domain_error);
    EXPECT_THROW(RatInterval(Rational(2), Rational(1)), std::invalid_argument);
}

TEST(Interval, OutwardRoundingContains)
{
    Rational third(1, 3);
    RatInterval r = round_outward(RatInterval(third), 32);
    EXPECT_TRUE(r.contains(third));
    EXPECT_LT(r.width(), Rational(1, Integer(1) << 30));
}

TEST(Pi, ContainsReferenceAndIsNarrow)
{
    RatInterval ref = decimal_bracket(kPiDigits);
    for (unsigned bits : {8u, 32u, 64u, 128u, 512u, 2048u}) {
        RatInterval p = pi_enclosure(Precision(bits));
        EXPECT_TRUE(p.overlaps(ref)) << bits;
        if (bits <= 128) {
            EXPECT_TRUE(p.contains(ref.lo()) && p.contains(ref.hi())) << bits;
        } else {
            EXPECT_TRUE(ref.contains(p.midpoint())) << bits;
        }
        EXPECT_LE(approx_log2(p.width()), -static_cast<long>(bits) + 4) << bits;
    }
}

TEST(Sqrt, ExactOnSquares)
{
    EXPECT_EQ(sqrt_enclosure(RatInterval(Rational(4)), P128), RatInterval(Rational(2)));
    EXPECT_EQ(sqrt_enclosure(RatInterval(Rational(1, 64)), P128), RatInterval(Rational(1, 8)));
    EXPECT_THROW(sqrt_enclosure(RatInterval(Rational(-1), Rational(1)), P128), std::domain_error);
}

TEST(Sqrt, TwoAtLowPrecision)
{
    RatInterval r = sqrt_enclosure(RatInterval(Rational(2)), Precision(32));
    EXPECT_TRUE(square(r).contains(Rational(2)));
    EXPECT_LT(r.width(), Rational(1, Integer(1) << 28));
    EXPECT_NEAR(to_double(r.midpoint()), std::sqrt(2.0), 1e-8);
}

TEST(Root, CubeRoots)
{
    EXPECT_EQ(root_enclosure(RatInterval(Rational(27, 8)), 3, P128), RatInterval(Rational(3, 2)));
    RatInterval r = root_enclosure(RatInterval(Rational(2)), 3, P128);
    EXPECT_TRUE(pow(r, 3, 4096).contains(Rational(2)));
}

TEST(Exp, ReferenceValues)
{
    EXPECT_EQ(exp_enclosure(RatInterval(Rational(0)), P128), RatInterval(Rational(1)));

    RatInterval e32 = exp_enclosure(RatInterval(Rational(1)), Precision(32));
    EXPECT_TRUE(e32.overlaps({parse_decimal("2.718281828"), parse_decimal("2.718281829")}));
    EXPECT_LE(e32.width(), Rational(4, Integer(1) << 32));

    RatInterval e = exp_enclosure(RatInterval(Rational(1)), P128);
    EXPECT_TRUE(e.contains(decimal_bracket(kEDigits).lo()));
    EXPECT_GT(e.lo(), parse_decimal("2.718281828"));
    EXPECT_LT(e.hi(), parse_decimal("2.718281829"));

    RatInterval em = exp_enclosure(RatInterval(Rational(-1)), P128);
    EXPECT_GT(em.lo(), parse_decimal("0.3678784"));
    EXPECT_LT(em.hi(), parse_decimal("0.3678804"));
    EXPECT_TRUE((e * em).contains(Rational(1)));
}

TEST(Exp, LargeArgument)
{
    // e^100 = 2.6881171418161354484e43
    RatInterval r = exp_enclosure(RatInterval(Rational(100)), P128);
    EXPECT_NEAR(to_double(r.midpoint()) / 2.6881171418161354484e43, 1.0, 1e-15);
    EXPECT_LT(approx_log2(r.width() / r.lo()), -120);
}

TEST(Sinh, SmallAndModerate)
{
    RatInterval s = sinh_enclosure(RatInterval(Rational(1, 1000)), P128);
    EXPECT_NEAR(to_double(s.midpoint()), std::sinh(0.001), 1e-18);
    EXPECT_LT(approx_log2(s.width() / s.lo()), -120);
    RatInterval t = sinh_enclosure(RatInterval(Rational(3)), P128);
    EXPECT_NEAR(to_double(t.midpoint()), std::sinh(3.0), 1e-12);
}

TEST(PiNumber, KnownSigns)
{
    PiNumber a = PiNumber(990L) - pi_power(6);
    PiNumber b = pi_power(6, Rational(7)) - PiNumber(2970L);
    EXPECT_TRUE(eval_pinumber(a, P128).positive());
    EXPECT_TRUE(eval_pinumber(b, P128).positive());
    EXPECT_EQ(to_string(a), "-pi^6 + 990");
    EXPECT_EQ(to_string(b), "7*pi^6 - 2970");
}

TEST(PiNumber, XPolyEvaluation)
{
    // (pi^2 x^2 + 1) / x^3 at x = 2
    XPoly f = x_power(-1, pi_power(2)) + x_power(-3);
    Enclosure v = eval_xpoly(f, RatInterval(Rational(2)), P128);
    double expect = M_PI * M_PI / 2 + 1.0 / 8;
    EXPECT_NEAR(to_double(v.interval().midpoint()), expect, 1e-14);
}

TEST(DecideSign, Examples)
{
    auto a = decide_sign([](Precision p) { return pi(p) - 3L; });
    EXPECT_EQ(a.verdict, SignVerdict::Positive);
    auto b = decide_sign([](Precision p) { return square(pi(p)) - 10L; });
    EXPECT_EQ(b.verdict, SignVerdict::Negative);
    auto c = decide_sign([](Precision) { return RatInterval(Rational(0)); });
    EXPECT_EQ(c.verdict, SignVerdict::Zero);
    auto d = decide_sign([](Precision p) { return pi(p) - pi(p); }, Precision(64), 256);
    EXPECT_EQ(d.verdict, SignVerdict::Undecided);
    EXPECT_EQ(d.bits_used, 256u);
}

TEST(DecideSign, EscalatesPrecision)
{
    // pi - 833719/265381 ~ 8.7e-12 is beyond what 8 bits (plus guard bits) resolve.
    auto r = decide_sign([](Precision p) { return pi(p) - Rational(833719, 265381); }, Precision(8));
    EXPECT_EQ(r.verdict, SignVerdict::Positive);
    EXPECT_GT(r.bits_used, 8u);
}

// Every enclosure must contain the double-precision reference for 10^4
// random arguments; the double is accurate to a few ulps, so containment
// is tested against a bracket of +-1e-12 relative around it.
TEST(Property, EnclosuresContainReference)
{
    std::mt19937_64 rng(20240501);
    std::uniform_int_distribution<long> num(-40000, 40000);
    for (int i = 0; i < 10000; ++i) {
        Rational x(num(rng), 1000);
        double xd = to_double(x);
        Precision p(64 + static_cast<unsigned>(i % 4) * 32);

        RatInterval e = exp_enclosure(RatInterval(x), p);
        double ed = std::exp(xd);
        ASSERT_TRUE(e.overlaps({Rational(ed * (1 - 1e-12)), Rational(ed * (1 + 1e-12))})) << x.get_str();
        ASSERT_LT(to_double(e.width() / e.lo()), 1e-15);

        Rational ax = abs(x) + Rational(1, 1000);
        RatInterval s = sqrt_enclosure(RatInterval(ax), p);
        ASSERT_TRUE(square(s).contains(ax));
        ASSERT_LE(s.lo() * s.lo(), ax);
        ASSERT_GE(s.hi() * s.hi(), ax);
    }
}
