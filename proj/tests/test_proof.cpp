#include "hoturan/proof.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hoturan;

namespace {

const Precision P128(128);

PiNumber pin(std::initializer_list<std::pair<unsigned, const char*>> terms, const char* scale = "1")
{
    PiNumber out;
    for (const auto& [k, c] : terms)
        out += pi_power(k, Rational(c));
    return out.scaled(Rational(scale));
}

Integer smooth(unsigned a, unsigned b, unsigned c)
{
    return ipow(2, a) * ipow(3, b) * ipow(5, c);
}

/// printed value is given in thousandths.
bool root_matches(const TailDominanceResult& r, long thousandths)
{
    Rational v(thousandths, 1000), tol(1, 2000);
    v.canonicalize();
    return r.root.overlaps({v - tol, v + tol}) && r.root.width() < Rational(1, 100);
}

} // namespace

TEST(Series, PrintedTerms)
{
    XPoly y1 = series_bound(Radical::Y, Side::Lower).poly;
    EXPECT_EQ(y1.degree(), 1);
    EXPECT_EQ(y1.valuation(), -11);
    EXPECT_EQ(y1.coeff(1), PiNumber(1L));
    EXPECT_EQ(y1.coeff(-1), pi_power(2, Rational(1, 3)));
    EXPECT_EQ(y1.coeff(-3), pi_power(4, Rational(-1, 18)));
    EXPECT_EQ(y1.coeff(-11), pi_power(12, Rational(-7, 3888)));
    XPoly w2 = series_bound(Radical::W, Side::Upper).poly;
    EXPECT_EQ(w2.valuation(), -9);
    EXPECT_EQ(w2.coeff(-1), pi_power(2));
    EXPECT_EQ(w2.coeff(-3), pi_power(4, Rational(-1, 2)));
    XPoly z1 = series_bound(Radical::Z, Side::Lower).poly;
    EXPECT_EQ(z1.coeff(-1), pi_power(2, Rational(2, 3)));
}

TEST(Series, SandwichAtPoints)
{
    for (long x : {4L, 5L, 10L, 100L, 1000L}) {
        auto c = check_series_sandwich_at(Rational(x));
        EXPECT_EQ(c.verdict, Verdict::Holds) << x;
        EXPECT_TRUE(c.note.empty());
    }
    EXPECT_FALSE(check_series_sandwich_at(Rational(2)).note.empty());
    for (Index n : {10L, 20L, 95L, 1206L, 20000L})
        EXPECT_EQ(series_check(n, {}).verdict, Verdict::Holds) << n;
}

TEST(Taylor, BoundsForNegativeArguments)
{
    EXPECT_EQ(taylor_upper().degree(), 6);
    EXPECT_EQ(taylor_lower().degree(), 7);
    EXPECT_THROW(taylor_exp_bounds_check(Rational(0)), std::invalid_argument);
    EXPECT_THROW(taylor_exp_bounds_check(Rational(1, 3)), std::invalid_argument);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(1, 100000);
    for (int i = 0; i < 100; ++i) {
        Rational t(-num(rng), 10000);
        t.canonicalize();
        ASSERT_EQ(taylor_exp_bounds_check(t).verdict(), Verdict::Holds) << t.get_str();
    }
    EXPECT_EQ(taylor_check(1, {}).verdict, Verdict::Holds);
}

TEST(Eta, BoundsHold)
{
    for (Index n : {5L, 10L, 95L, 100L, 1000L, 19481L}) {
        auto c = eta_checks(n, {});
        EXPECT_EQ(c.verdict(), Verdict::Holds) << n;
    }
}

TEST(Eta, AlphaMinusBetaIsTwo)
{
    for (long t : {-3L, 0L, 7L, 181L}) {
        Enclosure e = Enclosure::exact(Rational(t), P128);
        EXPECT_EQ((detail::alpha_of(e) - detail::beta_of(e)).interval(), RatInterval(2L));
    }
}

TEST(TFactor, AgreesWithDirectMargin)
{
    for (Index n : {2L, 50L, 1000L, 19480L}) {
        Enclosure x = mu_enclosure(n - 1, Precision(256));
        RatInterval scaled = (pow(x, 5) * theorem31_margin(n, Precision(256))).interval();
        EXPECT_TRUE(scaled.overlaps(t_factor_value(n, Precision(256)).interval())) << n;
        EXPECT_EQ(t_factor_positivity(n, {}).verdict, theorem31_check(n, {}).verdict) << n;
    }
}

TEST(Radicals, ParityBookkeeping)
{
    RadicalForm y = RadicalForm::power(Radical::Y, 1);
    EXPECT_THROW(y.rational_part(), std::logic_error);
    EXPECT_EQ((y * y).rational_part(), radical_square(Radical::Y));
    RadicalForm yz = y * RadicalForm::power(Radical::Z, 1);
    EXPECT_THROW(yz.rational_part(), std::logic_error);
    EXPECT_EQ((yz * yz).rational_part(), radical_square(Radical::Y) * radical_square(Radical::Z));
    EXPECT_EQ(pow(y, 4).rational_part(), pow(radical_square(Radical::Y), 2));
}

TEST(Expansion, Sec3Coefficients)
{
    const HGPair& hg = expand_HG(Expansion::Sec3);
    EXPECT_EQ(coefficient_denominator_lcm(detail::sec3_raw()), sec3_scale());
    EXPECT_EQ(hg.H.valuation(), 0);
    EXPECT_EQ(hg.H.degree(), 171);
    EXPECT_EQ(hg.G, x_power(88, PiNumber(Rational(sec3_scale()))));
    EXPECT_EQ(hg.H.coeff(169), pin({{0, "35640"}, {2, "261360"}, {6, "-194"}, {8, "-249"}},
                                   "734929660305062125495501619046947456286720"));
    EXPECT_EQ(hg.H.coeff(170), pin({{0, "-2970"}, {6, "7"}}, "5879437282440497003964012952375579650293760"));
    EXPECT_EQ(hg.H.coeff(171), pin({{0, "990"}, {6, "-1"}}, "4409577961830372752973009714281684737720320"));
}

TEST(Expansion, Sec4Coefficients)
{
    const HGPair& hg = expand_HG(Expansion::Sec4Lemma);
    EXPECT_EQ(hg.H.degree(), 121);
    EXPECT_EQ(hg.G.degree(), 121);
    EXPECT_EQ(sec4_scale(), smooth(24, 37, 1));
    const Integer K = sec4_scale();
    EXPECT_EQ(hg.G.coeff(121), PiNumber(Rational(K)));
    EXPECT_EQ(hg.G.coeff(120), PiNumber(Rational(-2 * K)));
    for (Index k = 119; k <= 121; ++k)
        EXPECT_EQ(hg.H.coeff(k), hg.G.coeff(k)) << k;
    EXPECT_EQ(hg.G.coeff(118) - hg.H.coeff(118), pin({{4, "4196950194698297341378560"}}));
    EXPECT_EQ((hg.G - hg.H).degree(), 118);
    EXPECT_EQ(hg.H.coeff(117), pin({{2, "528815724531985465013698560"}, {4, "3802436876396657391288975360"}}));
    EXPECT_EQ(hg.G.coeff(116), pin({{4, "-7197769583907579940464230400"}}));
}

TEST(Expansion, GammaCoefficients)
{
    const HGPair& g = expand_HG(Expansion::Sec4Gamma);
    EXPECT_EQ(g.H.degree(), 364);
    EXPECT_TRUE(g.G.is_zero());
    Rational s(smooth(72, 105, 3));
    EXPECT_EQ(g.H.coeff(364), pi_power(12, s));
    EXPECT_EQ(g.H.coeff(363), (PiNumber(490050L) + pi_power(12)).scaled(-2 * 9 * s));
    EXPECT_EQ(g.H.coeff(362), (PiNumber(52925400L) + pi_power(12, 144) + pi_power(14, 41)).scaled(s));
    EXPECT_THROW(parse_expansion("sec5").value(), std::bad_optional_access);
    EXPECT_EQ(parse_expansion("sec4-gamma"), Expansion::Sec4Gamma);
}

TEST(Expansion, RatioMatchesDirectEvaluation)
{
    const HGPair& s3 = expand_HG(Expansion::Sec3);
    const HGPair& s4 = expand_HG(Expansion::Sec4Lemma);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(500, 50000);
    const Precision wp(512);
    for (int i = 0; i < 20; ++i) {
        Rational xq(num(rng), 100);
        xq.canonicalize();
        Enclosure x = Enclosure::exact(xq, wp);
        auto v = numeric_values(x, wp);
        Enclosure direct3 = sec3_expression(v, enclosure_lift(wp));
        Enclosure poly3 = eval_xpoly(s3.H, x, wp) / eval_xpoly(s3.G, x, wp);
        ASSERT_TRUE(direct3.interval().overlaps(poly3.interval())) << xq.get_str();
        auto [num4, den4] = sec4_ratio(v, enclosure_lift(wp));
        Enclosure poly4 = eval_xpoly(s4.H, x, wp) / eval_xpoly(s4.G, x, wp);
        ASSERT_TRUE((num4 / den4).interval().overlaps(poly4.interval())) << xq.get_str();
    }
}

TEST(Expansion, Sec3PositiveOnRay)
{
    const HGPair& s3 = expand_HG(Expansion::Sec3);
    for (long x : {358L, 500L, 1000L}) {
        auto d = decide_sign([&](Precision p) { return eval_xpoly(s3.H, RatInterval(x), p); });
        EXPECT_EQ(d.verdict, SignVerdict::Positive) << x;
    }
}

TEST(TailDominance, Sec3)
{
    auto r = tail_dominance_positivity(expand_HG(Expansion::Sec3).H, 169, Rational(181));
    EXPECT_EQ(r.verdict, Verdict::Holds);
    EXPECT_TRUE(r.insufficient.empty());
    EXPECT_EQ(r.argmax_k, 168);
    EXPECT_LT(r.max_threshold.hi(), 181);
    EXPECT_GT(r.max_threshold.lo(), 180);
    EXPECT_TRUE(root_matches(r, 357867));
    EXPECT_EQ(r.ray_start, 358);
}

TEST(TailDominance, Sec4)
{
    const HGPair& hg = expand_HG(Expansion::Sec4Lemma);
    auto g = tail_dominance_positivity(hg.G, 119, Rational(9));
    EXPECT_EQ(g.verdict, Verdict::Holds);
    EXPECT_TRUE(root_matches(g, 133255));
    EXPECT_EQ(g.ray_start, 134);

    auto d = tail_dominance_positivity(hg.G - hg.H, 116, Rational(9));
    EXPECT_EQ(d.verdict, Verdict::Holds);
    EXPECT_TRUE(root_matches(d, 134128));
    EXPECT_EQ(d.ray_start, 135);
    EXPECT_GT(d.max_threshold.lo(), Rational(8251, 1000));
    EXPECT_LT(d.max_threshold.hi(), Rational(8252, 1000));

    auto gold = tail_dominance_positivity(golden_coefficients(hg), 121, 119, Rational(9));
    EXPECT_EQ(gold.verdict, Verdict::Holds);
    EXPECT_LE(gold.ray_start, 134);

    auto gm = tail_dominance_positivity(expand_HG(Expansion::Sec4Gamma).H, 362, Rational(21));
    EXPECT_EQ(gm.verdict, Verdict::Holds);
    EXPECT_TRUE(root_matches(gm, 482959));
    EXPECT_EQ(gm.ray_start, 483);
}

TEST(TailDominance, ReportsInsufficientStart)
{
    auto r = tail_dominance_positivity(expand_HG(Expansion::Sec3).H, 169, Rational(150));
    EXPECT_EQ(r.verdict, Verdict::Fails);
    EXPECT_FALSE(r.insufficient.empty());
    EXPECT_THROW(tail_dominance_positivity(expand_HG(Expansion::Sec3).H, 160, Rational(181)), std::invalid_argument);
}

TEST(RatioBound, SampleHolds)
{
    for (Index n : {4L, 10L, 100L, 1207L, 2771L, 2800L, 20000L, 40000L})
        EXPECT_EQ(lemma42_check(n, {}).verdict, Verdict::Holds) << n;
    EXPECT_THROW(lemma42_check(3, {}), std::invalid_argument);
}
