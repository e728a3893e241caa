#include "hoturan/hrr.hpp"

#include <gtest/gtest.h>

using namespace hoturan;

namespace {

const Precision P128(128);

const PartitionTable& table()
{
    static const PartitionTable t(3002);
    return t;
}

} // namespace

TEST(Mu, ValueAtOne)
{
    // (pi/6) sqrt 23, from a 40-digit reference evaluation.
    RatInterval m = mu(1, P128).enclosure;
    EXPECT_TRUE(m.overlaps({Rational("2511091513582264489764646728767/1000000000000000000000000000000"),
                            Rational("2511091513582264489764646728768/1000000000000000000000000000000")}));
    EXPECT_LT(approx_log2(m.width()), -120);
    EXPECT_THROW(mu(0, P128), std::invalid_argument);
}

TEST(Mu, SquaredIdentity)
{
    RatInterval pi2 = square(pi_enclosure(Precision(256)));
    for (Index n : {1L, 2L, 95L, 1206L, 19480L, 35456L}) {
        RatInterval m = mu(n, P128).enclosure;
        RatInterval exact = pi2 * RatInterval(Rational(24 * n - 1, 36));
        EXPECT_TRUE(square(m).overlaps(exact)) << n;
    }
}

TEST(Mu, CrossesFortyEightAfter350)
{
    auto at = [](Index n) {
        return decide_sign([n](Precision p) { return mu_enclosure(n, p) - 48L; }).verdict;
    };
    EXPECT_EQ(at(350), SignVerdict::Negative);
    EXPECT_EQ(at(351), SignVerdict::Positive);
}

TEST(Bounds, OrderedAndSandwichAt1206)
{
    for (Index n : {1L, 10L, 100L, 1206L, 3000L}) {
        BoundPair b = bounds(n, P128);
        EXPECT_LT(b.b1.hi(), b.b2.lo()) << n;
    }
    Rational p1206(table().at(1206));
    EXPECT_LT(b1(1206, P128).hi(), p1206);
    EXPECT_LT(p1206, b2(1206, P128).lo());
}

TEST(Lehmer, PositiveAndBracketsMainTerm)
{
    for (Index N : {1L, 2L, 3L})
        for (Index n : {1L, 10L, 100L, 2000L})
            EXPECT_TRUE(lehmer_bound(n, N, P128).positive()) << n << "," << N;
    for (Index n : {1L, 100L, 500L, 1206L}) {
        RatInterval err = abs(rademacher_main(n, P128) - RatInterval(table().at(n)));
        EXPECT_LT(err.hi(), lehmer_bound(n, 2, P128).lo()) << n;
    }
}

TEST(Lehmer, BracketsExactValuesTo3000)
{
    for (Index n = 1; n <= 3000; ++n) {
        RatInterval err = abs(rademacher_main(n, P128) - RatInterval(table().at(n)));
        ASSERT_LT(err.hi(), lehmer_bound(n, 2, P128).lo()) << n;
    }
}

TEST(TofN, BelowMuPowerAfter1520)
{
    for (Index n : {1521L, 2000L, 3000L}) {
        Enclosure m = mu_enclosure(n, P128);
        RatInterval scaled = abs((pow(m, 10) * t_of_n_enclosure(n, table(), P128)).interval());
        EXPECT_LT(scaled.hi(), 1) << n;
    }
    RatInterval t10 = t_of_n(10, table(), P128);
    EXPECT_LT(t10.width(), Rational(1, 1000000));
}

TEST(Sandwich, HoldsFrom1206)
{
    auto r = verify_sandwich(1206, 1300, table());
    EXPECT_TRUE(r.all_hold());
    EXPECT_TRUE(r.complete());
    for (const auto& e : r.verdicts())
        EXPECT_TRUE(e.margin->positive());
}

TEST(Sandwich, SmallRangeReportsVerdicts)
{
    auto r = verify_sandwich(1, 50, table());
    EXPECT_EQ(r.verdicts().size(), 50u);
    EXPECT_EQ(r.summary().undecided, 0u);
    EXPECT_THROW(verify_sandwich(0, 5, table()), std::invalid_argument);
    EXPECT_TRUE(verify_sandwich(10, 9, table()).empty());
}

TEST(Sandwich, ParallelMatchesSerial)
{
    CheckOptions serial, par;
    par.parallelism = 4;
    auto a = verify_sandwich(1180, 1240, table(), serial);
    auto b = verify_sandwich(1180, 1240, table(), par);
    ASSERT_EQ(a.verdicts().size(), b.verdicts().size());
    for (std::size_t i = 0; i < a.verdicts().size(); ++i) {
        EXPECT_EQ(a.verdicts()[i].n, b.verdicts()[i].n);
        EXPECT_EQ(a.verdicts()[i].verdict, b.verdicts()[i].verdict);
        EXPECT_EQ(*a.verdicts()[i].margin, *b.verdicts()[i].margin);
    }
}
