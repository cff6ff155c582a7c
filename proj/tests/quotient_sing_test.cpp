#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "polbound/quotient_sing.hpp"

using polbound::InvalidInput;
using polbound::QuotientSingularity;
using polbound::Rational;

namespace {

QuotientSingularity q(std::int64_t r, std::vector<std::int64_t> a) { return QuotientSingularity::normalize(r, a); }

std::vector<std::int64_t> ones(std::size_t n) { return std::vector<std::int64_t>(n, 1); }

} // namespace

TEST(Normalize, ReducesResidues) {
    EXPECT_EQ(q(5, {7, -2}), q(5, {2, 3}));
    const auto s = q(5, {7, -2});
    EXPECT_EQ(s.order(), 5);
    EXPECT_EQ(std::vector<std::int64_t>(s.weights().begin(), s.weights().end()), (std::vector<std::int64_t>{2, 3}));

    const auto t = q(7, {8, 9, 10});
    EXPECT_EQ(t.to_string(), "1/7(1,2,3)");

    const auto smooth = q(1, {0, 0, 0});
    EXPECT_EQ(smooth.order(), 1);
    EXPECT_EQ(smooth.dimension(), 3u);
}

TEST(Normalize, RejectsBadInput) {
    EXPECT_THROW(q(0, {1}), InvalidInput);
    EXPECT_THROW(q(-3, {1}), InvalidInput);
    EXPECT_THROW(q(3, {}), InvalidInput);
    EXPECT_THROW(q(QuotientSingularity::max_order + 1, {1}), InvalidInput);
}

TEST(Mld, FrozenValues) {
    // 1/N(1^n) -> n/N
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t big_n = 1; big_n <= 12; ++big_n) {
            EXPECT_EQ(polbound::mld(q(big_n, ones(static_cast<std::size_t>(n)))), Rational(n, big_n));
        }
    }
    EXPECT_EQ(polbound::mld(q(1, {5, 0, 3, 2})), Rational(4));
    // Brute force over j = 1..7 gives 6/7, 12/7, 11/7, 10/7, 9/7, 15/7, 3.
    EXPECT_EQ(polbound::mld(q(7, {1, 2, 3})), Rational(6, 7));
    EXPECT_EQ(polbound::oracle::mld(7, {1, 2, 3}), Rational(6, 7));
    EXPECT_EQ(polbound::mld(q(5, {2, 3})), Rational(1));
    EXPECT_EQ(polbound::oracle::mld(5, {2, 3}), Rational(1));
}

TEST(Profile, FrozenValues) {
    EXPECT_EQ(polbound::discrepancy_profile(q(2, {1, 1})), (std::vector<Rational>{1, 2}));
    EXPECT_EQ(polbound::discrepancy_profile(q(1, {0, 0})), (std::vector<Rational>{2}));
    EXPECT_EQ(polbound::discrepancy_profile(q(3, {1, 1})), (std::vector<Rational>{Rational(2, 3), Rational(4, 3), 2}));
    EXPECT_EQ(polbound::oracle::profile(3, {1, 1}), (std::vector<Rational>{Rational(2, 3), Rational(4, 3), 2}));
}

TEST(Profile, ResidueZeroContributesOne) {
    const auto p = polbound::discrepancy_profile(q(4, {0, 1}));
    EXPECT_EQ(p, (std::vector<Rational>{Rational(5, 4), Rational(6, 4), Rational(7, 4), 2}));
}

TEST(EpsLc, Examples) {
    EXPECT_TRUE(polbound::is_eps_lc(q(3, {1, 1}), Rational(2, 3)));
    EXPECT_FALSE(polbound::is_eps_lc(q(3, {1, 1}), Rational(1)));
    EXPECT_TRUE(polbound::is_eps_lc(q(1, {0, 0, 0}), Rational(1)));
}

TEST(EpsLc, RejectsEpsOutsideUnitInterval) {
    EXPECT_THROW(polbound::is_eps_lc(q(3, {1, 1}), Rational(0)), InvalidInput);
    EXPECT_THROW(polbound::is_eps_lc(q(3, {1, 1}), Rational(-1, 2)), InvalidInput);
    EXPECT_THROW(polbound::is_eps_lc(q(3, {1, 1}), Rational(3, 2)), InvalidInput);
}

class MldProperty : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240611};

    QuotientSingularity random_germ(std::int64_t max_r, std::size_t max_n) {
        const std::int64_t r = std::uniform_int_distribution<std::int64_t>(1, max_r)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        std::vector<std::int64_t> a(n);
        for (auto& x : a) {
            x = std::uniform_int_distribution<std::int64_t>(-3 * r, 3 * r)(rng);
        }
        return QuotientSingularity::normalize(r, a);
    }
};

TEST_F(MldProperty, MatchesNaiveOracleAndStaysInRange) {
    for (int iter = 0; iter < 1500; ++iter) {
        const auto s = random_germ(60, 5);
        const std::vector<std::int64_t> a(s.weights().begin(), s.weights().end());
        const Rational value = polbound::mld(s);
        ASSERT_EQ(value, polbound::oracle::mld(s.order(), a)) << s.to_string();
        const auto profile = polbound::discrepancy_profile(s);
        ASSERT_EQ(profile, polbound::oracle::profile(s.order(), a)) << s.to_string();
        ASSERT_EQ(profile.back(), Rational(static_cast<std::int64_t>(s.dimension())));
        ASSERT_GT(value, 0);
        ASSERT_LE(value, Rational(static_cast<std::int64_t>(s.dimension())));
    }
}

TEST_F(MldProperty, UnitRescalingInvariance) {
    for (int iter = 0; iter < 500; ++iter) {
        const auto s = random_germ(80, 5);
        std::int64_t u = 0;
        do {
            u = std::uniform_int_distribution<std::int64_t>(1, std::max<std::int64_t>(1, s.order()))(rng);
        } while (std::gcd(u, s.order()) != 1);
        std::vector<std::int64_t> scaled;
        for (auto a : s.weights()) {
            scaled.push_back(u * a);
        }
        ASSERT_EQ(polbound::mld(QuotientSingularity::normalize(s.order(), scaled)), polbound::mld(s));
    }
}

TEST_F(MldProperty, AppendingAWeightStrictlyIncreases) {
    for (int iter = 0; iter < 500; ++iter) {
        const auto s = random_germ(80, 5);
        std::vector<std::int64_t> longer(s.weights().begin(), s.weights().end());
        longer.push_back(std::uniform_int_distribution<std::int64_t>(0, s.order())(rng));
        ASSERT_GT(polbound::mld(QuotientSingularity::normalize(s.order(), longer)), polbound::mld(s));
    }
}
