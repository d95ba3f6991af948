#include "test_util.hpp"

#include <genleg/complex.hpp>

#include <gtest/gtest.h>

using namespace genleg;
using testing_util::rel_err;
using testing_util::to_cplx;

TEST(Gamma, MatchesOracle)
{
    for (const auto& c : oracle::gamma_cases) {
        cplx z = to_cplx(c.z);
        EXPECT_LT(rel_err(gamma(z), to_cplx(c.gamma)), 1e-12) << "z = " << z;
        EXPECT_LT(rel_err(std::exp(log_gamma(z)), to_cplx(c.gamma)), 1e-12) << "z = " << z;
        EXPECT_LT(rel_err(reciprocal_gamma(z), 1.0 / to_cplx(c.gamma)), 1e-12) << "z = " << z;
    }
}

TEST(Gamma, ReciprocalVanishesAtPoles)
{
    for (int n = 0; n <= 30; ++n)
        EXPECT_EQ(reciprocal_gamma(cplx(-n, 0.0)), cplx(0.0)) << n;
}

TEST(Gamma, RatioCancelsPoles)
{
    // Gamma(-3 + e)/Gamma(-2 + e) = 1/(-3 + e)
    FnValue r = gamma_ratio({cplx(-3.0)}, {cplx(-2.0)});
    ASSERT_FALSE(r.pole());
    EXPECT_LT(rel_err(r.value, -1.0 / 3.0), 1e-14);
    FnValue g = gamma_ratio({cplx(0.5), cplx(2.5)}, {cplx(3.0)});
    EXPECT_LT(rel_err(g.value, gamma(cplx(0.5)) * gamma(cplx(2.5)) / 2.0), 1e-14);
    FnValue p = gamma_ratio({cplx(-2.0)}, {cplx(1.5)});
    EXPECT_TRUE(p.pole());
    FnValue z = gamma_ratio({cplx(1.5)}, {cplx(-4.0)});
    EXPECT_TRUE(z.zero());
}

TEST(Trig, SinPiExactAtIntegers)
{
    for (int n = -20; n <= 20; ++n) {
        EXPECT_EQ(sin_pi(cplx(n, 0.0)).real(), 0.0) << n;
        EXPECT_NEAR(std::abs(cos_pi(cplx(n + 0.5, 0.0))), 0.0, 0.0) << n;
    }
    cplx w(0.3, 0.7);
    EXPECT_LT(rel_err(sin_pi(w), std::sin(pi * w)), 1e-14);
    EXPECT_LT(rel_err(exp_i_pi(w), std::exp(cplx(0.0, 1.0) * pi * w)), 1e-14);
}

TEST(Branch, PowerFollowsSide)
{
    cplx p(0.25, 0.1);
    cplx above = branch_power(cplx(-2.0), p, Side::above);
    cplx below = branch_power(cplx(-2.0), p, Side::below);
    EXPECT_LT(rel_err(above, std::exp(p * (std::log(2.0) + cplx(0.0, pi)))), 1e-14);
    EXPECT_LT(rel_err(below, std::exp(p * (std::log(2.0) - cplx(0.0, pi)))), 1e-14);
    // off the negative axis the side is irrelevant
    EXPECT_EQ(branch_power(cplx(2.0, 1.0), p, Side::above), branch_power(cplx(2.0, 1.0), p, Side::off_axis));
}

TEST(Branch, NegativeAxisNeedsSide)
{
    EXPECT_THROW(branch_power(cplx(-2.0), cplx(0.5), Side::off_axis), BranchAmbiguityError);
}

TEST(Integers, Detection)
{
    EXPECT_TRUE(near_nonpositive_integer(cplx(-3.0 + 1e-12, 0.0)));
    EXPECT_FALSE(near_nonpositive_integer(cplx(-3.0 + 1e-6, 0.0)));
    EXPECT_FALSE(near_nonpositive_integer(cplx(2.0)));
    EXPECT_TRUE(near_integer(cplx(7.0, 1e-13)));
    EXPECT_FALSE(near_integer(cplx(7.0, 1e-3)));
}

TEST(Flags, Names)
{
    EXPECT_EQ(flags_to_string(flag_pole | flag_degraded), "pole|degraded");
    EXPECT_EQ(flags_to_string(flag_none), "");
    EXPECT_TRUE(FnValue::make_pole(2).pole());
    EXPECT_EQ(FnValue::make_pole(2).pole_order, 2);
}
