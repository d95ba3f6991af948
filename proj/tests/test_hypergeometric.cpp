#include "test_util.hpp"

#include <genleg/hypergeometric.hpp>

#include <gtest/gtest.h>

using namespace genleg;
using testing_util::rel_err;
using testing_util::to_cplx;
using testing_util::to_side;

namespace {

Hyp2F1Params params(const oracle::HypCase& c)
{
    return {to_cplx(c.a), to_cplx(c.b), to_cplx(c.c), to_cplx(c.x)};
}

} // namespace

TEST(Hyp2F1, RegularizedMatchesOracle)
{
    for (const auto& c : oracle::hyp_cases) {
        FnValue v = hyp2f1_regularized(params(c), to_side(c.side));
        cplx want = to_cplx(c.value);
        EXPECT_LT(rel_err(v.value, want), 1e-11) << "x = " << to_cplx(c.x) << " side " << c.side;
        // the error estimate covers the actual error
        EXPECT_LE(std::abs(v.value - want), std::max(10.0 * v.abs_error, 1e-15 * std::abs(want)))
            << "x = " << to_cplx(c.x);
    }
}

TEST(Hyp2F1, MethodsAgreeWhereValid)
{
    Hyp2F1Params p{cplx(0.4, 0.3), cplx(1.1, -0.2), cplx(2.2, 0.1), cplx(-0.6, 0.2)};
    FnValue ref = hyp2f1_regularized(p, Side::off_axis, Hyp2F1Method::maclaurin);
    for (auto m : {Hyp2F1Method::pfaff, Hyp2F1Method::continuation, Hyp2F1Method::one_minus_x})
        EXPECT_LT(rel_err(hyp2f1_regularized(p, Side::off_axis, m).value, ref.value), 1e-12);
    Hyp2F1Params far{cplx(0.4, 0.3), cplx(1.1, -0.2), cplx(2.2, 0.1), cplx(-6.0, 2.0)};
    FnValue a = hyp2f1_regularized(far, Side::off_axis, Hyp2F1Method::inverse_x);
    FnValue b = hyp2f1_regularized(far, Side::off_axis, Hyp2F1Method::continuation);
    EXPECT_LT(rel_err(a.value, b.value), 1e-12);
}

TEST(Hyp2F1, NonpositiveIntegerC)
{
    // unregularized: pole; regularized: finite
    Hyp2F1Params p{1.5, 2.5, -2.0, 0.4};
    EXPECT_TRUE(hyp2f1(p).pole());
    EXPECT_TRUE(std::isfinite(std::abs(hyp2f1_regularized(p).value)));
}

TEST(Hyp2F1, PolynomialCase)
{
    // F(-2, b; c; x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
    cplx b(0.7, 0.2), c(1.3, -0.4), x(5.0, 3.0);
    cplx want = 1.0 - 2.0 * b * x / c + b * (b + 1.0) * x * x / (c * (c + 1.0));
    EXPECT_LT(rel_err(hyp2f1({-2.0, b, c, x}).value, want), 1e-14);
}

TEST(Hyp2F1, ElementaryClosedForms)
{
    // F(1, 1; 2; x) = -log(1 - x)/x
    for (cplx x : {cplx(0.3), cplx(-4.0), cplx(0.9, 0.9), cplx(-30.0, 1.0)})
        EXPECT_LT(rel_err(hyp2f1({1.0, 1.0, 2.0, x}).value, -std::log(1.0 - x) / x), 1e-13) << x;
    // F(a, b; b; x) = (1 - x)^{-a}
    cplx a(0.35, 0.2);
    for (cplx x : {cplx(0.5, 0.1), cplx(-7.0, 0.5), cplx(1.5, 1.5)})
        EXPECT_LT(rel_err(hyp2f1({a, 1.7, 1.7, x}).value, std::pow(1.0 - x, -a)), 1e-13) << x;
}

TEST(Hyp2F1, CutNeedsSide)
{
    EXPECT_THROW(hyp2f1({0.3, 0.7, 1.0, 2.0}), BranchAmbiguityError);
    FnValue up = hyp2f1({0.3, 0.7, 1.0, 2.0}, Side::above);
    FnValue dn = hyp2f1({0.3, 0.7, 1.0, 2.0}, Side::below);
    // real parameters: the two boundary values are complex conjugates
    EXPECT_LT(std::abs(up.value - std::conj(dn.value)), 1e-13);
}

TEST(Bessel, MatchesOracle)
{
    for (const auto& c : oracle::bessel_cases)
        EXPECT_LT(rel_err(bessel_j(to_cplx(c.v), to_cplx(c.y)).value, to_cplx(c.value)), 1e-11)
            << "v = " << to_cplx(c.v) << " y = " << to_cplx(c.y);
}

TEST(Kummer, MatchesOracle)
{
    for (const auto& c : oracle::kummer_cases)
        EXPECT_LT(rel_err(kummer_phi_regularized(to_cplx(c.a), to_cplx(c.c), to_cplx(c.x)).value, to_cplx(c.value)),
                  1e-12)
            << "a = " << to_cplx(c.a) << " c = " << to_cplx(c.c) << " x = " << to_cplx(c.x);
}
