#include "test_util.hpp"

#include <genleg/recurrence.hpp>

#include <gtest/gtest.h>

using namespace genleg;
using testing_util::rel_err;

namespace {

const IndexTriple triples[] = {
    {cplx(0.6, 0.3), cplx(0.2, -0.4), cplx(-0.7, 0.1)},
    {cplx(-1.4, 0.8), cplx(1.1, 0.5), cplx(0.3, -0.9)},
    {cplx(2.3, -0.2), cplx(-0.6, 0.0), cplx(1.2, 0.3)},
};
const Argument args[] = {{cplx(1.5)}, {cplx(2.0, 1.0)}, {cplx(5.0)}, {cplx(-3.0, 0.5)}};

const RecurrenceRule rules[] = {RecurrenceRule::half_step_mp, RecurrenceRule::half_step_pm, RecurrenceRule::half_step_pp,
                                RecurrenceRule::half_step_mm, RecurrenceRule::full_step_z,  RecurrenceRule::deriv_down,
                                RecurrenceRule::deriv_up};

} // namespace

TEST(Recurrence, ClassicalThreeTerm)
{
    // (2j+1) z P_j = (j+1) P_{j+1} + j P_{j-1} at j = 1
    for (auto kind : {FunctionKind::P, FunctionKind::Q})
        EXPECT_LT(recurrence_residual({RecurrenceRule::full_step_z}, kind, {1.0, 0.0, 0.0}, {cplx(1.7)}).relative(), 1e-12);
}

TEST(Recurrence, AllRulesBothKinds)
{
    for (auto rule : rules)
        for (int n : {1, 2}) {
            if (n == 2 && rule != RecurrenceRule::deriv_down && rule != RecurrenceRule::deriv_up)
                continue;
            for (auto kind : {FunctionKind::P, FunctionKind::Q})
                for (const auto& t : triples)
                    for (const auto& arg : args) {
                        Residual r = recurrence_residual({rule, n}, kind, t, arg);
                        EXPECT_LT(r.relative(), 1e-8) << to_string(rule) << " n=" << n << " kind " << int(kind)
                                                       << " j=" << t.j << " z=" << arg.z;
                    }
        }
}

TEST(Recurrence, OnTheCut)
{
    // boundary values above the cut use finite differences along the axis
    for (auto rule : rules)
        for (auto kind : {FunctionKind::P, FunctionKind::Q})
            EXPECT_LT(recurrence_residual({rule, 1}, kind, triples[0], {cplx(0.3), Side::above}).relative(), 1e-6)
                << to_string(rule);
}

TEST(Recurrence, DerivativeAtGenericPoint)
{
    EXPECT_LT(recurrence_residual({RecurrenceRule::deriv_down, 1}, FunctionKind::P, triples[1], {2.2}).relative(), 1e-6);
}

TEST(StepJ, LegendreChain)
{
    double z = 1.3;
    FnValue p0{1.0}, p1{z};
    FnValue p2 = step_j({1.0, 0.0, 0.0}, {z}, p1, p0);
    EXPECT_LT(rel_err(p2.value, (3.0 * z * z - 1.0) / 2.0), 1e-15);
    EXPECT_THROW(step_j({0.0, 0.0, 0.0}, {z}, p1, p0), DegenerateError);
}

TEST(StepJ, TenStepsMatchDirect)
{
    const cplx mu(0.3, 0.1), nu(-0.2, 0.2), j0(0.4, 0.1);
    const Argument arg{cplx(1.8, 0.3)};
    FnValue prev = p_first_kind({j0, mu, nu}, arg), cur = p_first_kind({j0 + 1.0, mu, nu}, arg);
    for (int k = 1; k <= 10; ++k) {
        FnValue next = step_j({j0 + double(k), mu, nu}, arg, cur, prev);
        prev = cur;
        cur = next;
    }
    EXPECT_LT(rel_err(cur.value, p_first_kind({j0 + 11.0, mu, nu}, arg).value), 1e-7);
}

TEST(Ode, ResidualSmall)
{
    for (auto kind : {FunctionKind::P, FunctionKind::Q})
        for (const auto& t : triples)
            for (const auto& arg : args)
                EXPECT_LT(ode_residual(kind, t, arg).relative(), 1e-5) << int(kind) << " z=" << arg.z;
    EXPECT_THROW(ode_residual(FunctionKind::P, triples[0], {cplx(0.3), Side::above}), DomainError);
}

TEST(Contour, DerivativeOfExponential)
{
    auto g = [](cplx w) { return std::exp(2.0 * w); };
    cplx z(0.3, 0.4);
    EXPECT_LT(rel_err(contour_derivative(g, z, 1, 0.5), 2.0 * g(z)), 1e-13);
    EXPECT_LT(rel_err(contour_derivative(g, z, 2, 0.5), 4.0 * g(z)), 1e-13);
}
