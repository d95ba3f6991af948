#include "test_util.hpp"

#include <genleg/wigner.hpp>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <gtest/gtest.h>

using namespace genleg;

namespace {

// exp(-i theta J_y) in the basis m = j, j-1, ..., -j; -i J_y = -(J+ - J-)/2 is real.
Eigen::MatrixXd eigen_rotation(int j2, double theta)
{
    const int n = j2 + 1;
    const double j = j2 / 2.0;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (int b = 1; b < n; ++b) {
        double m = j - b;
        double c = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        g(b - 1, b) -= theta * c / 2.0;
        g(b, b - 1) += theta * c / 2.0;
    }
    return g.exp();
}

std::vector<SpinIndex> all_spins(int max_j2)
{
    std::vector<SpinIndex> out;
    for (int j2 = 0; j2 <= max_j2; ++j2)
        for (int mu2 = -j2; mu2 <= j2; mu2 += 2)
            for (int nu2 = -j2; nu2 <= j2; nu2 += 2)
                out.push_back({j2, mu2, nu2});
    return out;
}

} // namespace

TEST(WignerD, MatchesFactorialSum)
{
    for (const auto& c : oracle::wigner_cases) {
        FnValue d = wigner_d({c.j2, c.mu2, c.nu2}, c.x);
        EXPECT_NEAR(d.value.real(), c.value, 1e-12) << c.j2 << " " << c.mu2 << " " << c.nu2 << " x=" << c.x;
        EXPECT_EQ(d.value.imag(), 0.0);
    }
}

TEST(WignerD, MatchesMatrixExponential)
{
    for (double theta : {0.3, 1.1, 2.0, 2.9}) {
        for (int j2 = 0; j2 <= 8; ++j2) {
            Eigen::MatrixXd m = eigen_rotation(j2, theta);
            for (int a = 0; a <= j2; ++a)
                for (int b = 0; b <= j2; ++b) {
                    SpinIndex s{j2, j2 - 2 * a, j2 - 2 * b};
                    EXPECT_NEAR(wigner_d(s, std::cos(theta)).value.real(), m(a, b), 1e-10)
                        << j2 << " " << s.mu2 << " " << s.nu2 << " theta=" << theta;
                    EXPECT_NEAR(wigner_d_rotation(s, theta), m(a, b), 1e-13);
                }
        }
    }
}

TEST(WignerD, SmallClosedForms)
{
    double x = 0.37;
    EXPECT_NEAR(wigner_d({1, 1, 1}, x).value.real(), std::sqrt((1.0 + x) / 2.0), 1e-14);
    EXPECT_NEAR(wigner_d({1, 1, -1}, x).value.real(), -std::sqrt((1.0 - x) / 2.0), 1e-14);
    EXPECT_NEAR(wigner_d({2, 0, 0}, x).value.real(), x, 1e-14);
    EXPECT_NEAR(wigner_d({2, 2, 0}, x).value.real(), -std::sqrt((1.0 - x * x) / 2.0), 1e-14);
}

TEST(WignerD, EndpointsAreLimits)
{
    for (const auto& s : all_spins(6)) {
        double at1 = wigner_d(s, 1.0).value.real(), near1 = wigner_d(s, 1.0 - 1e-12).value.real();
        double atm1 = wigner_d(s, -1.0).value.real(), nearm1 = wigner_d(s, -1.0 + 1e-12).value.real();
        EXPECT_NEAR(at1, near1, 1e-5) << s.j2 << " " << s.mu2 << " " << s.nu2;
        EXPECT_NEAR(atm1, nearm1, 1e-5) << s.j2 << " " << s.mu2 << " " << s.nu2;
        EXPECT_EQ(at1, s.mu2 == s.nu2 ? 1.0 : 0.0);
    }
}

TEST(WignerD, Symmetries)
{
    for (const auto& s : all_spins(8))
        for (double x : {-0.83, -0.1, 0.42, 0.97})
            for (auto rule : {DSymmetry::reflect_j, DSymmetry::negate_swap, DSymmetry::transpose, DSymmetry::reflect_x_mu,
                              DSymmetry::reflect_x_nu})
                EXPECT_LE(d_symmetry_residual(rule, s, x).relative(), 1e-11)
                    << to_string(rule) << " " << s.j2 << " " << s.mu2 << " " << s.nu2 << " x=" << x;
}

TEST(WignerD, Unitarity)
{
    for (int j2 = 0; j2 <= 8; ++j2) {
        double x = 0.29;
        for (int a = -j2; a <= j2; a += 2)
            for (int b = -j2; b <= j2; b += 2) {
                double s = 0.0;
                for (int m = -j2; m <= j2; m += 2)
                    s += wigner_d({j2, a, m}, x).value.real() * wigner_d({j2, b, m}, x).value.real();
                EXPECT_NEAR(s, a == b ? 1.0 : 0.0, 1e-10);
            }
    }
}

TEST(WignerD, Orthogonality)
{
    for (int mu2 = -4; mu2 <= 4; ++mu2)
        for (int nu2 = -4; nu2 <= 4; ++nu2) {
            int lo = std::max(std::abs(mu2), std::abs(nu2));
            for (int j1 = lo; j1 <= 10; j1 += 2)
                for (int j2 = lo; j2 <= 10; j2 += 2) {
                    if ((j1 - mu2) % 2 != 0 || (j1 - nu2) % 2 != 0)
                        continue;
                    double want = j1 == j2 ? 2.0 / (j1 + 1.0) : 0.0;
                    EXPECT_NEAR(d_orthogonality({j1, mu2, nu2}, {j2, mu2, nu2}).value.real(), want, 1e-10);
                }
        }
}

TEST(WignerD, RejectsInvalidIndices)
{
    EXPECT_THROW(wigner_d({2, 1, 0}, 0.3), DomainError);
    EXPECT_THROW(wigner_d({2, 4, 0}, 0.3), DomainError);
    EXPECT_THROW(wigner_d({-2, 0, 0}, 0.3), DomainError);
}
