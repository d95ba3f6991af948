// Hyperbolic and trigonometric triangle relations among z1, z2, the third
// vertex z_alpha (z_theta) and the angles alpha1, alpha2 (theta1, theta2).
#pragma once

#include "complex.hpp"

#include <algorithm>
#include <utility>

namespace genleg {

enum class TriangleKind { hyperbolic, trigonometric };

struct TriangleConfig {
    double z1 = 0.0, z2 = 0.0;
    double parameter = 0.0; // alpha or theta
    TriangleKind kind = TriangleKind::hyperbolic;
    double z_third = 0.0;   // z_alpha or z_theta
    double p1 = 0.0, p2 = 0.0; // (alpha1, alpha2) or (theta1, theta2)
};

// Real z1, z2 > 1 only. Hyperbolic:
//   z_a = z1 z2 + s1 s2 cosh a, sinh a1 = sinh a s1/s_a, sinh a2 = sinh a s2/s_a;
// trigonometric:
//   z_t = z1 z2 - s1 s2 cos t, with t1, t2 in (-pi, pi] and sin t1, sin t2 of the sign of sin t,
// where s = sqrt(z^2 - 1).
inline TriangleConfig solve_triangle(double z1, double z2, double parameter, TriangleKind kind)
{
    if (!(z1 > 1.0) || !(z2 > 1.0) || !std::isfinite(z1) || !std::isfinite(z2))
        throw DomainError("solve_triangle: z1 and z2 must be real and greater than 1");
    if (!std::isfinite(parameter))
        throw DomainError("solve_triangle: non-finite angle");
    TriangleConfig c{z1, z2, parameter, kind};
    const double s1 = std::sqrt((z1 - 1.0) * (z1 + 1.0)), s2 = std::sqrt((z2 - 1.0) * (z2 + 1.0));
    if (kind == TriangleKind::hyperbolic) {
        c.z_third = z1 * z2 + s1 * s2 * std::cosh(parameter);
        const double s3 = std::sqrt((c.z_third - 1.0) * (c.z_third + 1.0));
        const double sh = std::sinh(parameter);
        c.p1 = std::asinh(sh * s1 / s3);
        c.p2 = std::asinh(sh * s2 / s3);
        return c;
    }
    // z1 z2 - s1 s2 cos t, written to avoid cancellation near z_t = 1
    const double base = z1 * z2 - s1 * s2; // cosh(b1 - b2)
    c.z_third = base + s1 * s2 * 2.0 * std::pow(std::sin(parameter / 2.0), 2);
    const double s3 = std::sqrt((c.z_third - 1.0) * (c.z_third + 1.0));
    if (!(s3 > 0.0))
        throw DomainError("solve_triangle: degenerate triangle (z_theta = 1)");
    const double sn = std::sin(parameter);
    c.p1 = std::atan2(sn * s1 / s3, (z2 * c.z_third - z1) / (s2 * s3));
    c.p2 = std::atan2(sn * s2 / s3, (c.z_third * z1 - z2) / (s3 * s1));
    return c;
}

struct TriangleResiduals {
    double third = 0.0;     // defining relation for z_third
    double z1_back = 0.0;   // z1 recomputed from (z2, z_third, p1)
    double z2_back = 0.0;   // z2 recomputed from (z_third, z1, p2)
    double products = 0.0;  // spread of the three sine(h) products and the squared root form
};

inline TriangleResiduals triangle_residuals(const TriangleConfig& c)
{
    const double s1 = std::sqrt(c.z1 * c.z1 - 1.0), s2 = std::sqrt(c.z2 * c.z2 - 1.0);
    const double s3 = std::sqrt(c.z_third * c.z_third - 1.0);
    TriangleResiduals r;
    const bool hyp = c.kind == TriangleKind::hyperbolic;
    auto cf = [hyp](double a) { return hyp ? std::cosh(a) : std::cos(a); };
    auto sf = [hyp](double a) { return hyp ? std::sinh(a) : std::sin(a); };
    const double sg = hyp ? 1.0 : -1.0;
    r.third = std::abs(c.z_third - (c.z1 * c.z2 + sg * s1 * s2 * cf(c.parameter))) / c.z_third;
    r.z1_back = std::abs(c.z2 * c.z_third - s2 * s3 * cf(c.p1) - c.z1) / c.z1;
    r.z2_back = std::abs(c.z_third * c.z1 - s3 * s1 * cf(c.p2) - c.z2) / c.z2;
    const double a = sf(c.parameter) * s1 * s2, b = sf(c.p1) * s2 * s3, d = sf(c.p2) * s3 * s1;
    double disc = hyp ? c.z_third * c.z_third + c.z1 * c.z1 + c.z2 * c.z2 - 2.0 * c.z_third * c.z1 * c.z2 - 1.0
                      : 1.0 + 2.0 * c.z_third * c.z1 * c.z2 - c.z_third * c.z_third - c.z1 * c.z1 - c.z2 * c.z2;
    const double m = std::max(std::abs(a), s1 * s2);
    r.products = std::max({std::abs(a - b) / m, std::abs(a - d) / m,
                           std::abs(a * a - disc) / (2.0 * c.z_third * c.z1 * c.z2)});
    return r;
}

// Trigonometric angles shifted by pi on the side that makes them continuous
// through theta = 0: theta1 for z1 > z2, theta2 for z1 < z2.
inline std::pair<double, double> continuous_angles(const TriangleConfig& c)
{
    if (c.kind != TriangleKind::trigonometric)
        return {c.p1, c.p2};
    auto shift = [&](double a) {
        double s = c.parameter != 0.0 ? (c.parameter > 0.0 ? 1.0 : -1.0) : (a >= 0.0 ? 1.0 : -1.0);
        return a - pi * s;
    };
    if (c.z1 > c.z2)
        return {shift(c.p1), c.p2};
    return {c.p1, shift(c.p2)};
}

} // namespace genleg
