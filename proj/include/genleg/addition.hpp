// Multiplication and addition theorems: the alpha-integral product formula,
// its inverse along the imaginary lambda axis, the mixed P-Q formulas, the
// integral representation of Q, and the lambda-series addition theorems.
#pragma once

#include "identities.hpp"
#include "triangle.hpp"

namespace genleg {

namespace detail {

inline void require_real_above_one(double z1, double z2)
{
    require(z1 > 1.0 && z2 > 1.0, "addition theorem: z1 and z2 must be real and greater than 1");
}

// e^{-lam a} e^{mu a2} Q^j_{mu nu}(z_a) e^{nu a1}
inline cplx hyperbolic_integrand(const IndexTriple& t, cplx lam, double z1, double z2, double alpha)
{
    TriangleConfig c = solve_triangle(z1, z2, alpha, TriangleKind::hyperbolic);
    FnValue q = value_or_throw(q_second_kind(t, {c.z_third}), "addition theorem: Q has a pole");
    return std::exp(-lam * alpha + t.mu * c.p2 + t.nu * c.p1) * q.value;
}

// e^{-i lam th} e^{-i mu th2} Q^j_{mu nu}(z_th) e^{-i nu th1}, angles continuous through th = 0
inline cplx trigonometric_integrand(const IndexTriple& t, cplx lam, double z1, double z2, double theta)
{
    TriangleConfig c = solve_triangle(z1, z2, theta, TriangleKind::trigonometric);
    auto [t1, t2] = continuous_angles(c);
    FnValue q = value_or_throw(q_second_kind(t, {c.z_third}), "addition theorem: Q has a pole");
    const cplx i(0.0, 1.0);
    return std::exp(-i * (lam * theta + t.mu * t2 + t.nu * t1)) * q.value;
}

inline FnValue sum_fn(const FnValue& a, const FnValue& b)
{
    FnValue r;
    r.value = a.value + b.value;
    r.abs_error = a.abs_error + b.abs_error;
    r.flags = (a.flags | b.flags) & flag_degraded;
    return r;
}

inline FnValue product_fn(const FnValue& a, const FnValue& b, cplx c = 1.0)
{
    if (a.pole() || b.pole())
        return FnValue::make_pole(std::max(a.pole_order, 0) + std::max(b.pole_order, 0));
    FnValue r;
    r.value = c * a.value * b.value;
    r.abs_error = std::abs(c) * (a.abs_error * std::abs(b.value) + b.abs_error * std::abs(a.value));
    r.flags = (a.flags | b.flags) & flag_degraded;
    return r;
}

} // namespace detail

// Q^j_{mu lam}(z1) Q^j_{lam nu}(z2) against (1/2) int dalpha e^{-lam a} e^{mu a2} Q^j_{mu nu}(z_a) e^{nu a1}
// over the real line. Requires Re(j - lam + 1) > 0 and Re(j + lam + 1) > 0.
inline IdentityCheck multiplication_formula_check(cplx j, cplx mu, cplx lam, cplx nu, double z1, double z2,
                                                  const QuadratureSpec& spec = {})
{
    detail::require_real_above_one(z1, z2);
    detail::require((j - lam + 1.0).real() > 0.0 && (j + lam + 1.0).real() > 0.0,
                    "multiplication formula: need Re(j - lam + 1) > 0 and Re(j + lam + 1) > 0");
    const IndexTriple t{j, mu, nu};
    FnValue lhs = detail::product_fn(q_second_kind({j, mu, lam}, {z1}), q_second_kind({j, lam, nu}, {z2}));
    FnValue rhs = integrate([&](double a) { return detail::hyperbolic_integrand(t, lam, z1, z2, a); },
                            Interval::full_line(), spec);
    rhs = detail::scaled(rhs, 0.5);
    return make_check(lhs, rhs);
}

// e^{mu a2} Q^j_{mu nu}(z_a) e^{nu a1} against
// (1/pi) int dtau e^{i tau a} Q^j_{mu, i tau}(z1) Q^j_{i tau, nu}(z2) over the real line.
// Requires Re(j + 1) > 0 so the imaginary lambda axis separates the poles.
inline IdentityCheck addition_contour_check(cplx j, cplx mu, cplx nu, double alpha, double z1, double z2,
                                            const QuadratureSpec& spec = {})
{
    detail::require_real_above_one(z1, z2);
    detail::require((j + 1.0).real() > 0.0, "addition contour: need Re(j + 1) > 0");
    const IndexTriple t{j, mu, nu};
    FnValue lhs;
    lhs.value = detail::hyperbolic_integrand(t, 0.0, z1, z2, alpha);
    const cplx i(0.0, 1.0);
    auto f = [&](double tau) {
        FnValue a = q_second_kind({j, mu, i * tau}, {z1});
        FnValue b = q_second_kind({j, i * tau, nu}, {z2});
        if (a.pole() || b.pole())
            throw DomainError("addition contour: pole on the integration contour");
        return std::exp(i * tau * alpha) * a.value * b.value;
    };
    FnValue rhs = detail::scaled(integrate(f, Interval::full_line(), spec), 1.0 / pi);
    return make_check(lhs, rhs);
}

enum class MixedVariant {
    q_first, // z1 > z2: e^{i pi(lam-nu)} Q^j_{mu lam}(z1) P^j_{lam nu}(z2)
    p_first, // z1 < z2: e^{i pi(mu-lam)} P^j_{mu lam}(z1) Q^j_{lam nu}(z2)
};

// Mixed P-Q product against the theta integral over [-pi, pi] plus the
// alpha half-line integral weighted by sin pi(lam - nu) or sin pi(mu - lam).
inline IdentityCheck mixed_pq_check(MixedVariant variant, cplx j, cplx mu, cplx lam, cplx nu, double z1, double z2,
                                    const QuadratureSpec& spec = {})
{
    detail::require_real_above_one(z1, z2);
    const IndexTriple t{j, mu, nu};
    FnValue lhs;
    cplx weight;
    double dir;
    if (variant == MixedVariant::q_first) {
        detail::require(z1 > z2, "mixed P-Q: this variant needs z1 > z2");
        detail::require((j - lam + 1.0).real() > 0.0, "mixed P-Q: need Re(j - lam + 1) > 0");
        lhs = detail::product_fn(q_second_kind({j, mu, lam}, {z1}), p_first_kind({j, lam, nu}, {z2}),
                                 exp_i_pi(lam - nu));
        weight = sin_pi(lam - nu) / pi;
        dir = -1.0;
    } else {
        detail::require(z1 < z2, "mixed P-Q: this variant needs z1 < z2");
        detail::require((j + lam + 1.0).real() > 0.0, "mixed P-Q: need Re(j + lam + 1) > 0");
        lhs = detail::product_fn(p_first_kind({j, mu, lam}, {z1}), q_second_kind({j, lam, nu}, {z2}),
                                 exp_i_pi(mu - lam));
        weight = sin_pi(mu - lam) / pi;
        dir = 1.0;
    }
    auto g = [&](double th) { return detail::trigonometric_integrand(t, lam, z1, z2, th); };
    QuadratureSpec gl = spec;
    gl.method = QuadMethod::gauss_legendre;
    FnValue rhs = detail::sum_fn(integrate(g, Interval::finite(-pi, 0.0), gl), integrate(g, Interval::finite(0.0, pi), gl));
    rhs = detail::scaled(rhs, 1.0 / (2.0 * pi));
    if (weight != 0.0) {
        auto f = [&](double s) { return detail::hyperbolic_integrand(t, lam, z1, z2, dir * s); };
        FnValue half = detail::scaled(integrate(f, Interval::semi_infinite(0.0), spec), weight);
        rhs = detail::sum_fn(rhs, half);
    }
    return make_check(lhs, rhs);
}

// Q^j_{mu nu}(z) for real z > 1 against
// (1/2) e^{i pi(mu-nu)} G(j-nu+1)/G(j-mu+1) int dalpha e^{-mu a}
//   (s + z cosh a + sinh a)^{-(j-nu+1)/2} (s + z cosh a - sinh a)^{-(j+nu+1)/2}, s = sqrt(z^2-1).
// Requires Re(j + mu + 1) > 0 and Re(j - mu + 1) > 0.
inline IdentityCheck q_integral_representation(const IndexTriple& t, double z, const QuadratureSpec& spec = {})
{
    detail::require(z > 1.0, "Q integral representation: z must be real and greater than 1");
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    detail::require((j + mu + 1.0).real() > 0.0 && (j - mu + 1.0).real() > 0.0,
                    "Q integral representation: need Re(j + mu + 1) > 0 and Re(j - mu + 1) > 0");
    FnValue g = gamma_ratio({j - nu + 1.0}, {j - mu + 1.0});
    if (g.pole())
        throw DomainError("Q integral representation: Gamma(j - nu + 1) has a pole");
    const double s = std::sqrt((z - 1.0) * (z + 1.0));
    auto f = [&](double a) {
        double ch = std::cosh(a), sh = std::sinh(a);
        double up = s + z * ch + sh, dn = s + z * ch - sh;
        return std::exp(-mu * a - (j - nu + 1.0) / 2.0 * std::log(up) - (j + nu + 1.0) / 2.0 * std::log(dn));
    };
    FnValue integral = integrate(f, Interval::full_line(), spec);
    FnValue rhs = detail::scaled(integral, 0.5 * exp_i_pi(mu - nu) * g.value);
    return make_check(q_second_kind(t, {z}), rhs);
}

// e^{-i mu th2} F^j_{mu nu}(z_th) e^{-i nu th1} against the lambda series truncated at |n| <= n_max:
// F = Q: z1 > z2: sum (-1)^n Q^j_{mu lam}(z1) P^j_{lam nu}(z2) e^{i lam th}, lam = nu + n;
//        z1 < z2: sum (-1)^n P^j_{mu lam}(z1) Q^j_{lam nu}(z2) e^{i lam th}, lam = mu + n;
// F = P: sum (-1)^n P^j_{mu lam}(z1) P^j_{lam nu}(z2) e^{i lam th}, lam = nu + n (z1 > z2) or mu + n.
inline IdentityCheck series_addition_check(FunctionKind kind, cplx j, cplx mu, cplx nu, double theta, double z1,
                                           double z2, int n_max)
{
    detail::require_real_above_one(z1, z2);
    detail::require(z1 != z2, "series addition: z1 and z2 must differ");
    if (n_max < 0)
        throw std::invalid_argument("series addition: n_max must be nonnegative");
    TriangleConfig c = solve_triangle(z1, z2, theta, TriangleKind::trigonometric);
    auto [t1, t2] = continuous_angles(c);
    const cplx i(0.0, 1.0);
    FnValue lhs = detail::scaled(evaluate(kind, {j, mu, nu}, {c.z_third}), std::exp(-i * (mu * t2 + nu * t1)));
    const bool first_larger = z1 > z2;
    FnValue rhs;
    double mag = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        cplx lam = (first_larger ? nu : mu) + static_cast<double>(n);
        FunctionKind k1 = FunctionKind::P, k2 = FunctionKind::P;
        if (kind == FunctionKind::Q)
            (first_larger ? k1 : k2) = FunctionKind::Q;
        double sg = (n % 2 == 0) ? 1.0 : -1.0;
        auto term_at = [&](cplx jj) {
            return detail::product_fn(evaluate(k1, {jj, mu, lam}, {z1}), evaluate(k2, {jj, lam, nu}, {z2}),
                                      sg * std::exp(i * lam * theta));
        };
        FnValue term = term_at(j);
        if (term.pole()) {
            // a pole of one factor against a zero of the other: both sides are
            // analytic in j, so take the symmetric limit in j
            const double delta = 1e-5;
            FnValue up = term_at(j + delta), dn = term_at(j - delta);
            if (!up.pole() && !dn.pole()) {
                term = detail::scaled(detail::sum_fn(up, dn), 0.5);
                term.abs_error += 1e-9 * std::abs(term.value);
            }
        }
        if (term.pole()) {
            rhs = term;
            break;
        }
        mag = std::max(mag, std::abs(term.value));
        rhs = detail::sum_fn(rhs, term);
    }
    return make_check(lhs, rhs, {mag});
}

} // namespace genleg
