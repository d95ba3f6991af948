// Integral identities: the product integral of two solutions with different
// j, the P-Q integral over [1, inf), norms of the orthogonal P-tilde systems,
// and the generating series for 1/(zeta - z).
#pragma once

#include "legendre.hpp"
#include "quadrature.hpp"
#include "recurrence.hpp"

namespace genleg {

// Both sides of an identity and their difference.
struct IdentityCheck {
    FnValue lhs;
    FnValue rhs;
    Residual residual;
};

inline IdentityCheck make_check(const FnValue& lhs, const FnValue& rhs, std::initializer_list<double> terms = {})
{
    IdentityCheck c{lhs, rhs, detail::residual_from(lhs, rhs, terms)};
    return c;
}

namespace detail {

inline void require(bool ok, const char* what)
{
    if (!ok)
        throw PreconditionError(what);
}

inline FnValue value_or_throw(const FnValue& f, const char* what)
{
    if (f.pole())
        throw DomainError(what);
    return f;
}

} // namespace detail

// Integral over [a, b] (1 < a < b) of f1 f2, with f1, f2 solutions of kinds k1, k2
// at degrees j1, j2 and common (mu, nu), against the boundary term
// -(1 - z^2)(f2 f1' - f2' f1)/((j1 - j2)(j1 + j2 + 1)) evaluated from a to b.
inline IdentityCheck product_integral_identity(cplx j1, cplx j2, cplx mu, cplx nu, FunctionKind k1, FunctionKind k2,
                                               double a, double b, const QuadratureSpec& spec = {})
{
    detail::require(a > 1.0 && b > a, "product integral: need 1 < a < b");
    cplx denom = (j1 - j2) * (j1 + j2 + 1.0);
    if (std::abs(denom) < pole_tolerance)
        throw DegenerateError("product integral: j1(j1+1) = j2(j2+1)");
    auto f1 = [&](double z) { return detail::value_or_throw(evaluate(k1, {j1, mu, nu}, {z}), "product integral: pole").value; };
    auto f2 = [&](double z) { return detail::value_or_throw(evaluate(k2, {j2, mu, nu}, {z}), "product integral: pole").value; };
    FnValue lhs = integrate([&](double z) { return f1(z) * f2(z); }, Interval::finite(a, b), spec);
    auto boundary = [&](double z) {
        double h = 0.02 * (z - 1.0);
        auto g1 = [&](cplx w) { return f1(w.real()); };
        auto g2 = [&](cplx w) { return f2(w.real()); };
        cplx d1 = fd_derivative(g1, z, 1, h, 2), d2 = fd_derivative(g2, z, 1, h, 2);
        return -(1.0 - z * z) * (f2(z) * d1 - d2 * f1(z)) / denom;
    };
    cplx ba = boundary(a), bb = boundary(b);
    FnValue rhs;
    rhs.value = bb - ba;
    rhs.abs_error = 1e-10 * (std::abs(ba) + std::abs(bb));
    return make_check(lhs, rhs, {std::abs(ba), std::abs(bb)});
}

// Integral over [1, inf) of P^j_{mu nu} Q^l_{nu mu} against e^{i pi(nu-mu)}/((l-j)(l+j+1)).
inline IdentityCheck pq_integral(cplx j, cplx l, cplx mu, cplx nu, const QuadratureSpec& spec = {})
{
    detail::require(l.real() > j.real() && j.real() >= -0.5, "pq integral: need Re l > Re j >= -1/2");
    detail::require((nu - mu + 1.0).real() > 0.0, "pq integral: need Re(nu - mu + 1) > 0");
    // the integrand is singular at z = 1; when the offset is measured from 1 it is passed on exactly
    auto f = [&](double z, double d) {
        Argument arg{z, Side::off_axis, d > 0.0 && 1.0 + d == z ? std::optional<cplx>(d) : std::nullopt};
        FnValue p = p_first_kind({j, mu, nu}, arg);
        FnValue q = detail::value_or_throw(q_second_kind({l, nu, mu}, arg), "pq integral: Q has a pole");
        return p.value * q.value;
    };
    FnValue lhs = integrate(f, Interval::semi_infinite(1.0), spec);
    FnValue rhs;
    rhs.value = exp_i_pi(nu - mu) / ((l - j) * (l + j + 1.0));
    return make_check(lhs, rhs);
}

// Orthogonal systems of P-tilde on [-1, 1]: Re(nu-mu+1) > 0, Re(nu+mu+1) > 0 and
// j - nu a nonnegative integer, or the same with (mu, nu) -> (-nu, -mu).
inline bool in_orthogonal_system(cplx j, cplx mu, cplx nu)
{
    auto direct = [&](cplx m, cplx n) {
        return (n - m + 1.0).real() > 0.0 && (n + m + 1.0).real() > 0.0 && near_nonpositive_integer(n - j);
    };
    return direct(mu, nu) || direct(-nu, -mu);
}

inline FnValue p_tilde_product_integral(cplx j1, cplx j2, cplx mu, cplx nu, const QuadratureSpec& spec)
{
    auto f = [&](double x) -> cplx {
        // nodes whose (1-x)/2 rounds to 1 sit on the endpoint and carry no weight
        if ((1.0 - x) / 2.0 == 1.0 || (1.0 - x) / 2.0 == 0.0)
            return 0.0;
        return p_tilde({j1, mu, nu}, x).value * p_tilde({j2, mu, nu}, x).value;
    };
    QuadratureSpec s = spec;
    s.method = QuadMethod::tanh_sinh;
    return integrate(f, Interval::finite(-1.0, 1.0), s);
}

// Integral of [P-tilde^j_{mu nu}]^2 over [-1, 1] against
// (2/(2j+1)) G(j+mu+1)G(j-nu+1)/(G(j-mu+1)G(j+nu+1)).
inline IdentityCheck norm_integral(cplx j, cplx mu, cplx nu, const QuadratureSpec& spec = {})
{
    detail::require(in_orthogonal_system(j, mu, nu), "norm integral: indices outside the orthogonal systems");
    FnValue lhs = p_tilde_product_integral(j, j, mu, nu, spec);
    FnValue g = gamma_ratio({j + mu + 1.0, j - nu + 1.0}, {j - mu + 1.0, j + nu + 1.0});
    FnValue rhs = detail::scaled(g, 2.0 / (2.0 * j + 1.0));
    return make_check(lhs, rhs);
}

// Integral of P-tilde^{j1} P-tilde^{j2} over [-1, 1] for j1 != j2 in one system; zero expected.
inline FnValue cross_orthogonality(cplx j1, cplx j2, cplx mu, cplx nu, const QuadratureSpec& spec = {})
{
    detail::require(in_orthogonal_system(j1, mu, nu) && in_orthogonal_system(j2, mu, nu),
                    "cross orthogonality: indices outside the orthogonal systems");
    return p_tilde_product_integral(j1, j2, mu, nu, spec);
}

// e^{i pi(mu-nu)} ((z-1)/(zeta-1))^{-(nu-mu)/2} ((z+1)/(zeta+1))^{-(nu+mu)/2}
//   * sum_{k<N} (2j+1) P^j_{mu nu}(z) Q^j_{nu mu}(zeta), j = nu + k; tends to 1/(zeta - z).
inline FnValue generating_series_partial_sum(cplx mu, cplx nu, cplx z, cplx zeta, int n_terms)
{
    if (n_terms < 1)
        throw std::invalid_argument("generating series: need at least one term");
    FnValue sum;
    double mag = 0.0;
    for (int k = 0; k < n_terms; ++k) {
        cplx j = nu + static_cast<double>(k);
        FnValue p = p_first_kind({j, mu, nu}, {z});
        FnValue q = q_second_kind({j, nu, mu}, {zeta});
        if (q.pole())
            return FnValue::make_pole(q.pole_order);
        cplx t = (2.0 * j + 1.0) * p.value * q.value;
        sum.value += t;
        mag += std::abs(t);
        sum.abs_error += std::abs(2.0 * j + 1.0) * (p.abs_error * std::abs(q.value) + q.abs_error * std::abs(p.value));
        sum.flags |= (p.flags | q.flags) & flag_degraded;
    }
    cplx pref = exp_i_pi(mu - nu) * branch_power((z - 1.0) / (zeta - 1.0), -(nu - mu) / 2.0)
                * branch_power((z + 1.0) / (zeta + 1.0), -(nu + mu) / 2.0);
    sum.value *= pref;
    sum.abs_error = (sum.abs_error + mag * 4.0 * eps * n_terms) * std::abs(pref);
    return sum;
}

} // namespace genleg
