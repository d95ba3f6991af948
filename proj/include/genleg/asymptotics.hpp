// Limit and large-parameter forms of P and Q, each returned together with the
// exact function so that callers can watch the pair converge.
#pragma once

#include "legendre.hpp"

namespace genleg {

struct LimitPair {
    FnValue scaled; // the function side, scaled as in the limit
    FnValue target; // the limiting form

    double relative_gap() const { return std::abs(scaled.value - target.value) / std::abs(target.value); }
    double absolute_gap() const { return std::abs(scaled.value - target.value); }
};

// j with j(j+1) = w, principal root.
inline cplx degree_from_casimir(cplx w) { return -0.5 + std::sqrt(0.25 + w); }

// t^{(nu-mu)/2} P^j_{mu nu}(cosh(y/sqrt t)) against J_{nu-mu}(y), where
// t = (nu+mu)^2/4 - j(j+1); d = nu - mu, s = nu + mu.
inline LimitPair limit_bessel(cplx d, cplx s, double y, double t)
{
    if (!(t > 0.0))
        throw DomainError("limit_bessel: t must be positive");
    cplx j = degree_from_casimir(s * s / 4.0 - t);
    cplx mu = (s - d) / 2.0, nu = (s + d) / 2.0;
    double z = std::cosh(y / std::sqrt(t));
    LimitPair out;
    out.scaled = detail::scaled(p_first_kind({j, mu, nu}, {z}), std::pow(cplx(t), d / 2.0));
    out.target = bessel_j(d, y);
    return out;
}

// t^{(nu-mu)/2} P^j_{mu nu}(1 + 2x/t) against
// x^{(nu-mu)/2} e^{ax/2} Phi((nu-mu+1)/2 + b/a; nu-mu+1; -ax)/Gamma(nu-mu+1),
// with nu + mu = a t and j(j+1) = (nu+mu)^2/4 - b t. For a -> 0 the target is
// b^{-(nu-mu)/2} J_{nu-mu}(2 sqrt(b x)).
inline LimitPair limit_kummer(cplx a, cplx b, cplx d, double x, double t)
{
    if (!(t > 0.0) || !(x >= 0.0))
        throw DomainError("limit_kummer: need t > 0 and x >= 0");
    cplx s = a * t;
    cplx j = degree_from_casimir(s * s / 4.0 - b * t);
    cplx mu = (s - d) / 2.0, nu = (s + d) / 2.0;
    LimitPair out;
    out.scaled = detail::scaled(p_first_kind({j, mu, nu}, {1.0 + 2.0 * x / t}), std::pow(cplx(t), d / 2.0));
    if (std::abs(a) < 1e-8) {
        FnValue jb = bessel_j(d, 2.0 * std::sqrt(b * x));
        out.target = detail::scaled(jb, std::pow(b, -d / 2.0));
        return out;
    }
    FnValue phi = kummer_phi_regularized((d + 1.0) / 2.0 + b / a, d + 1.0, -a * x);
    out.target = detail::scaled(phi, branch_power(x, d / 2.0) * std::exp(a * x / 2.0));
    return out;
}

namespace detail {

// Drops a negative zero imaginary part so that sqrt takes the upper root on the negative axis.
inline cplx positive_zero(cplx w) { return w.imag() == 0.0 ? cplx(w.real(), 0.0) : w; }

inline FnValue ratio(const FnValue& f, cplx asym)
{
    if (f.pole())
        return f;
    FnValue r;
    r.value = f.value / asym;
    r.abs_error = f.abs_error / std::abs(asym);
    r.flags = f.flags & flag_degraded;
    return r;
}

} // namespace detail

// Q^j_{mu nu}(cosh alpha) divided by e^{i pi(mu-nu)} j^{mu-nu-1/2} sqrt(pi/(2 sinh alpha)) e^{-alpha(j+1/2)}.
inline FnValue asym_q_large_j(const IndexTriple& t, double alpha)
{
    if (!(alpha > 0.0))
        throw DomainError("asym_q_large_j: alpha must be positive");
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    cplx asym = exp_i_pi(mu - nu) * std::exp((mu - nu - 0.5) * std::log(j) - alpha * (j + 0.5))
                * std::sqrt(pi / (2.0 * std::sinh(alpha)));
    return detail::ratio(q_second_kind(t, {std::cosh(alpha)}), asym);
}

// P^j_{mu nu}(cosh alpha) divided by [2 tanh(alpha/4)]^{nu-mu} / (Gamma(nu-mu+1) sqrt(cosh(alpha/2))).
inline FnValue asym_p_large_numu(const IndexTriple& t, double alpha)
{
    if (!(alpha > 0.0))
        throw DomainError("asym_p_large_numu: alpha must be positive");
    cplx d = t.nu - t.mu;
    cplx asym = std::exp(d * std::log(2.0 * std::tanh(alpha / 4.0)) - log_gamma(d + 1.0))
                / std::sqrt(std::cosh(alpha / 2.0));
    return detail::ratio(p_first_kind(t, {std::cosh(alpha)}), asym);
}

enum class QBranch { j, minus_j_minus_1 };

// Q^j (or Q^{-j-1}) at cosh alpha divided by its large-j form at fixed nu and j - mu.
inline FnValue asym_q_fixed_jmu(const IndexTriple& t, double alpha, QBranch branch)
{
    if (!(alpha > 0.0))
        throw DomainError("asym_q_fixed_jmu: alpha must be positive");
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    const double th = std::tanh(alpha / 2.0), t1 = std::tanh(alpha), c2 = 2.0 * std::cosh(alpha);
    cplx ph = exp_i_pi(mu - nu);
    if (branch == QBranch::j) {
        FnValue g = gamma_ratio({j + mu + 1.0}, {j + nu + 1.0});
        if (g.pole())
            return g;
        cplx asym = ph * g.value * std::sqrt(2.0 * pi / detail::positive_zero(j + mu + 1.0))
                    * std::exp(nu * std::log(th) - mu * std::log(t1) - (j + 1.0) * std::log(c2));
        return detail::ratio(q_second_kind(t, {std::cosh(alpha)}), asym);
    }
    FnValue q = q_second_kind({-j - 1.0, mu, nu}, {std::cosh(alpha)});
    FnValue g = gamma_ratio({-j + mu}, {-j + nu});
    if (g.pole() || q.pole())
        return FnValue::make_pole();
    cplx asym = ph * g.value * std::sqrt(2.0 * pi / detail::positive_zero(-j - mu))
                * std::exp(-nu * std::log(th) + mu * std::log(t1) + j * std::log(c2));
    return detail::ratio(q, asym);
}

} // namespace genleg
