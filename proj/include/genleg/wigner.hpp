// Wigner d-functions d^j_{mu nu}(x) as normalized P-tilde, their symmetries,
// orthogonality, and an independent rotation-matrix evaluation.
#pragma once

#include "legendre.hpp"
#include "quadrature.hpp"

#include <vector>

namespace genleg {

// Half-integer indices stored doubled: j2 = 2j, mu2 = 2mu, nu2 = 2nu.
struct SpinIndex {
    int j2 = 0, mu2 = 0, nu2 = 0;

    double j() const { return j2 / 2.0; }
    double mu() const { return mu2 / 2.0; }
    double nu() const { return nu2 / 2.0; }
    IndexTriple triple() const { return {j(), mu(), nu()}; }
};

// Indices all integers or all half-integers, and |mu|, |nu| < |j + 1/2|.
// Negative j is accepted only when allow_negative_j is set (j -> -j-1 images).
inline void check_spin(const SpinIndex& s, bool allow_negative_j = false)
{
    auto odd = [](int v) { return (v % 2 + 2) % 2; };
    if (odd(s.j2) != odd(s.mu2) || odd(s.j2) != odd(s.nu2))
        throw DomainError("spin index: j, mu, nu must be all integers or all half-integers");
    if (s.j2 < 0 && !allow_negative_j)
        throw DomainError("spin index: j must be nonnegative");
    int bound = std::abs(s.j2 + 1);
    if (std::abs(s.mu2) >= bound || std::abs(s.nu2) >= bound)
        throw DomainError("spin index: need |mu|, |nu| < |j + 1/2|");
}

// (-1)^{k/2} for even k.
inline int sign_of_half(int k2)
{
    if (k2 % 2 != 0)
        throw std::logic_error("sign_of_half: odd argument");
    return ((k2 / 2) % 2 == 0) ? 1 : -1;
}

namespace detail {

inline FnValue wigner_d_any(const SpinIndex& s, double x)
{
    check_spin(s, true);
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("wigner_d: x outside [-1, 1]");
    const int j2 = s.j2 >= 0 ? s.j2 : -s.j2 - 2;
    FnValue out;
    if (x == 1.0) {
        out.value = s.mu2 == s.nu2 ? 1.0 : 0.0;
    } else if (x == -1.0) {
        out.value = s.mu2 == -s.nu2 ? sign_of_half(j2 - s.nu2) : 0;
    } else {
        const double j = s.j(), mu = s.mu(), nu = s.nu();
        FnValue norm = gamma_ratio({cplx(j - mu + 1.0), cplx(j + nu + 1.0)}, {cplx(j + mu + 1.0), cplx(j - nu + 1.0)});
        FnValue pt = p_tilde(s.triple(), x);
        if (norm.pole() || pt.pole())
            throw DomainError("wigner_d: normalization is singular");
        double r = std::sqrt(std::abs(norm.value.real()));
        out.value = pt.value * r;
        out.abs_error = pt.abs_error * r + std::abs(out.value) * 4.0 * eps;
        out.flags = pt.flags & flag_degraded;
        if (std::abs(out.value.imag()) > 1e-12 * std::max(1.0, std::abs(out.value)))
            out.flags |= flag_degraded;
        out.value = out.value.real();
    }
    if (out.value == 0.0)
        out.flags |= flag_zero;
    return out;
}

} // namespace detail

// d^j_{mu nu}(x) = P-tilde^j_{mu nu}(x) sqrt(G(j-mu+1)G(j+nu+1)/(G(j+mu+1)G(j-nu+1))), real.
inline FnValue wigner_d(const SpinIndex& s, double x)
{
    check_spin(s);
    return detail::wigner_d_any(s, x);
}

// The five equalities chaining the six equal forms of d^j_{mu nu}(x).
enum class DSymmetry {
    reflect_j,    // d^{-j-1}_{mu nu}(x)
    negate_swap,  // d^j_{-nu,-mu}(x)
    transpose,    // (-1)^{mu-nu} d^j_{nu mu}(x)
    reflect_x_mu, // (-1)^{j-nu} d^j_{-mu,nu}(-x)
    reflect_x_nu, // (-1)^{j+mu} d^j_{mu,-nu}(-x)
};

inline const char* to_string(DSymmetry r)
{
    switch (r) {
    case DSymmetry::reflect_j: return "reflect-j";
    case DSymmetry::negate_swap: return "negate-swap";
    case DSymmetry::transpose: return "transpose";
    case DSymmetry::reflect_x_mu: return "reflect-x-mu";
    case DSymmetry::reflect_x_nu: return "reflect-x-nu";
    }
    return "?";
}

// d^j_{mu nu}(x) minus the selected equivalent form.
inline Residual d_symmetry_residual(DSymmetry rule, const SpinIndex& s, double x)
{
    check_spin(s);
    FnValue lhs = wigner_d(s, x);
    FnValue rhs;
    double sign = 1.0;
    switch (rule) {
    case DSymmetry::reflect_j:
        rhs = detail::wigner_d_any({-s.j2 - 2, s.mu2, s.nu2}, x);
        break;
    case DSymmetry::negate_swap:
        rhs = wigner_d({s.j2, -s.nu2, -s.mu2}, x);
        break;
    case DSymmetry::transpose:
        sign = sign_of_half(s.mu2 - s.nu2);
        rhs = wigner_d({s.j2, s.nu2, s.mu2}, x);
        break;
    case DSymmetry::reflect_x_mu:
        sign = sign_of_half(s.j2 - s.nu2);
        rhs = wigner_d({s.j2, -s.mu2, s.nu2}, -x);
        break;
    case DSymmetry::reflect_x_nu:
        sign = sign_of_half(s.j2 + s.mu2);
        rhs = wigner_d({s.j2, s.mu2, -s.nu2}, -x);
        break;
    }
    Residual r = make_residual(lhs.value, sign * rhs.value);
    r.abs_error = lhs.abs_error + rhs.abs_error;
    r.flags = (lhs.flags | rhs.flags) & flag_degraded;
    return r;
}

// Gauss-Legendre integral of d^{j1}_{mu nu} d^{j2}_{mu nu} over [-1, 1]; the
// integrand is a polynomial, so order >= j1 + j2 + 1 is exact.
inline FnValue d_orthogonality(const SpinIndex& s1, const SpinIndex& s2, int order = 32)
{
    check_spin(s1);
    check_spin(s2);
    if (s1.mu2 != s2.mu2 || s1.nu2 != s2.nu2)
        throw DomainError("d_orthogonality: indices must share mu and nu");
    const GaussRule& rule = gauss_legendre_rule(order);
    FnValue out;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        FnValue a = wigner_d(s1, rule.x[i]), b = wigner_d(s2, rule.x[i]);
        out.value += rule.w[i] * a.value * b.value;
        out.abs_error += rule.w[i] * (a.abs_error * std::abs(b.value) + b.abs_error * std::abs(a.value));
        out.flags |= (a.flags | b.flags) & flag_degraded;
    }
    return out;
}

// Matrix of exp(-i theta J_y) in the basis m = j, j-1, ..., -j (row-major,
// entry (a, b) = <j, j-a| exp(-i theta J_y) |j, j-b>), by scaling and squaring
// of the real generator -theta (J+ - J-)/2.
inline std::vector<double> rotation_matrix_y(int j2, double theta)
{
    if (j2 < 0)
        throw DomainError("rotation_matrix_y: j must be nonnegative");
    const int n = j2 + 1;
    const double j = j2 / 2.0;
    std::vector<double> g(n * n, 0.0);
    for (int b = 1; b < n; ++b) {
        double m = j - b; // J+ |m> = c |m+1>, row b-1
        double c = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        g[(b - 1) * n + b] += -theta * c / 2.0; // from J+
        g[b * n + (b - 1)] += theta * c / 2.0;  // from -J-
    }
    double norm = 0.0;
    for (double v : g)
        norm = std::max(norm, std::abs(v));
    norm *= n;
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (double& v : g)
        v *= scale;
    auto mul = [n](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> c(n * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                double aik = a[i * n + k];
                if (aik == 0.0)
                    continue;
                for (int l = 0; l < n; ++l)
                    c[i * n + l] += aik * b[k * n + l];
            }
        return c;
    };
    std::vector<double> result(n * n, 0.0), term(n * n, 0.0);
    for (int i = 0; i < n; ++i)
        result[i * n + i] = term[i * n + i] = 1.0;
    for (int k = 1; k <= 30; ++k) {
        term = mul(term, g);
        for (double& v : term)
            v /= k;
        for (int i = 0; i < n * n; ++i)
            result[i] += term[i];
    }
    for (int s = 0; s < squarings; ++s)
        result = mul(result, result);
    return result;
}

// d^j_{mu nu}(cos theta) read from rotation_matrix_y.
inline double wigner_d_rotation(const SpinIndex& s, double theta)
{
    check_spin(s);
    std::vector<double> m = rotation_matrix_y(s.j2, theta);
    int n = s.j2 + 1;
    int a = (s.j2 - s.mu2) / 2, b = (s.j2 - s.nu2) / 2;
    return m[a * n + b];
}

} // namespace genleg
