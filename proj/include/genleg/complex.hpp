// Complex scalar helpers: gamma family, trigonometric functions of pi*z,
// branch-aware powers and the FnValue result type shared by every module.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genleg {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double eps = std::numeric_limits<double>::epsilon();

// Tolerance used to decide that an argument sits on a pole of Gamma.
inline constexpr double pole_tolerance = 1e-10;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class DomainError : public Error {
public:
    using Error::Error;
};
class BranchAmbiguityError : public DomainError {
public:
    using DomainError::DomainError;
};
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};
class DegenerateError : public DomainError {
public:
    using DomainError::DomainError;
};
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Which side of a branch cut a real argument is approached from.
enum class Side { off_axis, above, below };

inline Side flip(Side s)
{
    switch (s) {
    case Side::above: return Side::below;
    case Side::below: return Side::above;
    default: return Side::off_axis;
    }
}

inline const char* to_string(Side s)
{
    switch (s) {
    case Side::above: return "above";
    case Side::below: return "below";
    default: return "off-axis";
    }
}

enum Flag : unsigned {
    flag_none = 0,
    flag_pole = 1u << 0,
    flag_zero = 1u << 1,
    flag_degraded = 1u << 2,
};

struct FnValue {
    cplx value{};
    double abs_error = 0.0;
    unsigned flags = flag_none;
    int pole_order = 0;

    bool pole() const { return (flags & flag_pole) != 0; }
    bool zero() const { return (flags & flag_zero) != 0; }
    bool degraded() const { return (flags & flag_degraded) != 0; }

    static FnValue make_pole(int order = 1)
    {
        FnValue r;
        r.value = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
        r.abs_error = std::numeric_limits<double>::infinity();
        r.flags = flag_pole;
        r.pole_order = order;
        return r;
    }
    static FnValue make_zero()
    {
        FnValue r;
        r.flags = flag_zero;
        return r;
    }
};

inline std::string flags_to_string(unsigned flags)
{
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty())
            s += '|';
        s += name;
    };
    if (flags & flag_pole)
        add("pole");
    if (flags & flag_zero)
        add("zero");
    if (flags & flag_degraded)
        add("degraded");
    return s;
}

// Result of checking an identity: lhs - rhs together with the magnitude of the
// largest term that entered it.
struct Residual {
    cplx value{};
    double scale = 0.0;
    double abs_error = 0.0;
    unsigned flags = flag_none;

    double relative() const
    {
        if (scale == 0.0)
            return std::abs(value);
        return std::abs(value) / scale;
    }
};

inline Residual make_residual(cplx lhs, cplx rhs, std::initializer_list<double> terms = {})
{
    Residual r;
    r.value = lhs - rhs;
    r.scale = std::max(std::abs(lhs), std::abs(rhs));
    for (double t : terms)
        r.scale = std::max(r.scale, t);
    return r;
}

inline bool is_real(cplx z) { return z.imag() == 0.0; }

// Nonpositive integer test with the pole tolerance; returns the integer in n.
inline bool near_nonpositive_integer(cplx z, long& n, double tol = pole_tolerance)
{
    double r = std::round(z.real());
    if (r > 0.0 || std::abs(z.imag()) > tol || std::abs(z.real() - r) > tol * std::max(1.0, std::abs(r)))
        return false;
    n = static_cast<long>(-r);
    return true;
}

inline bool near_nonpositive_integer(cplx z, double tol = pole_tolerance)
{
    long n;
    return near_nonpositive_integer(z, n, tol);
}

inline bool near_integer(cplx z, double tol = pole_tolerance)
{
    double r = std::round(z.real());
    return std::abs(z.imag()) <= tol && std::abs(z.real() - r) <= tol * std::max(1.0, std::abs(r));
}

namespace detail {

inline double sinpi_real(double x)
{
    double n = std::round(x);
    double f = x - n;
    double s = std::sin(pi * f);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

inline double cospi_real(double x)
{
    double n = std::round(x);
    double f = x - n;
    double c = std::abs(f) == 0.5 ? 0.0 : std::cos(pi * f);
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

} // namespace detail

// sin(pi z) with exact zeros at the integers.
inline cplx sin_pi(cplx z)
{
    double x = z.real(), y = z.imag();
    if (y == 0.0)
        return {detail::sinpi_real(x), 0.0};
    return {detail::sinpi_real(x) * std::cosh(pi * y), detail::cospi_real(x) * std::sinh(pi * y)};
}

inline cplx cos_pi(cplx z)
{
    double x = z.real(), y = z.imag();
    if (y == 0.0)
        return {detail::cospi_real(x), 0.0};
    return {detail::cospi_real(x) * std::cosh(pi * y), -detail::sinpi_real(x) * std::sinh(pi * y)};
}

// exp(i pi w), exact for real integer and half-integer w.
inline cplx exp_i_pi(cplx w)
{
    double m = std::exp(-pi * w.imag());
    return {m * detail::cospi_real(w.real()), m * detail::sinpi_real(w.real())};
}

namespace detail {

inline cplx lanczos_log_gamma(cplx z)
{
    // g = 7, n = 9
    static constexpr double c[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    cplx zm = z - 1.0;
    cplx a = c[0];
    for (int k = 1; k < 9; ++k)
        a += c[k] / (zm + double(k));
    cplx t = zm + 7.5;
    return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(a);
}

// Stirling series, used for large |z| in the right half-plane.
inline cplx stirling_log_gamma(cplx z)
{
    static constexpr double b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
                                   -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
    cplx zi = 1.0 / z, zi2 = zi * zi;
    cplx s = 0.0, p = zi;
    for (double bk : b) {
        s += bk * p;
        p *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + s;
}

inline cplx log_gamma_right(cplx z)
{
    if (std::abs(z) > 30.0)
        return stirling_log_gamma(z);
    return lanczos_log_gamma(z);
}

} // namespace detail

// Principal branch of log Gamma(z); throws at the poles.
inline cplx log_gamma(cplx z)
{
    long n;
    if (near_nonpositive_integer(z, n, 0.0))
        throw DomainError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5)
        return detail::log_gamma_right(z);
    double shift = std::ceil(0.5 - z.real());
    if (shift <= 64.0) {
        // log Gamma(z) = log Gamma(z + m) - sum log(z + k) keeps the principal branch
        int m = static_cast<int>(shift);
        cplx s = 0.0;
        for (int k = 0; k < m; ++k)
            s += std::log(z + double(k));
        return detail::log_gamma_right(z + double(m)) - s;
    }
    // Far left: reflection. Imaginary part is only defined modulo 2 pi here.
    return std::log(pi) - std::log(sin_pi(z)) - detail::log_gamma_right(1.0 - z);
}

inline cplx gamma(cplx z)
{
    long n;
    if (near_nonpositive_integer(z, n, 0.0))
        throw DomainError("gamma: pole at nonpositive integer");
    if (is_real(z) && z.real() > 0.0 && z.real() <= 171.0)
        return std::tgamma(z.real());
    return std::exp(log_gamma(z));
}

// 1/Gamma(z), entire, exactly 0 at the nonpositive integers.
inline cplx reciprocal_gamma(cplx z)
{
    long n;
    if (near_nonpositive_integer(z, n, 0.0))
        return 0.0;
    if (z.real() >= 0.5) {
        if (is_real(z) && z.real() <= 171.0)
            return 1.0 / std::tgamma(z.real());
        return std::exp(-log_gamma(z));
    }
    // 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi, accurate next to the poles
    cplx s = sin_pi(z);
    cplx lg = detail::log_gamma_right(1.0 - z);
    if (lg.real() > 600.0)
        return std::exp(std::log(s) + lg - std::log(pi));
    return s * std::exp(lg) / pi;
}

// Product of Gamma(num[i]) over product of Gamma(den[i]) as a limit: poles in
// the numerator are paired with poles in the denominator through their residues.
inline FnValue gamma_ratio(std::span<const cplx> num, std::span<const cplx> den)
{
    int order = 0;
    cplx log_sum = 0.0;
    double sign = 1.0;
    double err = 0.0;
    auto add = [&](cplx z, double dir) {
        long n;
        if (near_nonpositive_integer(z, n)) {
            // Gamma(-n + e) ~ (-1)^n / (n! e)
            order += dir > 0 ? 1 : -1;
            if (n % 2 != 0)
                sign = -sign;
            log_sum -= dir * std::lgamma(double(n) + 1.0);
        } else {
            cplx lg = log_gamma(z);
            log_sum += dir * lg;
            err += (std::abs(lg) + 1.0) * 4.0 * eps;
        }
    };
    for (cplx z : num)
        add(z, 1.0);
    for (cplx z : den)
        add(z, -1.0);
    if (order > 0)
        return FnValue::make_pole(order);
    if (order < 0)
        return FnValue::make_zero();
    FnValue r;
    r.value = sign * std::exp(log_sum);
    r.abs_error = std::abs(r.value) * (err + 4.0 * eps);
    return r;
}

inline FnValue gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den)
{
    return gamma_ratio(std::span<const cplx>(num.begin(), num.size()),
                       std::span<const cplx>(den.begin(), den.size()));
}

// log w on the principal branch; on the negative real axis the side selects +i pi or -i pi.
inline cplx branch_log(cplx w, Side side = Side::off_axis)
{
    if (w == cplx(0.0))
        throw DomainError("branch_log: zero argument");
    if (w.imag() == 0.0 && w.real() < 0.0) {
        double l = std::log(-w.real());
        if (side == Side::above)
            return {l, pi};
        if (side == Side::below)
            return {l, -pi};
        throw BranchAmbiguityError("argument on the negative real axis needs a side");
    }
    return std::log(w);
}

// w^p = exp(p log w) with the branch of branch_log.
inline cplx branch_power(cplx w, cplx p, Side side = Side::off_axis)
{
    if (w == cplx(0.0)) {
        if (p.real() > 0.0)
            return 0.0;
        if (p == cplx(0.0))
            return 1.0;
        throw DomainError("branch_power: zero base with non-positive exponent");
    }
    if (p == cplx(0.0))
        return 1.0;
    return std::exp(p * branch_log(w, side));
}

} // namespace genleg
