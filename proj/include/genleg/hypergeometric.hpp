// Gauss hypergeometric function (plain and regularized), Kummer's regularized
// confluent function and the Bessel function J.
#pragma once

#include "complex.hpp"

#include <array>
#include <vector>

namespace genleg {

struct Hyp2F1Params {
    cplx a, b, c, x;
};

enum class Hyp2F1Method {
    automatic,
    maclaurin,    // power series in x
    pfaff,        // power series in x/(x-1)
    continuation, // Taylor stepping of the differential equation from |x| = 0.7
    one_minus_x,  // connection to 1 - x, requires c - a - b away from the integers
    inverse_x,    // connection to 1/x, requires a - b away from the integers
};

namespace detail {

struct SeriesSum {
    cplx value{};
    double abs_error = 0.0;
    bool converged = false;
};

inline bool exact_nonpositive_integer(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Power series sum_n (a)_n (b)_n x^n / n! * g_n with g_n = 1/Gamma(c+n)
// (regularized) or 1/(c)_n.
inline SeriesSum maclaurin(cplx a, cplx b, cplx c, cplx x, bool regularized, int max_terms = 20000)
{
    SeriesSum out;
    // For n <= n_direct, 1/Gamma(c+n) is evaluated directly so that nonpositive
    // integer c and its neighbourhood need no special casing.
    int n_direct = 0;
    if (regularized && c.real() < 0.5)
        n_direct = static_cast<int>(std::ceil(0.5 - c.real())) + 1;
    if (!regularized) {
        long m;
        if (near_nonpositive_integer(c, m, 0.0))
            throw DomainError("hypergeometric series: c is a nonpositive integer");
    }
    cplx u = 1.0; // (a)_n (b)_n x^n / n!
    cplx term = regularized ? reciprocal_gamma(c) : cplx(1.0);
    cplx sum = 0.0;
    double sum_abs = 0.0, max_abs = 0.0;
    int small_run = 0;
    for (int n = 0; n < max_terms; ++n) {
        sum += term;
        double at = std::abs(term);
        sum_abs += at;
        max_abs = std::max(max_abs, at);
        cplx an = a + double(n), bn = b + double(n);
        if (an == 0.0 || bn == 0.0) {
            out.converged = true;
            break;
        }
        cplx ratio = an * bn * x / double(n + 1);
        if (n >= n_direct) {
            double growth = std::abs(ratio / (c + double(n)));
            bool tiny = at <= 0.05 * eps * std::abs(sum) || at <= 1e-30 * max_abs;
            if (growth < 1.0 && tiny) {
                if (++small_run >= 2) {
                    out.converged = true;
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        u *= ratio;
        if (regularized && n + 1 <= n_direct)
            term = u * reciprocal_gamma(c + double(n + 1));
        else
            term = term * ratio / (c + double(n));
    }
    out.value = sum;
    out.abs_error = sum_abs * 8.0 * eps;
    return out;
}

// Transfer matrix of one Taylor step of the hypergeometric equation
// x(1-x)w'' + [c-(a+b+1)x]w' - ab w = 0 from x0 to x0 + h, acting on (w, w').
// mag holds the sums of term magnitudes, for the rounding estimate.
struct StepMatrix {
    cplx t[2][2];
    double mag[2][2];
};

inline StepMatrix ode_step(cplx a, cplx b, cplx c, cplx x0, cplx h)
{
    const cplx p0 = x0 * (1.0 - x0);
    const cplx p1 = 1.0 - 2.0 * x0;
    const cplx q0 = c - (a + b + 1.0) * x0;
    const cplx q1 = -(a + b + 1.0);
    const cplx r = -a * b;
    const double ah = std::abs(h);
    StepMatrix m{};
    for (int col = 0; col < 2; ++col) {
        // d_n = c_n h^n
        cplx d0 = col == 0 ? 1.0 : 0.0, d1 = col == 0 ? 0.0 : h;
        cplx y = d0 + d1, dy = d1;
        double mag_y = std::abs(d0) + std::abs(d1), mag_dy = std::abs(d1);
        int small_run = 0;
        for (int n = 0; n < 5000; ++n) {
            double nn = n;
            cplx d2 = -((p1 * nn * (nn + 1.0) + q0 * (nn + 1.0)) * h * d1
                        + (-nn * (nn - 1.0) + q1 * nn + r) * h * h * d0)
                      / (p0 * (nn + 2.0) * (nn + 1.0));
            y += d2;
            dy += (nn + 2.0) * d2;
            double ad = std::abs(d2);
            mag_y += ad;
            mag_dy += (nn + 2.0) * ad;
            double scale = std::abs(y) + std::abs(dy) / (nn + 3.0);
            if (n > 3 && ad * (nn + 3.0) <= 0.05 * eps * scale) {
                if (++small_run >= 3)
                    break;
            } else {
                small_run = 0;
            }
            d0 = d1;
            d1 = d2;
            if (n == 4999)
                throw ConvergenceError("hypergeometric continuation: Taylor step did not converge");
        }
        m.t[0][col] = y;
        m.t[1][col] = dy / h;
        m.mag[0][col] = mag_y;
        m.mag[1][col] = mag_dy / ah;
    }
    return m;
}

inline SeriesSum continuation(cplx a, cplx b, cplx c, cplx x, Side side, bool regularized)
{
    double s;
    if (x.imag() > 0.0)
        s = 1.0;
    else if (x.imag() < 0.0)
        s = -1.0;
    else if (x.real() < 1.0)
        s = 0.0;
    else if (side == Side::above)
        s = 1.0;
    else if (side == Side::below)
        s = -1.0;
    else
        throw BranchAmbiguityError("hypergeometric argument on the cut [1, inf) needs a side");

    cplx xb = s == 0.0 ? cplx(x.real() < 0.0 ? -0.5 : 0.5, 0.0) : cplx(0.5, 0.5 * s);
    SeriesSum f0 = maclaurin(a, b, c, xb, regularized);
    SeriesSum f1 = maclaurin(a + 1.0, b + 1.0, c + 1.0, xb, regularized);
    cplx w = f0.value;
    cplx dw = a * b * f1.value;
    if (!regularized)
        dw /= c;
    // error of (w, w') at the start point
    double err0[2] = {f0.abs_error, std::abs(a * b) * f1.abs_error / (regularized ? 1.0 : std::abs(c))};

    std::vector<cplx> waypoints;
    if (s != 0.0 && x.real() > 1.0) {
        double lift = std::max(std::abs(x.imag()), 0.5 * x.real());
        waypoints.push_back(cplx(x.real(), s * lift));
    }
    waypoints.push_back(x);

    // Each step's rounding error is carried to the end point by the transfer
    // matrices of the later steps, so growth of the other solution is seen.
    std::vector<StepMatrix> steps;
    std::vector<std::array<double, 2>> injected;
    cplx xc = xb;
    for (cplx target : waypoints) {
        while (xc != target) {
            cplx d = target - xc;
            double radius = 0.5 * std::min(std::abs(xc), std::abs(xc - 1.0));
            cplx h = std::abs(d) <= radius ? d : d / std::abs(d) * radius;
            StepMatrix m = ode_step(a, b, c, xc, h);
            cplx nw = m.t[0][0] * w + m.t[0][1] * dw;
            cplx ndw = m.t[1][0] * w + m.t[1][1] * dw;
            injected.push_back({8.0 * eps * (m.mag[0][0] * std::abs(w) + m.mag[0][1] * std::abs(dw)),
                                8.0 * eps * (m.mag[1][0] * std::abs(w) + m.mag[1][1] * std::abs(dw))});
            steps.push_back(m);
            w = nw;
            dw = ndw;
            xc = std::abs(d) <= radius ? target : xc + h;
            if (steps.size() > 20000)
                throw ConvergenceError("hypergeometric continuation: too many steps");
        }
    }
    // row 0 of the product of the transfer matrices after step k
    cplx r0 = 1.0, r1 = 0.0;
    double err = 0.0;
    for (std::size_t k = steps.size(); k-- > 0;) {
        err += std::abs(r0) * injected[k][0] + std::abs(r1) * injected[k][1];
        const StepMatrix& m = steps[k];
        cplx n0 = r0 * m.t[0][0] + r1 * m.t[1][0];
        cplx n1 = r0 * m.t[0][1] + r1 * m.t[1][1];
        r0 = n0;
        r1 = n1;
    }
    err += std::abs(r0) * err0[0] + std::abs(r1) * err0[1];
    SeriesSum out;
    out.value = w;
    out.abs_error = 2.0 * err;
    out.converged = f0.converged && f1.converged;
    return out;
}

inline SeriesSum evaluate(cplx a, cplx b, cplx c, cplx x, Side side, bool regularized, Hyp2F1Method method);

inline SeriesSum pfaff(cplx a, cplx b, cplx c, cplx x, bool regularized)
{
    // F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)); both choices of a are tried
    // and the one with the smaller error estimate is kept.
    cplx y = x / (x - 1.0);
    auto one = [&](cplx p, cplx q) {
        SeriesSum s = maclaurin(p, c - q, c, y, regularized);
        cplx f = std::pow(1.0 - x, -p);
        s.value *= f;
        s.abs_error *= std::abs(f);
        return s;
    };
    SeriesSum s1 = one(a, b);
    if (a == b)
        return s1;
    SeriesSum s2 = one(b, a);
    if (s1.converged != s2.converged)
        return s1.converged ? s1 : s2;
    return s2.abs_error < s1.abs_error ? s2 : s1;
}

inline SeriesSum one_minus_x(cplx a, cplx b, cplx c, cplx x, Side side)
{
    cplx sdiff = c - a - b;
    cplx sn = sin_pi(sdiff);
    if (std::abs(sn) < 1e-6)
        throw DegenerateError("1-x connection: c - a - b is an integer");
    Side s1 = (x.imag() == 0.0 && x.real() > 1.0) ? flip(side) : Side::off_axis;
    cplx y = 1.0 - x;
    SeriesSum f1 = evaluate(a, b, 1.0 - sdiff, y, Side::off_axis, true, Hyp2F1Method::automatic);
    SeriesSum f2 = evaluate(c - a, c - b, 1.0 + sdiff, y, Side::off_axis, true, Hyp2F1Method::automatic);
    cplx t1 = f1.value * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    cplx t2 = branch_power(y, sdiff, s1) * f2.value * reciprocal_gamma(a) * reciprocal_gamma(b);
    SeriesSum out;
    out.value = pi / sn * (t1 - t2);
    out.abs_error = pi / std::abs(sn) * (std::abs(t1) + std::abs(t2)) * 16.0 * eps;
    out.converged = f1.converged && f2.converged;
    return out;
}

inline SeriesSum inverse_x(cplx a, cplx b, cplx c, cplx x, Side side)
{
    cplx sn = sin_pi(b - a);
    if (std::abs(sn) < 1e-6)
        throw DegenerateError("1/x connection: a - b is an integer");
    Side s1 = (x.imag() == 0.0 && x.real() > 0.0) ? flip(side) : Side::off_axis;
    cplx y = 1.0 / x;
    SeriesSum f1 = evaluate(a, a - c + 1.0, a - b + 1.0, y, Side::off_axis, true, Hyp2F1Method::automatic);
    SeriesSum f2 = evaluate(b, b - c + 1.0, b - a + 1.0, y, Side::off_axis, true, Hyp2F1Method::automatic);
    cplx t1 = branch_power(-x, -a, s1) * f1.value * reciprocal_gamma(b) * reciprocal_gamma(c - a);
    cplx t2 = branch_power(-x, -b, s1) * f2.value * reciprocal_gamma(a) * reciprocal_gamma(c - b);
    SeriesSum out;
    out.value = pi / sn * (t1 - t2);
    out.abs_error = pi / std::abs(sn) * (std::abs(t1) + std::abs(t2)) * 16.0 * eps;
    out.converged = f1.converged && f2.converged;
    return out;
}

// Continuation of F(a,b;c;x) and of its Euler transform
// (1-x)^{c-a-b} F(c-a, c-b; c; x); the two integrate different equations, so
// the growth of the unwanted solution differs. The smaller error estimate wins.
inline SeriesSum continuation_best(cplx a, cplx b, cplx c, cplx x, Side side, bool regularized)
{
    SeriesSum s1 = continuation(a, b, c, x, side, regularized);
    if (s1.abs_error <= 1e-14 * std::abs(s1.value))
        return s1;
    Side s_pow = (x.imag() == 0.0 && x.real() > 1.0) ? flip(side) : Side::off_axis;
    SeriesSum s2 = continuation(c - a, c - b, c, x, side, regularized);
    cplx f = branch_power(1.0 - x, c - a - b, s_pow);
    s2.value *= f;
    s2.abs_error = s2.abs_error * std::abs(f) + std::abs(s2.value) * 4.0 * eps;
    return s2.abs_error < s1.abs_error ? s2 : s1;
}

inline SeriesSum evaluate(cplx a, cplx b, cplx c, cplx x, Side side, bool regularized, Hyp2F1Method method)
{
    bool polynomial = exact_nonpositive_integer(a) || exact_nonpositive_integer(b);
    if (method == Hyp2F1Method::automatic) {
        if (polynomial)
            return maclaurin(a, b, c, x, regularized);
        // Candidates in order of preference; later ones are tried only while the
        // best error estimate so far is above 1e-14 relative.
        const double ax = std::abs(x), ay = std::abs(x / (x - 1.0));
        const bool on_cut = x.imag() == 0.0 && x.real() > 1.0;
        const bool inverse_ok = regularized && std::abs(sin_pi(b - a)) > 1e-2;
        SeriesSum best;
        bool have = false;
        auto good = [&] { return have && best.converged && best.abs_error <= 1e-14 * std::abs(best.value); };
        auto consider = [&](auto&& compute) {
            if (good())
                return;
            SeriesSum s;
            try {
                s = compute();
            } catch (const DegenerateError&) {
                return;
            } catch (const ConvergenceError&) {
                return;
            }
            if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag()))
                return;
            bool better = !have || (s.converged && !best.converged)
                          || (s.converged == best.converged && s.abs_error < best.abs_error);
            if (better) {
                best = s;
                have = true;
            }
        };
        if (ax <= 0.85)
            consider([&] { return maclaurin(a, b, c, x, regularized); });
        if (!on_cut && ay <= 0.85)
            consider([&] { return pfaff(a, b, c, x, regularized); });
        if (inverse_ok && ax >= 1.5)
            consider([&] { return inverse_x(a, b, c, x, side); });
        if (ax > 0.85 && ax < 0.95)
            consider([&] { return maclaurin(a, b, c, x, regularized); });
        if (!on_cut && ay > 0.85 && ay < 0.95)
            consider([&] { return pfaff(a, b, c, x, regularized); });
        consider([&] { return continuation_best(a, b, c, x, side, regularized); });
        if (!have)
            throw ConvergenceError("hypergeometric: no method converged");
        return best;
    }
    switch (method) {
    case Hyp2F1Method::maclaurin:
        if (!polynomial && std::abs(x) >= 1.0)
            throw DomainError("Maclaurin series requires |x| < 1");
        return maclaurin(a, b, c, x, regularized);
    case Hyp2F1Method::pfaff:
        if (std::abs(x / (x - 1.0)) >= 1.0)
            throw DomainError("Pfaff series requires |x/(x-1)| < 1");
        return pfaff(a, b, c, x, regularized);
    case Hyp2F1Method::continuation:
        return continuation_best(a, b, c, x, side, regularized);
    case Hyp2F1Method::one_minus_x:
    case Hyp2F1Method::inverse_x: {
        SeriesSum s = method == Hyp2F1Method::one_minus_x ? one_minus_x(a, b, c, x, side) : inverse_x(a, b, c, x, side);
        if (!regularized) {
            cplx g = gamma(c);
            s.value *= g;
            s.abs_error *= std::abs(g);
        }
        return s;
    }
    default:
        throw DomainError("unknown hypergeometric method");
    }
}

inline void check_hyp_args(const Hyp2F1Params& p, Side side)
{
    for (cplx v : {p.a, p.b, p.c, p.x})
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("hypergeometric: non-finite parameter");
    bool polynomial = exact_nonpositive_integer(p.a) || exact_nonpositive_integer(p.b);
    if (polynomial)
        return;
    if (p.x == cplx(1.0))
        throw DomainError("hypergeometric: x = 1 is a singular point");
    if (p.x.imag() == 0.0 && p.x.real() > 1.0 && side == Side::off_axis)
        throw BranchAmbiguityError("hypergeometric argument on the cut [1, inf) needs a side");
}

inline FnValue to_fn(const SeriesSum& s)
{
    FnValue r;
    r.value = s.value;
    r.abs_error = s.abs_error;
    if (!s.converged || r.abs_error > 1e-8 * std::abs(r.value))
        r.flags |= flag_degraded;
    return r;
}

} // namespace detail

// F(a,b;c;x)/Gamma(c), entire in a, b, c.
inline FnValue hyp2f1_regularized(const Hyp2F1Params& p, Side side = Side::off_axis,
                                  Hyp2F1Method method = Hyp2F1Method::automatic)
{
    detail::check_hyp_args(p, side);
    return detail::to_fn(detail::evaluate(p.a, p.b, p.c, p.x, side, true, method));
}

// F(a,b;c;x); pole flag when c is a nonpositive integer.
inline FnValue hyp2f1(const Hyp2F1Params& p, Side side = Side::off_axis,
                      Hyp2F1Method method = Hyp2F1Method::automatic)
{
    detail::check_hyp_args(p, side);
    long m;
    if (near_nonpositive_integer(p.c, m))
        return FnValue::make_pole();
    return detail::to_fn(detail::evaluate(p.a, p.b, p.c, p.x, side, false, method));
}

// Phi(a; c; x)/Gamma(c) for the confluent (Kummer) function.
inline FnValue kummer_phi_regularized(cplx a, cplx c, cplx x)
{
    if (x.real() < 0.0) {
        // Kummer transformation keeps the series free of cancellation
        FnValue r = kummer_phi_regularized(c - a, c, -x);
        cplx e = std::exp(x);
        r.value *= e;
        r.abs_error *= std::abs(e);
        return r;
    }
    int n_direct = c.real() < 0.5 ? static_cast<int>(std::ceil(0.5 - c.real())) + 1 : 0;
    cplx u = 1.0, term = reciprocal_gamma(c), sum = 0.0;
    double sum_abs = 0.0;
    int small_run = 0;
    bool converged = false;
    for (int n = 0; n < 20000; ++n) {
        sum += term;
        sum_abs += std::abs(term);
        cplx an = a + double(n);
        if (an == 0.0 && n >= n_direct) {
            converged = true;
            break;
        }
        cplx ratio = an * x / double(n + 1);
        u *= ratio;
        cplx next = (n + 1 <= n_direct) ? u * reciprocal_gamma(c + double(n + 1)) : term * ratio / (c + double(n));
        bool shrinking = std::abs(ratio) < std::abs(c + double(n));
        if (n + 1 >= n_direct && shrinking && std::abs(next) <= 0.05 * eps * std::abs(sum)) {
            if (++small_run >= 2) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        term = next;
    }
    FnValue r;
    r.value = sum;
    r.abs_error = sum_abs * 8.0 * eps;
    if (!converged || std::abs(x) > 50.0 || r.abs_error > 1e-8 * std::abs(sum))
        r.flags |= flag_degraded;
    return r;
}

// Bessel function of the first kind J_v(y); a side is needed for y on the negative real axis.
inline FnValue bessel_j(cplx v, cplx y, Side side = Side::off_axis)
{
    if (y == cplx(0.0)) {
        FnValue r;
        if (v == cplx(0.0))
            r.value = 1.0;
        else if (v.real() > 0.0 || detail::exact_nonpositive_integer(-v))
            r.value = 0.0;
        else
            throw DomainError("bessel_j: singular at y = 0");
        return r;
    }
    double ay = std::abs(y);
    if (ay > 20.0 + 0.5 * std::norm(v) && y.real() > 0.0) {
        // Hankel expansion
        cplx mu = 4.0 * v * v;
        cplx p = 1.0, q = 0.0, t = 1.0;
        double last = 1e300;
        for (int k = 1; k < 200; ++k) {
            t *= (mu - std::pow(2.0 * k - 1.0, 2)) / (double(k) * 8.0 * y);
            if (std::abs(t) > last)
                break;
            last = std::abs(t);
            if (k % 2 == 1)
                q += (k % 4 == 1 ? 1.0 : -1.0) * t;
            else
                p += (k % 4 == 2 ? -1.0 : 1.0) * t;
            if (last < 1e-17)
                break;
        }
        cplx w = y - (0.5 * v + 0.25) * pi;
        FnValue r;
        r.value = std::sqrt(2.0 / (pi * y)) * (p * std::cos(w) - q * std::sin(w));
        r.abs_error = std::abs(r.value) * 1e-14 + std::sqrt(2.0 / (pi * ay)) * last;
        return r;
    }
    // Power series in -y^2/4, accumulated in extended precision.
    using lcplx = std::complex<long double>;
    int n_direct = v.real() + 1.0 < 0.5 ? static_cast<int>(std::ceil(0.5 - v.real() - 1.0)) + 1 : 0;
    lcplx x2 = lcplx(-y * y / 4.0);
    lcplx u = 1.0L;
    lcplx term = lcplx(reciprocal_gamma(v + 1.0));
    lcplx sum = 0.0L;
    long double sum_abs = 0.0L;
    for (int k = 0; k < 2000; ++k) {
        sum += term;
        sum_abs += std::abs(term);
        u *= x2 / static_cast<long double>(k + 1);
        lcplx next;
        if (k + 1 <= n_direct)
            next = u * lcplx(reciprocal_gamma(v + double(k + 2)));
        else
            next = term * x2 / (static_cast<long double>(k + 1) * (lcplx(v) + static_cast<long double>(k + 1)));
        if (k + 1 > n_direct && std::abs(next) < 1e-21L * std::abs(sum) && double(k) > ay)
            break;
        term = next;
    }
    cplx pref = branch_power(y / 2.0, v, side);
    FnValue r;
    r.value = pref * cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    r.abs_error = std::abs(pref) * static_cast<double>(sum_abs) * 2e-19 + std::abs(r.value) * 8.0 * eps;
    if (r.abs_error > 1e-9 * std::abs(r.value))
        r.flags |= flag_degraded;
    return r;
}

} // namespace genleg
