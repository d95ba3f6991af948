// Gauss-Legendre and tanh-sinh quadrature on finite, semi-infinite and
// full-line ranges. Summation order is fixed so results are reproducible.
#pragma once

#include "complex.hpp"

#include <map>
#include <mutex>
#include <type_traits>
#include <vector>

namespace genleg {

struct GaussRule {
    std::vector<double> x; // ascending nodes on [-1, 1]
    std::vector<double> w;
};

// n-point Gauss-Legendre rule, computed by Newton iteration and cached.
inline const GaussRule& gauss_legendre_rule(int n)
{
    if (n < 2)
        throw std::invalid_argument("Gauss-Legendre order must be at least 2");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    GaussRule r;
    r.x.assign(n, 0.0);
    r.w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        r.x[n / 2] = 0.0;
    return cache.emplace(n, std::move(r)).first->second;
}

enum class QuadMethod { gauss_legendre, tanh_sinh };

struct QuadratureSpec {
    QuadMethod method = QuadMethod::gauss_legendre;
    int order = 64;            // Gauss-Legendre points per panel
    int level = 10;            // maximum tanh-sinh level
    double tolerance = 1e-12;  // relative target
    double truncation = 1e-13; // omitted tail |f(X)| X relative to the integral of |f| so far
    int max_depth = 24;        // bisection depth for adaptive Gauss-Legendre
};

struct Interval {
    enum class Kind { finite, semi_infinite, full_line };
    Kind kind = Kind::finite;
    double a = -1.0, b = 1.0;

    static Interval finite(double a, double b) { return {Kind::finite, a, b}; }
    static Interval semi_infinite(double a) { return {Kind::semi_infinite, a, 0.0}; }
    static Interval full_line() { return {Kind::full_line, 0.0, 0.0}; }
};

namespace detail {

// Calls f(x), or f(x, d) when f accepts the offset d of x from the nearer
// endpoint (x = a + d for d > 0, x = b + d for d < 0), so that integrands
// singular at an endpoint can avoid the rounding in x.
template <class F>
cplx call_with_offset(F& f, double x, double d)
{
    if constexpr (std::is_invocable_v<F&, double, double>)
        return f(x, d);
    else
        return f(x);
}

struct Panel {
    cplx value;
    double abs_sum = 0.0; // sum of w |f|
    double error = 0.0;
    double tail = 0.0;    // max |f| over the last five nodes
    double peak = 0.0;    // max |f| over the panel
    bool converged = true;
};

template <class F>
Panel gauss_panel(F& f, double a, double b, const GaussRule& rule)
{
    Panel p;
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::size_t n = rule.x.size();
    for (std::size_t i = 0; i < n; ++i) {
        double off = rule.x[i] < 0.0 ? h * (1.0 + rule.x[i]) : -h * (1.0 - rule.x[i]);
        cplx v = call_with_offset(f, c + h * rule.x[i], off);
        p.value += rule.w[i] * v;
        double m = std::abs(v);
        p.abs_sum += rule.w[i] * m;
        p.peak = std::max(p.peak, m);
        if (i + 5 >= n)
            p.tail = std::max(p.tail, m);
    }
    p.value *= h;
    p.abs_sum *= std::abs(h);
    return p;
}

template <class F>
Panel adaptive_gauss(F& f, double a, double b, const QuadratureSpec& spec, const GaussRule& rule, const Panel& whole,
                     int depth)
{
    double m = 0.5 * (a + b);
    Panel l = gauss_panel(f, a, m, rule), r = gauss_panel(f, m, b, rule);
    Panel out;
    out.value = l.value + r.value;
    out.abs_sum = l.abs_sum + r.abs_sum;
    out.peak = std::max(l.peak, r.peak);
    out.tail = r.tail;
    double diff = std::abs(out.value - whole.value);
    if (diff <= spec.tolerance * out.abs_sum || diff <= 1e-300) {
        out.error = diff;
        return out;
    }
    if (depth >= spec.max_depth) {
        out.error = diff;
        out.converged = false;
        return out;
    }
    Panel la = adaptive_gauss(f, a, m, spec, rule, l, depth + 1);
    Panel ra = adaptive_gauss(f, m, b, spec, rule, r, depth + 1);
    out.value = la.value + ra.value;
    out.abs_sum = la.abs_sum + ra.abs_sum;
    out.error = la.error + ra.error;
    out.peak = std::max(la.peak, ra.peak);
    out.tail = ra.tail;
    out.converged = la.converged && ra.converged;
    return out;
}

template <class F>
Panel gauss_adaptive(F& f, double a, double b, const QuadratureSpec& spec)
{
    const GaussRule& rule = gauss_legendre_rule(spec.order);
    Panel whole = gauss_panel(f, a, b, rule);
    return adaptive_gauss(f, a, b, spec, rule, whole, 0);
}

// tanh-sinh on [a, b]; for integrands taking only x, nodes that round onto an
// endpoint are skipped.
template <class F>
Panel tanh_sinh(F& f, double a, double b, const QuadratureSpec& spec)
{
    const double c = 0.5 * (a + b), h2 = 0.5 * (b - a), tmax = 4.5;
    auto node = [&](double t, cplx& acc, double& abs_acc, double& peak) {
        double u = 0.5 * pi * std::sinh(std::abs(t));
        double ch = std::cosh(u);
        double w = 0.5 * pi * std::cosh(t) / (ch * ch);
        double dist = h2 / (std::exp(u) * ch);
        double x = t > 0.0 ? b - dist : a + dist;
        double d = t > 0.0 ? -dist : dist;
        if (t == 0.0) {
            x = c;
            d = h2;
        }
        constexpr bool offset_aware = std::is_invocable_v<F&, double, double>;
        if (dist == 0.0 || (!offset_aware && (x <= a || x >= b)))
            return;
        cplx v = call_with_offset(f, x, d);
        acc += w * v;
        abs_acc += w * std::abs(v);
        peak = std::max(peak, std::abs(v));
    };
    cplx sum;
    double abs_sum = 0.0, peak = 0.0;
    node(0.0, sum, abs_sum, peak);
    for (int i = 1; i <= static_cast<int>(tmax); ++i) {
        node(i, sum, abs_sum, peak);
        node(-i, sum, abs_sum, peak);
    }
    Panel p;
    cplx prev = sum * h2;
    double step = 1.0;
    for (int level = 1; level <= spec.level; ++level) {
        step *= 0.5;
        for (double t = step; t <= tmax; t += 2.0 * step) {
            node(t, sum, abs_sum, peak);
            node(-t, sum, abs_sum, peak);
        }
        cplx cur = sum * step * h2;
        double diff = std::abs(cur - prev);
        p.value = cur;
        p.abs_sum = abs_sum * step * std::abs(h2);
        p.error = diff;
        prev = cur;
        if (level >= 3 && diff <= spec.tolerance * p.abs_sum) {
            p.converged = true;
            p.peak = peak;
            return p;
        }
    }
    p.converged = false;
    p.peak = peak;
    return p;
}

template <class F>
Panel finite_panel(F& f, double a, double b, const QuadratureSpec& spec)
{
    return spec.method == QuadMethod::tanh_sinh ? tanh_sinh(f, a, b, spec) : gauss_adaptive(f, a, b, spec);
}

// Panels [a, a+1], [a+1, a+2], [a+2, a+4], ... in direction dir until the
// tail estimate |f(X)| X at the panel end is below the truncation level.
template <class F>
Panel half_line(F& f, double a, double dir, const QuadratureSpec& spec, bool first_singular)
{
    auto g = [&](double s) { return call_with_offset(f, a + dir * s, dir * s); };
    QuadratureSpec first = spec;
    if (first_singular)
        first.method = QuadMethod::tanh_sinh;
    Panel total = dir > 0.0 ? finite_panel(f, a, a + 1.0, first) : finite_panel(f, a - 1.0, a, first);
    double lo = 1.0, width = 1.0;
    QuadratureSpec gl = spec;
    gl.method = QuadMethod::gauss_legendre;
    for (int k = 0; k < 2000; ++k) {
        Panel p = gauss_adaptive(g, lo, lo + width, gl);
        total.value += p.value;
        total.abs_sum += p.abs_sum;
        total.error += p.error;
        total.converged = total.converged && p.converged;
        // omitted tail, estimated as |f| at the cutoff times the cutoff distance
        double tail = p.tail * (lo + width);
        if (tail <= spec.truncation * total.abs_sum) {
            total.error += tail;
            return total;
        }
        lo += width;
        if (k >= 1)
            width *= 2.0;
        if (!std::isfinite(lo + width))
            break;
    }
    total.converged = false;
    return total;
}

} // namespace detail

// Integral of a complex-valued f over the interval. The error estimate is the
// disagreement between successive refinements; disagreement beyond 1e-6
// relative at the last refinement raises ConvergenceError.
template <class F>
FnValue integrate(F&& f, const Interval& iv, const QuadratureSpec& spec = {})
{
    if (spec.order < 2 || !(spec.truncation > 0.0))
        throw std::invalid_argument("integrate: order >= 2 and truncation > 0 required");
    detail::Panel p;
    switch (iv.kind) {
    case Interval::Kind::finite:
        if (!(iv.b > iv.a))
            throw DomainError("integrate: empty interval");
        p = detail::finite_panel(f, iv.a, iv.b, spec);
        break;
    case Interval::Kind::semi_infinite:
        p = detail::half_line(f, iv.a, 1.0, spec, true);
        break;
    case Interval::Kind::full_line: {
        detail::Panel r = detail::half_line(f, 0.0, 1.0, spec, false);
        detail::Panel l = detail::half_line(f, 0.0, -1.0, spec, false);
        p.value = r.value + l.value;
        p.abs_sum = r.abs_sum + l.abs_sum;
        p.error = r.error + l.error;
        p.converged = r.converged && l.converged;
        break;
    }
    }
    FnValue out;
    out.value = p.value;
    out.abs_error = p.error + 4.0 * eps * p.abs_sum;
    if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()))
        throw ConvergenceError("integrate: non-finite integrand");
    if (!p.converged) {
        if (p.error > 1e-6 * std::max(std::abs(p.value), p.abs_sum * 1e-3))
            throw ConvergenceError("integrate: successive estimates disagree beyond 1e-6 relative");
        out.flags |= flag_degraded;
    }
    return out;
}

} // namespace genleg
