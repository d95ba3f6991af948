// Half-step and full-step recurrences in the indices, the differentiation
// formulas, and a forward stepper in j.
#pragma once

#include "legendre.hpp"

#include <vector>

namespace genleg {

enum class RecurrenceRule {
    half_step_mp, // (2j+1) sqrt((z-1)/2) f^j_{mu-1/2, nu+1/2}
    half_step_pm, // (2j+1) sqrt((z-1)/2) f^j_{mu+1/2, nu-1/2}
    half_step_pp, // (2j+1) sqrt((z+1)/2) f^j_{mu+1/2, nu+1/2}
    half_step_mm, // (2j+1) sqrt((z+1)/2) f^j_{mu-1/2, nu-1/2}
    full_step_z,  // three-term relation in j at fixed mu, nu
    deriv_down,   // n-th derivative lowering nu by n
    deriv_up,     // n-th derivative raising nu by n
};

struct Recurrence {
    RecurrenceRule id;
    int n = 0; // derivative order, deriv rules only
};

inline const char* to_string(RecurrenceRule r)
{
    switch (r) {
    case RecurrenceRule::half_step_mp: return "half-step-mp";
    case RecurrenceRule::half_step_pm: return "half-step-pm";
    case RecurrenceRule::half_step_pp: return "half-step-pp";
    case RecurrenceRule::half_step_mm: return "half-step-mm";
    case RecurrenceRule::full_step_z: return "full-step-z";
    case RecurrenceRule::deriv_down: return "deriv-down";
    case RecurrenceRule::deriv_up: return "deriv-up";
    }
    return "?";
}

// Central difference of order 1 or 2 along the real direction with
// `levels` Richardson extrapolations (step halved each level).
template <class G>
cplx fd_derivative(G&& g, cplx z, int order, double h, int levels)
{
    auto central = [&](double s) -> cplx {
        if (order == 1)
            return (g(z + s) - g(z - s)) / (2.0 * s);
        return (g(z + s) - 2.0 * g(z) + g(z - s)) / (s * s);
    };
    std::vector<cplx> d;
    for (int k = 0; k <= levels; ++k)
        d.push_back(central(h / std::ldexp(1.0, k)));
    for (int m = 1; m <= levels; ++m) {
        double f = std::ldexp(1.0, 2 * m);
        for (int k = levels; k >= m; --k)
            d[k] = (f * d[k] - d[k - 1]) / (f - 1.0);
    }
    return d[levels];
}

// n-th derivative of a function analytic in the disc |w - z| <= r (and a
// little beyond), by the trapezoidal rule for the Cauchy integral on |w - z| = r.
template <class G>
cplx contour_derivative(G&& g, cplx z, int order, double r, int nodes = 64)
{
    cplx sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        cplx e = std::polar(1.0, 2.0 * pi * k / nodes);
        sum += g(z + r * e) * std::pow(e, -order);
    }
    return sum * std::tgamma(order + 1.0) / (static_cast<double>(nodes) * std::pow(r, order));
}

namespace detail {

// Distance from z to the cut (-inf, 1] shared by P, Q and the (z -+ 1) powers.
inline double distance_to_cut(cplx z)
{
    if (z.real() <= 1.0)
        return std::abs(z.imag());
    return std::abs(z - 1.0);
}

inline Residual pole_residual()
{
    Residual r;
    r.flags = flag_pole;
    return r;
}

} // namespace detail

// LHS - RHS of the selected relation for P or Q. Off the cut the derivative
// rules use a Cauchy integral on a circle of half the distance to the cut; on
// the cut (boundary values) a finite-difference step of fd_fraction times the
// distance to the nearer of z = +-1.
inline Residual recurrence_residual(Recurrence rule, FunctionKind kind, const IndexTriple& t, const Argument& arg,
                                    double fd_fraction = 0.02)
{
    Side s = detail::cut_side(arg);
    const cplx j = t.j, mu = t.mu, nu = t.nu, z = arg.z;
    auto f = [&](cplx jj, cplx mm, cplx nn) { return evaluate(kind, {jj, mm, nn}, arg); };
    const cplx h = 0.5;
    switch (rule.id) {
    case RecurrenceRule::half_step_mp:
    case RecurrenceRule::half_step_pm:
    case RecurrenceRule::half_step_pp:
    case RecurrenceRule::half_step_mm: {
        bool minus = rule.id == RecurrenceRule::half_step_mp || rule.id == RecurrenceRule::half_step_pm;
        cplx root = branch_power(minus ? (z - 1.0) / 2.0 : (z + 1.0) / 2.0, 0.5, s);
        FnValue up = f(j + h, mu, nu), dn = f(j - h, mu, nu);
        FnValue mid;
        cplx a, b;
        switch (rule.id) {
        case RecurrenceRule::half_step_mp:
            mid = f(j, mu - h, nu + h);
            a = 1.0;
            b = -1.0;
            break;
        case RecurrenceRule::half_step_pm:
            mid = f(j, mu + h, nu - h);
            a = (j + nu + h) * (j - mu + h);
            b = -(j - nu + h) * (j + mu + h);
            break;
        case RecurrenceRule::half_step_pp:
            mid = f(j, mu + h, nu + h);
            a = j - mu + h;
            b = j + mu + h;
            break;
        default:
            mid = f(j, mu - h, nu - h);
            a = j + nu + h;
            b = j - nu + h;
            break;
        }
        if (mid.pole() || up.pole() || dn.pole())
            return detail::pole_residual();
        FnValue lhs = detail::scaled(mid, (2.0 * j + 1.0) * root);
        FnValue rhs = detail::combine(a, up, b, dn);
        return detail::residual_from(lhs, rhs, {std::abs(a * up.value), std::abs(b * dn.value)});
    }
    case RecurrenceRule::full_step_z: {
        FnValue f0 = f(j, mu, nu), fp = f(j + 1.0, mu, nu), fm = f(j - 1.0, mu, nu);
        if (f0.pole() || fp.pole() || fm.pole())
            return detail::pole_residual();
        cplx cl = j * (j + 1.0) * (2.0 * j + 1.0) * z;
        cplx cp = j * (j + nu + 1.0) * (j - mu + 1.0);
        cplx c0 = nu * mu * (2.0 * j + 1.0);
        cplx cm = (j + 1.0) * (j + mu) * (j - nu);
        cplx rhs = cp * fp.value + c0 * f0.value + cm * fm.value;
        Residual r = make_residual(cl * f0.value, rhs,
                                   {std::abs(cp * fp.value), std::abs(c0 * f0.value), std::abs(cm * fm.value)});
        r.flags = (f0.flags | fp.flags | fm.flags) & flag_degraded;
        return r;
    }
    case RecurrenceRule::deriv_down:
    case RecurrenceRule::deriv_up: {
        int n = rule.n;
        if (n < 1 || n > 2)
            throw std::invalid_argument("derivative rules are checked for n = 1, 2");
        bool down = rule.id == RecurrenceRule::deriv_down;
        double sg = down ? 1.0 : -1.0;
        bool pole = false;
        auto g = [&](cplx zz) -> cplx {
            Argument a{zz, arg.side};
            FnValue v = evaluate(kind, t, a);
            if (v.pole()) {
                pole = true;
                return 0.0;
            }
            return branch_power(zz - 1.0, sg * (nu - mu) / 2.0, s) * branch_power(zz + 1.0, sg * (nu + mu) / 2.0, s)
                   * v.value;
        };
        cplx lhs;
        if (detail::on_cut(z)) {
            double dist = std::min(std::abs(z - 1.0), std::abs(z + 1.0));
            lhs = fd_derivative(g, z, n, fd_fraction * dist, 2);
        } else {
            lhs = contour_derivative(g, z, n, 0.5 * detail::distance_to_cut(z));
        }
        if (pole)
            return detail::pole_residual();
        double dn = n;
        FnValue shifted = evaluate(kind, {j, mu, nu - sg * dn}, arg);
        if (shifted.pole())
            return detail::pole_residual();
        cplx rhs;
        if (down) {
            rhs = branch_power(z - 1.0, (nu - mu - dn) / 2.0, s) * branch_power(z + 1.0, (nu + mu - dn) / 2.0, s)
                  * shifted.value;
        } else {
            FnValue g1 = gamma_ratio({j + nu + 1.0}, {j - nu + 1.0});
            FnValue g2 = gamma_ratio({j + nu + dn + 1.0}, {j - nu - dn + 1.0});
            if (g1.pole() || g2.pole())
                return detail::pole_residual();
            lhs *= g1.value;
            rhs = g2.value * branch_power(z - 1.0, -(nu - mu + dn) / 2.0, s)
                  * branch_power(z + 1.0, -(nu + mu + dn) / 2.0, s) * shifted.value;
        }
        Residual r = make_residual(lhs, rhs);
        r.flags = shifted.flags & flag_degraded;
        return r;
    }
    }
    throw std::invalid_argument("unknown recurrence rule");
}

// f^{j+1}_{mu nu} from f^j and f^{j-1} by the three-term relation in j.
inline FnValue step_j(const IndexTriple& t, const Argument& arg, const FnValue& f_j, const FnValue& f_jm1)
{
    const cplx j = t.j, mu = t.mu, nu = t.nu, z = arg.z;
    cplx lead = j * (j + nu + 1.0) * (j - mu + 1.0);
    cplx cz = j * (j + 1.0) * (2.0 * j + 1.0);
    if (std::abs(lead) < pole_tolerance || std::abs(cz) < pole_tolerance)
        throw DegenerateError("step_j: vanishing recurrence coefficient");
    if (f_j.pole() || f_jm1.pole())
        return FnValue::make_pole();
    cplx a = cz * z - nu * mu * (2.0 * j + 1.0);
    cplx b = -(j + 1.0) * (j + mu) * (j - nu);
    FnValue r;
    r.value = (a * f_j.value + b * f_jm1.value) / lead;
    double mag = std::abs(a * f_j.value) + std::abs(b * f_jm1.value);
    r.abs_error = (std::abs(a) * f_j.abs_error + std::abs(b) * f_jm1.abs_error + mag * 8.0 * eps) / std::abs(lead);
    r.flags = (f_j.flags | f_jm1.flags) & flag_degraded;
    if (r.abs_error > 1e-8 * std::abs(r.value))
        r.flags |= flag_degraded;
    return r;
}

// Residual of the defining equation
// (1-z^2) y'' - 2z y' + [j(j+1) - (mu^2 - 2 mu nu z + nu^2)/(1-z^2)] y = 0
// with y'' and y' from central differences (one Richardson step). The scale is
// max(|y|, |y''|). Off the cuts only.
inline Residual ode_residual(FunctionKind kind, const IndexTriple& t, const Argument& arg, double step = 1e-2)
{
    if (detail::on_cut(arg.z))
        throw DomainError("ode_residual: z must be off the cuts");
    const cplx j = t.j, mu = t.mu, nu = t.nu, z = arg.z;
    bool pole = false;
    unsigned flags = 0;
    auto y = [&](cplx w) -> cplx {
        FnValue v = evaluate(kind, t, {w});
        if (v.pole())
            pole = true;
        flags |= v.flags & flag_degraded;
        return v.pole() ? cplx(0.0) : v.value;
    };
    cplx y0 = y(z);
    cplx d1 = fd_derivative(y, z, 1, step, 1);
    cplx d2 = fd_derivative(y, z, 2, step, 1);
    if (pole)
        return detail::pole_residual();
    cplx w = 1.0 - z * z;
    Residual r;
    r.value = w * d2 - 2.0 * z * d1 + (j * (j + 1.0) - (mu * mu - 2.0 * mu * nu * z + nu * nu) / w) * y0;
    r.scale = std::max(std::abs(y0), std::abs(d2));
    r.flags = flags;
    return r;
}

// f1 f2' - f1' f2 for the pair of the Wronskian closed form, derivatives by
// central differences (one Richardson step), minus the closed form.
inline Residual wronskian_residual(WronskianPair pair, const IndexTriple& t, const Argument& arg, double step = 1e-3)
{
    if (detail::on_cut(arg.z))
        throw DomainError("wronskian_residual: z must be off the cuts");
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    FunctionKind kind = pair == WronskianPair::pp ? FunctionKind::P : FunctionKind::Q;
    IndexTriple t2 = pair == WronskianPair::pp ? IndexTriple{j, nu, mu} : IndexTriple{-j - 1.0, nu, mu};
    bool pole = false;
    auto fn = [&](const IndexTriple& tt) {
        return [&, tt](cplx w) -> cplx {
            FnValue v = evaluate(kind, tt, {w});
            if (v.pole())
                pole = true;
            return v.pole() ? cplx(0.0) : v.value;
        };
    };
    auto f1 = fn(t), f2 = fn(t2);
    cplx v1 = f1(arg.z), v2 = f2(arg.z);
    cplx d1 = fd_derivative(f1, arg.z, 1, step, 1), d2 = fd_derivative(f2, arg.z, 1, step, 1);
    FnValue closed = wronskian_closed_form(pair, t, arg);
    if (pole || closed.pole())
        return detail::pole_residual();
    Residual r = make_residual(v1 * d2 - d1 * v2, closed.value, {std::abs(v1 * d2), std::abs(d1 * v2)});
    return r;
}

} // namespace genleg
