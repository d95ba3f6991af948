// Generalized Legendre functions P^j_{mu nu}(z), Q^j_{mu nu}(z) and the on-cut
// function Ptilde^j_{mu nu}(x), with their symmetries, connection formulas,
// discontinuities, Wronskians and reductions.
#pragma once

#include <optional>

#include "hypergeometric.hpp"

namespace genleg {

struct IndexTriple {
    cplx j, mu, nu;
};

// Argument z; the side is required for real z < 1 (the two cuts) and ignored elsewhere.
// near_one, when set, is z - 1 held exactly; it keeps points that round to z = 1 distinct.
struct Argument {
    cplx z;
    Side side = Side::off_axis;
    std::optional<cplx> near_one = std::nullopt;
};

enum class FunctionKind { P, Q };

// Hypergeometric representation of P: argument (1-z)/2 or (z-1)/(z+1).
enum class PForm { automatic, standard, alternate };

namespace detail {

inline bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() < 1.0; }

inline cplx minus_one(const Argument& a) { return a.near_one ? *a.near_one : a.z - 1.0; }

inline Side cut_side(const Argument& a)
{
    if (!std::isfinite(a.z.real()) || !std::isfinite(a.z.imag()))
        throw DomainError("non-finite argument");
    if (!on_cut(a.z))
        return Side::off_axis;
    if (a.side == Side::off_axis)
        throw BranchAmbiguityError("argument on a cut needs a side");
    return a.side;
}

inline void check_indices(const IndexTriple& t)
{
    for (cplx v : {t.j, t.mu, t.nu})
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("non-finite index");
}

// Accumulates sum p_k log w_k; a zero base with positive exponent zeroes the product.
struct LogProduct {
    cplx log = 0.0;
    bool zero = false;

    void add(cplx w, cplx p, Side s)
    {
        if (p == cplx(0.0))
            return;
        if (w == cplx(0.0)) {
            if (p.real() > 0.0) {
                zero = true;
                return;
            }
            throw DomainError("zero base with non-positive exponent");
        }
        log += p * branch_log(w, s);
    }
};

// F(a,b;c;x)/Gamma(c) as value * exp(log_scale); large c goes through the
// plain series so that 1/Gamma(c) never underflows on its own.
struct ScaledHyp {
    cplx value{};
    cplx log_scale{};
    double abs_error = 0.0;
    unsigned flags = flag_none;
};

inline ScaledHyp regularized_scaled(cplx a, cplx b, cplx c, cplx x, Side side,
                                    Hyp2F1Method method = Hyp2F1Method::automatic)
{
    ScaledHyp r;
    FnValue f;
    if (c.real() > 20.0) {
        f = hyp2f1({a, b, c, x}, side, method);
        r.log_scale = -log_gamma(c);
    } else {
        f = hyp2f1_regularized({a, b, c, x}, side, method);
    }
    r.value = f.value;
    r.abs_error = f.abs_error;
    r.flags = f.flags;
    return r;
}

inline FnValue assemble(const LogProduct& pref, const ScaledHyp& h, cplx factor = 1.0)
{
    FnValue r;
    r.flags = h.flags;
    if (pref.zero || h.value == cplx(0.0)) {
        r.value = 0.0;
        if (!pref.zero)
            r.abs_error = std::abs(std::exp(pref.log + h.log_scale)) * h.abs_error;
        return r;
    }
    cplx total = pref.log + h.log_scale;
    r.value = factor * std::exp(total + std::log(h.value));
    double rel = h.abs_error / std::abs(h.value) + (std::abs(total) + 8.0) * eps;
    r.abs_error = std::abs(r.value) * rel;
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag()))
        throw DomainError("result overflows double precision");
    return r;
}

// The lower parameter nu - mu + 1 of the P kernel. Near a nonpositive integer
// the regularized kernel is extremely sensitive to c, so a c that misses the
// integer only by the rounding of nu - mu is put on it.
inline cplx lower_parameter(cplx mu, cplx nu)
{
    cplx c = nu - mu + 1.0;
    double r = std::round(c.real());
    double tol = 8.0 * eps * (1.0 + std::abs(mu) + std::abs(nu));
    if (r <= 0.0 && std::abs(c - cplx(r, 0.0)) <= tol)
        return cplx(r, 0.0);
    return c;
}

inline bool nonnegative_integer(cplx w)
{
    long n;
    return near_nonpositive_integer(-w, n);
}

} // namespace detail

// (mu, nu) = (j+n+1, j-m) or (-j+m, -j-n-1) with integers n, m >= 0.
inline bool p_identically_zero(const IndexTriple& t)
{
    using detail::nonnegative_integer;
    return (nonnegative_integer(t.mu - t.j - 1.0) && nonnegative_integer(t.j - t.nu))
           || (nonnegative_integer(t.mu + t.j) && nonnegative_integer(-t.j - 1.0 - t.nu));
}

inline FnValue p_first_kind(const IndexTriple& t, const Argument& arg, PForm form = PForm::automatic,
                            Hyp2F1Method method = Hyp2F1Method::automatic)
{
    detail::check_indices(t);
    Side s = detail::cut_side(arg);
    const cplx z = arg.z;
    if (p_identically_zero(t))
        return FnValue::make_zero();
    if (z == cplx(-1.0))
        throw DomainError("P: z = -1 is a singular point");
    const cplx w = detail::minus_one(arg);
    const cplx x_std = -w / 2.0;
    const cplx x_alt = w / (z + 1.0);
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    const cplx c = detail::lower_parameter(mu, nu);
    auto in_form = [&](PForm f) {
        detail::LogProduct pref;
        detail::ScaledHyp h;
        if (f == PForm::standard) {
            pref.add(w / 2.0, (nu - mu) / 2.0, s);
            pref.add((z + 1.0) / 2.0, (nu + mu) / 2.0, s);
            h = detail::regularized_scaled(j + nu + 1.0, -j + nu, c, x_std, flip(s), method);
        } else {
            pref.add((z + 1.0) / 2.0, j, s);
            pref.add(w, (nu - mu) / 2.0, s);
            pref.add(z + 1.0, -(nu - mu) / 2.0, s);
            h = detail::regularized_scaled(-j + nu, -j - mu, c, x_alt, s, method);
        }
        return detail::assemble(pref, h);
    };
    if (form != PForm::automatic)
        return in_form(form);
    if (std::abs(1.0 - x_alt) < 1e-2)
        return in_form(PForm::standard);
    PForm first = std::abs(x_alt) < std::abs(x_std) ? PForm::alternate : PForm::standard;
    FnValue r = in_form(first);
    // both forms are valid everywhere; when the preferred one lost digits, try the other
    if (r.abs_error > 1e-12 * std::abs(r.value)) {
        FnValue other = in_form(first == PForm::standard ? PForm::alternate : PForm::standard);
        if (other.abs_error < r.abs_error)
            r = other;
    }
    return r;
}

// Order of the index pole of Q: one for each of Gamma(j+mu+1), Gamma(j-nu+1) on a pole.
inline int q_pole_order(const IndexTriple& t)
{
    return int(near_nonpositive_integer(t.j + t.mu + 1.0)) + int(near_nonpositive_integer(t.j - t.nu + 1.0));
}

namespace detail {

// Q^j_{mu nu}(z) with the Gamma(j+mu+1) Gamma(j-nu+1) factor replaced by exp(log_gammas).
inline FnValue q_core(const IndexTriple& t, const Argument& arg, cplx log_gammas, Hyp2F1Method method)
{
    Side s = cut_side(arg);
    const cplx z = arg.z;
    const cplx w = minus_one(arg);
    if (w == cplx(0.0) || z == cplx(-1.0))
        throw DomainError("Q: z = +-1 is a singular point");
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    LogProduct pref;
    pref.log = log_gammas - std::log(2.0);
    pref.add(w / 2.0, -(j + 1.0), s);
    pref.add(z + 1.0, (nu + mu) / 2.0, s);
    pref.add(w, -(nu + mu) / 2.0, s);
    ScaledHyp h = regularized_scaled(j + nu + 1.0, j + mu + 1.0, 2.0 * j + 2.0, -2.0 / w, s, method);
    return assemble(pref, h, exp_i_pi(mu - nu));
}

} // namespace detail

inline FnValue q_second_kind(const IndexTriple& t, const Argument& arg, Hyp2F1Method method = Hyp2F1Method::automatic)
{
    detail::check_indices(t);
    detail::cut_side(arg);
    if (int order = q_pole_order(t))
        return FnValue::make_pole(order);
    return detail::q_core(t, arg, log_gamma(t.j + t.mu + 1.0) + log_gamma(t.j - t.nu + 1.0), method);
}

inline FnValue evaluate(FunctionKind kind, const IndexTriple& t, const Argument& arg)
{
    return kind == FunctionKind::P ? p_first_kind(t, arg) : q_second_kind(t, arg);
}

// Ptilde^j_{mu nu}(x) = e^{i pi (mu-nu)/2} P^j_{mu nu}(x + i0) for -1 < x < 1.
inline FnValue p_tilde(const IndexTriple& t, double x, Hyp2F1Method method = Hyp2F1Method::automatic)
{
    detail::check_indices(t);
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("p_tilde: x outside [-1, 1]");
    if (p_identically_zero(t))
        return FnValue::make_zero();
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    const double y = (1.0 - x) / 2.0;
    detail::LogProduct pref;
    pref.add(y, (nu - mu) / 2.0, Side::off_axis);
    if (nu.real() + mu.real() < 0.0) {
        // Euler transform: keeps the power of (1+x)/2 nonnegative near x = -1
        pref.add((1.0 + x) / 2.0, -(nu + mu) / 2.0, Side::off_axis);
        detail::ScaledHyp h = detail::regularized_scaled(-j - mu, j - mu + 1.0, detail::lower_parameter(mu, nu), y, Side::off_axis, method);
        return detail::assemble(pref, h);
    }
    pref.add((1.0 + x) / 2.0, (nu + mu) / 2.0, Side::off_axis);
    detail::ScaledHyp h = detail::regularized_scaled(j + nu + 1.0, -j + nu, detail::lower_parameter(mu, nu), y, Side::off_axis, method);
    return detail::assemble(pref, h);
}

// Index symmetries. Each returns the right-hand side computed from the
// transformed indices; the left-hand side is the direct evaluation.
enum class IndexSymmetry {
    reflect_j,   // P^j = P^{-j-1}
    swap_q,      // Q^j_{mu nu} = e^{2 i pi (mu-nu)} G Q^j_{nu mu}
    negate_both, // f^j_{mu nu} = f^j_{-nu,-mu}
};

inline FnValue apply_index_symmetry(IndexSymmetry rule, FunctionKind kind, const IndexTriple& t, const Argument& arg)
{
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    switch (rule) {
    case IndexSymmetry::reflect_j:
        if (kind != FunctionKind::P)
            throw std::invalid_argument("reflect_j applies to P only");
        return p_first_kind({-j - 1.0, mu, nu}, arg);
    case IndexSymmetry::swap_q: {
        if (kind != FunctionKind::Q)
            throw std::invalid_argument("swap_q applies to Q only");
        detail::cut_side(arg);
        if (int order = q_pole_order(t))
            return FnValue::make_pole(order);
        // Gamma(j+mu+1) Gamma(j-nu+1) / (Gamma(j-mu+1) Gamma(j+nu+1)) times Q^j_{nu mu},
        // whose own Gamma factors cancel the denominator.
        FnValue r = detail::q_core({j, nu, mu}, arg, log_gamma(j + mu + 1.0) + log_gamma(j - nu + 1.0),
                                   Hyp2F1Method::automatic);
        cplx ph = exp_i_pi(2.0 * (mu - nu));
        r.value *= ph;
        r.abs_error *= std::abs(ph);
        return r;
    }
    case IndexSymmetry::negate_both:
        return evaluate(kind, {j, -nu, -mu}, arg);
    }
    throw std::invalid_argument("unknown symmetry");
}

namespace detail {

inline double upper_sign(const Argument& arg)
{
    if (arg.z.imag() > 0.0)
        return 1.0;
    if (arg.z.imag() < 0.0)
        return -1.0;
    if (arg.side == Side::above)
        return 1.0;
    if (arg.side == Side::below)
        return -1.0;
    throw BranchAmbiguityError("relation between z and -z needs a side for real z");
}

inline Argument negated(const Argument& arg) { return {-arg.z, flip(arg.side)}; }

inline Residual residual_from(const FnValue& lhs, const FnValue& rhs, std::initializer_list<double> terms = {})
{
    Residual r;
    if (lhs.pole() || rhs.pole()) {
        r.flags = flag_pole;
        r.value = 0.0;
        return r;
    }
    r = make_residual(lhs.value, rhs.value, terms);
    r.abs_error = lhs.abs_error + rhs.abs_error;
    r.flags = (lhs.flags | rhs.flags) & flag_degraded;
    return r;
}

inline FnValue scaled(const FnValue& f, cplx c)
{
    FnValue r = f;
    if (!r.pole()) {
        r.value *= c;
        r.abs_error *= std::abs(c);
    }
    return r;
}

inline FnValue combine(cplx a, const FnValue& f, cplx b, const FnValue& g)
{
    FnValue r;
    if (f.pole() || g.pole())
        return FnValue::make_pole(std::max(f.pole_order, g.pole_order));
    r.value = a * f.value + b * g.value;
    r.abs_error = std::abs(a) * f.abs_error + std::abs(b) * g.abs_error
                  + (std::abs(a * f.value) + std::abs(b * g.value)) * 4.0 * eps;
    r.flags = (f.flags | g.flags) & flag_degraded;
    return r;
}

} // namespace detail

// (2/pi) e^{-i pi(mu-nu)} sin pi(mu-nu) Q^j_{mu nu} = P^j_{mu nu} - G P^j_{nu mu}
inline Residual connection_qpp(const IndexTriple& t, const Argument& arg)
{
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    FnValue q = q_second_kind(t, arg);
    FnValue p1 = p_first_kind(t, arg);
    FnValue p2 = p_first_kind({j, nu, mu}, arg);
    FnValue g = gamma_ratio({j + mu + 1.0, j - nu + 1.0}, {j - mu + 1.0, j + nu + 1.0});
    if (q.pole() || g.pole()) {
        Residual r;
        r.flags = flag_pole;
        return r;
    }
    FnValue lhs = detail::scaled(q, 2.0 / pi * exp_i_pi(-(mu - nu)) * sin_pi(mu - nu));
    FnValue rhs = detail::combine(1.0, p1, -g.value, p2);
    return detail::residual_from(lhs, rhs, {std::abs(p1.value), std::abs(g.value * p2.value)});
}

// Q^j_{mu nu} - Q^{-j-1}_{mu nu} against its closed form in P^j_{nu mu}; the
// sine denominators are folded into Gamma functions by the reflection formula.
inline Residual connection_qq_difference(const IndexTriple& t, const Argument& arg)
{
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    FnValue q1 = q_second_kind(t, arg);
    FnValue q2 = q_second_kind({-j - 1.0, mu, nu}, arg);
    FnValue g = gamma_ratio({j + mu + 1.0, j - nu + 1.0, mu - j, -j - nu}, {});
    Residual r;
    bool lhs_pole = q1.pole() || q2.pole();
    if (lhs_pole || g.pole()) {
        r.flags = flag_pole;
        if (lhs_pole != g.pole())
            throw DomainError("inconsistent pole structure in Q^j - Q^{-j-1}");
        return r;
    }
    FnValue p = p_first_kind({j, nu, mu}, arg);
    FnValue lhs = detail::combine(1.0, q1, -1.0, q2);
    FnValue rhs = detail::scaled(p, exp_i_pi(mu - nu) * sin_pi(2.0 * j) / (2.0 * pi) * g.value);
    return detail::residual_from(lhs, rhs, {std::abs(q1.value), std::abs(q2.value)});
}

// Relations between values at z and -z; the sign choice follows the side
// (upper signs for Im z > 0).
enum class Reflection {
    q,      // Q^j_{mu nu}(z) via Q^j_{mu,-nu}(-z) and via Q^j_{-mu,nu}(-z)
    p_mu,   // P^j_{mu nu}(z) via P^j_{mu,-nu}(-z), Q^j_{mu,-nu}(-z)
    p_nu,   // P^j_{mu nu}(z) via P^j_{-mu,nu}(-z), Q^j_{-mu,nu}(-z)
    p_pair, // sin pi(mu+nu) P^j_{mu nu}(z) via P^j_{mu,-nu}(-z), P^j_{-mu,nu}(-z)
};

inline Residual reflect_argument(Reflection kind, const IndexTriple& t, const Argument& arg)
{
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    const double s = detail::upper_sign(arg);
    const Argument ma = detail::negated(arg);
    switch (kind) {
    case Reflection::q: {
        FnValue q = q_second_kind(t, arg);
        FnValue qa = q_second_kind({j, mu, -nu}, ma);
        FnValue qb = q_second_kind({j, -mu, nu}, ma);
        FnValue ga = gamma_ratio({j - nu + 1.0}, {j + nu + 1.0});
        FnValue gb = gamma_ratio({j + mu + 1.0}, {j - mu + 1.0});
        if (q.pole() || qa.pole() || qb.pole() || ga.pole() || gb.pole()) {
            Residual r;
            r.flags = flag_pole;
            return r;
        }
        cplx ph = exp_i_pi(-s * (j + 1.0));
        Residual ra = detail::residual_from(q, detail::scaled(qa, ph * exp_i_pi(-2.0 * nu) * ga.value));
        Residual rb = detail::residual_from(q, detail::scaled(qb, ph * exp_i_pi(2.0 * mu) * gb.value));
        return ra.relative() >= rb.relative() ? ra : rb;
    }
    case Reflection::p_mu: {
        FnValue p = p_first_kind(t, arg);
        FnValue g = gamma_ratio({j + nu + 1.0}, {j - nu + 1.0});
        FnValue pm = p_first_kind({j, mu, -nu}, ma);
        FnValue qm = q_second_kind({j, mu, -nu}, ma);
        if (g.pole() || qm.pole()) {
            Residual r;
            r.flags = flag_pole;
            return r;
        }
        FnValue lhs = detail::scaled(p, g.value);
        cplx c2 = -2.0 / pi * exp_i_pi(s * nu) * exp_i_pi(-(mu + nu)) * sin_pi(j + mu);
        FnValue rhs = detail::combine(exp_i_pi(s * j), pm, c2, qm);
        return detail::residual_from(lhs, rhs, {std::abs(pm.value), std::abs(c2 * qm.value)});
    }
    case Reflection::p_nu: {
        FnValue p = p_first_kind(t, arg);
        FnValue g = gamma_ratio({j - mu + 1.0}, {j + mu + 1.0});
        FnValue pm = p_first_kind({j, -mu, nu}, ma);
        FnValue qm = q_second_kind({j, -mu, nu}, ma);
        if (g.pole() || qm.pole()) {
            Residual r;
            r.flags = flag_pole;
            return r;
        }
        FnValue lhs = detail::scaled(p, g.value);
        cplx c2 = -2.0 / pi * exp_i_pi(-s * mu) * exp_i_pi(mu + nu) * sin_pi(j - nu);
        FnValue rhs = detail::combine(exp_i_pi(s * j), pm, c2, qm);
        return detail::residual_from(lhs, rhs, {std::abs(pm.value), std::abs(c2 * qm.value)});
    }
    case Reflection::p_pair: {
        FnValue p = p_first_kind(t, arg);
        FnValue pa = p_first_kind({j, mu, -nu}, ma);
        FnValue pb = p_first_kind({j, -mu, nu}, ma);
        FnValue lhs = detail::scaled(p, sin_pi(mu + nu) / pi);
        cplx ca = exp_i_pi(-s * mu) * reciprocal_gamma(j + nu + 1.0) * reciprocal_gamma(-j + nu);
        cplx cb = -exp_i_pi(s * nu) * reciprocal_gamma(j - mu + 1.0) * reciprocal_gamma(-j - mu);
        FnValue rhs = detail::combine(ca, pa, cb, pb);
        return detail::residual_from(lhs, rhs, {std::abs(ca * pa.value), std::abs(cb * pb.value)});
    }
    }
    throw std::invalid_argument("unknown reflection");
}

enum class Discontinuity {
    q_left,  // (Q(x+i0) - Q(x-i0))/2i on x < -1
    p_left,  // (P(x+i0) - P(x-i0))/2i on x < -1
    p_right, // (P(x+i0) - P(x-i0))/2i on -1 < x < 1
    q_right, // (e^{i pi(nu-mu)/2} Q(x+i0) - e^{-i pi(nu-mu)/2} Q(x-i0))/2i on -1 < x < 1
};

inline void check_cut(Discontinuity kind, double x)
{
    bool left = kind == Discontinuity::q_left || kind == Discontinuity::p_left;
    if (left ? !(x < -1.0) : !(x > -1.0 && x < 1.0))
        throw DomainError("discontinuity: x is not on the requested cut");
}

// Closed form of the jump across the cut.
inline FnValue discontinuity(Discontinuity kind, const IndexTriple& t, double x)
{
    check_cut(kind, x);
    const cplx j = t.j, mu = t.mu, nu = t.nu;
    switch (kind) {
    case Discontinuity::q_left: {
        FnValue g = gamma_ratio({j - nu + 1.0}, {j + nu + 1.0});
        FnValue q = q_second_kind({j, mu, -nu}, {-x});
        if (g.pole() || q.pole())
            return FnValue::make_pole();
        return detail::scaled(q, exp_i_pi(-2.0 * nu) * sin_pi(j) * g.value);
    }
    case Discontinuity::p_left: {
        FnValue g = gamma_ratio({j - nu + 1.0}, {j + nu + 1.0});
        FnValue p = p_first_kind({j, mu, -nu}, {-x});
        FnValue q = q_second_kind({j, mu, -nu}, {-x});
        if (g.pole() || q.pole())
            return FnValue::make_pole();
        cplx c2 = -2.0 / pi * exp_i_pi(-(mu + nu)) * sin_pi(nu) * sin_pi(j + mu);
        return detail::scaled(detail::combine(sin_pi(j), p, c2, q), g.value);
    }
    case Discontinuity::p_right:
        return detail::scaled(p_tilde(t, x), sin_pi((nu - mu) / 2.0));
    case Discontinuity::q_right:
        return detail::scaled(p_tilde(t, x), -pi / 2.0 * exp_i_pi(-(nu - mu)));
    }
    throw std::invalid_argument("unknown discontinuity");
}

// The jump computed from boundary values: exact one-sided limits when
// offset == 0, otherwise evaluations at x +- i*offset.
inline FnValue boundary_jump(Discontinuity kind, const IndexTriple& t, double x, double offset = 0.0)
{
    check_cut(kind, x);
    auto at = [&](double sgn) -> Argument {
        if (offset == 0.0)
            return {cplx(x, 0.0), sgn > 0 ? Side::above : Side::below};
        return {cplx(x, sgn * offset)};
    };
    bool is_q = kind == Discontinuity::q_left || kind == Discontinuity::q_right;
    FunctionKind fk = is_q ? FunctionKind::Q : FunctionKind::P;
    FnValue up = evaluate(fk, t, at(1.0));
    FnValue dn = evaluate(fk, t, at(-1.0));
    cplx cu = 1.0, cd = 1.0;
    if (kind == Discontinuity::q_right) {
        cu = exp_i_pi((t.nu - t.mu) / 2.0);
        cd = exp_i_pi(-(t.nu - t.mu) / 2.0);
    }
    const cplx inv2i(0.0, -0.5);
    return detail::combine(cu * inv2i, up, -cd * inv2i, dn);
}

enum class WronskianPair {
    pp, // W(P^j_{mu nu}, P^j_{nu mu})
    qq, // W(Q^j_{mu nu}, Q^{-j-1}_{nu mu})
};

inline FnValue wronskian_closed_form(WronskianPair pair, const IndexTriple& t, const Argument& arg)
{
    detail::cut_side(arg);
    const cplx z = arg.z;
    if (z == cplx(1.0) || z == cplx(-1.0))
        throw DomainError("Wronskian: z = +-1");
    FnValue r;
    if (pair == WronskianPair::pp) {
        r.value = 2.0 / pi * sin_pi(t.nu - t.mu) / (1.0 - z * z);
    } else {
        cplx den = sin_pi(t.j + t.mu) * sin_pi(t.j - t.nu);
        cplx num = sin_pi(2.0 * t.j);
        if (std::abs(den) < pole_tolerance) {
            if (std::abs(num) < pole_tolerance)
                throw DegenerateError("Wronskian: 0/0 in the sine ratio");
            return FnValue::make_pole();
        }
        r.value = pi / 2.0 * num / den / (1.0 - z * z);
    }
    r.abs_error = std::abs(r.value) * 8.0 * eps;
    return r;
}

// P^j_{mu 0}(z): the associated Legendre function of the first kind (Hobson/Bateman normalization).
inline FnValue associated_legendre_p(cplx j, cplx mu, const Argument& arg)
{
    return p_first_kind({j, mu, 0.0}, arg);
}

inline FnValue associated_legendre_q(cplx j, cplx mu, const Argument& arg)
{
    return q_second_kind({j, mu, 0.0}, arg);
}

// Jacobi polynomial P_n^{(alpha, beta)}(z) by the three-term recurrence, with
// the explicit finite sum as a fallback when a recurrence coefficient vanishes.
inline cplx jacobi_polynomial(int n, cplx alpha, cplx beta, cplx z)
{
    if (n < 0)
        throw DomainError("jacobi_polynomial: negative degree");
    auto explicit_sum = [&]() {
        // sum_k C(n+alpha, n-k) C(n+beta, k) ((z-1)/2)^k ((z+1)/2)^{n-k}
        auto binom = [](cplx w, int m) {
            cplx r = 1.0;
            for (int i = 0; i < m; ++i)
                r *= (w - double(i)) / double(i + 1);
            return r;
        };
        cplx s = 0.0;
        for (int k = 0; k <= n; ++k)
            s += binom(double(n) + alpha, n - k) * binom(double(n) + beta, k) * std::pow((z - 1.0) / 2.0, k)
                 * std::pow((z + 1.0) / 2.0, n - k);
        return s;
    };
    if (n == 0)
        return 1.0;
    cplx y0 = 1.0;
    cplx y1 = (alpha + 1.0) + (alpha + beta + 2.0) * (z - 1.0) / 2.0;
    const cplx ab = alpha + beta;
    for (int k = 2; k <= n; ++k) {
        double kk = k;
        cplx denom = 2.0 * kk * (kk + ab) * (2.0 * kk + ab - 2.0);
        if (std::abs(denom) < 1e-12 || std::abs(2.0 * kk + ab - 1.0) < 1e-12)
            return explicit_sum();
        cplx g1 = (2.0 * kk + ab - 1.0) * ((2.0 * kk + ab) * (2.0 * kk + ab - 2.0) * z + alpha * alpha - beta * beta);
        cplx g0 = -2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) * (2.0 * kk + ab);
        cplx yk = (g1 * y1 + g0 * y0) / denom;
        y0 = y1;
        y1 = yk;
    }
    return y1;
}

// P^j_{mu nu}(z) rebuilt from the Jacobi polynomial of degree j - nu.
inline FnValue reduce_to_jacobi(const IndexTriple& t, const Argument& arg)
{
    Side s = detail::cut_side(arg);
    cplx dn = t.j - t.nu;
    if (!detail::nonnegative_integer(dn))
        throw PreconditionError("reduce_to_jacobi: j - nu must be a nonnegative integer");
    int n = static_cast<int>(std::lround(dn.real()));
    const cplx mu = t.mu, nu = t.nu, z = arg.z;
    FnValue g = gamma_ratio({dn + 1.0}, {t.j - mu + 1.0});
    if (g.pole())
        return g;
    if (g.zero())
        return FnValue::make_zero();
    cplx pref = branch_power((z - 1.0) / 2.0, (nu - mu) / 2.0, s) * branch_power((z + 1.0) / 2.0, (nu + mu) / 2.0, s);
    FnValue r;
    r.value = g.value * pref * jacobi_polynomial(n, nu - mu, nu + mu, z);
    r.abs_error = std::abs(r.value) * 64.0 * eps * (n + 1);
    return r;
}

} // namespace genleg
