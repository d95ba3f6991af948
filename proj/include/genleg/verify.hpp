// Verification suites: randomized and fixed checks of the identities, each
// reduced to a list of case records with a relative residual and tolerance.
// Cases are generated from (seed, suite, index) so the report does not depend
// on the thread count.
#pragma once

#include "addition.hpp"
#include "asymptotics.hpp"
#include "identities.hpp"
#include "parallel.hpp"
#include "recurrence.hpp"
#include "wigner.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace genleg {

using CaseInputs = std::vector<std::pair<std::string, cplx>>;

struct CaseRecord {
    std::string check;
    CaseInputs inputs;
    double residual = 0.0; // relative to scale
    double scale = 0.0;
    double tolerance = 0.0;
    unsigned flags = flag_none;
    bool excluded = false; // pole or degenerate point, not counted
    std::string note;      // exclusion reason or unexpected error

    bool failed() const { return !excluded && (!note.empty() || !(residual <= tolerance)); }
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    std::size_t cases = 0;    // records counted
    std::size_t excluded = 0; // records skipped as poles or degenerate
    std::size_t failures = 0;
    double max_residual = 0.0; // residual of the worst case (largest residual/tolerance)
    double tolerance = 0.0;    // tolerance of the worst case
    bool pass = true;
    std::vector<CaseRecord> records;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int samples = 0; // 0 selects the suite default
    std::optional<double> tolerance;
    unsigned threads = 1;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"ode",        "symmetry", "recurrence", "connection", "discontinuity",
                                                "asymptotic", "wigner",   "integrals",  "addition"};
    return names;
}

inline int default_samples(const std::string& suite)
{
    if (suite == "ode")
        return 500;
    if (suite == "symmetry" || suite == "recurrence" || suite == "connection" || suite == "discontinuity")
        return 300;
    if (suite == "addition")
        return 10;
    return 20; // asymptotic, wigner, integrals
}

// splitmix64 stream keyed by (seed, suite, index).
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : state_(seed)
    {
        state_ = next() ^ (stream * 0xD1B54A32D192ED03ull);
        state_ = next() ^ (index * 0x9E3779B97F4A7C15ull);
        next();
    }

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    cplx box(double a, double b)
    {
        double re = uniform(a, b);
        return {re, uniform(a, b)};
    }
    cplx box(double re_a, double re_b, double im_a, double im_b)
    {
        double re = uniform(re_a, re_b);
        return {re, uniform(im_a, im_b)};
    }
    // Off the real axis almost surely, r_min <= |z| <= r_max.
    cplx annulus(double r_min, double r_max)
    {
        double r = uniform(r_min, r_max);
        return std::polar(r, uniform(-pi, pi));
    }

private:
    std::uint64_t state_;
};

namespace detail {

inline CaseInputs triple_inputs(const IndexTriple& t, cplx z)
{
    return {{"j", t.j}, {"mu", t.mu}, {"nu", t.nu}, {"z", z}};
}

inline CaseRecord from_residual(std::string check, CaseInputs inputs, const Residual& r, double tol)
{
    CaseRecord c;
    c.check = std::move(check);
    c.inputs = std::move(inputs);
    c.tolerance = tol;
    c.flags = r.flags;
    if (r.flags & flag_pole) {
        c.excluded = true;
        c.note = "pole";
        return c;
    }
    c.scale = r.scale;
    c.residual = r.relative();
    if (!std::isfinite(c.residual))
        c.note = "non-finite residual";
    return c;
}

inline CaseRecord from_value(std::string check, CaseInputs inputs, double residual, double scale, double tol,
                             unsigned flags = flag_none)
{
    CaseRecord c;
    c.check = std::move(check);
    c.inputs = std::move(inputs);
    c.residual = residual;
    c.scale = scale;
    c.tolerance = tol;
    c.flags = flags;
    if (!std::isfinite(residual))
        c.note = "non-finite residual";
    return c;
}

// Runs one check; degenerate points are excluded, other exceptions are failures.
template <class F>
CaseRecord guarded(const std::string& check, const CaseInputs& inputs, double tol, F&& f)
{
    try {
        return f();
    } catch (const DegenerateError& e) {
        CaseRecord c;
        c.check = check;
        c.inputs = inputs;
        c.tolerance = tol;
        c.excluded = true;
        c.note = std::string("degenerate: ") + e.what();
        return c;
    } catch (const std::exception& e) {
        CaseRecord c;
        c.check = check;
        c.inputs = inputs;
        c.tolerance = tol;
        c.note = std::string("error: ") + e.what();
        return c;
    }
}

using CaseFn = std::function<std::vector<CaseRecord>()>;

inline std::vector<CaseRecord> run_cases(const std::vector<CaseFn>& cases, unsigned threads)
{
    std::vector<std::vector<CaseRecord>> out(cases.size());
    parallel_for(cases.size(), threads, [&](std::size_t i) { out[i] = cases[i](); });
    std::vector<CaseRecord> flat;
    for (auto& v : out)
        for (auto& r : v)
            flat.push_back(std::move(r));
    return flat;
}

inline IndexTriple random_triple(Sampler& s, double a, double b)
{
    cplx j = s.box(a, b);
    cplx mu = s.box(a, b);
    return {j, mu, s.box(a, b)};
}

// ---- ode ---------------------------------------------------------------

inline std::vector<CaseFn> ode_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 1, i);
            IndexTriple t = random_triple(s, -3.0, 3.0);
            cplx z = s.annulus(1.1, 5.0);
            std::vector<CaseRecord> out;
            for (FunctionKind k : {FunctionKind::P, FunctionKind::Q}) {
                std::string name = k == FunctionKind::P ? "ode/P" : "ode/Q";
                out.push_back(guarded(name, triple_inputs(t, z), 1e-5, [&] {
                    return from_residual(name, triple_inputs(t, z), ode_residual(k, t, {z}), 1e-5);
                }));
            }
            return out;
        });
    return cases;
}

// ---- symmetry ----------------------------------------------------------

inline std::vector<CaseFn> symmetry_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 2, i);
            IndexTriple t = random_triple(s, -3.0, 3.0);
            cplx z = s.annulus(1.1, 5.0);
            const double tol = 1e-10;
            std::vector<CaseRecord> out;
            auto add = [&](const char* name, IndexSymmetry rule, FunctionKind k) {
                out.push_back(guarded(name, triple_inputs(t, z), tol, [&] {
                    Residual r = residual_from(apply_index_symmetry(rule, k, t, {z}), evaluate(k, t, {z}));
                    return from_residual(name, triple_inputs(t, z), r, tol);
                }));
            };
            add("reflect-j/P", IndexSymmetry::reflect_j, FunctionKind::P);
            add("swap/Q", IndexSymmetry::swap_q, FunctionKind::Q);
            add("negate-both/P", IndexSymmetry::negate_both, FunctionKind::P);
            add("negate-both/Q", IndexSymmetry::negate_both, FunctionKind::Q);
            return out;
        });
    return cases;
}

// ---- recurrence --------------------------------------------------------

inline std::vector<CaseFn> recurrence_cases(std::uint64_t seed, int samples)
{
    static const Argument points[] = {{cplx(1.5, 0.0)}, {cplx(2.0, 1.0)}, {cplx(5.0, 0.0)}, {cplx(-3.0, 0.5)}};
    static const RecurrenceRule rules[] = {RecurrenceRule::half_step_mp, RecurrenceRule::half_step_pm,
                                           RecurrenceRule::half_step_pp, RecurrenceRule::half_step_mm,
                                           RecurrenceRule::full_step_z,  RecurrenceRule::deriv_down,
                                           RecurrenceRule::deriv_up};
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 3, i);
            IndexTriple t = random_triple(s, -3.0, 3.0);
            const Argument arg = points[i % 4];
            const int n = 1 + i % 2;
            const double tol = 1e-8;
            std::vector<CaseRecord> out;
            for (RecurrenceRule rule : rules) {
                bool deriv = rule == RecurrenceRule::deriv_down || rule == RecurrenceRule::deriv_up;
                for (FunctionKind k : {FunctionKind::P, FunctionKind::Q}) {
                    std::string name = std::string(to_string(rule)) + (k == FunctionKind::P ? "/P" : "/Q");
                    CaseInputs in = triple_inputs(t, arg.z);
                    if (deriv)
                        in.emplace_back("n", cplx(n));
                    out.push_back(guarded(name, in, tol, [&] {
                        return from_residual(name, in, recurrence_residual({rule, deriv ? n : 0}, k, t, arg), tol);
                    }));
                }
            }
            return out;
        });
    return cases;
}

// ---- connection --------------------------------------------------------

inline std::vector<CaseFn> connection_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 4, i);
            IndexTriple t = random_triple(s, -3.0, 3.0);
            cplx z = s.annulus(1.1, 5.0);
            const CaseInputs in = triple_inputs(t, z);
            const double tol = 1e-8;
            std::vector<CaseRecord> out;
            auto add = [&](const char* name, double tl, auto&& fn) {
                out.push_back(guarded(name, in, tl, [&] { return from_residual(name, in, fn(), tl); }));
            };
            add("q-from-p", tol, [&] { return connection_qpp(t, {z}); });
            add("q-minus-q-reflected", tol, [&] { return connection_qq_difference(t, {z}); });
            add("reflect-z/q", tol, [&] { return reflect_argument(Reflection::q, t, {z}); });
            add("reflect-z/p-mu", tol, [&] { return reflect_argument(Reflection::p_mu, t, {z}); });
            add("reflect-z/p-nu", tol, [&] { return reflect_argument(Reflection::p_nu, t, {z}); });
            add("reflect-z/p-pair", tol, [&] { return reflect_argument(Reflection::p_pair, t, {z}); });
            add("wronskian/pp", tol, [&] { return wronskian_residual(WronskianPair::pp, t, {z}); });
            add("wronskian/qq", tol, [&] { return wronskian_residual(WronskianPair::qq, t, {z}); });
            return out;
        });
    return cases;
}

// ---- discontinuity -----------------------------------------------------

// Closed-form jump against (c_up f(x + i eps) - c_dn f(x - i eps))/2i, eps = 1e-9.
inline Residual jump_residual(Discontinuity kind, const IndexTriple& t, double x)
{
    const double offset = 1e-9;
    FnValue closed = discontinuity(kind, t, x);
    bool is_q = kind == Discontinuity::q_left || kind == Discontinuity::q_right;
    FunctionKind fk = is_q ? FunctionKind::Q : FunctionKind::P;
    FnValue up = evaluate(fk, t, {cplx(x, offset)});
    FnValue dn = evaluate(fk, t, {cplx(x, -offset)});
    if (closed.pole() || up.pole() || dn.pole())
        return pole_residual();
    cplx cu = 1.0, cd = 1.0;
    if (kind == Discontinuity::q_right) {
        cu = exp_i_pi((t.nu - t.mu) / 2.0);
        cd = exp_i_pi(-(t.nu - t.mu) / 2.0);
    }
    const cplx inv2i(0.0, -0.5);
    FnValue jump = combine(cu * inv2i, up, -cd * inv2i, dn);
    return residual_from(closed, jump, {std::abs(cu * up.value) / 2.0, std::abs(cd * dn.value) / 2.0});
}

inline std::vector<CaseFn> discontinuity_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 5, i);
            IndexTriple t = random_triple(s, -3.0, 3.0);
            double x_left = s.uniform(-5.0, -1.1);
            double x_right = s.uniform(-0.9, 0.9);
            const double tol = 1e-6;
            std::vector<CaseRecord> out;
            auto add = [&](const char* name, Discontinuity kind, double x) {
                CaseInputs in = triple_inputs(t, x);
                out.push_back(guarded(name, in, tol, [&] {
                    return from_residual(name, in, jump_residual(kind, t, x), tol);
                }));
            };
            add("jump/q-left", Discontinuity::q_left, x_left);
            add("jump/p-left", Discontinuity::p_left, x_left);
            add("jump/p-right", Discontinuity::p_right, x_right);
            add("jump/q-right", Discontinuity::q_right, x_right);
            return out;
        });
    return cases;
}

// ---- asymptotic --------------------------------------------------------

inline double ratio_error(const FnValue& r)
{
    if (r.pole())
        throw DomainError("asymptotic ratio at a pole");
    return std::abs(r.value - 1.0);
}

// Ratio error at T (tolerance tol_end at the last T) and contraction per doubling.
template <class F>
std::vector<CaseRecord> ratio_family(const std::string& name, const CaseInputs& base, const std::vector<double>& ts,
                                     double tol_end, F&& ratio_at)
{
    std::vector<CaseRecord> out;
    std::vector<double> errs;
    try {
        for (double t : ts)
            errs.push_back(ratio_error(ratio_at(t)));
    } catch (const std::exception& e) {
        CaseRecord c;
        c.check = name;
        c.inputs = base;
        c.tolerance = tol_end;
        c.note = std::string("error: ") + e.what();
        return {c};
    }
    CaseInputs in = base;
    in.emplace_back("T", cplx(ts.back()));
    out.push_back(from_value(name + "/ratio", in, errs.back(), 1.0, tol_end));
    for (std::size_t k = 1; k < ts.size(); ++k) {
        CaseInputs cin = base;
        cin.emplace_back("T", cplx(ts[k - 1]));
        out.push_back(from_value(name + "/contraction", cin, errs[k] / errs[k - 1], errs[k - 1], 0.6));
    }
    return out;
}

inline std::vector<CaseFn> asymptotic_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    const double big_t = 1e6;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 6, i);
            double d = s.uniform(0.0, 3.0), sum = s.uniform(-1.0, 1.0), y = s.uniform(0.5, 5.0);
            double a = s.uniform(0.2, 1.5), b = s.uniform(0.5, 2.0), dk = s.uniform(0.0, 2.0), x = s.uniform(0.1, 3.0);
            std::vector<CaseRecord> out;
            CaseInputs bin{{"nu-mu", d}, {"nu+mu", sum}, {"y", y}, {"t", big_t}};
            out.push_back(guarded("bessel-limit", bin, 5e-4, [&] {
                LimitPair p = limit_bessel(d, sum, y, big_t);
                return from_value("bessel-limit", bin, p.absolute_gap(), 1.0, 5e-4);
            }));
            CaseInputs kin{{"a", a}, {"b", b}, {"nu-mu", dk}, {"x", x}, {"t", big_t}};
            out.push_back(guarded("kummer-limit", kin, 5e-4, [&] {
                LimitPair p = limit_kummer(a, b, dk, x, big_t);
                return from_value("kummer-limit", kin, p.relative_gap(), std::abs(p.target.value), 5e-4);
            }));
            CaseInputs cin{{"nu-mu", dk}, {"y", y}, {"t", big_t}};
            out.push_back(guarded("kummer-bessel-corner", cin, 1e-3, [&] {
                LimitPair pk = limit_kummer(0.0, 1.0, dk, y * y / 4.0, big_t);
                LimitPair pb = limit_bessel(dk, 0.0, y, big_t);
                double gap = std::abs(pk.scaled.value - pb.scaled.value);
                return from_value("kummer-bessel-corner", cin, gap, 1.0, 1e-3);
            }));
            return out;
        });

    cases.push_back([] {
        CaseInputs in{{"mu", 0.0}, {"nu", 0.0}, {"alpha", 1.0}};
        auto out = ratio_family("q-large-j", in, {20.0, 40.0, 80.0}, 0.02,
                                [](double j) { return asym_q_large_j({j, 0.0, 0.0}, 1.0); });
        // the 2% bound is stated at j = 50
        CaseInputs in50 = in;
        in50.emplace_back("T", 50.0);
        out.push_back(guarded("q-large-j/ratio", in50, 0.02, [&] {
            return from_value("q-large-j/ratio", in50, ratio_error(asym_q_large_j({50.0, 0.0, 0.0}, 1.0)), 1.0, 0.02);
        }));
        return out;
    });
    cases.push_back([] {
        CaseInputs in{{"j", 0.5}, {"nu+mu", 0.2}, {"alpha", 1.2}};
        return ratio_family("p-large-nu-minus-mu", in, {20.0, 40.0, 80.0}, 0.05, [](double d) {
            return asym_p_large_numu({0.5, (0.2 - d) / 2.0, (0.2 + d) / 2.0}, 1.2);
        });
    });
    for (double k : {0.0, 1.0})
        cases.push_back([k] {
            CaseInputs in{{"j-mu", k}, {"nu", 0.3}, {"alpha", 1.0}};
            return ratio_family("q-fixed-j-minus-mu", in, {20.0, 40.0, 80.0}, 0.05, [k](double j) {
                return asym_q_fixed_jmu({j, j - k, 0.3}, 1.0, QBranch::j);
            });
        });
    return cases;
}

// ---- wigner ------------------------------------------------------------

inline std::vector<CaseFn> wigner_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    static const DSymmetry rules[] = {DSymmetry::reflect_j, DSymmetry::negate_swap, DSymmetry::transpose,
                                      DSymmetry::reflect_x_mu, DSymmetry::reflect_x_nu};
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 7, i);
            double theta = s.uniform(0.0, pi);
            double x = std::cos(theta);
            std::vector<CaseRecord> out;
            for (int j2 = 0; j2 <= 8; ++j2) {
                CaseInputs in{{"j", j2 / 2.0}, {"x", x}};
                const int dim = j2 + 1;
                out.push_back(guarded("d-vs-rotation", in, 1e-10, [&] {
                    std::vector<double> m = rotation_matrix_y(j2, theta);
                    double worst = 0.0;
                    unsigned flags = 0;
                    for (int a = 0; a < dim; ++a)
                        for (int b = 0; b < dim; ++b) {
                            FnValue d = wigner_d({j2, j2 - 2 * a, j2 - 2 * b}, x);
                            flags |= d.flags;
                            worst = std::max(worst, std::abs(d.value.real() - m[a * dim + b]));
                        }
                    return from_value("d-vs-rotation", in, worst, 1.0, 1e-10, flags);
                }));
                out.push_back(guarded("unitarity", in, 1e-10, [&] {
                    double worst = 0.0;
                    for (int a = 0; a < dim; ++a) {
                        double sum = 0.0;
                        for (int b = 0; b < dim; ++b) {
                            double d = wigner_d({j2, j2 - 2 * a, j2 - 2 * b}, x).value.real();
                            sum += d * d;
                        }
                        worst = std::max(worst, std::abs(sum - 1.0));
                    }
                    return from_value("unitarity", in, worst, 1.0, 1e-10);
                }));
                for (DSymmetry rule : rules) {
                    std::string name = std::string("d-symmetry/") + to_string(rule);
                    out.push_back(guarded(name, in, 1e-11, [&] {
                        double worst = 0.0;
                        for (int a = 0; a < dim; ++a)
                            for (int b = 0; b < dim; ++b)
                                worst = std::max(worst, std::abs(d_symmetry_residual(rule, {j2, j2 - 2 * a, j2 - 2 * b}, x).value));
                        return from_value(name, in, worst, 1.0, 1e-11);
                    }));
                }
            }
            return out;
        });
    // orthogonality matrix over j, l <= 4 at fixed (mu, nu), in units of 1/2
    static const std::pair<int, int> pairs[] = {{0, 0}, {1, -1}, {1, 1}, {2, 0}, {4, -2}, {3, 1}};
    for (auto [mu2, nu2] : pairs)
        cases.push_back([mu2, nu2] {
            std::vector<CaseRecord> out;
            int lo = std::max(std::abs(mu2), std::abs(nu2));
            for (int j2 = lo; j2 <= 8; j2 += 2)
                for (int l2 = lo; l2 <= 8; l2 += 2) {
                    CaseInputs in{{"j", j2 / 2.0}, {"l", l2 / 2.0}, {"mu", mu2 / 2.0}, {"nu", nu2 / 2.0}};
                    out.push_back(guarded("orthogonality", in, 1e-10, [&] {
                        FnValue v = d_orthogonality({j2, mu2, nu2}, {l2, mu2, nu2});
                        double expect = j2 == l2 ? 2.0 / (j2 + 1.0) : 0.0;
                        return from_value("orthogonality", in, std::abs(v.value - expect), 1.0, 1e-10, v.flags);
                    }));
                }
            return out;
        });
    return cases;
}

// ---- integrals ---------------------------------------------------------

inline std::vector<CaseFn> integral_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 8, i);
            cplx j = s.box(-0.5, 1.5, -0.2, 0.2);
            cplx l = j + s.box(0.8, 2.0, -0.2, 0.2);
            cplx mu = s.box(-0.4, 0.4, -0.2, 0.2);
            cplx nu = s.box(-0.4, 0.4, -0.2, 0.2);
            CaseInputs in{{"j", j}, {"l", l}, {"mu", mu}, {"nu", nu}};
            return std::vector<CaseRecord>{guarded("pq-integral", in, 1e-6, [&] {
                return from_residual("pq-integral", in, pq_integral(j, l, mu, nu).residual, 1e-6);
            })};
        });
    // both orthogonal systems, 2 <= 2j <= 10
    for (int j2 = 2; j2 <= 10; ++j2)
        for (int n = 0; n <= 2; ++n)
            for (int mirror = 0; mirror <= 1; ++mirror)
                cases.push_back([=] {
                    Sampler s(seed, 9, static_cast<std::uint64_t>(j2 * 8 + n * 2 + mirror));
                    const double j = j2 / 2.0, nu = j - n;
                    // endpoint exponents nu - mu and nu + mu kept above -0.4
                    if (nu < -0.3)
                        return std::vector<CaseRecord>{};
                    double m = s.uniform(-nu - 0.4, nu + 0.4);
                    cplx mu_s = mirror ? -nu : m, nu_s = mirror ? -m : nu;
                    CaseInputs in{{"j", j}, {"mu", mu_s}, {"nu", nu_s}};
                    std::vector<CaseRecord> out;
                    out.push_back(guarded("norm", in, 1e-8, [&] {
                        return from_residual("norm", in, norm_integral(j, mu_s, nu_s).residual, 1e-8);
                    }));
                    if (n >= 1) {
                        cplx j_other = j - 1.0;
                        CaseInputs cin{{"j1", j}, {"j2", j_other}, {"mu", mu_s}, {"nu", nu_s}};
                        out.push_back(guarded("cross-orthogonality", cin, 1e-8, [&] {
                            FnValue v = cross_orthogonality(j, j_other, mu_s, nu_s);
                            FnValue n1 = gamma_ratio({j + mu_s + 1.0, j - nu_s + 1.0}, {j - mu_s + 1.0, j + nu_s + 1.0});
                            FnValue n2 = gamma_ratio({j_other + mu_s + 1.0, j_other - nu_s + 1.0},
                                                     {j_other - mu_s + 1.0, j_other + nu_s + 1.0});
                            double scale = std::sqrt(std::abs(n1.value * 2.0 / (2.0 * j + 1.0))
                                                     * std::abs(n2.value * 2.0 / (2.0 * j_other + 1.0)));
                            return from_value("cross-orthogonality", cin, std::abs(v.value) / scale, scale, 1e-8,
                                              v.flags);
                        }));
                    }
                    return out;
                });
    struct Series {
        cplx mu, nu;
        double z, zeta;
        int n;
        double tol;
    };
    for (Series c : {Series{0.0, 0.0, 1.5, 3.0, 30, 1e-8}, Series{0.3, 0.8, 1.2, 4.0, 40, 1e-6}})
        cases.push_back([c] {
            CaseInputs in{{"mu", c.mu}, {"nu", c.nu}, {"z", c.z}, {"zeta", c.zeta}, {"N", double(c.n)}};
            return std::vector<CaseRecord>{guarded("generating-series", in, c.tol, [&] {
                FnValue v = generating_series_partial_sum(c.mu, c.nu, c.z, c.zeta, c.n);
                FnValue target;
                target.value = 1.0 / (c.zeta - c.z);
                return from_residual("generating-series", in, residual_from(v, target), c.tol);
            })};
        });
    cases.push_back([] {
        CaseInputs in{{"j1", 1.0}, {"j2", 2.0}, {"mu", 0.0}, {"nu", 0.0}, {"a", 1.2}, {"b", 3.0}};
        return std::vector<CaseRecord>{guarded("product-integral/PP", in, 1e-8, [&] {
            auto c = product_integral_identity(1.0, 2.0, 0.0, 0.0, FunctionKind::P, FunctionKind::P, 1.2, 3.0);
            return from_residual("product-integral/PP", in, c.residual, 1e-8);
        })};
    });
    cases.push_back([] {
        const cplx j1(1.3, 0.4), j2(0.6, -0.2), mu(0.2, 0.1), nu(-0.3, 0.0);
        CaseInputs in{{"j1", j1}, {"j2", j2}, {"mu", mu}, {"nu", nu}, {"a", 1.5}, {"b", 4.0}};
        return std::vector<CaseRecord>{guarded("product-integral/QQ", in, 1e-7, [&] {
            auto c = product_integral_identity(j1, j2, mu, nu, FunctionKind::Q, FunctionKind::Q, 1.5, 4.0);
            return from_residual("product-integral/QQ", in, c.residual, 1e-7);
        })};
    });
    return cases;
}

// ---- addition ----------------------------------------------------------

inline std::vector<CaseFn> addition_cases(std::uint64_t seed, int samples)
{
    std::vector<CaseFn> cases;
    for (int i = 0; i < samples; ++i)
        cases.push_back([=] {
            Sampler s(seed, 10, i);
            cplx j = s.box(0.5, 2.0, -0.2, 0.2);
            cplx mu = s.box(-0.4, 0.4, -0.1, 0.1);
            cplx lam = s.box(-0.4, 0.4, -0.1, 0.1);
            cplx nu = s.box(-0.4, 0.4, -0.1, 0.1);
            double z1 = s.uniform(1.5, 3.5), z2 = s.uniform(1.5, 3.5);
            double alpha = s.uniform(-1.0, 1.0), theta = s.uniform(-2.5, 2.5);
            // well separated pair for the series theorems
            double zs_big = s.uniform(3.0, 4.0), zs_small = s.uniform(1.2, 1.6);
            bool swap = s.uniform() < 0.5;
            cplx js = s.box(0.0, 1.0, -0.1, 0.1);
            cplx mus = s.box(-0.3, 0.3), nus = s.box(-0.3, 0.3);
            std::vector<CaseRecord> out;

            CaseInputs in{{"j", j}, {"mu", mu}, {"lambda", lam}, {"nu", nu}, {"z1", z1}, {"z2", z2}};
            out.push_back(guarded("multiplication", in, 1e-6, [&] {
                return from_residual("multiplication", in,
                                     multiplication_formula_check(j, mu, lam, nu, z1, z2).residual, 1e-6);
            }));
            CaseInputs cin{{"j", j}, {"mu", mu}, {"nu", nu}, {"alpha", alpha}, {"z1", z1}, {"z2", z2}};
            out.push_back(guarded("addition-contour", cin, 1e-5, [&] {
                return from_residual("addition-contour", cin, addition_contour_check(j, mu, nu, alpha, z1, z2).residual,
                                     1e-5);
            }));
            if (z1 != z2) {
                MixedVariant v = z1 > z2 ? MixedVariant::q_first : MixedVariant::p_first;
                const char* name = z1 > z2 ? "mixed/q-first" : "mixed/p-first";
                out.push_back(guarded(name, in, 1e-5, [&] {
                    return from_residual(name, in, mixed_pq_check(v, j, mu, lam, nu, z1, z2).residual, 1e-5);
                }));
            }
            CaseInputs rin{{"j", j}, {"mu", mu}, {"nu", nu}, {"z", z1}};
            out.push_back(guarded("q-integral", rin, 1e-6, [&] {
                return from_residual("q-integral", rin, q_integral_representation({j, mu, nu}, z1).residual, 1e-6);
            }));

            double sz1 = swap ? zs_small : zs_big, sz2 = swap ? zs_big : zs_small;
            for (FunctionKind k : {FunctionKind::Q, FunctionKind::P}) {
                std::string name = k == FunctionKind::Q ? "series/Q" : "series/P";
                CaseInputs sin_in{{"j", js}, {"mu", mus}, {"nu", nus}, {"theta", theta}, {"z1", sz1}, {"z2", sz2}};
                const int orders[] = {5, 10, 25};
                std::vector<double> res;
                try {
                    for (int n : orders)
                        res.push_back(series_addition_check(k, js, mus, nus, theta, sz1, sz2, n).residual.relative());
                } catch (const DegenerateError& e) {
                    CaseRecord c = from_value(name, sin_in, 0.0, 0.0, 1e-5);
                    c.excluded = true;
                    c.note = std::string("degenerate: ") + e.what();
                    out.push_back(c);
                    continue;
                } catch (const std::exception& e) {
                    CaseRecord c = from_value(name, sin_in, 0.0, 0.0, 1e-5);
                    c.note = std::string("error: ") + e.what();
                    out.push_back(c);
                    continue;
                }
                CaseInputs fin = sin_in;
                fin.emplace_back("N", 25.0);
                out.push_back(from_value(name, fin, res.back(), 1.0, 1e-5));
                for (std::size_t m = 1; m < res.size(); ++m) {
                    CaseInputs min = sin_in;
                    min.emplace_back("N", double(orders[m]));
                    // strict decrease with the truncation order, unless already at rounding level
                    double ratio = res[m - 1] < 1e-14 ? 0.0 : res[m] / res[m - 1];
                    out.push_back(from_value(name + "/decrease", min, ratio, res[m - 1], 1.0 - 1e-12));
                }
            }
            return out;
        });
    return cases;
}

inline std::vector<CaseFn> suite_cases(const std::string& suite, std::uint64_t seed, int samples)
{
    if (suite == "ode")
        return ode_cases(seed, samples);
    if (suite == "symmetry")
        return symmetry_cases(seed, samples);
    if (suite == "recurrence")
        return recurrence_cases(seed, samples);
    if (suite == "connection")
        return connection_cases(seed, samples);
    if (suite == "discontinuity")
        return discontinuity_cases(seed, samples);
    if (suite == "asymptotic")
        return asymptotic_cases(seed, samples);
    if (suite == "wigner")
        return wigner_cases(seed, samples);
    if (suite == "integrals")
        return integral_cases(seed, samples);
    if (suite == "addition")
        return addition_cases(seed, samples);
    throw std::invalid_argument("unknown suite: " + suite);
}

inline void summarize(VerifyReport& r)
{
    r.cases = r.excluded = r.failures = 0;
    r.max_residual = r.tolerance = 0.0;
    r.pass = true;
    double worst = -1.0;
    for (const CaseRecord& c : r.records) {
        if (c.excluded) {
            ++r.excluded;
            continue;
        }
        ++r.cases;
        if (c.failed()) {
            ++r.failures;
            r.pass = false;
        }
        double q = c.note.empty() ? c.residual / c.tolerance : std::numeric_limits<double>::infinity();
        if (std::isnan(q))
            q = std::numeric_limits<double>::infinity();
        if (q > worst) {
            worst = q;
            r.max_residual = c.note.empty() ? c.residual : std::numeric_limits<double>::infinity();
            r.tolerance = c.tolerance;
        }
    }
}

} // namespace detail

inline bool is_suite(const std::string& name)
{
    if (name == "all")
        return true;
    for (const auto& s : suite_names())
        if (s == name)
            return true;
    return false;
}

// Runs a suite ("all" runs every suite in order, each with its own default
// sample count unless samples is set). Throws std::invalid_argument for an
// unknown suite name.
inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt)
{
    if (!is_suite(suite))
        throw std::invalid_argument("unknown suite: " + suite);
    if (opt.samples < 0)
        throw std::invalid_argument("samples must be nonnegative");
    VerifyReport report;
    report.suite = suite;
    report.seed = opt.seed;
    report.samples = opt.samples;
    std::vector<std::string> list = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    for (const std::string& name : list) {
        int n = opt.samples > 0 ? opt.samples : default_samples(name);
        if (suite != "all")
            report.samples = n;
        auto recs = detail::run_cases(detail::suite_cases(name, opt.seed, n), opt.threads);
        for (auto& c : recs) {
            if (suite == "all")
                c.check = name + ":" + c.check;
            report.records.push_back(std::move(c));
        }
    }
    if (opt.tolerance)
        for (auto& c : report.records)
            c.tolerance = *opt.tolerance;
    detail::summarize(report);
    return report;
}

} // namespace genleg
