// Command-line front end: eval, table, verify and triangle subcommands.
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error, 3 I/O error.
#pragma once

#include <genleg/parallel.hpp>
#include <genleg/triangle.hpp>
#include <genleg/verify.hpp>
#include <genleg/wigner.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace genleg::cli {

enum ExitCode : int { exit_ok = 0, exit_fail = 1, exit_usage = 2, exit_io = 3 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

// Locale-independent real literal; a leading '+' is accepted.
inline double parse_real(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v))
        throw UsageError("not a finite real number: '" + std::string(s) + "'");
    return v;
}

// Complex literal "a", "a+bi" or "a-bi".
inline cplx parse_complex(std::string_view s)
{
    if (s.empty() || s.back() != 'i')
        return parse_real(s);
    std::string_view body = s.substr(0, s.size() - 1);
    // the sign separating the parts is the last one not following an exponent marker
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k], prev = body[k - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
            try {
                return {parse_real(body.substr(0, k)), parse_real(body.substr(k))};
            } catch (const UsageError&) {
                break;
            }
        }
    }
    throw UsageError("not a complex literal (a, a+bi, a-bi): '" + std::string(s) + "'");
}

inline Side parse_side(const std::string& s)
{
    if (s.empty())
        return Side::off_axis;
    if (s == "above")
        return Side::above;
    if (s == "below")
        return Side::below;
    throw UsageError("side must be 'above' or 'below'");
}

// "start" or "start:stop:step"; points start + k step for k = 0 .. floor((stop-start)/step).
inline std::vector<cplx> parse_range(const std::string& s)
{
    std::size_t c1 = s.find(':');
    if (c1 == std::string::npos)
        return {parse_complex(s)};
    std::size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos)
        throw UsageError("range must be 'start' or 'start:stop:step': '" + s + "'");
    cplx start = parse_complex(s.substr(0, c1));
    cplx stop = parse_complex(s.substr(c1 + 1, c2 - c1 - 1));
    cplx step = parse_complex(s.substr(c2 + 1));
    if (step == cplx(0.0))
        throw UsageError("range step must be nonzero: '" + s + "'");
    double t = ((stop - start) / step).real();
    if (t < -1e-9)
        return {};
    double count = std::floor(t + 1e-9) + 1.0;
    if (count > 1e7)
        throw UsageError("range has too many points: '" + s + "'");
    std::vector<cplx> pts;
    for (int k = 0; k < static_cast<int>(count); ++k)
        pts.push_back(start + static_cast<double>(k) * step);
    return pts;
}

enum class Function { P, Q, Ptilde, wigner_d };

inline Function parse_function(const std::string& s)
{
    if (s == "P")
        return Function::P;
    if (s == "Q")
        return Function::Q;
    if (s == "Ptilde")
        return Function::Ptilde;
    if (s == "wigner-d")
        return Function::wigner_d;
    throw UsageError("function must be one of P, Q, Ptilde, wigner-d");
}

inline int doubled_half_integer(cplx v, const char* name)
{
    double twice = 2.0 * v.real();
    if (v.imag() != 0.0 || twice != std::round(twice) || std::abs(twice) > 1e6)
        throw DomainError(std::string("wigner-d: ") + name + " must be an integer or half-integer");
    return static_cast<int>(twice);
}

struct Row {
    cplx j, mu, nu, z;
    Side side = Side::off_axis;
    FnValue value;
    std::string flags;
};

inline constexpr const char* flag_domain = "domain-error";
inline constexpr const char* flag_no_convergence = "no-convergence";

// Side reported for the row: the requested one on a cut, off-axis elsewhere.
inline Side effective_side(Function f, cplx z, Side side)
{
    if ((f == Function::P || f == Function::Q) && detail::on_cut(z))
        return side;
    return Side::off_axis;
}

inline FnValue compute(Function f, cplx j, cplx mu, cplx nu, cplx z, Side side)
{
    switch (f) {
    case Function::P:
        return p_first_kind({j, mu, nu}, {z, side});
    case Function::Q:
        return q_second_kind({j, mu, nu}, {z, side});
    case Function::Ptilde:
        if (z.imag() != 0.0)
            throw DomainError("Ptilde: argument must be real");
        return p_tilde({j, mu, nu}, z.real());
    case Function::wigner_d:
        if (z.imag() != 0.0)
            throw DomainError("wigner-d: argument must be real");
        return wigner_d({doubled_half_integer(j, "j"), doubled_half_integer(mu, "mu"), doubled_half_integer(nu, "nu")},
                        z.real());
    }
    throw DomainError("unknown function");
}

// Evaluates one row; domain and convergence failures become row flags.
inline Row evaluate_row(Function f, cplx j, cplx mu, cplx nu, cplx z, Side side)
{
    Row r{j, mu, nu, z, effective_side(f, z, side), {}, {}};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        r.value = compute(f, j, mu, nu, z, side);
        r.flags = flags_to_string(r.value.flags);
    } catch (const DomainError&) {
        r.value = FnValue{cplx(nan, nan), nan};
        r.flags = flag_domain;
    } catch (const ConvergenceError&) {
        r.value = FnValue{cplx(nan, nan), nan};
        r.flags = flag_no_convergence;
    }
    return r;
}

inline const std::vector<std::string>& columns()
{
    static const std::vector<std::string> c{"j_re", "j_im", "mu_re", "mu_im", "nu_re", "nu_im", "z_re",
                                            "z_im", "side", "value_re", "value_im", "abs_err", "flags"};
    return c;
}

// Shortest round-trip decimal form.
inline std::string format_double(double v)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline ordered_json row_json(const Row& r)
{
    ordered_json o;
    o["j_re"] = r.j.real();
    o["j_im"] = r.j.imag();
    o["mu_re"] = r.mu.real();
    o["mu_im"] = r.mu.imag();
    o["nu_re"] = r.nu.real();
    o["nu_im"] = r.nu.imag();
    o["z_re"] = r.z.real();
    o["z_im"] = r.z.imag();
    o["side"] = to_string(r.side);
    o["value_re"] = r.value.value.real();
    o["value_im"] = r.value.value.imag();
    o["abs_err"] = r.value.abs_error;
    o["flags"] = r.flags;
    return o;
}

inline std::string row_csv(const Row& r)
{
    std::string s;
    for (double v : {r.j.real(), r.j.imag(), r.mu.real(), r.mu.imag(), r.nu.real(), r.nu.imag(), r.z.real(), r.z.imag()})
        s += format_double(v) + ",";
    s += to_string(r.side);
    for (double v : {r.value.value.real(), r.value.value.imag(), r.value.abs_error})
        s += "," + format_double(v);
    s += "," + r.flags;
    return s;
}

inline std::string json_text(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

struct TableRequest {
    Function function = Function::P;
    std::vector<cplx> j, mu, nu, z;
    Side side = Side::off_axis;
    bool json = false;
    unsigned threads = 1;
};

// Rows in lexicographic order of (j, mu, nu, z) range indices.
inline std::string make_table(const TableRequest& req)
{
    const std::size_t nz = req.z.size(), nnu = req.nu.size(), nmu = req.mu.size();
    const std::size_t n = req.j.size() * nmu * nnu * nz;
    std::vector<Row> rows(n);
    parallel_for(n, req.threads, [&](std::size_t i) {
        std::size_t iz = i % nz, inu = (i / nz) % nnu, imu = (i / nz / nnu) % nmu, ij = i / nz / nnu / nmu;
        rows[i] = evaluate_row(req.function, req.j[ij], req.mu[imu], req.nu[inu], req.z[iz], req.side);
    });
    if (req.json) {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows)
            arr.push_back(row_json(r));
        return json_text(arr);
    }
    std::string s;
    for (std::size_t k = 0; k < columns().size(); ++k)
        s += (k ? "," : "") + columns()[k];
    s += "\n";
    for (const Row& r : rows)
        s += row_csv(r) + "\n";
    return s;
}

inline ordered_json complex_json(cplx v)
{
    return ordered_json::array({v.real(), v.imag()});
}

inline ordered_json report_json(const VerifyReport& r)
{
    ordered_json o;
    o["suite"] = r.suite;
    o["seed"] = r.seed;
    o["samples"] = r.samples;
    o["cases"] = r.cases;
    o["excluded"] = r.excluded;
    o["failures"] = r.failures;
    o["max_residual"] = r.max_residual;
    o["tolerance"] = r.tolerance;
    o["pass"] = r.pass;
    ordered_json recs = ordered_json::array();
    for (const CaseRecord& c : r.records) {
        ordered_json rec;
        rec["check"] = c.check;
        ordered_json in = ordered_json::object();
        for (const auto& [name, v] : c.inputs)
            in[name] = complex_json(v);
        rec["inputs"] = in;
        rec["residual"] = c.residual;
        rec["scale"] = c.scale;
        rec["tolerance"] = c.tolerance;
        rec["flags"] = flags_to_string(c.flags);
        rec["excluded"] = c.excluded;
        rec["note"] = c.note;
        rec["pass"] = !c.failed();
        recs.push_back(rec);
    }
    o["records"] = recs;
    return o;
}

inline ordered_json triangle_json(const TriangleConfig& c)
{
    TriangleResiduals r = triangle_residuals(c);
    ordered_json o;
    o["kind"] = c.kind == TriangleKind::hyperbolic ? "hyperbolic" : "trigonometric";
    o["z1"] = c.z1;
    o["z2"] = c.z2;
    o["parameter"] = c.parameter;
    o["z_third"] = c.z_third;
    o["p1"] = c.p1;
    o["p2"] = c.p2;
    o["residuals"] = {{"third", r.third}, {"z1_back", r.z1_back}, {"z2_back", r.z2_back}, {"products", r.products}};
    return o;
}

inline bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        return false;
    f << text;
    f.flush();
    return static_cast<bool>(f);
}

// Runs the command line args (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized Legendre functions P, Q, P-tilde and Wigner d: evaluation, tables and identity checks"};
    app.require_subcommand(1);
    const unsigned hw = default_thread_count();

    std::string fn, j_s, mu_s, nu_s, z_s, side_s;
    auto* eval = app.add_subcommand("eval", "Evaluate one function value and print it as JSON");
    eval->add_option("function", fn, "P, Q, Ptilde or wigner-d")->required();
    eval->add_option("j", j_s, "degree j")->required();
    eval->add_option("mu", mu_s, "index mu")->required();
    eval->add_option("nu", nu_s, "index nu")->required();
    eval->add_option("z", z_s, "argument z (x for Ptilde and wigner-d)")->required();
    eval->add_option("--side", side_s, "above or below, for real z < 1");

    std::string t_fn, t_j, t_mu, t_nu, t_z, t_side, format = "csv", output;
    unsigned t_threads = hw;
    auto* table = app.add_subcommand("table", "Tabulate a function over index and argument ranges");
    table->add_option("function", t_fn, "P, Q, Ptilde or wigner-d")->required();
    table->add_option("--j", t_j, "range start[:stop:step]")->required();
    table->add_option("--mu", t_mu, "range start[:stop:step]")->required();
    table->add_option("--nu", t_nu, "range start[:stop:step]")->required();
    table->add_option("--z", t_z, "range start[:stop:step]")->required();
    table->add_option("--side", t_side, "above or below, for real z < 1");
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--output", output, "output file (default: standard output)");
    table->add_option("--threads", t_threads, "worker threads")->check(CLI::PositiveNumber);

    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    std::optional<double> tolerance;
    unsigned v_threads = hw;
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print the JSON report");
    verify->add_option("suite", suite, "ode, symmetry, recurrence, connection, discontinuity, asymptotic, wigner, "
                                       "integrals, addition or all")
        ->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "cases per randomized check (0: suite default)")->check(CLI::NonNegativeNumber);
    verify->add_option("--tolerance", tolerance, "replace every tolerance with this value")->check(CLI::PositiveNumber);
    verify->add_option("--threads", v_threads, "worker threads")->check(CLI::PositiveNumber);

    std::string kind, z1_s, z2_s, par_s;
    auto* tri = app.add_subcommand("triangle", "Solve the hyperbolic or trigonometric triangle relations");
    tri->add_option("kind", kind, "hyperbolic or trigonometric")->required()->check(CLI::IsMember({"hyperbolic", "trigonometric"}));
    tri->add_option("z1", z1_s, "z1 > 1")->required();
    tri->add_option("z2", z2_s, "z2 > 1")->required();
    tri->add_option("parameter", par_s, "alpha or theta")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval) {
            Function f = parse_function(fn);
            cplx j = parse_complex(j_s), mu = parse_complex(mu_s), nu = parse_complex(nu_s), z = parse_complex(z_s);
            Side side = parse_side(side_s);
            FnValue v = compute(f, j, mu, nu, z, side);
            Row r{j, mu, nu, z, effective_side(f, z, side), v, flags_to_string(v.flags)};
            out << json_text(row_json(r));
            return exit_ok;
        }
        if (*table) {
            TableRequest req;
            req.function = parse_function(t_fn);
            req.j = parse_range(t_j);
            req.mu = parse_range(t_mu);
            req.nu = parse_range(t_nu);
            req.z = parse_range(t_z);
            req.side = parse_side(t_side);
            req.json = format == "json";
            req.threads = t_threads;
            std::string text = make_table(req);
            if (output.empty()) {
                out << text;
                out.flush();
                if (!out)
                    return exit_io;
            } else if (!write_file(output, text)) {
                err << "error: cannot write '" << output << "'\n";
                return exit_io;
            }
            return exit_ok;
        }
        if (*verify) {
            if (suite != "all" && !is_suite(suite))
                throw UsageError("unknown suite '" + suite + "'");
            VerifyOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            opt.tolerance = tolerance;
            opt.threads = v_threads;
            VerifyReport rep = run_suite(suite, opt);
            out << json_text(report_json(rep));
            return rep.pass ? exit_ok : exit_fail;
        }
        if (*tri) {
            TriangleKind k = kind == "hyperbolic" ? TriangleKind::hyperbolic : TriangleKind::trigonometric;
            out << json_text(triangle_json(solve_triangle(parse_real(z1_s), parse_real(z2_s), parse_real(par_s), k)));
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace genleg::cli
