// Command-line surface: evaluation tables, zero tables, Gauss rules,
// transforms of CSV samples, extremizer and zero-interval certificates, and
// the verification suites. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "jlogan/hyperboloid.hpp"
#include "jlogan/io.hpp"
#include "jlogan/jacobi.hpp"
#include "jlogan/logan.hpp"
#include "jlogan/quadrature.hpp"
#include "jlogan/transform.hpp"
#include "jlogan/verify.hpp"
#include "jlogan/zerocount.hpp"
#include "jlogan/zeros.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Parameter selection shared by every subcommand: either --alpha/--beta or
// --dim, never both.
struct ParamArgs {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<int> dim;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "Weight exponent alpha (with --beta)");
        cmd->add_option("--beta", beta, "Weight exponent beta (with --alpha)");
        cmd->add_option("--dim", dim, "Hyperboloid dimension d >= 2 instead of (alpha, beta)");
    }

    jlogan::JacobiParams resolve() const {
        if (dim) {
            if (alpha || beta)
                throw std::invalid_argument("give either --alpha/--beta or --dim, not both");
            return jlogan::params_for_dim(*dim).params;
        }
        if (!alpha || !beta)
            throw std::invalid_argument("parameters required: --alpha and --beta, or --dim");
        jlogan::JacobiParams p{*alpha, *beta};
        jlogan::validate(p);
        return p;
    }
};

// Output sink: --output PATH or standard output.
struct Sink {
    std::string path;
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        return file;
    }
};

jlogan::SampledCurve read_input_csv(const std::string& path) {
    if (path == "-") return jlogan::read_csv(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return jlogan::read_csv(in);
}

void sample_to(std::ostream& out, const std::string& xname,
               const std::vector<double>& grid, const std::function<double(double)>& f) {
    jlogan::SampledCurve c;
    c.x = grid;
    c.y.reserve(grid.size());
    for (double x : grid) c.y.push_back(f(x));
    jlogan::write_csv(out, c, xname + ",value");
}

ordered_json expansion_json(const jlogan::EigenExpansion& e) {
    const char* basis = e.basis_kind == jlogan::EigenBasis::PHI ? "phi"
                        : e.basis_kind == jlogan::EigenBasis::PSI_SHIFTED
                            ? "psi_shifted"
                            : "psi_plus_const";
    return ordered_json{{"basis", basis},
                       {"tau", e.tau},
                       {"alpha", e.params.alpha},
                       {"beta", e.params.beta},
                       {"frequencies", e.frequencies},
                       {"coefficients", e.coefficients}};
}

ordered_json jets_json(const jlogan::JetReport& r) {
    return ordered_json{{"derivatives", r.derivatives},
                       {"scales", r.scales},
                       {"warnings", r.warnings}};
}

ordered_json report_json(const std::string& suite, const ordered_json& params,
                         const std::vector<jlogan::VerifyCheck>& checks) {
    ordered_json out{{"suite", suite}, {"params", params}, {"checks", ordered_json::array()}};
    for (const auto& c : checks)
        out["checks"].push_back(ordered_json{{"name", c.name},
                                             {"quantity", c.quantity},
                                             {"value", c.value},
                                             {"tolerance", c.tolerance},
                                             {"pass", c.pass}});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi harmonic analysis on the half-line and frequency-bound extremizers"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- eval ----------------------------------------------------------
    ParamArgs ep;
    std::string e_what;
    double e_lambda = 0.0, e_t = 0.0;
    bool e_has_lambda = false, e_has_t = false;
    std::string e_grid;
    Sink e_out;
    auto* eval = app.add_subcommand("eval", "Evaluate phi, psi, the hyperbolic weight, or the spectral weight");
    ep.attach(eval);
    eval->add_option("--what", e_what, "One of: phi, psi, weight, sweight")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "weight", "sweight"}));
    eval->add_option("--lambda", e_lambda, "Frequency argument")->each([&](std::string) { e_has_lambda = true; });
    eval->add_option("--t", e_t, "Time argument")->each([&](std::string) { e_has_t = true; });
    eval->add_option("--emit-grid", e_grid, "Sample over a:b:n instead of a single point");
    eval->add_option("--output", e_out.path, "Write to file instead of standard output");
    eval->callback([&] {
        jlogan::JacobiParams p = ep.resolve();
        bool over_lambda = e_what == "sweight";
        std::function<double(double)> f;
        if (e_what == "phi")
            f = [&, p](double t) { return jlogan::phi(p, t, e_lambda); };
        else if (e_what == "psi")
            f = [&, p](double t) { return jlogan::psi(p, t, e_lambda); };
        else if (e_what == "weight")
            f = [&, p](double t) { return jlogan::weight_delta(p, t); };
        else
            f = [&, p](double lam) { return jlogan::spectral_weight(p, lam); };
        std::ostream& out = e_out.open();
        if (!e_grid.empty()) {
            sample_to(out, over_lambda ? "lambda" : "t", jlogan::parse_grid(e_grid), f);
            return;
        }
        if (over_lambda) {
            if (!e_has_lambda)
                throw std::invalid_argument("eval --what sweight needs --lambda or --emit-grid");
            out << fmt(f(e_lambda)) << "\n";
            return;
        }
        if (!e_has_t) throw std::invalid_argument("eval needs --t or --emit-grid");
        out << fmt(f(e_t)) << "\n";
    });

    // ---- zeros ---------------------------------------------------------
    ParamArgs zp;
    double z_tau = 0.0;
    std::size_t z_count = 0;
    std::string z_kind = "lambda", z_format = "json";
    Sink z_out;
    auto* zeros = app.add_subcommand("zeros", "Zero tables of phi, phi', or psi' in the frequency");
    zp.attach(zeros);
    zeros->add_option("--tau", z_tau, "Evaluation time tau")->required();
    zeros->add_option("--count", z_count, "Number of zeros")->required();
    zeros->add_option("--kind", z_kind, "One of: lambda, mu, star")
        ->check(CLI::IsMember({"lambda", "mu", "star"}));
    zeros->add_option("--format", z_format, "json (bracketed list) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    zeros->add_option("--output", z_out.path, "Write to file instead of standard output");
    zeros->callback([&] {
        jlogan::JacobiParams p = zp.resolve();
        jlogan::ZeroKind kind = z_kind == "lambda" ? jlogan::ZeroKind::LAMBDA
                                : z_kind == "mu"   ? jlogan::ZeroKind::MU
                                                   : jlogan::ZeroKind::LAMBDA_STAR;
        auto table = jlogan::zeros(p, z_tau, z_count, kind);
        std::ostream& out = z_out.open();
        if (z_format == "csv") {
            out << "k,zero\n";
            for (std::size_t k = 0; k < table.zeros.size(); ++k)
                out << k + 1 << "," << fmt(table.zeros[k]) << "\n";
            return;
        }
        out << "[";
        for (std::size_t k = 0; k < table.zeros.size(); ++k) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.7f", table.zeros[k]);
            out << (k ? ", " : "") << buf;
        }
        out << "]\n";
    });

    // ---- quadrature ----------------------------------------------------
    ParamArgs qp;
    double q_tau = 0.0;
    std::size_t q_count = 0;
    std::string q_format = "csv";
    Sink q_out;
    auto* quad = app.add_subcommand("quadrature", "Gauss rule on the zero set of phi at tau");
    qp.attach(quad);
    quad->add_option("--tau", q_tau, "Evaluation time tau")->required();
    quad->add_option("--count", q_count, "Number of nodes")->required();
    quad->add_option("--format", q_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    quad->add_option("--output", q_out.path, "Write to file instead of standard output");
    quad->callback([&] {
        jlogan::JacobiParams p = qp.resolve();
        auto rule = jlogan::gauss_rule(p, jlogan::lambda_zeros(p, q_tau, q_count));
        std::ostream& out = q_out.open();
        if (q_format == "json") {
            out << ordered_json{{"tau", rule.tau},
                               {"count", rule.count},
                               {"nodes", rule.nodes},
                               {"weights", rule.weights}}
                       .dump(2)
                << "\n";
            return;
        }
        out << "node,weight\n";
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            out << fmt(rule.nodes[k]) << "," << fmt(rule.weights[k]) << "\n";
    });

    // ---- transform -----------------------------------------------------
    ParamArgs tp;
    std::string t_dir, t_input, t_grid;
    double t_lambda = 0.0, t_t = 0.0;
    bool t_has_lambda = false, t_has_t = false;
    Sink t_out;
    auto* trans = app.add_subcommand("transform",
                                     "Forward or inverse transform of a sampled function (two-column CSV)");
    tp.attach(trans);
    trans->add_option("--direction", t_dir, "forward or inverse")
        ->required()
        ->check(CLI::IsMember({"forward", "inverse"}));
    trans->add_option("--input", t_input, "CSV samples; '-' for standard input")->required();
    trans->add_option("--lambda", t_lambda, "Single output frequency (forward)")
        ->each([&](std::string) { t_has_lambda = true; });
    trans->add_option("--t", t_t, "Single output time (inverse)")
        ->each([&](std::string) { t_has_t = true; });
    trans->add_option("--emit-grid", t_grid, "Output grid a:b:n");
    trans->add_option("--output", t_out.path, "Write to file instead of standard output");
    trans->callback([&] {
        jlogan::JacobiParams p = tp.resolve();
        jlogan::SampledCurve in = read_input_csv(t_input);
        std::ostream& out = t_out.open();
        if (t_dir == "forward") {
            jlogan::SampledFunction g{in.x, in.y, in.x.empty() ? 0.0 : in.x.back()};
            auto F = [&](double lam) { return jlogan::jacobi_transform_sampled(g, p, lam); };
            if (!t_grid.empty()) {
                sample_to(out, "lambda", jlogan::parse_grid(t_grid), F);
                return;
            }
            if (!t_has_lambda)
                throw std::invalid_argument("transform forward needs --lambda or --emit-grid");
            out << fmt(F(t_lambda)) << "\n";
            return;
        }
        jlogan::LinearInterpolant f(std::move(in));
        std::vector<double> ts;
        if (!t_grid.empty())
            ts = jlogan::parse_grid(t_grid);
        else if (t_has_t)
            ts.push_back(t_t);
        else
            throw std::invalid_argument("transform inverse needs --t or --emit-grid");
        std::vector<double> vals = jlogan::inverse_transform_grid(f, p, ts);
        if (ts.size() == 1) {
            out << fmt(vals[0]) << "\n";
            return;
        }
        jlogan::SampledCurve c{ts, vals};
        jlogan::write_csv(out, c, "t,value");
    });

    // ---- extremizer ----------------------------------------------------
    ParamArgs xp;
    int x_m = 0;
    double x_tau = 0.0, x_lambda = 0.0;
    bool x_has_lambda = false, x_cert = false;
    std::string x_kind = "f", x_grid, x_grid_out;
    Sink x_out;
    auto* extr = app.add_subcommand("extremizer", "Frequency-bound extremizer f_m or F_m and its certificate");
    xp.attach(extr);
    extr->add_option("--m", x_m, "Number of constructed zeros")->required();
    extr->add_option("--tau", x_tau, "Support parameter tau")->required();
    extr->add_option("--kind", x_kind, "f (squared numerator) or F")
        ->check(CLI::IsMember({"f", "F"}));
    extr->add_option("--lambda", x_lambda, "Single evaluation frequency")
        ->each([&](std::string) { x_has_lambda = true; });
    extr->add_option("--emit-grid", x_grid, "Sample over a:b:n");
    extr->add_flag("--certificate", x_cert, "Emit the JSON construction certificate");
    extr->add_option("--grid-output", x_grid_out, "CSV path for --emit-grid next to a certificate");
    extr->add_option("--output", x_out.path, "Write to file instead of standard output");
    extr->callback([&] {
        jlogan::JacobiParams p = xp.resolve();
        auto kind = x_kind == "f" ? jlogan::ExtremizerKind::SMALL_F_M
                                  : jlogan::ExtremizerKind::F_M;
        auto f = jlogan::build_extremizer(p, x_m, x_tau, kind);
        if (!x_cert) {
            std::ostream& out = x_out.open();
            if (!x_grid.empty()) {
                sample_to(out, "lambda", jlogan::parse_grid(x_grid),
                          [&](double lam) { return f(lam); });
                return;
            }
            if (!x_has_lambda)
                throw std::invalid_argument("extremizer needs --lambda, --emit-grid, or --certificate");
            out << fmt(f(x_lambda)) << "\n";
            return;
        }
        auto a = jlogan::partial_fraction_coefficients(f.zeros);
        auto pm = jlogan::p_polynomial(p, x_m, x_tau);
        auto jets = jlogan::derivatives_at_tau(p, pm, 2 * x_m - 1);
        auto sup = jlogan::lambda_sup(f);
        ordered_json cert{{"m", x_m},
                          {"tau", x_tau},
                          {"alpha", p.alpha},
                          {"beta", p.beta},
                          {"kind", x_kind},
                          {"zeros", f.zeros},
                          {"partial_fraction", a},
                          {"expansion", expansion_json(pm)},
                          {"derivatives_at_tau", jets_json(jets)},
                          {"lambda_sup", sup.value},
                          {"boundary_warning", sup.boundary_warning}};
        std::ostream& out = x_out.open();
        out << cert.dump(2) << "\n";
        if (!x_grid.empty()) {
            if (x_grid_out.empty())
                throw std::invalid_argument("--emit-grid with --certificate needs --grid-output");
            std::ofstream gout(x_grid_out);
            if (!gout) throw std::runtime_error("cannot open output file: " + x_grid_out);
            sample_to(gout, "lambda", jlogan::parse_grid(x_grid),
                      [&](double lam) { return f(lam); });
        }
    });

    // ---- zerocount -----------------------------------------------------
    ParamArgs cp;
    int c_n = 0;
    double c_gamma = 0.0;
    std::string c_grid, c_grid_out;
    Sink c_out;
    auto* zc = app.add_subcommand("zerocount", "Certified threshold theta and extremal function G_n");
    cp.attach(zc);
    zc->add_option("--n", c_n, "Required zero count, 1..16")->required();
    zc->add_option("--gamma", c_gamma, "Spectral band edge")->required();
    zc->add_option("--emit-grid", c_grid, "Sample G over a:b:n");
    zc->add_option("--grid-output", c_grid_out, "CSV path for --emit-grid");
    zc->add_option("--output", c_out.path, "Write to file instead of standard output");
    zc->callback([&] {
        jlogan::JacobiParams p = cp.resolve();
        auto cert = jlogan::build_G(p, c_n, c_gamma);
        ordered_json j{{"n", cert.n},
                       {"gamma", cert.gamma},
                       {"theta", cert.theta},
                       {"expansion", expansion_json(cert.expansion)},
                       {"multiplicity", jets_json(cert.multiplicity_report)}};
        std::ostream& out = c_out.open();
        out << j.dump(2) << "\n";
        if (!c_grid.empty()) {
            if (c_grid_out.empty())
                throw std::invalid_argument("zerocount --emit-grid needs --grid-output");
            std::ofstream gout(c_grid_out);
            if (!gout) throw std::runtime_error("cannot open output file: " + c_grid_out);
            sample_to(gout, "t", jlogan::parse_grid(c_grid),
                      [&](double t) { return cert.expansion(t); });
        }
    });

    // ---- hyperboloid ---------------------------------------------------
    int h_dim = 0, h_m = 0;
    double h_tau = 0.0, h_lambda = 0.0;
    bool h_has_lambda = false;
    std::string h_grid, h_grid_out;
    Sink h_out;
    auto* hyp = app.add_subcommand("hyperboloid", "Frequency bound and spherical extremizer on H^d");
    hyp->add_option("--dim", h_dim, "Dimension d >= 2")->required();
    hyp->add_option("--m", h_m, "Number of constructed zeros")->required();
    hyp->add_option("--tau", h_tau, "Support parameter tau")->required();
    hyp->add_option("--lambda", h_lambda, "Also evaluate the spherical extremizer here")
        ->each([&](std::string) { h_has_lambda = true; });
    hyp->add_option("--emit-grid", h_grid, "Sample the spherical extremizer over a:b:n");
    hyp->add_option("--grid-output", h_grid_out, "CSV path for --emit-grid");
    hyp->add_option("--output", h_out.path, "Write to file instead of standard output");
    hyp->callback([&] {
        auto hp = jlogan::params_for_dim(h_dim);
        double bound = jlogan::logan_bound(h_dim, h_m, h_tau);
        ordered_json j{{"dim", h_dim},
                       {"alpha", hp.params.alpha},
                       {"beta", hp.params.beta},
                       {"m", h_m},
                       {"tau", h_tau},
                       {"bound", bound}};
        if (h_has_lambda)
            j["value"] = jlogan::spherical_extremizer(h_dim, h_m, h_tau, h_lambda);
        std::ostream& out = h_out.open();
        out << j.dump(2) << "\n";
        if (!h_grid.empty()) {
            if (h_grid_out.empty())
                throw std::invalid_argument("hyperboloid --emit-grid needs --grid-output");
            std::ofstream gout(h_grid_out);
            if (!gout) throw std::runtime_error("cannot open output file: " + h_grid_out);
            auto f = jlogan::spherical_extremizer(h_dim, h_m, h_tau);
            sample_to(gout, "lambda", jlogan::parse_grid(h_grid),
                      [&](double lam) { return f(lam); });
        }
    });

    // ---- verify --------------------------------------------------------
    ParamArgs vp;
    std::string v_suite;
    double v_tau = 1.0, v_gamma = 2.0;
    int v_m = 2, v_n = 4;
    std::optional<double> v_rel_tol, v_abs_tol;
    Sink v_out;
    auto* ver = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
    vp.attach(ver);
    ver->add_option("--suite", v_suite, "core, logan, zerocount, chebyshev, or all")
        ->required()
        ->check(CLI::IsMember({"core", "logan", "zerocount", "chebyshev", "all"}));
    ver->add_option("--tau", v_tau, "Support parameter (default 1)");
    ver->add_option("--m", v_m, "Extremizer order (default 2)");
    ver->add_option("--n", v_n, "Zero count for the zerocount suite (default 4)");
    ver->add_option("--gamma", v_gamma, "Band edge for the zerocount suite (default 2)");
    ver->add_option("--rel-tol", v_rel_tol, "Quadrature relative tolerance override")
        ->check(CLI::PositiveNumber);
    ver->add_option("--abs-tol", v_abs_tol, "Quadrature absolute tolerance override")
        ->check(CLI::PositiveNumber);
    ver->add_option("--output", v_out.path, "Write to file instead of standard output");
    ver->callback([&] {
        jlogan::JacobiParams p = vp.resolve();
        jlogan::QuadConfig qcfg;
        if (v_rel_tol) qcfg.rel_tol = *v_rel_tol;
        if (v_abs_tol) qcfg.abs_tol = *v_abs_tol;

        ordered_json params{{"alpha", p.alpha}, {"beta", p.beta}};
        if (v_suite == "core" || v_suite == "logan" || v_suite == "chebyshev" ||
            v_suite == "all")
            params["tau"] = v_tau;
        if (v_suite == "logan" || v_suite == "chebyshev" || v_suite == "all")
            params["m"] = v_m;
        if (v_suite == "zerocount" || v_suite == "all") {
            params["n"] = v_n;
            params["gamma"] = v_gamma;
        }

        std::vector<jlogan::VerifyCheck> checks;
        bool ok = true;
        auto absorb = [&](const jlogan::VerifyReport& r, bool prefix) {
            for (auto c : r.checks) {
                if (prefix) c.name = r.suite + "." + c.name;
                checks.push_back(std::move(c));
            }
            ok = ok && r.all_pass;
        };
        bool prefix = v_suite == "all";
        if (v_suite == "core" || v_suite == "all") absorb(jlogan::verify_core(p, v_tau), prefix);
        if (v_suite == "logan" || v_suite == "all")
            absorb(jlogan::verify_logan(p, v_m, v_tau, qcfg), prefix);
        if (v_suite == "zerocount" || v_suite == "all")
            absorb(jlogan::verify_zerocount(p, v_n, v_gamma), prefix);
        if (v_suite == "chebyshev" || v_suite == "all")
            absorb(jlogan::verify_chebyshev(p, v_m, v_tau), prefix);

        std::ostream& out = v_out.open();
        out << report_json(v_suite, params, checks).dump(2) << "\n";
        if (!ok) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
