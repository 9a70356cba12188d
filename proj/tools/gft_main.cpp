#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gft/audit.hpp"
#include "gft/checks.hpp"
#include "gft/functions.hpp"
#include "gft/heat.hpp"
#include "gft/kernel.hpp"
#include "gft/report.hpp"
#include "gft/transform.hpp"

using json = nlohmann::ordered_json;
using gft::report::format_double;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWarn = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParam = 65;

struct Common {
    double k = 0.5;
    int n = 2;
    double tol = 1e-10;
    double abs_tol = 1e-14;
    double radius = 30.0;
    std::string out;
    std::string format = "csv";
};

gft::quad::QuadSpec quad_spec(const Common& c) {
    gft::quad::QuadSpec s;
    s.rel_tol = c.tol;
    s.abs_tol = c.abs_tol;
    s.truncation_radius = c.radius;
    return s;
}

// stdout by default, file when --out given
int with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return kExitOk;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << path << "\n";
        return kExitError;
    }
    fn(os);
    return kExitOk;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
    if (count < 1 || !(hi >= lo)) throw gft::DomainError("empty or invalid grid");
    std::vector<double> g(count);
    for (int i = 0; i < count; ++i)
        g[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    return g;
}

json envelope_json(const gft::audit::DecayEnvelope& e) {
    return json{{"rate", e.rate}, {"constant", e.constant}, {"residual", e.residual}};
}

json maybe_inf_json(const gft::audit::MaybeInfinite& m) {
    if (m.infinite) return json("infinite");
    return json(m.value);
}

int cmd_transform(const Common& c, const std::string& fn_spec, double lmin,
                  double lmax, int count) {
    const auto params = gft::make_params(c.k, c.n);
    const auto f = gft::functions::parse_function(fn_spec, params);
    auto grid = linear_grid(lmin, lmax, count);
    auto res = gft::transform::forward(params, f.profile, grid, quad_spec(c));

    auto emit = [&](std::ostream& os) {
        if (c.format == "json") {
            json j;
            j["schema_version"] = "1";
            j["k"] = c.k;
            j["n"] = c.n;
            j["fn"] = f.name;
            json rows = json::array();
            for (std::size_t i = 0; i < res.grid.size(); ++i)
                rows.push_back(json{{"lambda", res.grid.points[i]},
                                    {"re_F", res.grid.values[i].real()},
                                    {"im_F", res.grid.values[i].imag()},
                                    {"err_est", res.err_estimates[i]}});
            j["values"] = rows;
            os << j.dump(2) << "\n";
        } else {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < res.grid.size(); ++i)
                rows.push_back({format_double(res.grid.points[i]),
                                format_double(res.grid.values[i].real()),
                                format_double(res.grid.values[i].imag()),
                                format_double(res.err_estimates[i])});
            gft::report::write_csv(os, {"lambda", "re_F", "im_F", "err_est"}, rows);
        }
    };
    int rc = with_output(c.out, emit);
    if (rc != kExitOk) return rc;
    if (res.any_failure) return kExitError;
    if (res.any_warning) return kExitWarn;
    return kExitOk;
}

int cmd_kernel_table(const Common& c, const std::vector<double>& xs,
                     const std::vector<double>& lambdas) {
    const auto params = gft::make_params(c.k, c.n);
    std::vector<std::vector<std::string>> rows;
    for (double x : xs)
        for (double lam : lambdas) {
            const auto kv = gft::kernel_b(params, x, lam);
            rows.push_back({format_double(x), format_double(lam),
                            format_double(kv.value.real()),
                            format_double(kv.value.imag()),
                            format_double(kv.even_part.real()),
                            format_double(kv.odd_part.real()),
                            format_double(kv.odd_part.imag())});
        }
    return with_output(c.out, [&](std::ostream& os) {
        gft::report::write_csv(
            os, {"x", "lambda", "re_B", "im_B", "re_even", "re_odd", "im_odd"},
            rows);
    });
}

int cmd_specfun_check(const Common& c) {
    std::vector<std::vector<std::string>> rows;
    for (double alpha : {-0.4, 0.0, 0.5, 1.5}) {
        gft::specfun::BesselOrder order(alpha);
        for (int i = 0; i < 7; ++i) {
            const double x = 0.5 * std::pow(100.0, i / 6.0);
            const double s = gft::specfun::bessel_normalized(order, x);
            const double o = gft::specfun::bessel_poisson_oracle(order, x);
            rows.push_back({format_double(alpha), format_double(x),
                            format_double(s), format_double(o),
                            format_double(std::abs(s - o))});
        }
    }
    return with_output(c.out, [&](std::ostream& os) {
        gft::report::write_csv(os, {"alpha", "x", "series", "oracle", "abs_err"},
                               rows);
    });
}

int cmd_heat(const Common& c, const std::string& u0_spec,
             const std::vector<double>& times, double xmin, double xmax,
             int count, bool with_report) {
    const auto params = gft::make_params(c.k, c.n);
    const auto u0 = gft::functions::parse_function(u0_spec, params);
    for (double t : times)
        if (t < 0.0) throw gft::DomainError("negative time");
    if (times.empty()) throw gft::DomainError("no times given");
    auto xs = linear_grid(xmin, xmax, count);
    const auto spec = quad_spec(c);

    if (with_report) {
        json j;
        j["schema_version"] = "1";
        j["k"] = c.k;
        j["n"] = c.n;
        j["u0"] = u0.name;
        json slices = json::array();
        // residual probes on a symmetric uniform grid
        auto probe_grid = linear_grid(-6.0, 6.0, 241);
        const double ht = 2e-3;
        for (double t : times) {
            json jt;
            jt["t"] = t;
            if (t > ht) {
                auto prev = gft::heat::heat_propagate(params, u0.profile, t - ht,
                                                      probe_grid, spec);
                auto mid = gft::heat::heat_propagate(params, u0.profile, t,
                                                     probe_grid, spec);
                auto next = gft::heat::heat_propagate(params, u0.profile, t + ht,
                                                      probe_grid, spec);
                jt["pde_residual"] = gft::heat::heat_residual(params, prev, mid, next);
            }
            // semigroup: two half steps against one full step
            auto half = gft::heat::heat_solution_profile(params, u0.profile,
                                                         t / 2.0, spec);
            auto two_step = gft::heat::heat_propagate(params, half, t / 2.0, xs, spec);
            auto one_step = gft::heat::heat_propagate(params, u0.profile, t, xs, spec);
            double defect = 0.0;
            for (std::size_t i = 0; i < two_step.grid.size(); ++i)
                defect = std::max(defect,
                                  std::abs(two_step.grid.values[i] -
                                           one_step.grid.values[i]));
            jt["semigroup_defect"] = defect;
            slices.push_back(jt);
        }
        j["slices"] = slices;
        return with_output(c.out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    }

    std::vector<std::vector<std::string>> rows;
    for (double t : times) {
        auto st = gft::heat::heat_propagate(params, u0.profile, t, xs, spec);
        for (std::size_t i = 0; i < st.grid.size(); ++i)
            rows.push_back({format_double(t), format_double(st.grid.points[i]),
                            format_double(st.grid.values[i].real()),
                            format_double(st.grid.values[i].imag())});
    }
    return with_output(c.out, [&](std::ostream& os) {
        gft::report::write_csv(os, {"t", "x", "re_u", "im_u"}, rows);
    });
}

int cmd_audit(const Common& c, const std::string& fn_spec, bool functionals,
              double p, double q) {
    const auto params = gft::make_params(c.k, c.n);
    const auto f = gft::functions::parse_function(fn_spec, params);
    gft::audit::AuditOptions opts;
    opts.with_functionals = functionals;
    opts.cp_p = p;
    opts.cp_q = q;
    const auto rep = gft::audit::audit(params, f.profile, quad_spec(c), opts);

    json j;
    j["schema_version"] = "1";
    j["k"] = c.k;
    j["n"] = c.n;
    j["fn"] = f.name;
    j["envelope_f"] = envelope_json(rep.envelope_f);
    j["envelope_Ff"] = envelope_json(rep.envelope_Ff);
    j["product"] = rep.product;
    j["verdict"] = gft::audit::to_string(rep.verdict);
    j["margin"] = rep.margin;
    j["miyachi"] = rep.miyachi ? maybe_inf_json(*rep.miyachi) : json(nullptr);
    if (rep.cowling_price) {
        j["cowling_price"] = json{{"p_norm", maybe_inf_json(rep.cowling_price->first)},
                                  {"q_norm", maybe_inf_json(rep.cowling_price->second)}};
    } else {
        j["cowling_price"] = json(nullptr);
    }
    if (!rep.issues.empty()) j["issues"] = rep.issues;
    int rc = with_output(c.out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    if (rc != kExitOk) return rc;
    return rep.issues.empty() ? kExitOk : kExitWarn;
}

int cmd_check(const Common& c) {
    const auto params = gft::make_params(c.k, c.n);
    const auto rep = gft::checks::run_identity_suite(params, quad_spec(c));
    json j;
    j["schema_version"] = "1";
    j["k"] = c.k;
    j["n"] = c.n;
    json checks = json::array();
    for (const auto& r : rep.results)
        checks.push_back(json{{"name", r.name},
                              {"measured", r.measured},
                              {"threshold", r.threshold},
                              {"pass", r.pass},
                              {"warned", r.warned}});
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    int rc = with_output(c.out, [&](std::ostream& os) { os << j.dump(2) << "\n"; });
    if (rc != kExitOk) return rc;
    if (!rep.all_pass()) return kExitError;
    if (rep.any_warning()) return kExitWarn;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-dimensional (k, 2/n)-generalized Fourier transform toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");

    Common c;
    app.add_option("--k", c.k, "deformation parameter k");
    app.add_option("--n", c.n, "deformation parameter n (positive integer)");
    app.add_option("--tol", c.tol, "relative quadrature tolerance");
    app.add_option("--abs-tol", c.abs_tol, "absolute quadrature tolerance");
    app.add_option("--radius", c.radius, "truncation radius in the substituted variable");
    app.add_option("--out", c.out, "output file (default: stdout)");
    app.add_option("--format", c.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* t = app.add_subcommand("transform", "tabulate F f on a lambda grid");
    std::string fn_spec = "gaussian:0.5";
    double lmin = -5.0, lmax = 5.0;
    int count = 41;
    t->add_option("--fn", fn_spec, "function spec (gaussian:<a>, bump:<r>, hermite1, oddgauss, counterexample:<a>,<b>,<d>)");
    t->add_option("--lmin", lmin);
    t->add_option("--lmax", lmax);
    t->add_option("--count", count);

    auto* h = app.add_subcommand("heat", "evolve u0 under the heat semigroup");
    std::string u0_spec = "gaussian:0.5";
    std::vector<double> times = {0.5};
    double xmin = -8.0, xmax = 8.0;
    int xcount = 81;
    bool heat_report = false;
    h->add_option("--u0", u0_spec, "initial condition spec");
    h->add_option("--times", times, "time slices")->delimiter(',');
    h->add_option("--xmin", xmin);
    h->add_option("--xmax", xmax);
    h->add_option("--count", xcount);
    h->add_flag("--report", heat_report, "emit a JSON residual/semigroup report");

    auto* a = app.add_subcommand("audit", "fit decay envelopes and classify");
    std::string audit_fn = "gaussian:0.5";
    bool functionals = true;
    bool no_functionals = false;
    double cp_p = 2.0, cp_q = 2.0;
    a->add_option("--fn", audit_fn, "function spec");
    a->add_flag("--no-functionals", no_functionals,
                "skip the log-plus / weighted-norm functionals");
    a->add_option("--p", cp_p, "Lp exponent for the f side (inf allowed)");
    a->add_option("--q", cp_q, "Lq exponent for the transform side");

    auto* chk = app.add_subcommand("check", "run the identity suite");

    auto* kt = app.add_subcommand("kernel-table", "tabulate the kernel B");
    std::vector<double> kt_xs = {0.5, 1.0, 2.0};
    std::vector<double> kt_lambdas = {-2.0, -0.5, 0.0, 0.5, 2.0};
    kt->add_option("--xs", kt_xs)->delimiter(',');
    kt->add_option("--lambdas", kt_lambdas)->delimiter(',');

    auto* sfc = app.add_subcommand("specfun-check",
                                   "series vs Poisson-oracle error table");
    sfc->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*t) return cmd_transform(c, fn_spec, lmin, lmax, count);
        if (*h) return cmd_heat(c, u0_spec, times, xmin, xmax, xcount, heat_report);
        if (*a) return cmd_audit(c, audit_fn, functionals && !no_functionals,
                                 cp_p, cp_q);
        if (*chk) return cmd_check(c);
        if (*kt) return cmd_kernel_table(c, kt_xs, kt_lambdas);
        if (*sfc) return cmd_specfun_check(c);
    } catch (const gft::ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParam;
    } catch (const gft::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitUsage;
}
