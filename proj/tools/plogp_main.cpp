// plogp — numerical laboratory for the ternary logarithmic prime inequality
//   |p1 log p1 + p2 log p2 + p3 log p3 - N| < eps,   X/2 < p_i <= X.
//
// One subcommand per module surface; JSON reports (reals as 17-digit decimal
// strings), CSV for grid scans.  Exit codes: 0 ok, 2 domain error,
// 3 capacity error, 4 accuracy error, 5 internal-consistency error.

#include <CLI11.hpp>

#include "plogp/arith.hpp"
#include "plogp/bigfloat.hpp"
#include "plogp/circle.hpp"
#include "plogp/errors.hpp"
#include "plogp/expsum.hpp"
#include "plogp/kernel.hpp"
#include "plogp/report.hpp"
#include "plogp/scaling.hpp"
#include "plogp/solver.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

namespace {

using plogp::report::cplx;
using plogp::report::fmt17;
using plogp::report::json;

constexpr const char* kVersion = "plogp 1.0.0";

double g_t0 = 0.0; // dispatch start; manifests report wall = now - g_t0

struct RunConfig {
    std::string command;
    std::optional<double> N, X, eps_override, alpha;
    std::optional<double> alpha_min, alpha_max;
    std::optional<int> k_override;
    int grid = 101;
    double tol = 1e-4;
    int threads = 0;
    std::uint64_t seed = 1;
    std::string out_format; // json | csv; empty = per-command default
    std::string out_path;
    std::string prime_cache;
    std::uint64_t budget = 8'000'000'000ULL;
    bool exact = false;
    int digits = 30;
    int n_shift = 0;
    std::string which = "l5";
};

plogp::scaling::CircleParams resolve_scale(const RunConfig& cfg) {
    if (cfg.N && cfg.X)
        throw plogp::domain_error("give exactly one of --N and --X");
    if (cfg.N) return plogp::scaling::derive_params(plogp::scaling::solve_X(*cfg.N));
    if (cfg.X) return plogp::scaling::derive_params(*cfg.X);
    throw plogp::domain_error("one of --N or --X is required");
}

plogp::arith::PrimeTable sieve_cached(const RunConfig& cfg, double X) {
    plogp::arith::PrimeTable t;
    if (!cfg.prime_cache.empty() && plogp::arith::load_table(t, X, cfg.prime_cache))
        return t;
    t = plogp::arith::sieve_range(X);
    if (!cfg.prime_cache.empty()) plogp::arith::save_table(t, cfg.prime_cache);
    return t;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, n > 1 ? static_cast<double>(i) / (n - 1) : 0.0);
    return g;
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    if (cfg.N) j["N"] = fmt17(*cfg.N);
    if (cfg.X) j["X"] = fmt17(*cfg.X);
    if (cfg.eps_override) j["eps_override"] = fmt17(*cfg.eps_override);
    if (cfg.alpha) j["alpha"] = fmt17(*cfg.alpha);
    if (cfg.alpha_min) j["alpha_min"] = fmt17(*cfg.alpha_min);
    if (cfg.alpha_max) j["alpha_max"] = fmt17(*cfg.alpha_max);
    if (cfg.k_override) j["k"] = *cfg.k_override;
    j["grid"] = cfg.grid;
    j["tol"] = fmt17(cfg.tol);
    j["threads"] = cfg.threads;
    j["seed"] = cfg.seed;
    j["budget"] = cfg.budget;
    j["exact"] = cfg.exact;
    j["digits"] = cfg.digits;
    if (cfg.command == "lemmas") j["which"] = cfg.which;
    if (cfg.command == "sums" || cfg.command == "lemmas") j["n_shift"] = cfg.n_shift;
    return j;
}

json manifest(const RunConfig& cfg, const plogp::scaling::CircleParams* params) {
    json m;
    m["version"] = kVersion;
    m["config"] = config_echo(cfg);
    if (params) {
        m["params"] = json{{"N", fmt17(params->N)},     {"X", fmt17(params->X)},
                           {"eps", fmt17(params->eps)}, {"tau", fmt17(params->tau)},
                           {"K", fmt17(params->K)},     {"k", params->k}};
    }
    // the one field excluded from the byte-identical determinism contract
    m["timing"] = plogp::report::iso_timestamp_utc() + " wall=" +
                  fmt17(omp_get_wtime() - g_t0) + "s";
    return m;
}

void write_out(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw plogp::domain_error("cannot open --out-path " + cfg.out_path);
        f << text;
    }
}

void emit_json(const RunConfig& cfg, const plogp::scaling::CircleParams* params,
               json report) {
    json out;
    out["manifest"] = manifest(cfg, params);
    out["report"] = std::move(report);
    write_out(cfg, out.dump(2) + "\n");
}

void emit_csv(const RunConfig& cfg, const plogp::scaling::CircleParams* params,
              const std::string& header, const std::vector<std::string>& rows) {
    std::ostringstream os;
    os << "# " << kVersion << " command=" << cfg.command << "\n";
    if (params)
        os << "# params N=" << fmt17(params->N) << " X=" << fmt17(params->X)
           << " eps=" << fmt17(params->eps) << " tau=" << fmt17(params->tau)
           << " K=" << fmt17(params->K) << " k=" << params->k << "\n";
    os << "# timing " << plogp::report::iso_timestamp_utc() << " wall="
       << fmt17(omp_get_wtime() - g_t0) << "s\n";
    os << header << "\n";
    for (const auto& r : rows) os << r << "\n";
    write_out(cfg, os.str());
}

bool want_csv(const RunConfig& cfg, bool default_csv) {
    if (cfg.out_format == "csv") return true;
    if (cfg.out_format == "json") return false;
    return default_csv;
}

json triple_record(const plogp::solver::TripleSolution& s) {
    return json{{"p1", s.p1},
                {"p2", s.p2},
                {"p3", s.p3},
                {"sum_phase", s.sum_phase_str},
                {"deviation", s.deviation_str},
                {"eps", fmt17(s.eps_bound)},
                {"satisfied", s.satisfied},
                {"deviation_approx", fmt17(s.deviation)},
                {"cert_digits", s.cert_digits},
                {"exhaustive", s.exhaustive}};
}

// ---------------------------------------------------------------- commands

int cmd_solve(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    auto res = plogp::solver::theorem_check(params.N, cfg.eps_override,
                                            {cfg.budget, cfg.exact}, cfg.digits);
    emit_json(cfg, &res.params, triple_record(res.sol));
    return 0;
}

int cmd_pair(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    auto table = sieve_cached(cfg, params.X);
    auto sol = plogp::solver::best_pair(params.N, table);
    sol.eps_bound = cfg.eps_override ? *cfg.eps_override : params.eps;
    sol = plogp::solver::certify(sol, params.N, cfg.digits);
    emit_json(cfg, &params,
              json{{"p1", sol.p1},
                   {"p2", sol.p2},
                   {"sum_phase", sol.sum_phase_str},
                   {"deviation", sol.deviation_str},
                   {"eps", fmt17(sol.eps_bound)},
                   {"satisfied", sol.satisfied},
                   {"deviation_approx", fmt17(sol.deviation)},
                   {"cert_digits", sol.cert_digits}});
    return 0;
}

int cmd_gamma(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    const double eps_used = cfg.eps_override ? *cfg.eps_override : params.eps;
    const plogp::kernel::KernelSpec spec{eps_used,
                                         cfg.k_override ? *cfg.k_override : params.k};
    auto table = sieve_cached(cfg, params.X);
    auto tc = plogp::circle::gamma_direct(params.N, eps_used, table, &spec, cfg.budget);
    emit_json(cfg, &params,
              json{{"eps_used", fmt17(eps_used)},
                   {"k_used", spec.k},
                   {"gamma_direct", fmt17(tc.gamma)},
                   {"gamma0_direct", fmt17(tc.gamma0)},
                   {"witness_count", tc.witness_count}});
    return 0;
}

int cmd_arcs(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    const double eps_used = cfg.eps_override ? *cfg.eps_override : params.eps;
    const plogp::kernel::KernelSpec spec{eps_used,
                                         cfg.k_override ? *cfg.k_override : params.k};
    auto table = sieve_cached(cfg, params.X);
    const double scale =
        eps_used * params.X * params.X / std::max(1.0, std::log(params.X));
    auto rep = plogp::circle::full_report(params.N, params, table, spec,
                                          cfg.tol * scale);
    emit_json(cfg, &params,
              json{{"eps_used", fmt17(rep.eps_used)},
                   {"k_used", rep.k_used},
                   {"gamma_direct", fmt17(rep.gamma_direct)},
                   {"gamma0_direct", fmt17(rep.gamma0_direct)},
                   {"witness_count", rep.witness_count},
                   {"gamma0_integral", fmt17(rep.gamma0_integral)},
                   {"gamma1", cplx(rep.gamma1)},
                   {"gamma2", cplx(rep.gamma2)},
                   {"gamma3", cplx(rep.gamma3)},
                   {"theta_tau", fmt17(rep.theta_tau)},
                   {"theta", fmt17(rep.theta)},
                   {"quadrature_err", fmt17(rep.quadrature_err)},
                   {"truncation_err", fmt17(rep.truncation_err)},
                   {"ratio_g1", fmt17(rep.ratio_g1)},
                   {"ratio_g2", fmt17(rep.ratio_g2)},
                   {"ratio_g3", fmt17(rep.ratio_g3)},
                   {"ratio_theta", fmt17(rep.ratio_theta)},
                   {"gap_g1_theta_tau", fmt17(rep.gap_g1_theta_tau)},
                   {"gap_g1_theta_tau_normalized",
                    fmt17(rep.gap_g1_theta_tau_normalized)}});
    return 0;
}

int cmd_sums(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    if (!cfg.alpha) throw plogp::domain_error("sums: --alpha is required");
    auto table = sieve_cached(cfg, params.X);
    const auto s = plogp::expsum::S(*cfg.alpha, table);
    double ierr = 0.0;
    const auto iv = plogp::expsum::I_alpha(*cfg.alpha, params.X, cfg.tol, &ierr);
    emit_json(cfg, &params,
              json{{"alpha", fmt17(*cfg.alpha)},
                   {"S", json{{"re", fmt17(s.value.real())},
                              {"im", fmt17(s.value.imag())},
                              {"abs", fmt17(std::abs(s.value))},
                              {"abs_err", fmt17(s.abs_err)},
                              {"n_terms", s.n_terms}}},
                   {"I", json{{"re", fmt17(iv.real())},
                              {"im", fmt17(iv.imag())},
                              {"abs", fmt17(std::abs(iv))},
                              {"err", fmt17(ierr)}}}});
    return 0;
}

int cmd_kernel(RunConfig& cfg) {
    const double eps = cfg.eps_override ? *cfg.eps_override : 1.0;
    const int k = cfg.k_override ? *cfg.k_override : 1;
    if (eps <= 0.0 || k < 1) throw plogp::domain_error("kernel: needs eps > 0, k >= 1");
    const plogp::kernel::KernelSpec spec{eps, k};

    const auto xs = log_grid(1e-3 / eps, 1e4 * k / eps, std::max(2, cfg.grid));
    std::vector<std::string> rows;
    rows.reserve(xs.size() + 1);
    bool all_ok = true;
    double worst = 0.0;
    auto row = [&](double x) {
        const auto b = plogp::kernel::check_bound(spec, x);
        all_ok = all_ok && b.ok;
        if (b.rhs > 0.0) worst = std::max(worst, b.lhs / b.rhs);
        rows.push_back(fmt17(x) + "," + fmt17(b.lhs) + "," + fmt17(b.rhs) + "," +
                       (b.ok ? "1" : "0"));
    };
    row(0.0);
    for (double x : xs) row(x);

    if (want_csv(cfg, true)) {
        emit_csv(cfg, nullptr, "x,lhs,rhs,ok", rows);
    } else {
        emit_json(cfg, nullptr,
                  json{{"eps", fmt17(eps)},
                       {"k", k},
                       {"checked", rows.size()},
                       {"all_ok", all_ok},
                       {"worst_lhs_over_rhs", fmt17(worst)},
                       {"psi_at_0", fmt17(plogp::kernel::psi_eval(spec, 0.0))},
                       {"psi_hat_at_0", fmt17(plogp::kernel::psi_hat(spec, 0.0))}});
    }
    return 0;
}

int cmd_vaughan(RunConfig& cfg) {
    if (!cfg.X) throw plogp::domain_error("vaughan: --X is required");
    if (!cfg.alpha) throw plogp::domain_error("vaughan: --alpha is required");
    const double X = *cfg.X;
    auto tables = plogp::arith::build_tables(static_cast<std::uint64_t>(std::floor(X)));
    auto parts = plogp::expsum::vaughan_decompose(*cfg.alpha, X, tables);
    emit_json(cfg, nullptr,
              json{{"alpha", fmt17(*cfg.alpha)},
                   {"X", fmt17(X)},
                   {"u1", cplx(parts.u1)},
                   {"u2", cplx(parts.u2)},
                   {"u3", cplx(parts.u3)},
                   {"u4", cplx(parts.u4)},
                   {"s1_direct", cplx(parts.s1_direct)},
                   {"cutoff_u", fmt17(parts.cutoff_u)},
                   {"cutoff_v", fmt17(parts.cutoff_v)},
                   {"residual", fmt17(parts.residual)},
                   {"residual_rel", fmt17(parts.residual /
                                          (1.0 + std::abs(parts.s1_direct)))}});
    return 0;
}

int cmd_lemmas(RunConfig& cfg) {
    if (cfg.which == "l3") {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> unit(-1.0, 1.0);
        bool all_ok = true;
        double worst_margin = std::numeric_limits<double>::infinity();
        const int trials = std::max(1, cfg.grid);
        for (int t = 0; t < trials; ++t) {
            const int L = 2 + static_cast<int>(rng() % 511);
            const int Q = 1 + static_cast<int>(rng() % L);
            std::vector<std::complex<double>> seq(L);
            for (auto& z : seq) z = {unit(rng), unit(rng)};
            auto c = plogp::expsum::vdc_check(seq, Q);
            all_ok = all_ok && c.ok;
            worst_margin = std::min(worst_margin, c.rhs - c.lhs);
        }
        emit_json(cfg, nullptr,
                  json{{"which", "l3"},
                       {"trials", trials},
                       {"all_ok", all_ok},
                       {"worst_margin", fmt17(worst_margin)}});
        return 0;
    }
    if (cfg.which == "l4") {
        const double X = cfg.X ? *cfg.X : 1e3;
        const auto params = plogp::scaling::derive_params(X);
        const double lo = cfg.alpha_min ? *cfg.alpha_min : params.tau;
        const double hi = cfg.alpha_max ? *cfg.alpha_max : 10.0;
        const auto alphas = log_grid(lo, hi, std::max(2, cfg.grid));
        bool all_ok = true;
        double worst = 0.0;
        for (double a : alphas) {
            auto c = plogp::expsum::derivative_test_check(a, X);
            all_ok = all_ok && c.ok;
            worst = std::max(worst, c.lhs / c.rhs1);
        }
        emit_json(cfg, &params,
                  json{{"which", "l4"},
                       {"points", alphas.size()},
                       {"all_ok", all_ok},
                       {"worst_lhs_over_rhs", fmt17(worst)}});
        return 0;
    }
    if (cfg.which == "l5") {
        if (!cfg.X) throw plogp::domain_error("lemmas l5: --X is required");
        auto r = plogp::arith::lemma5_ratios(*cfg.X);
        emit_json(cfg, nullptr,
                  json{{"which", "l5"},
                       {"X", fmt17(*cfg.X)},
                       {"sum_tau2", fmt17(r.sum_tau2)},
                       {"sum_lambda2", fmt17(r.sum_lambda2)},
                       {"r1", fmt17(r.r1)},
                       {"r2", fmt17(r.r2)}});
        return 0;
    }
    if (cfg.which == "l6") {
        const auto params = resolve_scale(cfg);
        auto table = sieve_cached(cfg, params.X);
        auto rep = plogp::expsum::lemma6_deviation(params.X, cfg.grid, table);
        emit_json(cfg, &params,
                  json{{"which", "l6"},
                       {"n_grid", rep.n_grid},
                       {"max_dev", fmt17(rep.max_dev)},
                       {"argmax_alpha", fmt17(rep.argmax_alpha)},
                       {"normalized", fmt17(rep.normalized)}});
        return 0;
    }
    if (cfg.which == "l8") {
        const auto params = resolve_scale(cfg);
        auto table = sieve_cached(cfg, params.X);
        const double scale = params.X * std::pow(std::log(params.X), 2.0);
        auto rep = plogp::expsum::l2_integrals(params.X, table, cfg.n_shift,
                                               cfg.tol * scale);
        emit_json(cfg, &params,
                  json{{"which", "l8"},
                       {"n", cfg.n_shift},
                       {"a", fmt17(rep.a)},
                       {"b", fmt17(rep.b)},
                       {"c", fmt17(rep.c)},
                       {"a_err", fmt17(rep.a_err)},
                       {"b_err", fmt17(rep.b_err)},
                       {"c_err", fmt17(rep.c_err)},
                       {"ratio_a", fmt17(rep.ratio_a)},
                       {"ratio_b", fmt17(rep.ratio_b)},
                       {"ratio_c", fmt17(rep.ratio_c)},
                       {"c_by_pair_sum", rep.c_by_pair_sum}});
        return 0;
    }
    if (cfg.which == "l9") {
        const auto params = resolve_scale(cfg);
        auto table = sieve_cached(cfg, params.X);
        auto scan = plogp::expsum::minor_arc_scan(params.X, cfg.grid, table);
        emit_json(cfg, &params,
                  json{{"which", "l9"},
                       {"n_grid", cfg.grid},
                       {"sup_S", fmt17(scan.sup_S)},
                       {"argmax_alpha", fmt17(scan.argmax_alpha)},
                       {"normalized", fmt17(scan.normalized)}});
        return 0;
    }
    throw plogp::domain_error("lemmas: unknown --which '" + cfg.which +
                              "' (expected l3|l4|l5|l6|l8|l9)");
}

int cmd_scan(RunConfig& cfg) {
    const auto params = resolve_scale(cfg);
    auto table = sieve_cached(cfg, params.X);
    const double lo = cfg.alpha_min ? *cfg.alpha_min : std::min(params.tau, params.K);
    const double hi = cfg.alpha_max ? *cfg.alpha_max : std::max(params.tau, params.K);
    if (!(lo > 0.0) || !(hi > lo))
        throw plogp::domain_error("scan: needs 0 < alpha-min < alpha-max");
    const auto alphas = log_grid(lo, hi, std::max(2, cfg.grid));
    auto rows = plogp::expsum::scan_S(table, alphas);

    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& r : rows)
        lines.push_back(fmt17(r.alpha) + "," + fmt17(r.value.real()) + "," +
                        fmt17(r.value.imag()) + "," + fmt17(std::abs(r.value)) + "," +
                        fmt17(r.abs_err));
    if (want_csv(cfg, true)) {
        emit_csv(cfg, &params, "alpha,re,im,abs,err", lines);
    } else {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"alpha", fmt17(r.alpha)},
                               {"re", fmt17(r.value.real())},
                               {"im", fmt17(r.value.imag())},
                               {"abs", fmt17(std::abs(r.value))},
                               {"err", fmt17(r.abs_err)}});
        emit_json(cfg, &params, json{{"rows", arr}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " — solver and lemma laboratory for the ternary logarithmic "
                 "prime inequality"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&cfg](CLI::App* c) {
        c->add_option("--N", cfg.N, "target N (bridged to X via N = 2X log(2X/3))");
        c->add_option("--X", cfg.X, "scale X");
        c->add_option("--eps-override,--eps", cfg.eps_override,
                      "replace eps(X) from the derived parameters");
        c->add_option("--grid", cfg.grid, "grid points / trials");
        c->add_option("--tol", cfg.tol, "relative quadrature tolerance");
        c->add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)");
        c->add_option("--seed", cfg.seed, "seed for randomized property sweeps");
        c->add_option("--out-format", cfg.out_format, "json or csv")
            ->check(CLI::IsMember({"json", "csv", ""}));
        c->add_option("--out-path", cfg.out_path, "write output here instead of stdout");
        c->add_option("--prime-cache", cfg.prime_cache,
                      "binary PrimeTable cache file keyed by X");
        c->add_option("--budget", cfg.budget, "pair-visit budget for searches");
        c->add_flag("--exact", cfg.exact,
                    "capacity error instead of subsampling when over budget");
        c->add_option("--digits", cfg.digits, "certification digits (>= 30)");
        c->add_option("--k", cfg.k_override, "kernel smoothness order override");
        c->add_option("--alpha", cfg.alpha, "frequency argument");
        c->add_option("--alpha-min", cfg.alpha_min, "scan range lower end");
        c->add_option("--alpha-max", cfg.alpha_max, "scan range upper end");
        c->add_option("--n-shift", cfg.n_shift, "left endpoint n of int_n^{n+1}|S|^2");
    };

    CLI::App* c_solve = app.add_subcommand("solve", "theorem witness search + certification");
    CLI::App* c_pair = app.add_subcommand("pair", "binary (conjecture) best pair");
    CLI::App* c_gamma = app.add_subcommand("gamma", "direct Gamma / Gamma_0 triple sums");
    CLI::App* c_arcs = app.add_subcommand("arcs", "Fourier-side Gamma_0, arc split, Theta");
    CLI::App* c_sums = app.add_subcommand("sums", "S(alpha) and I(alpha) at one frequency");
    CLI::App* c_kernel = app.add_subcommand("kernel", "smoothing kernel bound sweep");
    CLI::App* c_vaughan = app.add_subcommand("vaughan", "Vaughan identity decomposition");
    CLI::App* c_lemmas = app.add_subcommand("lemmas", "lemma monitors (--which l3..l9)");
    CLI::App* c_scan = app.add_subcommand("scan", "S(alpha) grid scan, CSV rows");
    for (CLI::App* c :
         {c_solve, c_pair, c_gamma, c_arcs, c_sums, c_kernel, c_vaughan, c_lemmas, c_scan})
        add_common(c);
    c_lemmas->add_option("--which", cfg.which, "l3|l4|l5|l6|l8|l9");

    CLI11_PARSE(app, argc, argv);

    // thread plumbing; the environment variable wins over the flag
    if (const char* env = std::getenv("PLOGP_THREADS")) cfg.threads = std::atoi(env);
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    omp_set_dynamic(0);

    // RunConfig invariants
    if (!(cfg.tol > 0.0)) {
        std::fprintf(stderr, "domain error: --tol must be > 0\n");
        return 2;
    }
    if (cfg.grid < 2) {
        std::fprintf(stderr, "domain error: --grid must be >= 2\n");
        return 2;
    }
    if (cfg.threads < 0) {
        std::fprintf(stderr, "domain error: --threads must be >= 1\n");
        return 2;
    }

    g_t0 = omp_get_wtime();
    int rc = 0;
    try {
        if (c_solve->parsed()) cfg.command = "solve", rc = cmd_solve(cfg);
        else if (c_pair->parsed()) cfg.command = "pair", rc = cmd_pair(cfg);
        else if (c_gamma->parsed()) cfg.command = "gamma", rc = cmd_gamma(cfg);
        else if (c_arcs->parsed()) cfg.command = "arcs", rc = cmd_arcs(cfg);
        else if (c_sums->parsed()) cfg.command = "sums", rc = cmd_sums(cfg);
        else if (c_kernel->parsed()) cfg.command = "kernel", rc = cmd_kernel(cfg);
        else if (c_vaughan->parsed()) cfg.command = "vaughan", rc = cmd_vaughan(cfg);
        else if (c_lemmas->parsed()) cfg.command = "lemmas", rc = cmd_lemmas(cfg);
        else if (c_scan->parsed()) cfg.command = "scan", rc = cmd_scan(cfg);
        else rc = 1;
    } catch (const plogp::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const plogp::capacity_error& e) {
        std::fprintf(stderr, "capacity error: %s\n", e.what());
        return 3;
    } catch (const plogp::accuracy_error& e) {
        std::fprintf(stderr, "accuracy error: %s (achieved %.3g)\n", e.what(), e.achieved);
        return 4;
    } catch (const plogp::consistency_error& e) {
        std::fprintf(stderr, "internal-consistency error: %s\n", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
