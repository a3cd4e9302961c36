// Benchmark: OpenMP kernels against the serial reference implementations.
// Checks agreement while timing, so a speedup with wrong answers cannot pass
// unnoticed.
//
//   ./plogp_bench [X_search] [X_scan] [n_alphas]

#include "plogp/arith.hpp"
#include "plogp/expsum.hpp"
#include "plogp/reference.hpp"
#include "plogp/scaling.hpp"
#include "plogp/solver.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace {

double wall() { return omp_get_wtime(); }

void row(const char* name, double serial_s, double par_s, bool agree) {
    std::printf("  %-34s %10.3fs %10.3fs %7.2fx   %s\n", name, serial_s, par_s,
                serial_s / par_s, agree ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const double X_search = argc > 1 ? std::atof(argv[1]) : 2.0e5;
    const double X_scan = argc > 2 ? std::atof(argv[2]) : 1.0e5;
    const int n_alphas = argc > 3 ? std::atoi(argv[3]) : 256;
    const int max_threads = omp_get_max_threads();

    std::printf("plogp bench: %d thread(s)\n", max_threads);
    std::printf("  %-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

    // ---- segmented sieve, 1 thread vs all ----
    omp_set_num_threads(1);
    double t0 = wall();
    auto table1 = plogp::arith::sieve_range(X_search);
    const double sieve_serial = wall() - t0;
    omp_set_num_threads(max_threads);
    t0 = wall();
    auto table = plogp::arith::sieve_range(X_search);
    const double sieve_par = wall() - t0;
    row("sieve_range", sieve_serial, sieve_par,
        table1.p == table.p && table1.phase_hi == table.phase_hi);

    // ---- S(alpha) grid scan ----
    const auto params = plogp::scaling::derive_params(X_scan);
    auto scan_table = plogp::arith::sieve_range(X_scan);
    std::vector<double> alphas(n_alphas);
    const double lo = std::min(params.tau, params.K), hi = std::max(params.tau, params.K);
    for (int i = 0; i < n_alphas; ++i)
        alphas[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n_alphas - 1));

    t0 = wall();
    std::vector<std::complex<double>> serial_vals(n_alphas);
    for (int i = 0; i < n_alphas; ++i)
        serial_vals[i] = plogp::reference::s_sum_serial(alphas[i], scan_table);
    const double scan_serial = wall() - t0;

    t0 = wall();
    auto rows = plogp::expsum::scan_S(scan_table, alphas);
    const double scan_par = wall() - t0;

    bool scan_ok = true;
    for (int i = 0; i < n_alphas; ++i)
        scan_ok = scan_ok &&
                  std::abs(rows[i].value - serial_vals[i]) <= 1e-9 * (1.0 + std::abs(serial_vals[i]));
    row("S(alpha) scan", scan_serial, scan_par, scan_ok);

    // ---- triple search: brute force vs two-pointer lattice ----
    auto small_table = plogp::arith::sieve_range(2000.0);
    const double N_small = plogp::scaling::derive_params(2000.0).N;
    t0 = wall();
    auto brute = plogp::reference::best_triple_bruteforce(N_small, small_table);
    const double brute_s = wall() - t0;
    t0 = wall();
    auto fast = plogp::solver::best_triple(N_small, small_table);
    const double fast_s = wall() - t0;
    row("best_triple (P^3 vs lattice)", brute_s, fast_s,
        brute.p1 == fast.p1 && brute.p2 == fast.p2 && brute.p3 == fast.p3);

    // ---- triple search, 1 thread vs all ----
    const double N_search = plogp::scaling::derive_params(X_search).N;
    omp_set_num_threads(1);
    t0 = wall();
    auto s1 = plogp::solver::best_triple(N_search, table);
    const double search_serial = wall() - t0;
    omp_set_num_threads(max_threads);
    t0 = wall();
    auto sp = plogp::solver::best_triple(N_search, table);
    const double search_par = wall() - t0;
    row("best_triple threads 1 vs all", search_serial, search_par,
        s1.p1 == sp.p1 && s1.p2 == sp.p2 && s1.p3 == sp.p3);

    return 0;
}
