#include "plogp/reference.hpp"

#include "plogp/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plogp::reference {

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_in_window(double X) {
    std::vector<std::uint64_t> out;
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(X));
    for (std::uint64_t n = static_cast<std::uint64_t>(std::floor(X / 2.0)); n <= hi; ++n) {
        if (n < 2) continue;
        if (2.0 * static_cast<double>(n) <= X) continue; // n > X/2 strictly
        if (is_prime_trial(n)) out.push_back(n);
    }
    return out;
}

double mangoldt_naive(std::uint64_t n) {
    if (n < 2) return 0.0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
    return std::log(static_cast<double>(n)); // n prime
}

int mobius_naive(std::uint64_t n) {
    int k = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++k;
    }
    if (n > 1) ++k;
    return (k % 2 == 0) ? 1 : -1;
}

std::uint64_t tau_naive(std::uint64_t n) {
    std::uint64_t t = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        t += (d * d == n) ? 1 : 2;
    }
    return t;
}

solver::TripleSolution best_triple_bruteforce(double N, const arith::PrimeTable& table) {
    const std::size_t P = table.size();
    const dd N_dd(N);
    dd best_dev{std::numeric_limits<double>::infinity(), 0.0};
    std::size_t bi = 0, bj = 0, bk = 0;
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = i; j < P; ++j)
            for (std::size_t k = j; k < P; ++k) {
                dd s = dd_add(dd_add(table.phase(i), table.phase(j)), table.phase(k));
                dd dev = dd_abs(dd_sub(s, N_dd));
                if (dd_lt(dev, best_dev)) {
                    best_dev = dev;
                    bi = i;
                    bj = j;
                    bk = k;
                }
            }
    solver::TripleSolution sol;
    sol.p1 = table.p[bi];
    sol.p2 = table.p[bj];
    sol.p3 = table.p[bk];
    dd s{0.0, 0.0};
    for (std::uint64_t q : {sol.p1, sol.p2, sol.p3})
        s = dd_add(s, dd_mul_d(dd_log_u64(q), static_cast<double>(q)));
    sol.sum_phase = s;
    sol.deviation = to_double(dd_abs(dd_sub(s, N_dd)));
    return sol;
}

solver::PairSolution best_pair_bruteforce(double N, const arith::PrimeTable& table) {
    const std::size_t P = table.size();
    const dd N_dd(N);
    dd best_dev{std::numeric_limits<double>::infinity(), 0.0};
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = i; j < P; ++j) {
            dd dev = dd_abs(dd_sub(dd_add(table.phase(i), table.phase(j)), N_dd));
            if (dd_lt(dev, best_dev)) {
                best_dev = dev;
                bi = i;
                bj = j;
            }
        }
    solver::PairSolution sol;
    sol.p1 = table.p[bi];
    sol.p2 = table.p[bj];
    dd s{0.0, 0.0};
    for (std::uint64_t q : {sol.p1, sol.p2})
        s = dd_add(s, dd_mul_d(dd_log_u64(q), static_cast<double>(q)));
    sol.sum_phase = s;
    sol.deviation = to_double(dd_abs(dd_sub(s, N_dd)));
    return sol;
}

void gamma_direct_bruteforce(double N, double eps_used, const arith::PrimeTable& table,
                             const kernel::KernelSpec* spec, double& gamma,
                             double& gamma0, std::uint64_t& count) {
    const std::size_t P = table.size();
    const dd N_dd(N);
    gamma = 0.0;
    gamma0 = 0.0;
    count = 0;
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j)
            for (std::size_t k = 0; k < P; ++k) {
                dd s = dd_add(dd_add(table.phase(i), table.phase(j)), table.phase(k));
                const double dev = std::abs(to_double(dd_sub(s, N_dd)));
                if (dev < eps_used) {
                    const double w = table.logp[i] * table.logp[j] * table.logp[k];
                    gamma += w;
                    ++count;
                    if (spec) gamma0 += w * kernel::psi_eval(*spec, dev);
                }
            }
}

std::complex<double> s_sum_serial(double alpha, const arith::PrimeTable& table) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < table.size(); ++i)
        sum += table.logp[i] * e_of(dd_mul_d(table.phase(i), alpha));
    return sum;
}

double box_triple_volume(double N, double X, double h, int grid_n) {
    const double a = X / 2.0, b = X;
    const double step = (b - a) / grid_n;
    const double v_lo = a * std::log(a), v_hi = b * std::log(b);
    double vol = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double y1 = a + (i + 0.5) * step;
        const double w1 = y1 * std::log(y1);
        for (int j = 0; j < grid_n; ++j) {
            const double y2 = a + (j + 0.5) * step;
            const double t_hi = N + h - w1 - y2 * std::log(y2);
            const double t_lo = t_hi - 2.0 * h;
            if (t_hi <= v_lo || t_lo >= v_hi) continue;
            const double y3_hi = (t_hi >= v_hi) ? b : scaling::invert_ylogy(t_hi);
            const double y3_lo = (t_lo <= v_lo) ? a : scaling::invert_ylogy(t_lo);
            if (y3_hi > y3_lo) vol += (y3_hi - y3_lo) * step * step;
        }
    }
    return vol;
}

} // namespace plogp::reference
