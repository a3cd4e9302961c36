#include "plogp/solver.hpp"

#include "plogp/bigfloat.hpp"
#include "plogp/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace plogp::solver {

namespace {

struct Candidate {
    dd dev{std::numeric_limits<double>::infinity(), 0.0};
    std::uint64_t p1 = 0, p2 = 0, p3 = 0;
};

// total order: smaller deviation first, then lexicographic (p1, p2, p3)
bool better(const Candidate& a, const Candidate& b) {
    if (!dd_eq(a.dev, b.dev)) return dd_lt(a.dev, b.dev);
    if (a.p1 != b.p1) return a.p1 < b.p1;
    if (a.p2 != b.p2) return a.p2 < b.p2;
    return a.p3 < b.p3;
}

// one two-pointer sweep for fixed first index i over pairs i <= lo <= hi
void sweep_p1(const arith::PrimeTable& t, std::size_t i, dd N_dd, double W,
              Candidate& best) {
    const double* H = t.phase_hi.data();
    const std::size_t P = t.size();
    const dd vi = t.phase(i);
    const dd target = dd_sub(N_dd, vi);
    const double target_d = to_double(target);
    std::size_t lo = i, hi = P - 1;
    while (lo <= hi) {
        const double d = (H[lo] + H[hi]) - target_d;
        if (std::abs(d) <= best.dev.hi + W) {
            // ambiguous in double: refine the deviation and the branch in dd
            const dd s2 = dd_add(t.phase(lo), t.phase(hi));
            const dd dev = dd_abs(dd_sub(s2, target));
            Candidate c{dev, t.p[i], t.p[lo], t.p[hi]};
            if (better(c, best)) best = c;
            if (dd_le(s2, target)) {
                ++lo;
            } else {
                if (hi == 0) break;
                --hi;
            }
        } else if (d < 0.0) {
            ++lo;
        } else {
            if (hi == 0) break;
            --hi;
        }
    }
}

} // namespace

TripleSolution best_triple(double N, const arith::PrimeTable& table,
                           const SearchOptions& opts) {
    const std::size_t P = table.size();
    if (P == 0) throw domain_error("best_triple: empty prime table");

    const double total_pairs = 0.5 * static_cast<double>(P) * (static_cast<double>(P) + 1);
    std::size_t stride = 1;
    if (total_pairs > static_cast<double>(opts.pair_budget)) {
        if (opts.strict)
            throw capacity_error("best_triple: P^2/2 = " + std::to_string(total_pairs) +
                                 " pair visits exceed the budget; raise the budget or "
                                 "allow subsampling");
        stride = static_cast<std::size_t>(
            std::ceil(total_pairs / static_cast<double>(opts.pair_budget)));
    }

    const dd N_dd(N);
    // ambiguity margin well above the double rounding of sums ~ N
    const double W = std::max(1e-9, 1e-13 * std::abs(N));

    const std::size_t n_scan = (P + stride - 1) / stride;
    const int max_threads = omp_get_max_threads();
    std::vector<Candidate> thread_best(max_threads);

#pragma omp parallel
    {
        Candidate local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(n_scan); ++m)
            sweep_p1(table, static_cast<std::size_t>(m) * stride, N_dd, W, local);
        thread_best[omp_get_thread_num()] = local;
    }

    Candidate best;
    for (const auto& c : thread_best)
        if (c.p1 && better(c, best)) best = c;

    TripleSolution sol;
    sol.p1 = best.p1;
    sol.p2 = best.p2;
    sol.p3 = best.p3;
    // recompute the phase sum in a fixed order
    dd s{0.0, 0.0};
    for (std::uint64_t q : {best.p1, best.p2, best.p3})
        s = dd_add(s, dd_mul_d(dd_log_u64(q), static_cast<double>(q)));
    sol.sum_phase = s;
    sol.deviation = to_double(dd_abs(dd_sub(s, N_dd)));
    sol.exhaustive = stride == 1;
    return sol;
}

PairSolution best_pair(double N, const arith::PrimeTable& table) {
    const std::size_t P = table.size();
    if (P == 0) throw domain_error("best_pair: empty prime table");

    const dd N_dd(N);
    struct PairCand {
        dd dev{std::numeric_limits<double>::infinity(), 0.0};
        std::uint64_t p1 = 0, p2 = 0;
    };
    const int max_threads = omp_get_max_threads();
    std::vector<PairCand> thread_best(max_threads);

#pragma omp parallel
    {
        PairCand local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(P); ++i) {
            const dd target = dd_sub(N_dd, table.phase(i));
            const auto& H = table.phase_hi;
            std::size_t j = std::lower_bound(H.begin() + i, H.end(), to_double(target)) -
                            H.begin();
            for (std::size_t cand : {j > static_cast<std::size_t>(i) ? j - 1 : j, j, j + 1}) {
                if (cand < static_cast<std::size_t>(i) || cand >= P) continue;
                const dd dev = dd_abs(dd_sub(table.phase(cand), target));
                const std::uint64_t q1 = table.p[i], q2 = table.p[cand];
                if (dd_lt(dev, local.dev) ||
                    (dd_eq(dev, local.dev) &&
                     (q1 < local.p1 || (q1 == local.p1 && q2 < local.p2)))) {
                    local = {dev, q1, q2};
                }
            }
        }
        thread_best[omp_get_thread_num()] = local;
    }

    PairCand best;
    for (const auto& c : thread_best) {
        if (!c.p1) continue;
        if (dd_lt(c.dev, best.dev) ||
            (dd_eq(c.dev, best.dev) &&
             (c.p1 < best.p1 || (c.p1 == best.p1 && c.p2 < best.p2))))
            best = c;
    }

    PairSolution sol;
    sol.p1 = best.p1;
    sol.p2 = best.p2;
    dd s{0.0, 0.0};
    for (std::uint64_t q : {best.p1, best.p2})
        s = dd_add(s, dd_mul_d(dd_log_u64(q), static_cast<double>(q)));
    sol.sum_phase = s;
    sol.deviation = to_double(dd_abs(dd_sub(s, N_dd)));
    return sol;
}

TripleSolution certify(TripleSolution sol, double N, int digits) {
    auto cert = mp::certify_tuple({sol.p1, sol.p2, sol.p3}, N, digits);
    const double search_dev = to_double(dd_abs(dd_sub(sol.sum_phase, dd(N))));
    if (std::abs(cert.deviation_d - search_dev) > 1e-18 * std::max(1.0, std::abs(N)))
        throw consistency_error(
            "certify: double-double search deviation disagrees with the " +
            std::to_string(digits) + "-digit recomputation (search arithmetic bug)");
    sol.deviation = cert.deviation_d;
    sol.sum_phase_str = cert.sum_phase;
    sol.deviation_str = cert.deviation;
    sol.cert_digits = digits;
    sol.satisfied = sol.deviation < sol.eps_bound;
    return sol;
}

PairSolution certify(PairSolution sol, double N, int digits) {
    auto cert = mp::certify_tuple({sol.p1, sol.p2}, N, digits);
    const double search_dev = to_double(dd_abs(dd_sub(sol.sum_phase, dd(N))));
    if (std::abs(cert.deviation_d - search_dev) > 1e-18 * std::max(1.0, std::abs(N)))
        throw consistency_error("certify: pair deviation disagrees with the " +
                                std::to_string(digits) + "-digit recomputation");
    sol.deviation = cert.deviation_d;
    sol.sum_phase_str = cert.sum_phase;
    sol.deviation_str = cert.deviation;
    sol.cert_digits = digits;
    sol.satisfied = sol.deviation < sol.eps_bound;
    return sol;
}

TheoremResult theorem_check(double N, std::optional<double> eps_override,
                            const SearchOptions& opts, int digits) {
    const double X = scaling::solve_X(N);
    if (X < 10.0)
        throw domain_error("theorem_check: N gives X < 10; no usable prime window");
    TheoremResult res;
    res.params = scaling::derive_params(X);
    const auto table = arith::sieve_range(X);
    res.sol = best_triple(N, table, opts);
    res.sol.eps_bound = eps_override ? *eps_override : res.params.eps;
    res.sol = certify(res.sol, N, digits);
    return res;
}

} // namespace plogp::solver
