#ifndef PLOGP_SOLVER_HPP
#define PLOGP_SOLVER_HPP

#include "plogp/arith.hpp"
#include "plogp/dd.hpp"
#include "plogp/scaling.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace plogp::solver {

struct TripleSolution {
    std::uint64_t p1 = 0, p2 = 0, p3 = 0; // p1 <= p2 <= p3, all in (X/2, X]
    dd sum_phase;                         // search-phase double-double value
    double deviation = 0.0;               // |sum_phase - N|
    std::string sum_phase_str;            // filled by certify
    std::string deviation_str;
    int cert_digits = 0;
    double eps_bound = 0.0;
    bool satisfied = false;
    bool exhaustive = true; // search visited every p1
};

struct PairSolution {
    std::uint64_t p1 = 0, p2 = 0;
    dd sum_phase;
    double deviation = 0.0;
    std::string sum_phase_str;
    std::string deviation_str;
    int cert_digits = 0;
    double eps_bound = 0.0;
    bool satisfied = false;
};

struct SearchOptions {
    // two-pointer pair visits allowed before the p1 range is subsampled
    std::uint64_t pair_budget = 8'000'000'000ULL;
    // raise capacity_error instead of subsampling when over budget
    bool strict = false;
};

// Minimizing unordered triple over the pair-plus-two-pointer lattice: for
// each fixed p1 a single two-pointer sweep over the sorted phases finds the
// best (p2, p3).  Pointer decisions and candidate refinement switch to
// double-double whenever the plain-double margin is ambiguous, so the result
// is the global minimum up to dd rounding.  Ties break to the
// lexicographically smallest (p1, p2, p3).  When P^2/2 exceeds the budget the
// p1 range is subsampled with a deterministic stride (exhaustive = false),
// or capacity_error is thrown in strict mode.
TripleSolution best_triple(double N, const arith::PrimeTable& table,
                           const SearchOptions& opts = {});

// Binary analogue, O(P log P).
PairSolution best_pair(double N, const arith::PrimeTable& table);

// Recompute the deviation with MPFR logarithms at `digits` digits; throws
// consistency_error if the search-phase dd value disagrees beyond
// 1e-18 * max(1, N).
TripleSolution certify(TripleSolution sol, double N, int digits);
PairSolution certify(PairSolution sol, double N, int digits);

struct TheoremResult {
    scaling::CircleParams params;
    TripleSolution sol;
};

// solve_X -> derive_params -> sieve_range -> best_triple -> certify.
// satisfied compares the certified deviation with eps_override when given,
// else with eps(X) from the derived parameters.
TheoremResult theorem_check(double N, std::optional<double> eps_override,
                            const SearchOptions& opts = {}, int digits = 30);

} // namespace plogp::solver

#endif
