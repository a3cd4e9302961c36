#ifndef PLOGP_REFERENCE_HPP
#define PLOGP_REFERENCE_HPP

// Serial reference implementations.  Deliberately simple and independent of
// the parallel kernels: trial division instead of the segmented sieve, cubic
// enumeration instead of the two-pointer lattice, plain loops instead of
// compensated sums.  Tests check the fast paths against these; the bench
// target times the two sides against each other.

#include "plogp/arith.hpp"
#include "plogp/kernel.hpp"
#include "plogp/solver.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace plogp::reference {

bool is_prime_trial(std::uint64_t n);
std::vector<std::uint64_t> primes_in_window(double X); // (X/2, X] by trial division

double mangoldt_naive(std::uint64_t n); // log p if n = p^a else 0
int mobius_naive(std::uint64_t n);
std::uint64_t tau_naive(std::uint64_t n);

// O(P^3) exhaustive search over unordered triples, same tie-break as the
// two-pointer lattice search.
solver::TripleSolution best_triple_bruteforce(double N, const arith::PrimeTable& table);
solver::PairSolution best_pair_bruteforce(double N, const arith::PrimeTable& table);

// O(P^3) indicator/psi-weighted ordered triple sums.
void gamma_direct_bruteforce(double N, double eps_used, const arith::PrimeTable& table,
                             const kernel::KernelSpec* spec, double& gamma,
                             double& gamma0, std::uint64_t& count);

// plain serial S(alpha), uncompensated accumulation
std::complex<double> s_sum_serial(double alpha, const arith::PrimeTable& table);

// Volume of { y in [X/2,X]^3 : |y1 log y1 + y2 log y2 + y3 log y3 - N| < h },
// computed as a 2-d midpoint-rule integral of the exact y3 window length
// obtained from invert_ylogy.  Lower-bound oracle for the Theta integral.
double box_triple_volume(double N, double X, double h, int grid_n);

} // namespace plogp::reference

#endif
