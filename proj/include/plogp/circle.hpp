#ifndef PLOGP_CIRCLE_HPP
#define PLOGP_CIRCLE_HPP

#include "plogp/arith.hpp"
#include "plogp/kernel.hpp"
#include "plogp/scaling.hpp"

#include <complex>
#include <cstdint>

namespace plogp::circle {

struct TripleCount {
    double gamma = 0.0;           // indicator-weighted ordered triple sum
    double gamma0 = 0.0;          // psi-weighted (0 when no kernel given)
    std::uint64_t witness_count = 0; // ordered triples inside the window
};

// Gamma = sum over ordered triples with |v1+v2+v3 - N| < eps_used of
// log p1 log p2 log p3, and the psi-weighted Gamma_0.  For each ordered pair
// the admissible third component is a binary-search window in the sorted
// phase array; prefix sums give the indicator weight, only the window is
// enumerated for psi.  Cost O(P^2 log P).
TripleCount gamma_direct(double N, double eps_used, const arith::PrimeTable& table,
                         const kernel::KernelSpec* spec,
                         std::uint64_t pair_budget = 4'000'000'000ULL);

struct ArcsReport {
    double B = 0.0;               // truncation cutoff from the kernel tail
    std::size_t panels = 0;
    std::complex<double> g0, g1, g2, g3; // g0 = g1+g2+g3 at node level
    double quadrature_err = 0.0;
    double truncation_err = 0.0;
    double sum_bound = 0.0; // S(0)^3
    double t1 = 0.0, t2 = 0.0; // arc boundaries min/max of (tau, K)
};

// int_{-B}^{B} S^3(alpha) e(-N alpha) Psi(alpha) d alpha split over the arcs
// |alpha| <= t1, t1 < |alpha| <= t2, t2 < |alpha| <= B with shared quadrature
// nodes, so arc additivity is exact at node level.  tol is absolute.
ArcsReport s3_arcs(double N, const scaling::CircleParams& params,
                   const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                   double tol, std::size_t max_panels = std::size_t(1) << 22);

// Real part of the Fourier-side Gamma_0; throws accuracy_error when the
// imaginary part (which cancels exactly in the true integral) exceeds tol.
// Fills *full when given.
double gamma0_integral(double N, const scaling::CircleParams& params,
                       const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                       double tol, ArcsReport* full = nullptr);

struct ArcSplit {
    std::complex<double> g1, g2, g3;
    double ratio_g1 = 0.0; // g1 log X / (eps X^2)
    double ratio_g2 = 0.0; // |g2| / (X^(49/25) log^6 X)
    double ratio_g3 = 0.0; // |g3|
};

// The three arc integrals; g1+g2+g3 reconciles with gamma0_integral at node
// level because both come from one shared panel grid.
ArcSplit gamma_split(double N, const scaling::CircleParams& params,
                     const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                     double tol);

struct ThetaReport {
    double B = 0.0;
    std::size_t panels = 0;
    std::complex<double> theta_tau, theta;
    double quadrature_err = 0.0;
    double truncation_err = 0.0;
    double ratio = 0.0;          // theta log X / (eps X^2)
    double tail_gap = 0.0;       // |theta_tau - theta|
    double tail_gap_bound = 0.0; // eps / (tau^2 (1 + log X)^3)
};

// Theta_tau = int_{-tau}^{tau} I^3 e(-N alpha) Psi and Theta over [-B, B]
// plus tail bound; nodes shared between the two.
ThetaReport theta_integrals(double N, const scaling::CircleParams& params,
                            const arith::PrimeTable& table,
                            const kernel::KernelSpec& spec, double tol,
                            std::size_t max_panels = std::size_t(1) << 22);

// Aggregate record emitted by the CLI `arcs` command.
struct GammaReport {
    double eps_used = 0.0;
    int k_used = 0;
    double gamma_direct = 0.0;
    double gamma0_direct = 0.0;
    std::uint64_t witness_count = 0;
    double gamma0_integral = 0.0;
    std::complex<double> gamma1, gamma2, gamma3;
    double theta_tau = 0.0, theta = 0.0;
    double quadrature_err = 0.0;
    double truncation_err = 0.0;
    // normalized ratios
    double ratio_g1 = 0.0;    // g1 log X / (eps X^2)
    double ratio_g2 = 0.0;    // |g2| / (X^(49/25) log^6 X)
    double ratio_g3 = 0.0;    // |g3|
    double ratio_theta = 0.0; // theta log X / (eps X^2)
    // measured |Gamma_1 - Theta_tau| and its value against the factor
    // eps X^2 exp(-(log X)^(1/6)); reported, no bound asserted
    double gap_g1_theta_tau = 0.0;
    double gap_g1_theta_tau_normalized = 0.0;
};

GammaReport full_report(double N, const scaling::CircleParams& params,
                        const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                        double tol);

} // namespace plogp::circle

#endif
