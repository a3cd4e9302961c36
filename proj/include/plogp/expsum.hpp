#ifndef PLOGP_EXPSUM_HPP
#define PLOGP_EXPSUM_HPP

#include "plogp/arith.hpp"
#include "plogp/dd.hpp"
#include "plogp/scaling.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace plogp::expsum {

struct ExpSumSample {
    double alpha = 0.0;
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
    std::size_t n_terms = 0;
};

// S(alpha) = sum_{X/2 < p <= X} e(alpha p log p) log p.  The phase argument
// alpha * (p log p) is reduced mod 1 in double-double before sin/cos: at
// X ~ 1e6 it can exceed 1e5 and a plain double would lose eleven digits of
// phase.  Accumulation is Neumaier-compensated.
ExpSumSample S(double alpha, const arith::PrimeTable& table);

struct IResult {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
    std::size_t panels = 0; // 0 for the boundary-series route
};

// I(alpha) = int_{X/2}^X e(alpha y log y) dy by oscillatory panel quadrature,
// each panel spanning at most 1/8 oscillation of alpha y log y.  Throws
// accuracy_error carrying the achieved bound when tol needs more panels than
// max_panels.
IResult i_quad(double alpha, double X, double tol,
               std::size_t max_panels = std::size_t(1) << 21);

// Integration-by-parts boundary series for I(alpha): three terms plus a
// certified remainder bound (err).  The phase alpha y log y has no stationary
// point, so the series converges like (alpha X)^(-3).
IResult i_series(double alpha, double X);

// Quadrature when it is cheap, boundary series beyond the panel budget.
IResult i_auto(double alpha, double X, double tol);

// |alpha| above which i_auto switches from panels to the boundary series
double i_route_switch_alpha(double X);

// Spec-facing wrapper: plain quadrature contract.
std::complex<double> I_alpha(double alpha, double X, double tol, double* err_out = nullptr);

struct Lemma6Report {
    double max_dev = 0.0;
    double argmax_alpha = 0.0;
    double normalized = 0.0; // max_dev * exp((log X)^(1/5)) / X
    int n_grid = 0;
};

// max |S - I| over an n_grid-point uniform grid of [-tau, tau]
Lemma6Report lemma6_deviation(double X, int n_grid, const arith::PrimeTable& table);

struct VaughanParts {
    std::complex<double> u1, u2, u3, u4;
    std::complex<double> s1_direct;
    double cutoff_u = 0.0; // X^(1/3)
    double cutoff_v = 0.0; // X^(2/3)
    double residual = 0.0; // |u1 - u2 - u3 - u4 - s1_direct|
};

// Exact Vaughan decomposition S1 = U1 - U2 - U3 - U4 of
// S1(alpha) = sum_{X/2<n<=X} Lambda(n) e(alpha n log(n+1)), with
//   U1: d <= X^(1/3), weight mu(d) log l
//   U2: d <= X^(1/3), weight c(d) = sum_{d=rs, r,s <= X^(1/3)} mu(r) Lambda(s)
//   U3: X^(1/3) < d <= X^(2/3), weight c(d)
//   U4: d, l > X^(1/3), X/2 < dl <= X, weight a(d) Lambda(l),
//       a(d) = sum_{m | d, m <= X^(1/3)} mu(m).
// Throws consistency_error if the identity residual exceeds
// 1e-8 * (1 + |s1_direct|).
VaughanParts vaughan_decompose(double alpha, double X, const arith::ArithTables& tables);

// sum_{X/2<n<=X} Lambda(n) e(alpha n log(n+s)) with s = 0 or 1; used by the
// phase-shift and prime-power checks.
std::complex<double> mangoldt_exp_sum(double alpha, double X,
                                      const arith::ArithTables& tables, int shift);

struct ScanRow {
    double alpha = 0.0;
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
};

std::vector<ScanRow> scan_S(const arith::PrimeTable& table, const std::vector<double>& alphas);

struct MinorArcScan {
    double sup_S = 0.0;
    double argmax_alpha = 0.0;
    double normalized = 0.0; // sup_S / (X^(24/25) log^3 X)
    std::vector<ScanRow> rows;
};

// Supremum of |S| over a log-spaced grid of the arc between tau and K.
// Below X ~ 1e8 the derived parameters give K < tau, so the grid covers
// [min(tau,K), max(tau,K)].
MinorArcScan minor_arc_scan(double X, int n_grid, const arith::PrimeTable& table);

struct L2Report {
    double a = 0.0, b = 0.0, c = 0.0;
    double a_err = 0.0, b_err = 0.0, c_err = 0.0;
    double ratio_a = 0.0; // a / (X log^2 X)
    double ratio_b = 0.0; // b / X
    double ratio_c = 0.0; // c / (X log^2 X)
    bool c_by_pair_sum = false;
};

// a = int_{-tau}^{tau} |S|^2, b = int_{-tau}^{tau} |I|^2,
// c = int_n^{n+1} |S|^2.  c switches from quadrature to the exact pair-sum
//   sum_p w_p^2 + 2 sum_{p<q} w_p w_q cos(2 pi f (n+1/2)) sin(pi f)/(pi f)
// once the oscillation count makes quadrature more expensive.
L2Report l2_integrals(double X, const arith::PrimeTable& table, int n, double tol);

struct VdcCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// Weyl-van der Corput inequality for an arbitrary complex sequence:
//   |sum a(n)|^2 <= (1 + L/Q) sum_{|q|<=Q} (1-|q|/Q) sum_n a(n+q) conj(a(n)).
VdcCheck vdc_check(const std::vector<std::complex<double>>& seq, int Q);

struct DerivativeCheck {
    double lhs = 0.0;  // |I(alpha)|
    double rhs1 = 0.0; // 1 / (|alpha| (1 + log(X/2)))
    bool ok = false;
};

// First-derivative test on I: F(y) = alpha y log y has F' = alpha (1 + log y),
// one-signed and monotone on [X/2, X] with |F'| >= |alpha|(1 + log(X/2)).
DerivativeCheck derivative_test_check(double alpha, double X);

} // namespace plogp::expsum

#endif
