#ifndef PLOGP_KERNEL_HPP
#define PLOGP_KERNEL_HPP

namespace plogp::kernel {

// C^k bump equal to 1 on [-3eps/4, 3eps/4] and 0 outside (-eps, eps), built
// as the boxcar indicator of [-c, c] convolved with k normalized boxcars of
// width delta.  The widths c = 7eps/8, delta = eps/(4k) reproduce the plateau
// 3eps/4 and the support eps exactly:
//   c - k*delta/2 = 3eps/4,   c + k*delta/2 = eps.
struct KernelSpec {
    double eps;
    int k;
    double plateau_c() const { return 0.875 * eps; }
    double boxwidth_delta() const { return eps / (4.0 * k); }
};

// psi(y): 1 on the plateau, 0 outside the support, strictly between on the
// two transition bands; even and non-increasing in |y|.  Piecewise-polynomial
// (B-spline) closed form for k <= 8, numeric inverse transform above that.
double psi_eval(const KernelSpec& spec, double y);

// Fourier transform Psi(x) = int psi(y) e(-xy) dy in closed form:
//   (sin(2 pi c x) / (pi x)) * (sin(pi delta x) / (pi delta x))^k,
// with Psi(0) = 2c = 7eps/4.
double psi_hat(const KernelSpec& spec, double x);

struct BoundCheck {
    double lhs; // |Psi(x)|
    double rhs; // min(7eps/4, 1/(pi|x|), (1/(pi|x|)) (k/(2 pi |x| eps/8))^k)
    bool ok;
};
BoundCheck check_bound(const KernelSpec& spec, double x);

// Closed-form integral of the third bound over |x| > B.
double tail_bound(const KernelSpec& spec, double B);

// Smallest grid value B (grid step c/16) with
//   sum_bound * tail_bound(B) < tol.
double tail_cutoff(const KernelSpec& spec, double sum_bound, double tol);

} // namespace plogp::kernel

#endif
