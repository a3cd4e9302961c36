#include "plogp/kernel.hpp"

#include "plogp/errors.hpp"
#include "plogp/quadrature.hpp"

#include <cmath>
#include <limits>

namespace plogp::kernel {

namespace {

// binomial coefficients up to k = 8 fit comfortably in double
double binom(int n, int j) {
    double b = 1.0;
    for (int i = 0; i < j; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// Integral of the order-k cardinal B-spline from 0 to t, for t in [0, k]:
//   I_k(t) = (1/k!) sum_{0<=j<=t} (-1)^j C(k,j) (t-j)^k.
// Long double keeps the alternating-sum cancellation noise below ~1e-13 for
// k <= 8 (terms grow like k^k).
long double bspline_cdf(int k, long double t) {
    long double sum = 0.0L;
    long double fact = 1.0L;
    for (int j = 1; j <= k; ++j) fact *= j;
    for (int j = 0; j <= k && j <= t; ++j) {
        long double term = powl(t - j, k) * static_cast<long double>(binom(k, j));
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum / fact;
}

// psi on the transition band via the inverse transform
//   psi(y) = 2 int_0^infty Psi(x) cos(2 pi x y) dx,
// used when the closed form would lose too many digits (k > 8).
double psi_by_inverse_transform(const KernelSpec& spec, double y) {
    const double B = tail_cutoff(spec, 1.0, 1e-11);
    auto f = [&](double x) -> std::complex<double> {
        return {psi_hat(spec, x) * std::cos(2.0 * M_PI * x * y), 0.0};
    };
    // Psi oscillates at frequencies up to eps; the cosine adds y < eps.
    auto r = quad::integrate_osc(f, 0.0, B, 2.0 * spec.eps, 1e-10, 0.75,
                                 std::size_t(1) << 24);
    return 2.0 * r.value.real();
}

} // namespace

double psi_eval(const KernelSpec& spec, double y) {
    const double eps = spec.eps;
    const double ay = std::abs(y);
    if (ay <= 0.75 * eps) return 1.0;
    if (ay >= eps) return 0.0;
    if (spec.k > 8) return psi_by_inverse_transform(spec, ay);

    // psi(y) = int_{t1}^{t2} B_k(s) ds with t1 = (y-c)/delta + k/2 in (0, k)
    // and t2 >= 7k on the transition band, so the upper limit saturates:
    // psi(y) = 1 - I_k(t1).
    const long double c = 0.875L * static_cast<long double>(eps);
    const long double delta = static_cast<long double>(eps) / (4.0L * spec.k);
    const long double t1 = (static_cast<long double>(ay) - c) / delta + 0.5L * spec.k;
    long double v = 1.0L - bspline_cdf(spec.k, t1);
    if (v < 0.0L) v = 0.0L;
    if (v > 1.0L) v = 1.0L;
    return static_cast<double>(v);
}

double psi_hat(const KernelSpec& spec, double x) {
    const double c = spec.plateau_c();
    const double delta = spec.boxwidth_delta();
    if (x == 0.0) return 1.75 * spec.eps;
    const double s1 = std::sin(2.0 * M_PI * c * x) / (M_PI * x);
    const double u = M_PI * delta * x;
    const double sinc = (u == 0.0) ? 1.0 : std::sin(u) / u;
    return s1 * std::pow(sinc, spec.k);
}

BoundCheck check_bound(const KernelSpec& spec, double x) {
    BoundCheck b;
    b.lhs = std::abs(psi_hat(spec, x));
    const double ax = std::abs(x);
    double rhs = 1.75 * spec.eps;
    if (ax > 0.0) {
        const double inv = 1.0 / (M_PI * ax);
        rhs = std::min(rhs, inv);
        const double ratio = spec.k / (2.0 * M_PI * ax * spec.eps / 8.0);
        const double third = inv * std::pow(ratio, spec.k);
        if (std::isfinite(third)) rhs = std::min(rhs, third);
    }
    b.rhs = rhs;
    b.ok = b.lhs <= rhs + 1e-12 * rhs;
    return b;
}

double tail_bound(const KernelSpec& spec, double B) {
    // int_{|x|>B} (1/(pi|x|)) (C/|x|)^k dx = 2 C^k / (pi k B^k),
    // C = k/(2 pi eps/8) = 4k/(pi eps).
    if (spec.k < 1) throw domain_error("tail_bound: requires k >= 1");
    if (B <= 0.0) return std::numeric_limits<double>::infinity();
    const double C = 4.0 * spec.k / (M_PI * spec.eps);
    return 2.0 * std::pow(C / B, spec.k) / (M_PI * spec.k);
}

double tail_cutoff(const KernelSpec& spec, double sum_bound, double tol) {
    if (spec.k < 1) throw domain_error("tail_cutoff: requires k >= 1");
    if (!(tol > 0.0)) throw domain_error("tail_cutoff: requires tol > 0");
    const double C = 4.0 * spec.k / (M_PI * spec.eps);
    const double h = C / 16.0; // grid step
    if (sum_bound <= 0.0) return 0.0;
    if (std::isinf(tol)) return 0.0; // any cutoff suffices: grid minimum
    // closed-form inversion of sum_bound * 2 C^k/(pi k B^k) < tol
    const double base = 2.0 * sum_bound / (M_PI * spec.k * tol);
    const double B_exact = C * std::pow(base, 1.0 / spec.k);
    if (!std::isfinite(B_exact)) throw domain_error("tail_cutoff: cutoff overflows");
    return h * std::ceil(B_exact / h);
}

} // namespace plogp::kernel
