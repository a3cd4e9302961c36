#ifndef PLOGP_QUADRATURE_HPP
#define PLOGP_QUADRATURE_HPP

#include "plogp/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace plogp::quad {

// Gauss-Kronrod 7-15 pair (QUADPACK dqk15 constants).  The embedded 7-point
// Gauss result supplies the per-panel error estimate; since the Kronrod value
// is far more accurate than the Gauss one, |K15 - G7| overestimates the error
// of the returned K15 sum.
inline constexpr double kGK15X[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15WK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGK15WG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelValue {
    std::complex<double> value{0.0, 0.0}; // K15
    double err = 0.0;                     // |K15 - G7|
    double l1 = 0.0;                      // K15 of |f|
};

template <class F>
PanelValue gk15_panel(double a, double b, F&& f) {
    const double h = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    std::complex<double> k15{0.0, 0.0}, g7{0.0, 0.0};
    double l1 = 0.0;
    for (int j = 0; j < 7; ++j) {
        const std::complex<double> fp = f(m + h * kGK15X[j]);
        const std::complex<double> fm = f(m - h * kGK15X[j]);
        k15 += kGK15WK[j] * (fp + fm);
        l1 += kGK15WK[j] * (std::abs(fp) + std::abs(fm));
        if (j % 2 == 1) g7 += kGK15WG[j / 2] * (fp + fm);
    }
    const std::complex<double> fc = f(m);
    k15 += kGK15WK[7] * fc;
    l1 += kGK15WK[7] * std::abs(fc);
    g7 += kGK15WG[3] * fc;
    PanelValue out;
    out.value = h * k15;
    out.err = std::abs(h) * std::abs(k15 - g7);
    out.l1 = std::abs(h) * l1;
    return out;
}

// Panel edges over [a, b]: every forced breakpoint inside the range becomes
// an edge, and each piece is subdivided uniformly so a panel spans at most
// cycles_per_panel oscillations at frequency freq (cycles per unit).
inline std::vector<double> make_edges(double a, double b, double freq,
                                      double cycles_per_panel,
                                      std::vector<double> forced = {},
                                      std::size_t max_panels = std::size_t(1) << 22) {
    forced.push_back(a);
    forced.push_back(b);
    std::sort(forced.begin(), forced.end());
    std::vector<double> pts;
    for (double x : forced)
        if (x >= a && x <= b && (pts.empty() || x > pts.back())) pts.push_back(x);

    // total panel demand, clamped to the budget
    double demand = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        demand += std::max(1.0, std::ceil((pts[i + 1] - pts[i]) * freq / cycles_per_panel));
    const double scale = demand > static_cast<double>(max_panels)
                             ? static_cast<double>(max_panels) / demand
                             : 1.0;

    std::vector<double> edges;
    edges.push_back(pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        const std::size_t n = static_cast<std::size_t>(std::max(
            1.0, std::ceil((hi - lo) * freq / cycles_per_panel * scale)));
        for (std::size_t j = 1; j < n; ++j)
            edges.push_back(lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n));
        edges.push_back(hi);
    }
    return edges;
}

struct OscResult {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0; // embedded estimate plus rounding floor
    double l1 = 0.0;  // integral of |f|
    std::size_t panels = 0;
};

// Panels are computed in parallel and folded in index order, so the result
// does not depend on the thread count.
template <class F>
OscResult integrate_edges(const std::vector<double>& edges, F&& f,
                          std::vector<PanelValue>* panel_out = nullptr) {
    const std::size_t n = edges.size() > 0 ? edges.size() - 1 : 0;
    std::vector<PanelValue> panels(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        panels[i] = gk15_panel(edges[i], edges[i + 1], f);

    OscResult r;
    r.panels = n;
    for (const auto& pv : panels) {
        r.value += pv.value;
        r.err += pv.err;
        r.l1 += pv.l1;
    }
    r.err += 4.0 * 2.220446049250313e-16 * r.l1;
    if (panel_out) *panel_out = std::move(panels);
    return r;
}

// Plan, integrate, refine by halving panels until err <= tol; throws
// accuracy_error carrying the achieved bound when the budget stops us.
template <class F>
OscResult integrate_osc(F&& f, double a, double b, double freq, double tol,
                        double cycles_per_panel = 0.75,
                        std::size_t max_panels = std::size_t(1) << 22,
                        const std::vector<double>& forced = {}) {
    OscResult r;
    double cpp = cycles_per_panel;
    for (;;) {
        auto edges = make_edges(a, b, freq, cpp, forced, max_panels);
        r = integrate_edges(edges, f);
        if (r.err <= tol) return r;
        if (r.panels >= max_panels)
            throw accuracy_error("integrate_osc: panel budget exhausted", r.err);
        cpp *= 0.5;
    }
}

} // namespace plogp::quad

#endif
