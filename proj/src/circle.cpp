#include "plogp/circle.hpp"

#include "plogp/errors.hpp"
#include "plogp/expsum.hpp"
#include "plogp/quadrature.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace plogp::circle {

namespace {

// first index with phase > limit; coarse position from the hi limbs, then a
// dd-exact fixup at the boundary
std::size_t phase_above(const arith::PrimeTable& t, dd limit) {
    const auto& H = t.phase_hi;
    std::size_t i = std::upper_bound(H.begin(), H.end(), limit.hi) - H.begin();
    while (i > 0 && dd_lt(limit, t.phase(i - 1))) --i;
    while (i < t.size() && !dd_lt(limit, t.phase(i))) ++i;
    return i;
}

} // namespace

TripleCount gamma_direct(double N, double eps_used, const arith::PrimeTable& table,
                         const kernel::KernelSpec* spec, std::uint64_t pair_budget) {
    if (!(eps_used > 0.0)) throw domain_error("gamma_direct: requires eps_used > 0");
    if (spec && spec->eps != eps_used)
        throw domain_error("gamma_direct: kernel eps must match eps_used");
    const std::size_t P = table.size();
    if (P == 0) return {};
    const double pairs = 0.5 * static_cast<double>(P) * (static_cast<double>(P) + 1);
    if (pairs > static_cast<double>(pair_budget))
        throw capacity_error("gamma_direct: P^2/2 = " + std::to_string(pairs) +
                             " pairs exceed the work budget; use a smaller X");

    const dd N_dd(N);
    std::vector<double> row_gamma(P, 0.0), row_gamma0(P, 0.0);
    std::vector<std::uint64_t> row_count(P, 0);

#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(P); ++i) {
        const dd vi = table.phase(i);
        double g = 0.0, g0 = 0.0;
        std::uint64_t cnt = 0;
        for (std::size_t j = i; j < P; ++j) {
            const dd t = dd_sub(dd_sub(N_dd, vi), table.phase(j));
            // window (t - eps, t + eps) in the sorted phase array
            if (t.hi + eps_used < table.phase_hi.front() - 1e-9) break; // t decreasing in j
            if (t.hi - eps_used > table.phase_hi.back() + 1e-9) continue;
            const std::size_t lo = phase_above(table, dd_add_d(t, -eps_used));
            const std::size_t hi = phase_above(table, dd_add_d(t, eps_used));
            // phase == t + eps sits in neither (strict dev < eps); phase_above
            // returns first strictly greater, so shrink hi when equal
            std::size_t hi2 = hi;
            while (hi2 > lo && !dd_lt(dd_abs(dd_sub(table.phase(hi2 - 1), t)), dd(eps_used)))
                --hi2;
            std::size_t lo2 = lo;
            while (lo2 < hi2 && !dd_lt(dd_abs(dd_sub(table.phase(lo2), t)), dd(eps_used)))
                ++lo2;
            if (lo2 >= hi2) continue;
            const double mult = (static_cast<std::size_t>(i) == j) ? 1.0 : 2.0;
            const double wij = table.logp[i] * table.logp[j] * mult;
            g += wij * to_double(table.weight_between(lo2, hi2));
            cnt += static_cast<std::uint64_t>(mult) * (hi2 - lo2);
            if (spec) {
                // psi is exactly 1 on |dev| <= 3eps/4: prefix-sum the plateau,
                // enumerate only the two transition bands
                const double plateau = 0.75 * eps_used;
                std::size_t plo = phase_above(table, dd_add_d(t, -plateau));
                std::size_t phi = phase_above(table, dd_add_d(t, plateau));
                while (phi > plo &&
                       dd_lt(dd(plateau), dd_abs(dd_sub(table.phase(phi - 1), t))))
                    --phi;
                while (plo < phi &&
                       dd_lt(dd(plateau), dd_abs(dd_sub(table.phase(plo), t))))
                    ++plo;
                plo = std::max(plo, lo2);
                phi = std::min(phi, hi2);
                if (plo < phi) g0 += wij * to_double(table.weight_between(plo, phi));
                for (std::size_t m = lo2; m < std::min(plo, hi2); ++m) {
                    const double dev = std::abs(to_double(dd_sub(table.phase(m), t)));
                    g0 += wij * table.logp[m] * kernel::psi_eval(*spec, dev);
                }
                for (std::size_t m = std::max(phi, lo2); m < hi2; ++m) {
                    const double dev = std::abs(to_double(dd_sub(table.phase(m), t)));
                    g0 += wij * table.logp[m] * kernel::psi_eval(*spec, dev);
                }
            }
        }
        row_gamma[i] = g;
        row_gamma0[i] = g0;
        row_count[i] = cnt;
    }

    TripleCount out;
    for (std::size_t i = 0; i < P; ++i) {
        out.gamma += row_gamma[i];
        out.gamma0 += row_gamma0[i];
        out.witness_count += row_count[i];
    }
    return out;
}

namespace {

struct ArcRegions {
    std::complex<double> g1, g2, g3;
};

// shared machinery for the S^3 and I^3 kernels: integrate f over [-B, B]
// with forced breakpoints at the arc boundaries, refining until the embedded
// error estimate passes tol
template <class F>
quad::OscResult arcs_integrate(F&& f, double B, double t1, double t2, double freq,
                               double tol, std::size_t max_panels,
                               ArcRegions& regions, std::size_t& n_panels) {
    double cpp = 0.75;
    for (;;) {
        std::vector<double> forced{-t2, -t1, 0.0, t1, t2};
        auto edges = quad::make_edges(-B, B, freq, cpp, forced, max_panels);
        std::vector<quad::PanelValue> panels;
        auto r = quad::integrate_edges(edges, f, &panels);
        regions = {};
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double mid = std::abs(0.5 * (edges[i] + edges[i + 1]));
            if (mid <= t1)
                regions.g1 += panels[i].value;
            else if (mid <= t2)
                regions.g2 += panels[i].value;
            else
                regions.g3 += panels[i].value;
        }
        n_panels = r.panels;
        if (r.err <= tol) return r;
        if (r.panels >= max_panels)
            throw accuracy_error("arcs_integrate: panel budget exhausted", r.err);
        cpp *= 0.5;
    }
}

} // namespace

ArcsReport s3_arcs(double N, const scaling::CircleParams& params,
                   const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                   double tol, std::size_t max_panels) {
    const double S0 = to_double(table.total_weight());
    ArcsReport rep;
    rep.sum_bound = S0 * S0 * S0;
    rep.B = kernel::tail_cutoff(spec, rep.sum_bound, 0.5 * tol);
    rep.truncation_err = rep.sum_bound * kernel::tail_bound(spec, rep.B);
    rep.t1 = std::min(params.tau, params.K);
    rep.t2 = std::max(params.tau, params.K);

    const double vmin = table.phase_hi.front();
    const double vmax = table.phase_hi.back();
    const double freq =
        std::max(std::abs(3.0 * vmin - N), std::abs(3.0 * vmax - N)) + spec.eps;

    const dd N_dd(N);
    auto f = [&](double a) -> std::complex<double> {
        const auto s = expsum::S(a, table);
        const std::complex<double> s3 = s.value * s.value * s.value;
        return s3 * e_of(dd_mul_d(N_dd, -a)) * kernel::psi_hat(spec, a);
    };

    ArcRegions regions;
    auto r = arcs_integrate(f, rep.B, rep.t1, rep.t2, freq, 0.5 * tol, max_panels,
                            regions, rep.panels);
    rep.g0 = r.value;
    rep.g1 = regions.g1;
    rep.g2 = regions.g2;
    rep.g3 = regions.g3;
    rep.quadrature_err = r.err;
    return rep;
}

double gamma0_integral(double N, const scaling::CircleParams& params,
                       const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                       double tol, ArcsReport* full) {
    auto arcs = s3_arcs(N, params, table, spec, tol);
    if (std::abs(arcs.g0.imag()) > tol)
        throw accuracy_error("gamma0_integral: odd part failed to cancel",
                             std::abs(arcs.g0.imag()));
    if (full) *full = arcs;
    return arcs.g0.real();
}

ArcSplit gamma_split(double N, const scaling::CircleParams& params,
                     const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                     double tol) {
    auto arcs = s3_arcs(N, params, table, spec, tol);
    ArcSplit s;
    s.g1 = arcs.g1;
    s.g2 = arcs.g2;
    s.g3 = arcs.g3;
    const double X = params.X;
    const double L = std::log(X);
    s.ratio_g1 = s.g1.real() * L / (spec.eps * X * X);
    s.ratio_g2 = std::abs(s.g2) / (std::pow(X, 49.0 / 25.0) * std::pow(L, 6.0));
    s.ratio_g3 = std::abs(s.g3);
    return s;
}

ThetaReport theta_integrals(double N, const scaling::CircleParams& params,
                            const arith::PrimeTable& table,
                            const kernel::KernelSpec& spec, double tol,
                            std::size_t max_panels) {
    const double X = params.X;
    ThetaReport rep;
    const double Ibound = X / 2.0;
    const double sum_bound = Ibound * Ibound * Ibound;
    rep.B = kernel::tail_cutoff(spec, sum_bound, 0.5 * tol);
    rep.truncation_err = sum_bound * kernel::tail_bound(spec, rep.B);

    const double vmin = table.phase_hi.empty() ? (X / 2.0) * std::log(X / 2.0)
                                               : table.phase_hi.front();
    const double vmax = table.phase_hi.empty() ? X * std::log(X) : table.phase_hi.back();
    const double freq =
        std::max(std::abs(3.0 * vmin - N), std::abs(3.0 * vmax - N)) + spec.eps;

    const dd N_dd(N);
    const double la = 1.0 + std::log(X / 2.0);
    auto i_cap = [&](double a) {
        return std::min(X / 2.0, 1.0 / (std::max(std::abs(a), 1e-300) * la));
    };
    auto f = [&](double a) -> std::complex<double> {
        const auto ir = expsum::i_auto(a, X, 1e-9 * i_cap(a));
        const std::complex<double> i3 = ir.value * ir.value * ir.value;
        return i3 * e_of(dd_mul_d(N_dd, -a)) * kernel::psi_hat(spec, a);
    };

    const double t1 = std::min(params.tau, rep.B);
    ArcRegions regions;
    auto r = arcs_integrate(f, rep.B, t1, rep.B, freq, 0.5 * tol, max_panels, regions,
                            rep.panels);
    rep.theta = r.value;
    rep.theta_tau = regions.g1; // |alpha| <= tau share of the same nodes
    rep.quadrature_err = r.err;

    // inner I error propagated through I^3: |d(I^3)| <= 3 Ib(a)^2 * dI(a),
    // integrated against |Psi| <= min(7eps/4, 1/(pi a)).  Quad route: dI <=
    // 1e-9 Ib; series route: dI <= R3, worst at the route switch.
    const double a0 = 1.0 / (1.75 * spec.eps * M_PI);
    const double psi_l1 = (rep.B <= a0)
                              ? 2.0 * rep.B * 1.75 * spec.eps
                              : 2.0 * (1.0 + std::log(rep.B / a0)) / M_PI;
    rep.quadrature_err += 3.0 * Ibound * Ibound * (1e-9 * Ibound) * psi_l1;
    const double alpha_sw = expsum::i_route_switch_alpha(X);
    if (rep.B > alpha_sw) {
        const double r3 = expsum::i_series(alpha_sw, X).err;
        rep.quadrature_err += 3.0 * i_cap(alpha_sw) * i_cap(alpha_sw) * r3 * psi_l1;
    }

    const double L = std::log(X);
    rep.ratio = rep.theta.real() * L / (spec.eps * X * X);
    rep.tail_gap = std::abs(rep.theta_tau - rep.theta);
    rep.tail_gap_bound = spec.eps / (params.tau * params.tau * std::pow(1.0 + L, 3.0));
    return rep;
}

GammaReport full_report(double N, const scaling::CircleParams& params,
                        const arith::PrimeTable& table, const kernel::KernelSpec& spec,
                        double tol) {
    GammaReport rep;
    rep.eps_used = spec.eps;
    rep.k_used = spec.k;

    auto tc = gamma_direct(N, spec.eps, table, &spec);
    rep.gamma_direct = tc.gamma;
    rep.gamma0_direct = tc.gamma0;
    rep.witness_count = tc.witness_count;

    auto arcs = s3_arcs(N, params, table, spec, tol);
    rep.gamma0_integral = arcs.g0.real();
    rep.gamma1 = arcs.g1;
    rep.gamma2 = arcs.g2;
    rep.gamma3 = arcs.g3;
    rep.quadrature_err = arcs.quadrature_err;
    rep.truncation_err = arcs.truncation_err;

    auto th = theta_integrals(N, params, table, spec, tol);
    rep.theta_tau = th.theta_tau.real();
    rep.theta = th.theta.real();
    rep.quadrature_err += th.quadrature_err; // combined budget for the record
    rep.truncation_err += th.truncation_err;

    const double X = params.X;
    const double L = std::log(X);
    rep.ratio_g1 = rep.gamma1.real() * L / (spec.eps * X * X);
    rep.ratio_g2 = std::abs(rep.gamma2) / (std::pow(X, 49.0 / 25.0) * std::pow(L, 6.0));
    rep.ratio_g3 = std::abs(rep.gamma3);
    rep.ratio_theta = th.ratio;
    rep.gap_g1_theta_tau = std::abs(rep.gamma1.real() - rep.theta_tau);
    rep.gap_g1_theta_tau_normalized =
        rep.gap_g1_theta_tau /
        (spec.eps * X * X * std::exp(-std::pow(L, 1.0 / 6.0)));
    return rep;
}

} // namespace plogp::circle
