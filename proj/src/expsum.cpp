#include "plogp/expsum.hpp"

#include "plogp/errors.hpp"
#include "plogp/quadrature.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace plogp::expsum {

namespace {

inline void neumaier_add(double& sum, double& comp, double v) {
    double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
}

} // namespace

ExpSumSample S(double alpha, const arith::PrimeTable& table) {
    ExpSumSample out;
    out.alpha = alpha;
    out.n_terms = table.size();
    double re = 0.0, cre = 0.0, im = 0.0, cim = 0.0;
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto z = e_of(dd_mul_d(table.phase(i), alpha));
        const double w = table.logp[i];
        neumaier_add(re, cre, w * z.real());
        neumaier_add(im, cim, w * z.imag());
    }
    out.value = {re + cre, im + cim};
    // per-term rotor error (double angle + sin/cos ulp) dominates
    out.abs_err = 1e-15 * to_double(table.total_weight());
    return out;
}

IResult i_quad(double alpha, double X, double tol, std::size_t max_panels) {
    if (!(X >= 4.0)) throw domain_error("I: requires X >= 4");
    if (!(tol > 0.0)) throw domain_error("I: requires tol > 0");
    if (alpha == 0.0) return {{X / 2.0, 0.0}, 0.0, 0};

    const double a = X / 2.0, b = X;
    const double freq = std::abs(alpha) * (1.0 + std::log(X)); // cycles per unit y
    // plain-double phase noise: |phase| <= |alpha| X log X; no panel count can
    // push the result below this floor
    const double phase_noise =
        2.0 * M_PI * std::abs(alpha) * X * std::log(X) * 1.2e-16 * (b - a);
    if (phase_noise >= tol)
        throw accuracy_error("I: phase rounding floor exceeds tol at this alpha*X",
                             phase_noise);
    auto f = [alpha](double y) -> std::complex<double> {
        const double ph = alpha * y * std::log(y);
        const double r = std::remainder(ph, 1.0);
        const double t = 2.0 * M_PI * r;
        return {std::cos(t), std::sin(t)};
    };
    auto r = quad::integrate_osc(f, a, b, freq, tol - phase_noise, 0.125, max_panels);
    return {r.value, r.err + phase_noise, r.panels};
}

IResult i_series(double alpha, double X) {
    // I = [e(f) W(y)]_{X/2}^{X} + R3,
    // W(y) = -iP/(2 pi a) - P^3/(4 pi^2 a^2 y) + i(P^4 + 3P^5)/(8 pi^3 a^3 y^2),
    // P = 1/(1 + log y), a = alpha.  R3 is bounded by the next
    // integration-by-parts integrand in absolute value.
    const double a = alpha;
    auto W = [a](double y) -> std::complex<double> {
        const double P = 1.0 / (1.0 + std::log(y));
        const double w1 = -P / (2.0 * M_PI * a);
        const double w2 = -P * P * P / (4.0 * M_PI * M_PI * a * a * y);
        const double w3 =
            (std::pow(P, 4) + 3.0 * std::pow(P, 5)) / (8.0 * std::pow(M_PI, 3) * a * a * a * y * y);
        return {w2, w1 + w3};
    };
    auto ef = [a](double y) {
        dd ph = dd_mul_d(dd_mul(dd(y), dd_log(dd(y))), a);
        return e_of(ph);
    };
    const double ylo = X / 2.0, yhi = X;
    std::complex<double> v = ef(yhi) * W(yhi) - ef(ylo) * W(ylo);
    const double Pa = 1.0 / (1.0 + std::log(ylo));
    const double R3 = (2.0 * std::pow(Pa, 4) + 10.0 * std::pow(Pa, 5) + 15.0 * std::pow(Pa, 6)) /
                      (std::pow(2.0 * M_PI * std::abs(a), 3) * 2.0 * ylo * ylo);
    return {v, R3, 0};
}

// The switch sits where 32 oscillations of the phase fit in [X/2, X]: below it
// quadrature costs at most ~256 panels, above it the boundary series is
// already accurate to R3 ~ (2 pi alpha)^-3 / X^2.
double i_route_switch_alpha(double X) { return 64.0 / ((1.0 + std::log(X)) * X); }

IResult i_auto(double alpha, double X, double tol) {
    if (alpha == 0.0) return {{X / 2.0, 0.0}, 0.0, 0};
    if (std::abs(alpha) <= i_route_switch_alpha(X)) return i_quad(alpha, X, tol);
    return i_series(alpha, X); // err carries the certified remainder bound
}

std::complex<double> I_alpha(double alpha, double X, double tol, double* err_out) {
    IResult r = i_quad(alpha, X, tol);
    if (err_out) *err_out = r.err;
    return r.value;
}

Lemma6Report lemma6_deviation(double X, int n_grid, const arith::PrimeTable& table) {
    if (!(X >= 1e3)) throw domain_error("lemma6_deviation: requires X >= 1e3");
    if (n_grid < 2) throw domain_error("lemma6_deviation: requires n_grid >= 2");
    const auto params = scaling::derive_params(X);
    const double tau = params.tau;
    const double tol_i = std::max(1e-12 * X, 1e-12);

    std::vector<double> devs(n_grid);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_grid; ++i) {
        const double a = -tau + 2.0 * tau * i / (n_grid - 1);
        const auto s = S(a, table);
        const auto ir = i_auto(a, X, tol_i);
        devs[i] = std::abs(s.value - ir.value);
    }
    Lemma6Report rep;
    rep.n_grid = n_grid;
    for (int i = 0; i < n_grid; ++i)
        if (devs[i] > rep.max_dev) {
            rep.max_dev = devs[i];
            rep.argmax_alpha = -tau + 2.0 * tau * i / (n_grid - 1);
        }
    rep.normalized = rep.max_dev * std::exp(std::pow(std::log(X), 0.2)) / X;
    return rep;
}

namespace {

// e(alpha * m * log(m+s)) with the phase in double-double
inline std::complex<double> e_phase_int(double alpha, std::uint64_t m, int s) {
    dd ph = dd_mul_d(dd_mul_d(dd_log_u64(m + s), static_cast<double>(m)), alpha);
    return e_of(ph);
}

} // namespace

std::complex<double> mangoldt_exp_sum(double alpha, double X,
                                      const arith::ArithTables& tables, int shift) {
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(X));
    const std::uint64_t lo = static_cast<std::uint64_t>(std::floor(X / 2.0));
    std::complex<double> sum{0.0, 0.0};
    for (std::uint64_t m = lo + 1; m <= hi; ++m) {
        if (2.0 * static_cast<double>(m) <= X) continue; // enforce m > X/2 exactly
        if (!tables.mangoldt_p[m]) continue;
        sum += tables.lambda(m) * e_phase_int(alpha, m, shift);
    }
    return sum;
}

VaughanParts vaughan_decompose(double alpha, double X, const arith::ArithTables& tables) {
    const std::uint64_t n_hi = static_cast<std::uint64_t>(std::floor(X));
    if (tables.upto < n_hi) throw domain_error("vaughan_decompose: tables.upto < X");
    if (!(X >= 4.0)) throw domain_error("vaughan_decompose: requires X >= 4");

    // integer cutoffs: d <= X^(1/3)  <=>  d^3 <= X, d <= X^(2/3) <=> d^3 <= X^2
    std::uint64_t u_int = static_cast<std::uint64_t>(std::cbrt(X)) + 2;
    while (static_cast<double>(u_int) * u_int * u_int > X) --u_int;
    std::uint64_t v_int = static_cast<std::uint64_t>(std::cbrt(X * X)) + 2;
    while (static_cast<double>(v_int) * v_int * v_int > X * X) --v_int;

    // c(d) = sum_{d = r s, r,s <= u} mu(r) Lambda(s), supported on d <= u^2 <= v
    std::vector<double> c(v_int + 1, 0.0);
    for (std::uint64_t r = 1; r <= u_int; ++r) {
        if (!tables.mobius[r]) continue;
        const double mur = tables.mobius[r];
        for (std::uint64_t s = 2; s <= u_int && r * s <= v_int; ++s)
            if (tables.mangoldt_p[s]) c[r * s] += mur * tables.lambda(s);
    }

    // a(d) = sum_{m | d, m <= u} mu(m) for d up to X / (u+1)
    const std::uint64_t a_limit = static_cast<std::uint64_t>(X / (u_int + 1)) + 1;
    std::vector<std::int32_t> acoef(a_limit + 1, 0);
    for (std::uint64_t m = 1; m <= std::min(u_int, a_limit); ++m) {
        if (!tables.mobius[m]) continue;
        for (std::uint64_t d = m; d <= a_limit; d += m) acoef[d] += tables.mobius[m];
    }

    // l-range (X/(2d), X/d]: the products stay far below 2^53, so the double
    // predicates 2ld <= X and ld <= X are exact
    auto l_range = [X](std::uint64_t d, std::uint64_t& lo, std::uint64_t& hi) {
        lo = static_cast<std::uint64_t>(std::floor(X / (2.0 * d)));
        while (lo > 0 && 2.0 * static_cast<double>(lo * d) > X) --lo;
        while (2.0 * static_cast<double>((lo + 1) * d) <= X) ++lo; // last l with 2ld <= X
        hi = static_cast<std::uint64_t>(std::floor(X / d));
        while (hi > 0 && static_cast<double>(hi * d) > X) --hi;
        while (static_cast<double>((hi + 1) * d) <= X) ++hi; // last l with ld <= X
    };

    VaughanParts out;
    out.cutoff_u = std::cbrt(X);
    out.cutoff_v = std::cbrt(X * X);

    std::complex<double> u1{0, 0}, u2{0, 0}, u3{0, 0}, u4{0, 0}, s1{0, 0};

    for (std::uint64_t d = 1; d <= v_int; ++d) {
        const bool in_u1 = d <= u_int && tables.mobius[d] != 0;
        const bool has_c = c[d] != 0.0;
        if (!in_u1 && !has_c) continue;
        std::uint64_t lo, hi;
        l_range(d, lo, hi);
        std::complex<double> sum_log{0, 0}, sum_one{0, 0};
        for (std::uint64_t l = lo + 1; l <= hi; ++l) {
            const auto z = e_phase_int(alpha, d * l, 1);
            if (in_u1) sum_log += std::log(static_cast<double>(l)) * z;
            if (has_c) sum_one += z;
        }
        if (in_u1) u1 += static_cast<double>(tables.mobius[d]) * sum_log;
        if (has_c) {
            if (d <= u_int)
                u2 += c[d] * sum_one;
            else
                u3 += c[d] * sum_one;
        }
    }

    // U4: l > u prime powers, d > u, X/2 < dl <= X; the d-window is empty
    // once l (u+1) > X
    for (std::uint64_t l = u_int + 1;
         l <= n_hi && static_cast<double>(l) * (u_int + 1) <= X; ++l) {
        if (!tables.mangoldt_p[l]) continue;
        const double lam = tables.lambda(l);
        std::uint64_t dlo, dhi;
        l_range(l, dlo, dhi); // same window with roles swapped
        dlo = std::max(dlo, u_int); // d > u
        std::complex<double> sum_a{0, 0};
        for (std::uint64_t d = dlo + 1; d <= dhi; ++d)
            if (acoef[d]) sum_a += static_cast<double>(acoef[d]) * e_phase_int(alpha, d * l, 1);
        u4 += lam * sum_a;
    }

    for (std::uint64_t m = static_cast<std::uint64_t>(std::floor(X / 2.0)) + 1; m <= n_hi; ++m) {
        if (2.0 * static_cast<double>(m) <= X) continue;
        if (!tables.mangoldt_p[m]) continue;
        s1 += tables.lambda(m) * e_phase_int(alpha, m, 1);
    }

    out.u1 = u1;
    out.u2 = u2;
    out.u3 = u3;
    out.u4 = u4;
    out.s1_direct = s1;
    out.residual = std::abs(u1 - u2 - u3 - u4 - s1);
    if (out.residual > 1e-8 * (1.0 + std::abs(s1)))
        throw consistency_error("vaughan_decompose: identity residual " +
                                std::to_string(out.residual) +
                                " exceeds tolerance (coefficient convention bug?)");
    return out;
}

std::vector<ScanRow> scan_S(const arith::PrimeTable& table, const std::vector<double>& alphas) {
    std::vector<ScanRow> rows(alphas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(alphas.size()); ++i) {
        const auto s = S(alphas[i], table);
        rows[i] = {alphas[i], s.value, s.abs_err};
    }
    return rows;
}

MinorArcScan minor_arc_scan(double X, int n_grid, const arith::PrimeTable& table) {
    if (n_grid < 2) throw domain_error("minor_arc_scan: requires n_grid >= 2");
    const auto params = scaling::derive_params(X);
    const double lo = std::min(params.tau, params.K);
    const double hi = std::max(params.tau, params.K);
    std::vector<double> alphas(n_grid);
    for (int i = 0; i < n_grid; ++i)
        alphas[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n_grid - 1));

    MinorArcScan scan;
    scan.rows = scan_S(table, alphas);
    for (const auto& r : scan.rows) {
        const double m = std::abs(r.value);
        if (m > scan.sup_S) {
            scan.sup_S = m;
            scan.argmax_alpha = r.alpha;
        }
    }
    const double L = std::log(X);
    scan.normalized = scan.sup_S / (std::pow(X, 24.0 / 25.0) * L * L * L);
    return scan;
}

L2Report l2_integrals(double X, const arith::PrimeTable& table, int n, double tol) {
    if (!(X >= 100.0)) throw domain_error("l2_integrals: requires X >= 100");
    const auto params = scaling::derive_params(X);
    const double tau = params.tau;
    const std::size_t P = table.size();
    const double vmin = table.phase_hi.front();
    const double vmax = table.phase_hi.back();
    const double dv = vmax - vmin; // frequency band of |S|^2 and |I|^2

    L2Report rep;

    auto fS2 = [&table](double a) -> std::complex<double> {
        const auto s = S(a, table);
        return {std::norm(s.value), 0.0};
    };
    auto ra = quad::integrate_osc(fS2, -tau, tau, dv, tol, 0.75, std::size_t(1) << 18);
    rep.a = ra.value.real();
    rep.a_err = ra.err;

    const double tol_i = std::max(1e-12 * X, 1e-12);
    auto fI2 = [X, tol_i](double a) -> std::complex<double> {
        const auto ir = i_auto(a, X, tol_i);
        return {std::norm(ir.value), 0.0};
    };
    auto rb = quad::integrate_osc(fI2, -tau, tau, dv, tol, 0.75, std::size_t(1) << 18);
    rep.b = rb.value.real();
    rep.b_err = rb.err + 2.0 * tol_i * X * tau; // inner |I| error propagated

    // c = int_n^{n+1} |S|^2
    if (dv <= 4.0e4) {
        auto rc = quad::integrate_osc(fS2, static_cast<double>(n), static_cast<double>(n) + 1.0,
                                      dv, tol, 0.75, std::size_t(1) << 18);
        rep.c = rc.value.real();
        rep.c_err = rc.err;
        rep.c_by_pair_sum = false;
    } else {
        // exact pair sum: int_n^{n+1} e(f a) da = e(f(n+1/2)) sin(pi f)/(pi f)
        std::vector<double> rows(P, 0.0), rows_l1(P, 0.0);
        const double mid = static_cast<double>(n) + 0.5;
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(P); ++i) {
            const double wi = table.logp[i];
            double acc = wi * wi, l1 = wi * wi;
            for (std::size_t j = i + 1; j < P; ++j) {
                const double f = to_double(dd_sub(table.phase(j), table.phase(i)));
                const double kernel = std::sin(M_PI * f) / (M_PI * f);
                const double co = std::cos(2.0 * M_PI * std::remainder(f * mid, 1.0));
                const double term = 2.0 * wi * table.logp[j] * co * kernel;
                acc += term;
                l1 += std::abs(term);
            }
            rows[i] = acc;
            rows_l1[i] = l1;
        }
        double c = 0.0, comp = 0.0, l1 = 0.0;
        for (std::size_t i = 0; i < P; ++i) {
            neumaier_add(c, comp, rows[i]);
            l1 += rows_l1[i];
        }
        rep.c = c + comp;
        rep.c_err = 8.0 * 2.220446049250313e-16 * l1;
        rep.c_by_pair_sum = true;
    }

    const double L = std::log(X);
    rep.ratio_a = rep.a / (X * L * L);
    rep.ratio_b = rep.b / X;
    rep.ratio_c = rep.c / (X * L * L);
    return rep;
}

VdcCheck vdc_check(const std::vector<std::complex<double>>& seq, int Q) {
    if (seq.empty()) throw domain_error("vdc_check: empty sequence");
    if (Q < 1) throw domain_error("vdc_check: requires Q >= 1");
    const std::int64_t L = static_cast<std::int64_t>(seq.size());

    std::complex<double> total{0, 0};
    for (const auto& z : seq) total += z;

    double corr = 0.0;
    for (std::int64_t q = -Q; q <= Q; ++q) {
        const double w = 1.0 - std::abs(static_cast<double>(q)) / Q;
        if (w == 0.0) continue;
        std::complex<double> inner{0, 0};
        for (std::int64_t m = 0; m < L; ++m) {
            const std::int64_t mq = m + q;
            if (mq < 0 || mq >= L) continue;
            inner += seq[mq] * std::conj(seq[m]);
        }
        corr += w * inner.real();
    }

    VdcCheck out;
    out.lhs = std::norm(total);
    out.rhs = (1.0 + static_cast<double>(L) / Q) * corr;
    out.ok = out.lhs <= out.rhs + 1e-9 * (1.0 + out.rhs);
    return out;
}

DerivativeCheck derivative_test_check(double alpha, double X) {
    if (alpha == 0.0) throw domain_error("derivative_test_check: requires alpha != 0");
    if (!(X >= 4.0)) throw domain_error("derivative_test_check: requires X >= 4");
    DerivativeCheck out;
    out.rhs1 = 1.0 / (std::abs(alpha) * (1.0 + std::log(X / 2.0)));
    // the comparison slack is rhs1 * 1e-6, so 1e-8 * rhs1 of quadrature error
    // is invisible; an absolute floor would dip under the rounding noise of
    // the panel sums at small alpha
    const double tol = 1e-8 * out.rhs1;
    out.lhs = std::abs(i_auto(alpha, X, tol).value);
    out.ok = out.lhs <= out.rhs1 * (1.0 + 1e-6);
    return out;
}

} // namespace plogp::expsum
