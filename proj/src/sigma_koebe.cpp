#include "krzyz/sigma_koebe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace krzyz {

namespace {
constexpr double kPi = std::numbers::pi;
}

SNormalizedMap::SNormalizedMap(TruncatedSeries s) : theta(0.0), series(std::move(s)) {
    if (series.order() < 1 || std::abs(series.coeff(0)) > 1e-12)
        throw std::domain_error("normalized map requires c_0 = 0");
    const cplx c1 = series.coeff(1);
    if (std::abs(std::abs(c1) - 1.0) > 1e-12)
        throw std::domain_error("normalized map requires |c_1| = 1");
    theta = std::arg(c1);
}

cplx SigmaNormalizedMap::eval_at(cplx zeta) const {
    cplx tail = 0.0;
    const cplx u = 1.0 / zeta;
    for (auto it = b.rbegin(); it != b.rend(); ++it) tail = (tail + *it) * u;
    // tail = b_0/zeta + b_1/zeta^2 + ...; one power too deep, undo once
    return std::polar(1.0, -theta) * zeta + tail * zeta;
}

SigmaNormalizedMap s_to_sigma(const SNormalizedMap& w, int M) {
    if (M + 2 > w.series.order())
        throw IndexBeyondOrder(M + 2, w.series.order());
    // w(1/zeta) = (1/zeta) g(1/zeta) with g(u) = c_1 + c_2 u + ...;
    // F = 1/w(1/zeta) = zeta * (1/g)(1/zeta)
    const int ord = w.series.order() - 1;
    TruncatedSeries g = TruncatedSeries::zero(ord);
    for (int k = 0; k <= ord; ++k) g.set_coeff(k, w.series.coeff(k + 1));
    TruncatedSeries h = div(TruncatedSeries::constant(1.0, ord), g);
    SigmaNormalizedMap F;
    F.theta = w.theta;
    F.b.resize(M + 1);
    for (int j = 0; j <= M; ++j) F.b[j] = h.coeff(j + 1);
    return F;
}

SNormalizedMap sigma_to_s(const SigmaNormalizedMap& F, int order) {
    // w(z) = 1/F(1/z) = z / (e^{-i theta} + b_0 z + b_1 z^2 + ...)
    TruncatedSeries G = TruncatedSeries::zero(order);
    G.set_coeff(0, std::polar(1.0, -F.theta));
    for (size_t j = 0; j < F.b.size() && static_cast<int>(j) + 1 <= order; ++j)
        G.set_coeff(static_cast<int>(j) + 1, F.b[j]);
    TruncatedSeries h = div(TruncatedSeries::constant(1.0, order), G);
    TruncatedSeries w = TruncatedSeries::zero(order);
    for (int k = 1; k <= order; ++k) w.set_coeff(k, h.coeff(k - 1));
    return SNormalizedMap(w);
}

double recursion_residual(const SNormalizedMap& w, const SigmaNormalizedMap& F) {
    const cplx e1 = std::polar(1.0, -w.theta);
    const cplx e2 = e1 * e1;
    const int M = static_cast<int>(F.b.size()) - 1;
    double worst = 0.0;
    for (int n = 0; n <= M; ++n) {
        if (n + 2 > w.series.order()) break;
        cplx acc = F.b[n] + e2 * w.series.coeff(n + 2);
        for (int j = 1; j <= n; ++j)
            acc += e1 * F.b[n - j] * w.series.coeff(j + 1);
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

CoveredRadius covered_radius(const SNormalizedMap& w, double a2_sup) {
    if (!(a2_sup > 0.0)) throw std::domain_error("a2_sup must be positive");
    const double radii[3] = {0.99, 0.995, 0.999};
    double s[3], m[3];
    cplx boundary_point = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double r = radii[i];
        const int n_t = 1024;
        double mn = std::numeric_limits<double>::infinity();
        double th_at = 0.0;
        for (int t = 0; t < n_t; ++t) {
            const double th = 2.0 * kPi * t / n_t;
            const double v = std::abs(eval(w.series, r * cplx{std::cos(th), std::sin(th)}));
            if (v < mn) { mn = v; th_at = th; }
        }
        double dt = 2.0 * kPi / n_t;
        for (int pass = 0; pass < 16; ++pass) {
            for (int a = -4; a <= 4; ++a) {
                const double th = th_at + dt * a / 4.0;
                const double v = std::abs(eval(w.series, r * cplx{std::cos(th), std::sin(th)}));
                if (v < mn) { mn = v; th_at = th; }
            }
            dt *= 0.35;
        }
        s[i] = 1.0 - r;
        m[i] = mn;
        if (i == 2) boundary_point = eval(w.series, r * cplx{std::cos(th_at), std::sin(th_at)});
    }
    // Lagrange extrapolation of min-modulus to the boundary in s = 1 - r
    double value = 0.0;
    for (int i = 0; i < 3; ++i) {
        double li = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) li *= (0.0 - s[j]) / (s[i] - s[j]);
        value += m[i] * li;
    }
    return CoveredRadius{value, boundary_point, 1.0 / (2.0 * a2_sup)};
}

SigmaBoundaryCheck sigma_boundary_check(const SigmaNormalizedMap& F, double a2_sup,
                                        double tol) {
    if (!(a2_sup > 0.0)) throw std::domain_error("a2_sup must be positive");
    double worst = -std::numeric_limits<double>::infinity();
    const int n_t = 4096;
    for (int t = 0; t < n_t; ++t) {
        const double th = 2.0 * kPi * t / n_t;
        const cplx W = F.eval_at(cplx{std::cos(th), std::sin(th)});
        worst = std::max(worst, std::abs(W + a2_sup) - a2_sup);
    }
    return SigmaBoundaryCheck{worst <= tol, worst};
}

}  // namespace krzyz
