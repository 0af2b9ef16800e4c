#include "krzyz/schwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace krzyz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kRadial = 64;
constexpr int kAngular = 256;
constexpr double kZoomShrink = 0.35;
constexpr double kRelGain = 1e-6;

double weighted(const TruncatedSeries& phi, double r, double th) {
    const double w = 1.0 - r * r;
    return w * w * std::abs(eval(phi, r * cplx{std::cos(th), std::sin(th)}));
}

struct ScanBest {
    double value = 0.0;
    double r = 0.0;
    double th = 0.0;
};

ScanBest global_scan(const TruncatedSeries& phi) {
    ScanBest best;
    for (int i = 0; i < kRadial; ++i) {
        // geometric spacing of s = 1 - r accumulating at the boundary
        const double s = std::pow(10.0, -3.0 * i / (kRadial - 1));
        const double r = 1.0 - s;
        for (int j = 0; j < kAngular; ++j) {
            const double th = 2.0 * kPi * j / kAngular;
            const double v = weighted(phi, r, th);
            if (v > best.value) best = {v, r, th};
        }
    }
    return best;
}

ScanBest zoom(const TruncatedSeries& phi, ScanBest best) {
    double dr = 0.02;
    double dt = 2.0 * kPi / kAngular;
    for (int pass = 0; pass < 40; ++pass) {
        const double before = best.value;
        for (int a = 0; a < 9; ++a) {
            const double r = std::clamp(best.r + dr * (a - 4) / 4.0, 0.0, 1.0 - 1e-12);
            for (int b = 0; b < 9; ++b) {
                const double th = best.th + dt * (b - 4) / 4.0;
                const double v = weighted(phi, r, th);
                if (v > best.value) best = {v, r, th};
            }
        }
        dr *= kZoomShrink;
        dt *= kZoomShrink;
        if (pass >= 7 && best.value - before <= kRelGain * best.value) break;
    }
    return best;
}

}  // namespace

TruncatedSeries schwarzian(const TruncatedSeries& w) {
    const TruncatedSeries d1 = derivative(w);
    const TruncatedSeries q = div(derivative(d1), d1);
    return derivative(q) - scale(mul(q, q), 0.5);
}

BNormEstimate b_norm(const TruncatedSeries& phi) {
    ScanBest best = zoom(phi, global_scan(phi));
    const cplx witness = best.r * cplx{std::cos(best.th), std::sin(best.th)};
    return BNormEstimate{best.value, witness, kRadial, kAngular};
}

BeltramiSample aw_beltrami(const TruncatedSeries& phi, cplx zeta, double norm_value) {
    if (norm_value >= 2.0) throw NormTooLarge(norm_value);
    const cplx zbar = std::conj(zeta);
    const cplx u = 1.0 / zbar;
    const double m = std::abs(zeta);
    const double w = m * m - 1.0;
    const cplx zbar2 = zbar * zbar;
    return BeltramiSample{zeta, -0.5 * w * w * eval(phi, u) / (zbar2 * zbar2)};
}

BeltramiSample aw_beltrami(const TruncatedSeries& phi, cplx zeta) {
    return aw_beltrami(phi, zeta, b_norm(phi).value);
}

std::vector<BeltramiSample> aw_beltrami_grid(const TruncatedSeries& phi) {
    const double norm_value = b_norm(phi).value;
    std::vector<BeltramiSample> out;
    out.reserve(static_cast<size_t>(kRadial) * kAngular);
    for (int i = 0; i < kRadial; ++i) {
        const double s = std::pow(10.0, -3.0 * i / (kRadial - 1));
        const double r = 1.0 - s;
        if (r == 0.0) continue;  // reflection of the origin is the point at infinity
        for (int j = 0; j < kAngular; ++j) {
            const double th = 2.0 * kPi * j / kAngular;
            const cplx z = r * cplx{std::cos(th), std::sin(th)};
            out.push_back(aw_beltrami(phi, 1.0 / std::conj(z), norm_value));
        }
    }
    return out;
}

double truncation_gap(const TruncatedSeries& f, int m) {
    for (int k = 0; k <= f.order(); ++k) {
        if (!(std::abs(f.coeff(k)) < 0.5))
            throw std::domain_error("truncation_gap requires every |c_n| < 1/2");
    }
    TruncatedSeries tail = f;
    for (int k = 0; k <= std::min(m, f.order()); ++k) tail.set_coeff(k, 0.0);
    return b_norm(tail).value;
}

}  // namespace krzyz
