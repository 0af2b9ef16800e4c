#include "krzyz/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace krzyz {

namespace {

constexpr double kPi = std::numbers::pi;

// strip-model parameters for A_rho; y0 is the imaginary part of the disk
// point sent to the maximal-derivative base radius
struct StripParams {
    double L;   // log(1/rho)
    double c;   // L/pi, the strip-to-log(annulus) scale
    double y0;  // in (-1, 0)
};

StripParams strip_params(double rho) {
    const double L = std::log(1.0 / rho);
    return {L, L / kPi, -std::tan(0.5 * std::atan(L / kPi))};
}

// kappa_rho(z) = sqrt(rho) * exp(i c log(A(z)/B(z))) with degree-1 A, B from
// the automorphism-then-Cayley chain. Shared with subordinate(): the argument
// slot is any series u with values in D.
TruncatedSeries kappa_rho_of(const TruncatedSeries& u, double rho) {
    const StripParams sp = strip_params(rho);
    const int n = u.order();
    const cplx i{0.0, 1.0};
    // A = (1 + i y0) - (y0 + i) u ; B = (1 - i y0) - (y0 - i) u
    TruncatedSeries A = add(TruncatedSeries::constant(cplx{1.0, sp.y0}, n),
                            scale(u, -(sp.y0 + 1.0 * i)));
    TruncatedSeries B = add(TruncatedSeries::constant(cplx{1.0, -sp.y0}, n),
                            scale(u, -(sp.y0 - 1.0 * i)));
    TruncatedSeries s = scale(log(div(A, B)), i * sp.c);
    return scale(exp(s), std::sqrt(rho));
}

}  // namespace

AnnulusSpec::AnnulusSpec(double rho) : rho(rho) {
    if (!(rho >= 0.0) || rho >= 1.0) throw InvalidModulus(rho);
}

CoveringMap kappa0(int order) {
    TruncatedSeries z = TruncatedSeries::identity(order);
    TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    TruncatedSeries k = exp(div(z - one, z + one));
    double d0 = std::abs(k.coeff(std::min(1, order)));
    return CoveringMap{AnnulusSpec(0.0), k, order >= 1 ? d0 : 0.0};
}

CoveringMap kappa_rho(double rho, int order) {
    AnnulusSpec spec(rho);
    if (rho == 0.0) return kappa0(order);
    TruncatedSeries k = kappa_rho_of(TruncatedSeries::identity(order), rho);
    double d0 = std::abs(k.coeff(std::min(1, order)));
    return CoveringMap{spec, k, order >= 1 ? d0 : 0.0};
}

double alpha(const AnnulusSpec& spec) {
    if (spec.rho == 0.0) return 2.0 / std::numbers::e;
    return kappa_rho(spec.rho, 8).deriv0;
}

double alpha_density(double rho) {
    if (rho == 0.0) return 2.0 / std::numbers::e;
    const double L = std::log(1.0 / rho);
    return 2.0 * L * std::sqrt(rho) * std::exp((L / kPi) * std::atan(L / kPi)) /
           std::sqrt(kPi * kPi + L * L);
}

SelfMapCheck is_selfmap(const TruncatedSeries& fhat, int samples) {
    if (samples < 64) samples = 64;
    const int N = std::max(fhat.order(), 1);
    // by the maximum principle one circle suffices for a degree-N polynomial;
    // 1 - 1/(4N) keeps the scan inside D while the Cauchy tail past it is
    // negligible against the 1e-6 acceptance margin
    const double r_max = 1.0 - 1.0 / (4.0 * N);
    double worst = 0.0;
    for (int t = 0; t < samples; ++t) {
        const double th = 2.0 * kPi * t / samples;
        worst = std::max(worst, std::abs(eval(fhat, r_max * cplx{std::cos(th), std::sin(th)})));
    }
    return SelfMapCheck{worst <= 1.0 - kSelfMapMargin, 1.0 - worst};
}

TruncatedSeries subordinate(const TruncatedSeries& fhat, double rho) {
    AnnulusSpec spec(rho);
    SelfMapCheck chk = is_selfmap(fhat);
    if (!chk.ok) throw NotSelfMap(1.0 - chk.margin);
    if (rho == 0.0) {
        const int n = fhat.order();
        TruncatedSeries one = TruncatedSeries::constant(1.0, n);
        return exp(div(fhat - one, fhat + one));
    }
    return kappa_rho_of(fhat, rho);
}

int count_zeros(const TruncatedSeries& f, double radius, int nodes) {
    if (!(radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
    if (nodes < 64) nodes = 64;
    const TruncatedSeries df = derivative(f);

    long long prev = -1;
    for (int m = nodes; m <= (1 << 17); m *= 2) {
        double winding = 0.0;
        double min_mod = std::numeric_limits<double>::infinity();
        // trapezoid of (1/2 pi i) f'/f dz = (1/2 pi) f'(z) z / f(z) dtheta;
        // the real part of the mean over theta is the winding number
        double acc = 0.0;
        bool pivot_ok = true;
        for (int t = 0; t < m; ++t) {
            const double th = 2.0 * kPi * t / m;
            const cplx z = radius * cplx{std::cos(th), std::sin(th)};
            const cplx fv = eval(f, z);
            min_mod = std::min(min_mod, std::abs(fv));
            if (std::abs(fv) <= kEpsZero) { pivot_ok = false; break; }
            acc += (eval(df, z) * z / fv).real();
        }
        if (!pivot_ok || min_mod <= kEpsZero) throw ZeroOnContour(radius, min_mod);
        winding = acc / m;
        const long long w = std::llround(winding);
        if (std::abs(winding - w) < 0.25 && w == prev) return static_cast<int>(w);
        prev = (std::abs(winding - w) < 0.25) ? w : -1;
    }
    throw std::runtime_error("winding number failed to stabilize on |z| = " +
                             std::to_string(radius));
}

}  // namespace krzyz
