#pragma once

#include <vector>

#include "krzyz/series.hpp"

namespace krzyz {

/// Grid maximum of (1-|z|^2)^2 |phi(z)|. A lower bound of the true sup:
/// refinement only ever raises it, and every inequality consuming it is
/// one-sided in the safe direction.
struct BNormEstimate {
    double value;
    cplx witness;     // grid point achieving value
    int radial;       // initial radial grid count
    int angular;      // initial angular grid count
};

struct BeltramiSample {
    cplx point;  // |point| > 1, the extension side of the circle
    cplx value;
};

/// S_w = (w''/w')' - (1/2)(w''/w')^2, order max(N-3, 0).
/// Requires |w'(0)| > kEpsDiv.
TruncatedSeries schwarzian(const TruncatedSeries& w);

/// Weighted sup scan: 64 geometrically spaced radii (1 - r from 1 down to
/// 1e-3) x 256 angles, then 9x9 window zooms around the running argmax,
/// window shrinking by 0.35, until the relative gain drops below 1e-6.
BNormEstimate b_norm(const TruncatedSeries& phi);

/// Beltrami coefficient of the Ahlfors-Weill extension at a point zeta with
/// |zeta| > 1:
///   nu(zeta) = -(1/2) (|zeta|^2 - 1)^2 phi(1/conj(zeta)) / conj(zeta)^4.
/// The reflection factor makes |nu(zeta)| = (1/2)(1-|u|^2)^2 |phi(u)| at
/// u = 1/conj(zeta), so sup |nu| = b_norm/2. Throws NormTooLarge when
/// b_norm(phi) >= 2 (extension hypothesis).
BeltramiSample aw_beltrami(const TruncatedSeries& phi, cplx zeta);
/// Same, with the norm already computed (skips the rescan).
BeltramiSample aw_beltrami(const TruncatedSeries& phi, cplx zeta, double norm_value);

/// nu sampled on the reflection of the b_norm scan grid. The grid sup is
/// bounded by norm/2 by construction since every reflected point was already
/// part of the b_norm maximum.
std::vector<BeltramiSample> aw_beltrami_grid(const TruncatedSeries& phi);

/// b_norm of f minus its degree-m partial sum (degrees 0..m kept, so the gap
/// at m = order is exactly 0). Requires every |c_n| < 1/2.
double truncation_gap(const TruncatedSeries& f, int m);

}  // namespace krzyz
