#pragma once

#include "krzyz/series.hpp"

namespace krzyz {

/// Annulus A_rho = { rho < |w| < 1 }. rho == 0 degenerates to the punctured disk.
struct AnnulusSpec {
    double rho = 0.0;
    explicit AnnulusSpec(double rho);
};

/// Holomorphic universal covering D -> A_rho, normalized so that the value at 0
/// is real positive and the derivative at 0 is real positive and maximal among
/// all base points. "deriv0" caches |series' coefficient 1|.
struct CoveringMap {
    AnnulusSpec spec;
    TruncatedSeries series;
    double deriv0;
};

/// Covering of the punctured disk: exp((z-1)/(z+1)).
CoveringMap kappa0(int order);

/// Covering of A_rho for 0 < rho < 1, built through the strip model
/// log((1+z)/(1-z)) with a disk automorphism placing the base point at the
/// radius where the reciprocal hyperbolic density of A_rho is largest.
CoveringMap kappa_rho(double rho, int order);

/// Largest |f'(0)| over holomorphic f: D -> A_rho. Equals deriv0 of the
/// normalized covering; 2/e for the punctured disk.
double alpha(const AnnulusSpec& spec);

/// Same quantity from the closed-form density maximization
/// 2 L sqrt(rho) e^{(L/pi) atan(L/pi)} / sqrt(pi^2 + L^2), L = log(1/rho).
/// Independent of the series construction; the two must agree tightly.
double alpha_density(double rho);

struct SelfMapCheck {
    bool ok;
    double margin;  // 1 - observed max modulus over the certification grid
};

/// Certifies max |fhat| <= 1 - 1e-6 on circles up to r_max = 1 - 1/(4N).
SelfMapCheck is_selfmap(const TruncatedSeries& fhat, int samples = 512);

/// kappa_rho composed with a certified self-map fhat, through the closed-form
/// exp/log route (works for fhat(0) != 0). Throws NotSelfMap if certification
/// fails.
TruncatedSeries subordinate(const TruncatedSeries& fhat, double rho);

/// Zero count inside |z| < radius by trapezoidal winding of f'/f over the
/// circle. Node count doubles until two consecutive levels agree on the same
/// integer. Throws ZeroOnContour when min |f| on the contour <= 1e-8.
int count_zeros(const TruncatedSeries& f, double radius, int nodes = 2048);

inline constexpr double kEpsZero = 1e-8;
inline constexpr double kSelfMapMargin = 1e-6;

}  // namespace krzyz
