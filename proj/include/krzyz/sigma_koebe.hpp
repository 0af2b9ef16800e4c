#pragma once

#include <vector>

#include "krzyz/series.hpp"

namespace krzyz {

/// w(z) = e^{i theta} z + a_2 z^2 + ... : vanishing constant term, unimodular
/// first coefficient. theta is derived from c_1 at construction.
struct SNormalizedMap {
    double theta;
    TruncatedSeries series;

    explicit SNormalizedMap(TruncatedSeries s);
};

/// F(zeta) = e^{-i theta} zeta + b_0 + b_1/zeta + b_2/zeta^2 + ...
struct SigmaNormalizedMap {
    double theta;
    std::vector<cplx> b;  // b_0..b_M

    cplx eval_at(cplx zeta) const;  // requires |zeta| >= 1
};

/// Coefficients of F = 1/w(1/zeta) up to b_M, by series division.
/// Requires M + 2 <= w.series.order().
SigmaNormalizedMap s_to_sigma(const SNormalizedMap& w, int M);

/// Inverse: w(z) = 1/F(1/z) expanded to the given order.
SNormalizedMap sigma_to_s(const SigmaNormalizedMap& F, int order);

/// Largest residual of the coefficient relations tying the two expansions:
///   b_n + e^{-i theta} sum_{j=1..n} b_{n-j} a_{j+1} + e^{-2i theta} a_{n+2} = 0
/// for n = 0..M (empty sum at n = 0), a_j the coefficients of w. The factor
/// table is fixed here; this residual is its verification.
double recursion_residual(const SNormalizedMap& w, const SigmaNormalizedMap& F);

struct CoveredRadius {
    double value;         // extrapolated dist(0, boundary of w(D))
    cplx boundary_point;  // image point realizing the innermost approach
    double family_bound;  // 1/(2 a2_sup), what the family guarantees
};

/// Minimum modulus of w over circles r in {0.99, 0.995, 0.999} (angle scan
/// plus local refinement), extrapolated to r = 1. a2_sup is the declared
/// family bound sup |a_2|; members must cover at least 1/(2 a2_sup).
CoveredRadius covered_radius(const SNormalizedMap& w, double a2_sup);

struct SigmaBoundaryCheck {
    bool ok;
    double worst;  // max over samples of |F + a2_sup| - a2_sup
};

/// Samples F on the unit circle (the boundary limit of the finite expansion)
/// and tests containment of the image in {|W + a2_sup| <= a2_sup}.
SigmaBoundaryCheck sigma_boundary_check(const SigmaNormalizedMap& F, double a2_sup,
                                        double tol = 1e-3);

}  // namespace krzyz
