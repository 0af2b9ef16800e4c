#pragma once

#include "krzyz/series.hpp"

namespace krzyz {

/// Integral-mean exponent p > 1 and target coefficient index n >= 1.
struct HpSpec {
    double p;
    int n;
    HpSpec(double p, int n);
};

/// Equality candidate for the p-mean coefficient bound:
///   f_n(z) = [(1+z^n)^2/2]^{1/p} * [exp((z^n-1)/(z^n+1))]^{1-1/p},
/// built by principal-branch log/exp and a monomial substitution. Its n-th
/// coefficient is (2/e)^{1-1/p} in closed form.
TruncatedSeries hsz_candidate(const HpSpec& spec, int order);

/// Same construction with 1/p passed directly, so the degenerate value
/// inv_p = 0 (the sup-norm limit, where the candidate collapses to the
/// punctured-disk covering of z^n) is expressible.
TruncatedSeries hsz_candidate_invp(double inv_p, int n, int order);

/// ((1/2pi) int |f(r e^{i t})|^p dt)^{1/p} on the unit circle, trapezoid with
/// 4096 nodes. The truncated series is a polynomial, so the circle mean is the
/// boundary value itself; the interior radii are exposed via the profile.
double hp_norm(const TruncatedSeries& f, double p);

struct HpProfile {
    double at_099;
    double at_0999;
    double boundary;  // the value hp_norm returns
};
HpProfile hp_norm_profile(const TruncatedSeries& f, double p);

struct HszBound {
    double coeff;  // |c_n| of the candidate
    double bound;  // (2/e)^{1-1/p}
    double slack;  // bound - coeff
};
HszBound hsz_bound_check(const HpSpec& spec);

}  // namespace krzyz
