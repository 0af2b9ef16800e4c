#include "krzyz/hsz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "krzyz/extremal.hpp"

namespace krzyz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNodes = 4096;

double circle_mean_norm(const TruncatedSeries& f, double p, double r) {
    double acc = 0.0;
    for (int t = 0; t < kNodes; ++t) {
        const double th = 2.0 * kPi * t / kNodes;
        acc += std::pow(std::abs(eval(f, r * cplx{std::cos(th), std::sin(th)})), p);
    }
    return std::pow(acc / kNodes, 1.0 / p);
}

}  // namespace

HpSpec::HpSpec(double p, int n) : p(p), n(n) {
    if (!(p > 1.0)) throw std::domain_error("exponent must satisfy p > 1");
    if (n < 1) throw std::domain_error("coefficient index must be >= 1");
}

TruncatedSeries hsz_candidate_invp(double inv_p, int n, int order) {
    if (order < n) throw IndexBeyondOrder(n, order);
    const int m = order / n;  // inner order; the substitution fills the rest
    TruncatedSeries sq = TruncatedSeries::zero(m);
    sq.set_coeff(0, 0.5);
    if (m >= 1) sq.set_coeff(1, 1.0);
    if (m >= 2) sq.set_coeff(2, 0.5);
    TruncatedSeries u = TruncatedSeries::identity(m);
    TruncatedSeries one = TruncatedSeries::constant(1.0, m);
    TruncatedSeries expo = add(scale(log(sq), inv_p),
                               scale(div(u - one, u + one), 1.0 - inv_p));
    TruncatedSeries g = exp(expo).truncated(order);
    return compose(g, TruncatedSeries::monomial(1.0, n, order));
}

TruncatedSeries hsz_candidate(const HpSpec& spec, int order) {
    return hsz_candidate_invp(1.0 / spec.p, spec.n, order);
}

double hp_norm(const TruncatedSeries& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("exponent must satisfy p >= 1");
    return circle_mean_norm(f, p, 1.0);
}

HpProfile hp_norm_profile(const TruncatedSeries& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("exponent must satisfy p >= 1");
    return HpProfile{circle_mean_norm(f, p, 0.99), circle_mean_norm(f, p, 0.999),
                     circle_mean_norm(f, p, 1.0)};
}

HszBound hsz_bound_check(const HpSpec& spec) {
    // c_n needs only the inner linear term; a handful of spare orders keeps
    // the construction generic
    TruncatedSeries cand = hsz_candidate(spec, 8 * spec.n);
    const double coeff = functional_cn(cand, spec.n);
    const double bound = std::pow(kTwoOverE, 1.0 - 1.0 / spec.p);
    return HszBound{coeff, bound, bound - coeff};
}

}  // namespace krzyz
