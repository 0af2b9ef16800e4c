#include "krzyz/series.hpp"

#include <algorithm>
#include <cmath>

namespace krzyz {

namespace {

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
    for (const cplx& v : c_)
        if (!finite(v)) throw std::invalid_argument("non-finite series coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx{0.0, 0.0}));
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(cplx v, int k, int order) {
    if (k < 0 || k > order) throw IndexBeyondOrder(k, order);
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    c[k] = v;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) { return monomial(1.0, 1, order); }

cplx TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw IndexBeyondOrder(k, order());
    return c_[k];
}

void TruncatedSeries::set_coeff(int k, cplx v) {
    if (k < 0 || k > order()) throw IndexBeyondOrder(k, order());
    if (!finite(v)) throw std::invalid_argument("non-finite series coefficient");
    c_[k] = v;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    std::vector<cplx> c(order + 1, cplx{0.0, 0.0});
    const int m = std::min(order, this->order());
    std::copy(c_.begin(), c_.begin() + m + 1, c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1, cplx{0.0, 0.0});
    for (int i = 0; i <= n; ++i) {
        cplx s{0.0, 0.0};
        for (int j = 0; j <= i; ++j) s += a.coeffs()[j] * b.coeffs()[i - j];
        c[i] = s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.order(), g.order());
    const cplx g0 = g.coeffs()[0];
    if (std::abs(g0) <= kEpsDiv) throw NearZeroConstantTerm(std::abs(g0));
    std::vector<cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        cplx s = f.coeffs()[i];
        for (int j = 1; j <= i; ++j) s -= g.coeffs()[j] * c[i - j];
        c[i] = s / g0;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries exp(const TruncatedSeries& a) {
    const int n = a.order();
    std::vector<cplx> c(n + 1);
    c[0] = std::exp(a.coeffs()[0]);
    // from b' = a' b: i*b_i = sum_{j=1..i} j a_j b_{i-j}
    for (int i = 1; i <= n; ++i) {
        cplx s{0.0, 0.0};
        for (int j = 1; j <= i; ++j) s += static_cast<double>(j) * a.coeffs()[j] * c[i - j];
        c[i] = s / static_cast<double>(i);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log(const TruncatedSeries& f) {
    const int n = f.order();
    const cplx f0 = f.coeffs()[0];
    if (std::abs(f0) <= kEpsDiv) throw NearZeroConstantTerm(std::abs(f0));
    std::vector<cplx> c(n + 1);
    c[0] = std::log(f0);
    // from f' = a' f: i*f_i = sum_{j=1..i} j a_j f_{i-j}
    for (int i = 1; i <= n; ++i) {
        cplx s = static_cast<double>(i) * f.coeffs()[i];
        for (int j = 1; j < i; ++j) s -= static_cast<double>(j) * c[j] * f.coeffs()[i - j];
        c[i] = s / (f0 * static_cast<double>(i));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (g.coeffs()[0] != cplx{0.0, 0.0}) throw NonzeroInnerConstant();
    const int n = std::min(f.order(), g.order());

    // monomial inner maps come up constantly (z^m substitution); interleave exactly
    int nonzero = 0, mdeg = 0;
    for (int k = 1; k <= g.order(); ++k)
        if (g.coeffs()[k] != cplx{0.0, 0.0}) { ++nonzero; mdeg = k; }
    if (nonzero <= 1) {
        std::vector<cplx> c(n + 1, cplx{0.0, 0.0});
        if (nonzero == 0) {
            c[0] = f.coeffs()[0];
            return TruncatedSeries(std::move(c));
        }
        const cplx a = g.coeffs()[mdeg];
        cplx apow{1.0, 0.0};
        for (int k = 0; static_cast<long long>(k) * mdeg <= n && k <= f.order(); ++k) {
            c[static_cast<int>(k) * mdeg] = f.coeffs()[k] * apow;
            apow *= a;
        }
        return TruncatedSeries(std::move(c));
    }

    TruncatedSeries acc = TruncatedSeries::constant(f.coeffs()[std::min(f.order(), n)], n);
    for (int k = std::min(f.order(), n) - 1; k >= 0; --k) {
        acc = mul(acc, g.truncated(n));
        acc.set_coeff(0, acc.coeff(0) + f.coeffs()[k]);
    }
    return acc;
}

cplx eval(const TruncatedSeries& f, cplx z) {
    cplx r{0.0, 0.0};
    for (int k = f.order(); k >= 0; --k) r = r * z + f.coeffs()[k];
    return r;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
    const int n = f.order();
    if (n == 0) return TruncatedSeries::zero(0);
    std::vector<cplx> c(n);
    for (int k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(k) * f.coeffs()[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integral(const TruncatedSeries& f) {
    const int n = f.order();
    std::vector<cplx> c(n + 2, cplx{0.0, 0.0});
    for (int k = 0; k <= n; ++k) c[k + 1] = f.coeffs()[k] / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& f, cplx s) {
    std::vector<cplx> c(f.coeffs());
    for (cplx& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
TruncatedSeries operator*(cplx s, const TruncatedSeries& a) { return scale(a, s); }

}  // namespace krzyz
