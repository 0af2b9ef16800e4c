#pragma once

#include <complex>
#include <vector>

#include "krzyz/errors.hpp"

namespace krzyz {

using cplx = std::complex<double>;

// Degree-N truncation of a power series about 0. Coefficients are exact for
// every operation here: coefficient k of a sum/product/quotient/exp/log
// depends only on input coefficients up to k, so truncation commutes with the
// arithmetic. "order" is the highest retained degree.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(cplx value, int order);
    // c * z^k padded to the given order
    static TruncatedSeries monomial(cplx c, int k, int order);
    // the identity map z
    static TruncatedSeries identity(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    cplx coeff(int k) const;
    void set_coeff(int k, cplx v);
    const std::vector<cplx>& coeffs() const { return c_; }

    // same polynomial, order changed (extension pads zeros)
    TruncatedSeries truncated(int order) const;

  private:
    std::vector<cplx> c_;
};

// pivot guard for div/log denominators
inline constexpr double kEpsDiv = 1e-9;

// Results carry the min of the operand orders.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
// long division; requires |g(0)| > kEpsDiv
TruncatedSeries div(const TruncatedSeries& f, const TruncatedSeries& g);
// exp by the derivative recurrence; nonzero constant term allowed (factors out e^{c0})
TruncatedSeries exp(const TruncatedSeries& a);
// principal branch; requires |f(0)| > kEpsDiv
TruncatedSeries log(const TruncatedSeries& f);
// f(g(z)) by Horner over series; requires g(0) == 0 exactly
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);
cplx eval(const TruncatedSeries& f, cplx z);
TruncatedSeries derivative(const TruncatedSeries& f);
// termwise antiderivative with constant 0; derivative(integral(f)) == f
TruncatedSeries integral(const TruncatedSeries& f);
TruncatedSeries scale(const TruncatedSeries& f, cplx s);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(cplx s, const TruncatedSeries& a);

}  // namespace krzyz
