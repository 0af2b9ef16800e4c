#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "krzyz/series.hpp"

using namespace krzyz;

namespace {

constexpr double kE = std::numbers::e;

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    REQUIRE(a.order() == b.order());
    double d = 0.0;
    for (int k = 0; k <= a.order(); ++k) d = std::max(d, std::abs(a.coeff(k) - b.coeff(k)));
    return d;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, double mag) {
    std::uniform_real_distribution<double> d(-mag, mag);
    TruncatedSeries f = TruncatedSeries::zero(order);
    for (int k = 0; k <= order; ++k) f.set_coeff(k, {d(rng), d(rng)});
    return f;
}

}  // namespace

TEST_CASE("factories and accessors") {
    auto z = TruncatedSeries::identity(5);
    CHECK(z.order() == 5);
    CHECK(z.coeff(0) == cplx{0.0, 0.0});
    CHECK(z.coeff(1) == cplx{1.0, 0.0});
    CHECK(z.coeff(5) == cplx{0.0, 0.0});

    auto c = TruncatedSeries::constant({2.0, -1.0}, 3);
    CHECK(c.coeff(0) == cplx{2.0, -1.0});
    CHECK(c.coeff(3) == cplx{0.0, 0.0});

    auto m = TruncatedSeries::monomial({0.0, 3.0}, 4, 7);
    CHECK(m.coeff(4) == cplx{0.0, 3.0});
    CHECK(m.coeff(3) == cplx{0.0, 0.0});

    CHECK_THROWS_AS(z.coeff(6), IndexBeyondOrder);
    CHECK_THROWS_AS(z.coeff(-1), IndexBeyondOrder);
    CHECK_THROWS_AS(TruncatedSeries::monomial(1.0, 9, 4), IndexBeyondOrder);
    CHECK_THROWS_AS(TruncatedSeries{std::vector<cplx>{}}, std::invalid_argument);

    double nan = std::nan("");
    CHECK_THROWS_AS(TruncatedSeries::constant({nan, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("truncated pads or drops") {
    auto f = TruncatedSeries{{1.0, 2.0, 3.0}};
    auto up = f.truncated(5);
    CHECK(up.order() == 5);
    CHECK(up.coeff(2) == cplx{3.0, 0.0});
    CHECK(up.coeff(5) == cplx{0.0, 0.0});
    auto down = f.truncated(1);
    CHECK(down.order() == 1);
    CHECK(down.coeff(1) == cplx{2.0, 0.0});
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937_64 rng(42);
    auto a = random_series(rng, 20, 1.0);
    auto b = random_series(rng, 20, 1.0);
    auto c = random_series(rng, 20, 1.0);

    CHECK(max_coeff_diff(add(a, b), add(b, a)) == 0.0);
    CHECK(max_coeff_diff(mul(a, b), mul(b, a)) < 1e-14);
    CHECK(max_coeff_diff(add(add(a, b), c), add(a, add(b, c))) < 1e-14);
    CHECK(max_coeff_diff(mul(a, add(b, c)), add(mul(a, b), mul(a, c))) < 1e-13);
    CHECK(max_coeff_diff(sub(add(a, b), b), a) < 1e-15);

    // operator forms agree with the named functions
    CHECK(max_coeff_diff(a + b, add(a, b)) == 0.0);
    CHECK(max_coeff_diff(a - b, sub(a, b)) == 0.0);
    CHECK(max_coeff_diff(a * b, mul(a, b)) == 0.0);
    CHECK(max_coeff_diff(cplx{2.0, 1.0} * a, scale(a, {2.0, 1.0})) == 0.0);
}

TEST_CASE("mixed-order operations keep the smaller order") {
    auto a = TruncatedSeries::identity(8);
    auto b = TruncatedSeries::identity(3);
    CHECK(add(a, b).order() == 3);
    CHECK(mul(a, b).order() == 3);
}

TEST_CASE("division golden cases") {
    int N = 8;
    auto z = TruncatedSeries::identity(N);
    auto one = TruncatedSeries::constant(1.0, N);

    // (z - 1)/(z + 1) = -1 + 2z - 2z^2 + 2z^3 - ...
    auto q = div(z - one, z + one);
    CHECK(std::abs(q.coeff(0) - cplx{-1.0}) < 1e-15);
    for (int k = 1; k <= N; ++k) {
        double want = (k % 2 == 1) ? 2.0 : -2.0;
        CHECK(std::abs(q.coeff(k) - cplx{want}) < 1e-14);
    }

    // geometric series
    auto g = div(one, one - z);
    for (int k = 0; k <= N; ++k) CHECK(std::abs(g.coeff(k) - cplx{1.0}) < 1e-14);

    // round trip against multiplication
    std::mt19937_64 rng(7);
    auto f = random_series(rng, 16, 0.5);
    auto h = random_series(rng, 16, 0.5);
    h.set_coeff(0, {1.3, -0.4});
    CHECK(max_coeff_diff(div(mul(f, h), h), f) < 1e-12);

    CHECK_THROWS_AS(div(one, z), NearZeroConstantTerm);
    try {
        div(one, TruncatedSeries::constant(1e-12, N));
        FAIL("pivot guard did not fire");
    } catch (const NearZeroConstantTerm& e) {
        CHECK(e.modulus == doctest::Approx(1e-12));
    }
}

TEST_CASE("exp golden cases") {
    auto z = TruncatedSeries::identity(12);
    auto ez = exp(z);
    double fact = 1.0;
    for (int k = 0; k <= 12; ++k) {
        if (k > 0) fact *= k;
        CHECK(std::abs(ez.coeff(k) - cplx{1.0 / fact}) < 1e-15);
    }

    // nonzero constant term factors out e^{c0}
    auto shifted = exp(TruncatedSeries::constant({0.0, std::numbers::pi}, 4) + z);
    CHECK(std::abs(shifted.coeff(0) - cplx{-1.0}) < 1e-14);

    // exp(z) exp(-z) = 1
    auto prod = mul(exp(z), exp(scale(z, -1.0)));
    CHECK(std::abs(prod.coeff(0) - cplx{1.0}) < 1e-15);
    for (int k = 1; k <= 12; ++k) CHECK(std::abs(prod.coeff(k)) < 1e-15);
}

TEST_CASE("log golden cases and inverses") {
    int N = 12;
    auto z = TruncatedSeries::identity(N);
    auto one = TruncatedSeries::constant(1.0, N);

    // Mercator series
    auto lg = log(one + z);
    for (int k = 1; k <= N; ++k) {
        double want = ((k % 2 == 1) ? 1.0 : -1.0) / k;
        CHECK(std::abs(lg.coeff(k) - cplx{want}) < 1e-14);
    }
    CHECK(std::abs(lg.coeff(0)) < 1e-15);

    std::mt19937_64 rng(3);
    auto f = random_series(rng, 16, 0.1);
    CHECK(max_coeff_diff(log(exp(f)), f) < 1e-13);

    auto g = random_series(rng, 16, 0.1);
    g.set_coeff(0, {1.0, 0.2});
    CHECK(max_coeff_diff(exp(log(g)), g) < 1e-13);

    CHECK_THROWS_AS(log(z), NearZeroConstantTerm);
}

TEST_CASE("punctured-disk covering expansion") {
    int N = 8;
    auto z = TruncatedSeries::identity(N);
    auto one = TruncatedSeries::constant(1.0, N);
    auto f = exp(div(z - one, z + one));
    CHECK(std::abs(f.coeff(0) - cplx{1.0 / kE}) < 1e-12);
    CHECK(std::abs(f.coeff(1) - cplx{2.0 / kE}) < 1e-12);
    CHECK(std::abs(f.coeff(2)) < 1e-12);
    CHECK(std::abs(f.coeff(3) - cplx{-2.0 / (3.0 * kE)}) < 1e-12);
}

TEST_CASE("composition") {
    std::mt19937_64 rng(11);
    auto f = random_series(rng, 14, 0.6);
    auto z = TruncatedSeries::identity(14);

    CHECK(max_coeff_diff(compose(f, z), f) < 1e-15);

    // inner monomial interleaves coefficients
    auto f2 = compose(f, TruncatedSeries::monomial(1.0, 2, 14));
    for (int k = 0; k <= 14; ++k) {
        cplx want = (k % 2 == 0) ? f.coeff(k / 2) : cplx{0.0};
        CHECK(std::abs(f2.coeff(k) - want) < 1e-15);
    }

    // linear inner map scales coefficient k by a^k
    cplx a{0.3, 0.4};
    auto fa = compose(f, TruncatedSeries::monomial(a, 1, 14));
    cplx pw = 1.0;
    for (int k = 0; k <= 14; ++k) {
        CHECK(std::abs(fa.coeff(k) - f.coeff(k) * pw) < 1e-13);
        pw *= a;
    }

    // associativity against a generic inner pair
    auto g = random_series(rng, 14, 0.1);
    g.set_coeff(0, 0.0);
    auto h = random_series(rng, 14, 0.1);
    h.set_coeff(0, 0.0);
    CHECK(max_coeff_diff(compose(compose(f, g), h), compose(f, compose(g, h))) < 1e-9);

    CHECK_THROWS_AS(compose(f, TruncatedSeries::constant(0.1, 14)), NonzeroInnerConstant);
}

TEST_CASE("evaluation") {
    int N = 40;
    auto one = TruncatedSeries::constant(1.0, N);
    auto g = div(one, one - TruncatedSeries::identity(N));
    cplx v = eval(g, cplx{0.3, 0.0});
    // geometric tail bound: 0.3^41 / 0.7
    CHECK(std::abs(v - 1.0 / 0.7) < 1e-20 / 0.7 + 1e-12);

    // Koebe function at a real point
    TruncatedSeries kf = TruncatedSeries::zero(60);
    for (int k = 1; k <= 60; ++k) kf.set_coeff(k, static_cast<double>(k));
    double x = 0.4;
    CHECK(std::abs(eval(kf, x) - x / ((1 - x) * (1 - x))) < 1e-10);

    CHECK(eval(g, cplx{0.0, 0.0}) == cplx{1.0, 0.0});
}

TEST_CASE("derivative and integral") {
    std::mt19937_64 rng(19);
    auto f = random_series(rng, 18, 1.0);

    auto d = derivative(f);
    CHECK(d.order() == 17);
    for (int k = 0; k <= 17; ++k)
        CHECK(std::abs(d.coeff(k) - f.coeff(k + 1) * static_cast<double>(k + 1)) < 1e-15);

    auto I = integral(d);
    CHECK(I.coeff(0) == cplx{0.0, 0.0});
    auto back = derivative(I);
    for (int k = 0; k <= 16; ++k) CHECK(std::abs(back.coeff(k) - d.coeff(k)) < 1e-15);

    // scale multiplies coefficient k by s (not s^k)
    auto s = scale(f, {0.0, 1.0});
    for (int k = 0; k <= 18; ++k) CHECK(s.coeff(k) == f.coeff(k) * cplx{0.0, 1.0});
}
