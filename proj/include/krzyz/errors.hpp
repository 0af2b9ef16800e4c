#pragma once

#include <stdexcept>
#include <string>

namespace krzyz {

// Thrown by division/log/composition kernels when the leading denominator
// coefficient is inside the pivot guard band (|c0| <= 1e-9).
struct NearZeroConstantTerm : std::domain_error {
    explicit NearZeroConstantTerm(double modulus)
        : std::domain_error("series division pivot too small: |c0| = " + std::to_string(modulus)),
          modulus(modulus) {}
    double modulus;
};

// compose(f, g) requires g(0) == 0; maps with g(0) != 0 go through the
// closed-form routes of the covering layer instead.
struct NonzeroInnerConstant : std::domain_error {
    NonzeroInnerConstant() : std::domain_error("composition requires inner constant term 0") {}
};

struct IndexBeyondOrder : std::out_of_range {
    IndexBeyondOrder(int index, int order)
        : std::out_of_range("coefficient index " + std::to_string(index) +
                            " beyond series order " + std::to_string(order)) {}
};

struct InvalidModulus : std::domain_error {
    explicit InvalidModulus(double rho)
        : std::domain_error("annulus modulus must lie in [0, 1): rho = " + std::to_string(rho)) {}
};

struct NotSelfMap : std::domain_error {
    explicit NotSelfMap(double observed_max)
        : std::domain_error("not a certified disk self-map: max modulus " +
                            std::to_string(observed_max)) {}
};

struct ZeroOnContour : std::runtime_error {
    ZeroOnContour(double radius, double min_modulus)
        : std::runtime_error("zero detected on |z| = " + std::to_string(radius) +
                             ": min modulus " + std::to_string(min_modulus)) {}
};

struct NormTooLarge : std::domain_error {
    explicit NormTooLarge(double norm)
        : std::domain_error("Schwarzian norm out of the admissible range: " +
                            std::to_string(norm)),
          norm(norm) {}
    double norm;
};

}  // namespace krzyz
