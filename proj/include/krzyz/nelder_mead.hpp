#pragma once

#include <functional>
#include <vector>

namespace krzyz {

struct NelderMeadResult {
    std::vector<double> x;
    double value;
    int evaluations;
    bool converged;  // last simplex met ftol before the budget ran out
};

/// Derivative-free minimization. Runs standard Nelder-Mead (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2) in rounds: each round rebuilds
/// the simplex around the best point seen so far at the current edge scale,
/// iterates to ftol, then shrinks the scale by 0.3 (reset to 1e-6 once it
/// underflows 1e-14). Stops when the total evaluation budget is spent.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, double scale, int budget,
                             double ftol = 1e-13);

}  // namespace krzyz
