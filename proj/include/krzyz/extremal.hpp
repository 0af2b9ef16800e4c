#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "krzyz/series.hpp"

namespace krzyz {

inline constexpr double kTwoOverE = 2.0 / std::numbers::e;

/// Atom of a discrete Herglotz measure. weight >= 0; angle in radians.
struct HerglotzAtom {
    double weight;
    double angle;
};

/// p(z) = sum_k w_k (e^{i a_k} + z)/(e^{i a_k} - z) + i beta has Re p >= 0 on
/// the disk, so f = e^{-p} is nonvanishing with |f| <= 1. The atom list may be
/// empty (f is then the unimodular constant e^{-i beta}).
struct HerglotzParams {
    std::vector<HerglotzAtom> atoms;
    double beta = 0.0;
};

/// Disk self-map coefficients (certified by construction: the builder rescales
/// until the is_selfmap grid passes) plus the target ring modulus.
struct SubordinationParams {
    double rho = 0.0;
    std::vector<cplx> fhat_coeffs;
};

/// Series of e^{-p} for the given atoms, exact to the truncation order.
TruncatedSeries build_herglotz(const HerglotzParams& params, int order);

/// |c_n(f)|. Throws IndexBeyondOrder when n > order.
double functional_cn(const TruncatedSeries& f, int n);

/// max(|c_n(f)|, |c_n(f(z^n))|); the second entry equals |c_1(f)|.
/// Throws IndexBeyondOrder when n*n > order.
double functional_in(const TruncatedSeries& f, int n);

/// eps2 * f(eps1 * z). Both factors must be unimodular (1e-12 slack).
TruncatedSeries rotate(const TruncatedSeries& f, cplx eps1, cplx eps2);

/// The rotation-orbit representative with c_0 real positive and c_n real
/// positive (principal n-th root for eps1). Coefficients at indices divisible
/// by n do not depend on the root choice.
TruncatedSeries canonical_rotation(const TruncatedSeries& f, int n);

struct ParsevalSplit {
    double sum;   // sum of |c_k|^2 over all retained degrees
    double head;  // |c_1|^2
    double tail;  // sum over degrees >= 2
};
ParsevalSplit parseval_check(const TruncatedSeries& f);

enum class Functional { cn, in };
enum class Family { herglotz, subordination };

struct CampaignConfig {
    Functional functional = Functional::cn;
    int n = 1;
    Family family = Family::herglotz;
    int atoms = 2;    // Herglotz atom count K; the squared-variable trick keeps weights >= 0
    int degree = 3;   // subordination self-map degree
    double rho = 0.0; // subordination ring modulus
    int starts = 64;
    int budget = 20000;  // objective evaluations per start
    unsigned long long seed = 7;
    int order = 64;            // reporting/certification truncation order
    int certify_stride = 100;  // full numeric certification every this many evaluations
    std::vector<double> warm_start;  // optional raw point injected as start 0
};

struct TraceEvent {
    int start;
    int eval;  // evaluation index within the start
    double value;
};

struct OptimizationReport {
    CampaignConfig config;
    double best_value = 0.0;
    double gap_to_bound = 0.0;  // kTwoOverE - best_value
    HerglotzParams best_herglotz;
    SubordinationParams best_subordination;
    std::vector<cplx> best_coeffs;  // canonical rotation at config.order
    std::vector<double> start_values;
    long long evaluations = 0;
    long long certified_count = 0;
    double max_cn_observed = 0.0;  // over certified candidates
    double max_c1_observed = 0.0;  // over every evaluation
    double tau = 0.0;              // order-N vs 2N drift, floored at 4*N*eps
    int aborted_starts = 0;
    bool budget_exhausted = false;  // some start hit the budget mid-simplex
    std::vector<TraceEvent> trace;  // per-start improvement events
};

/// Numeric membership check at the report order: max |f| <= 1 + 1e-4 on three
/// interior circles and zero winding on |z| = 0.5 and 0.8. A contour whose
/// minimum modulus sits at the noise floor makes the winding ill-posed; that
/// radius is then skipped (membership there is already structural).
bool certify_member(const TruncatedSeries& f);

/// Multi-start Nelder-Mead maximization of the configured functional over the
/// configured family. Starts run on a thread pool (capped by the
/// KRZYZ_LAB_THREADS environment variable); reports are byte-deterministic in
/// (config, seed) regardless of worker count.
OptimizationReport maximize(const CampaignConfig& config);

}  // namespace krzyz
