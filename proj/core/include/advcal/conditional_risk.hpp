#pragma once

#include <vector>

#include "advcal/losses.hpp"

namespace advcal {

// Extended-real minimization is realized as a uniform grid on [-bound, bound]
// plus golden-section refinement around the best grid point plus explicit
// evaluation of both limits. All zoo losses are monotone outside [-5, 5], so
// the default bound is generous.
struct SearchConfig {
    double bound = 50.0;
    double grid_step = 0.01;
    double refine_tol = 1e-10;   // bracket width at which refinement stops
    double argmin_tol = 1e-7;    // membership tolerance for the near-argmin set
};

// Where the conditional risk (nearly) attains its minimum. The finite
// near-minimizers are summarized by their count and extremes; membership of
// 0 and of the two infinities is tracked explicitly.
struct ArgminSummary {
    double min_value = 0.0;
    bool zero_in_argmin = false;
    bool neg_inf_in_argmin = false;
    bool pos_inf_in_argmin = false;
    long finite_near_count = 0;
    double lowest_finite = 0.0;   // meaningful iff finite_near_count > 0
    double highest_finite = 0.0;  // meaningful iff finite_near_count > 0
    double value_at_zero = 0.0;
    double zero_gap = 0.0;        // value_at_zero - min_value
};

struct OptimalRiskResult {
    double value = 0.0;
    ArgminSummary argmin;
};

// S(alpha) = phi(alpha)/2 + phi(-alpha)/2, over the extended reals.
ExtendedReal symmetrized(const MarginLoss& loss, ExtendedReal alpha);
double symmetrized(const MarginLoss& loss, double alpha);

// eta * L(+1, alpha) + (1 - eta) * L(-1, alpha). eta must lie in [0, 1].
double conditional_risk(const AnyLoss& loss, double eta, double alpha);
ExtendedReal conditional_risk_extended(const AnyLoss& loss, double eta, ExtendedReal alpha);

// Infimum of the conditional risk over the extended reals.
OptimalRiskResult optimal_conditional_risk(const AnyLoss& loss, double eta,
                                           const SearchConfig& search = {});

}  // namespace advcal
