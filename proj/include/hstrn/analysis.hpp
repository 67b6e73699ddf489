#pragma once

#include "hstrn/linkmodel.hpp"
#include "hstrn/specfun.hpp"

namespace hstrn {

// Outage probability Pr[destination SNR < threshold], closed form.
double outage_probability(const NetworkConfig& cfg);

// Same quantity by direct quadrature of the best-relay CDF against the
// relay->destination exponential density. Slow; used to cross-check.
double op_numeric_oracle(const NetworkConfig& cfg, const QuadratureSpec& spec = {});

// Pr[eavesdropper SNR < threshold | jammer channel power = x], closed form.
double q_given_jammer(const NetworkConfig& cfg, double x);

// Intercept probability Pr[eavesdropper SNR >= threshold]: the complement
// of q_given_jammer averaged over the jammer exponential. The integrand is
// assembled directly as 1-Q so near-zero results lose no precision.
double intercept_probability(const NetworkConfig& cfg, const QuadratureSpec& spec = {});

struct SeriesOptions {
    int max_terms = 200;      // highest jammer-expansion order attempted
    double tail_tol = 1e-12;  // relative size of the last kept term
};

struct SeriesResult {
    double value = 0.0;
    bool converged = false; // last term met tail_tol before terms grew
    int highest_order = 0;  // expansion order actually used
    double tail_bound = 0.0;// magnitude of the first neglected term, relative
};

// Intercept probability by series expansion of the jammer average. The
// underlying expansion is asymptotic: terms shrink and then grow, so the
// sum is truncated at the smallest term and flagged via `converged`.
// Honest about its own failure; prefer intercept_probability for numbers.
SeriesResult intercept_probability_series(const NetworkConfig& cfg,
                                          const SeriesOptions& opt = {});

} // namespace hstrn
