#pragma once

#include <cstdint>

#include "hstrn/linkmodel.hpp"

namespace hstrn {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;  // 95% normal interval, clamped to [0,1]
    double ci_high = 0.0;
    std::uint64_t trials = 0;
};

struct TrialOutcome {
    double gamma_d; // destination SNR
    double gamma_e; // eavesdropper SNR
};

// One simulated network realization. Deterministic in (seed, trial_index):
// the draw order is fixed, so outcomes are independent of how trials are
// batched across threads.
TrialOutcome simulate_trial(const NetworkConfig& cfg, std::uint64_t seed,
                            std::uint64_t trial_index);

struct McResult {
    Estimate op; // Pr[destination SNR < threshold]
    Estimate ip; // Pr[eavesdropper SNR >= threshold]
};

// Runs `trials` independent realizations on `workers` threads (0 = all
// hardware threads). Counts are merged as integers in worker order, so the
// result is bit-identical for any worker count and stable across reruns.
McResult estimate(const NetworkConfig& cfg, std::uint64_t trials,
                  std::uint64_t seed, unsigned workers = 0);

} // namespace hstrn
