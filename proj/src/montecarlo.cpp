#include "hstrn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hstrn/rng.hpp"

namespace hstrn {

TrialOutcome simulate_trial(const NetworkConfig& cfg, std::uint64_t seed,
                            std::uint64_t trial_index) {
    CounterRng rng(seed, trial_index);
    // Draw order is part of the reproducibility contract: all satellite
    // links first (selection by true channel power), then the selected
    // relay's downlink, the eavesdropper tap, and the jammer channel.
    double best = -1.0;
    for (const auto& rel : cfg.relays) best = std::max(best, sr_sample(rel, rng));
    const double g_rd = rng.exponential(cfg.lambda_rd);
    const double g_re = rng.exponential(cfg.lambda_re);
    const double g_je = rng.exponential(cfg.lambda_je);
    return {snr_destination(cfg, best, g_rd),
            snr_eavesdropper(cfg, best, g_re, g_je)};
}

namespace {

Estimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
    Estimate e;
    e.trials = trials;
    e.value = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
    e.ci_low = std::max(0.0, e.value - 1.959963984540054 * e.std_error);
    e.ci_high = std::min(1.0, e.value + 1.959963984540054 * e.std_error);
    return e;
}

} // namespace

McResult estimate(const NetworkConfig& cfg, std::uint64_t trials,
                  std::uint64_t seed, unsigned workers) {
    cfg.validate();
    if (trials == 0) throw std::domain_error("estimate: trials must be positive");
    if (workers == 0)
        workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 32u));
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    const double gth = gamma_threshold(cfg.c_th);
    std::vector<std::uint64_t> op_hits(workers, 0), ip_hits(workers, 0);
    auto body = [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t op = 0, ip = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const TrialOutcome o = simulate_trial(cfg, seed, i);
            if (o.gamma_d < gth) ++op;
            if (o.gamma_e >= gth) ++ip;
        }
        op_hits[w] = op;
        ip_hits[w] = ip;
    };

    const std::uint64_t per = trials / workers;
    const std::uint64_t rem = trials % workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + per + (w < rem ? 1 : 0);
        pool.emplace_back(body, w, begin, end);
        begin = end;
    }
    for (auto& th : pool) th.join();

    // Integer counts merged in worker order: identical for every worker count.
    std::uint64_t op_total = 0, ip_total = 0;
    for (unsigned w = 0; w < workers; ++w) {
        op_total += op_hits[w];
        ip_total += ip_hits[w];
    }
    return {make_estimate(op_total, trials), make_estimate(ip_total, trials)};
}

} // namespace hstrn
