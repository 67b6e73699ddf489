#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hstrn/rng.hpp"

namespace hstrn {

// Land-mobile satellite downlink fading: Rician line-of-sight whose average
// power Omega is gamma-shadowed with integer severity m, plus diffuse
// scatter of average power 2b. Mean channel power is 2b + omega.
struct ShadowedRicianParams {
    int m = 1;
    double b = 0.0635;
    double omega = 0.0007;

    double beta() const { return 0.5 / b; }
    double delta() const { return beta() * omega / (2.0 * b * m + omega); }
    double alpha() const;
    double theta1() const { return beta() - delta(); }
    double mean() const { return 2.0 * b + omega; }
    void validate() const; // throws std::domain_error on bad parameters

    static ShadowedRicianParams heavy() { return {1, 0.0635, 0.0007}; }
    static ShadowedRicianParams average() { return {5, 0.25, 0.279}; }
};

// Power-series coefficient of the density: f(x) = alpha * sum_k zeta(k) x^k e^{-theta1 x}.
double sr_zeta(const ShadowedRicianParams& p, int k);

double sr_pdf(const ShadowedRicianParams& p, double x);
double sr_cdf(const ShadowedRicianParams& p, double x);

// Draws one channel power from the physical model: shadowed LOS amplitude
// (gamma power, uniform phase) plus complex Gaussian scatter. Consumes
// exactly m + 3 variates from rng.
double sr_sample(const ShadowedRicianParams& p, CounterRng& rng);

// One addend of c * x^power * e^{-rate x}.
struct Term {
    double coeff;
    int power;
    double rate;
};

// constant + sum of Term, closed under products. Terms with equal power and
// rate (within 1e-12 relative) are merged; the first-seen rate is kept
// exactly so repeated merges never drift.
class TermSum {
public:
    double constant = 0.0;

    void add_term(double coeff, int power, double rate);
    TermSum multiplied_by(const TermSum& other) const;
    double evaluate(double x) const;
    const std::vector<Term>& terms() const { return terms_; }

    static constexpr std::size_t kMaxTerms = 10000;

private:
    std::vector<Term> terms_;
};

// CDF of one link as TermSum: 1 - sum_j c_j x^{p_j} e^{-theta1 x}.
TermSum sr_cdf_terms(const ShadowedRicianParams& p);

// CDF of the strongest of several independent links (product of CDFs),
// fully expanded. Throws std::runtime_error past the term budget.
TermSum best_relay_cdf_terms(std::span<const ShadowedRicianParams> links);

// Evaluates a CDF-shaped TermSum and clamps to [0,1]; values outside by
// more than 1e-9 indicate a malformed sum and throw std::runtime_error.
double best_relay_cdf_eval(const TermSum& cdf, double x);

} // namespace hstrn
