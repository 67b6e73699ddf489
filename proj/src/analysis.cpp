#include "hstrn/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hstrn/channels.hpp"

namespace hstrn {

namespace {

// Contribution of one best-relay CDF term (coeff, p, r) to the averaged
// threshold probability over an exponential second hop with rate lam:
//   coeff lam (gth/psi)^p e^{-E} 2 sum_q C(p,q) t2^{p-q} s^q (a/lam)^{(1-q)/2} K_{1-q}(z)
// with a = r gth s / psi, z = 2 sqrt(a lam), E = r gth t2/psi + lam shift.
// The Bessel factors are exponentially scaled so e^{-(E+z)} is applied once.
double hop_term_value(double coeff, int p, double r, const AnalysisConstants& k,
                      double lam, double s, double shift) {
    const double E = r * k.gamma_th * k.t2 / k.psi + lam * shift;
    const double a = r * k.gamma_th * s / k.psi;
    const double z = 2.0 * std::sqrt(a * lam);
    if (E + z > 690.7755) return 0.0; // prefactor below 1e-300
    std::vector<double> kh(static_cast<std::size_t>(std::max(2, p)));
    bessel_k_scaled_seq(z, kh); // orders |1-q|, q = 0..p
    const double ratio = a / lam;
    double inner = 0.0;
    for (int q = 0; q <= p; ++q) {
        const int ord = q >= 1 ? q - 1 : 1;
        inner += static_cast<double>(binomial(p, q)) * std::pow(k.t2, p - q) *
                 std::pow(s, q) * std::pow(ratio, 0.5 * (1 - q)) *
                 kh[static_cast<std::size_t>(ord)];
    }
    return coeff * lam * std::pow(k.gamma_th / k.psi, p) * 2.0 * std::exp(-(E + z)) * inner;
}

double checked_probability(double v, const char* what) {
    if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
        throw std::runtime_error(std::string(what) + ": value outside [0,1]");
    return std::clamp(v, 0.0, 1.0);
}

// Eavesdropper-side term machinery shared by the conditional probability
// and the jammer average.
struct EveContext {
    AnalysisConstants k;
    TermSum best;
    double lam_re;

    explicit EveContext(const NetworkConfig& cfg)
        : k(AnalysisConstants::from_config(cfg)),
          best(best_relay_cdf_terms(cfg.relays)),
          lam_re(cfg.lambda_re) {}

    // 1 - Pr[eavesdropper SNR < threshold | jammer power x], assembled as
    // the negated term sum so small values carry no 1-Q cancellation.
    double complement(double x) const {
        const double delta = k.gamma_hat + k.gamma_th * k.theta * x / k.phi;
        const double om = (x * k.theta * k.t2 + k.lam) / k.phi;
        const double v6 = delta * k.t2 + om;
        double s = 0.0;
        for (const Term& t : best.terms())
            s += hop_term_value(t.coeff, t.power, t.rate, k, lam_re, v6, delta);
        return -s;
    }
};

} // namespace

double outage_probability(const NetworkConfig& cfg) {
    cfg.validate();
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    if (k.gamma_th == 0.0) return 0.0;
    const TermSum best = best_relay_cdf_terms(cfg.relays);
    double total = 1.0;
    for (const Term& t : best.terms())
        total += hop_term_value(t.coeff, t.power, t.rate, k, cfg.lambda_rd,
                                k.xi_tilde, k.gamma_tilde);
    return checked_probability(total, "outage_probability");
}

double op_numeric_oracle(const NetworkConfig& cfg, const QuadratureSpec& spec) {
    cfg.validate();
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    if (k.gamma_th == 0.0) return 0.0;
    const TermSum best = best_relay_cdf_terms(cfg.relays);
    const double lam = cfg.lambda_rd;
    const double lo = k.gamma_tilde;
    auto integrand = [&](double x) {
        const double den = k.psi * (k.phi * x - k.gamma_th * k.t4);
        const double weight = lam * std::exp(-lam * x);
        if (den <= 0.0) return weight; // first-hop requirement unbounded: CDF = 1
        const double u = k.gamma_th * (x * k.phi * k.t2 + k.xi) / den;
        return best_relay_cdf_eval(best, u) * weight;
    };
    const double head = -std::expm1(-lam * lo);
    return checked_probability(head + integrate_semi_infinite(integrand, lo, spec),
                               "op_numeric_oracle");
}

double q_given_jammer(const NetworkConfig& cfg, double x) {
    cfg.validate();
    if (x < 0.0) throw std::domain_error("q_given_jammer: negative jammer power");
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    if (k.gamma_th == 0.0) return 0.0;
    const EveContext ctx(cfg);
    return checked_probability(1.0 - ctx.complement(x), "q_given_jammer");
}

double intercept_probability(const NetworkConfig& cfg, const QuadratureSpec& spec) {
    cfg.validate();
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    if (k.gamma_th == 0.0) return 1.0;
    const EveContext ctx(cfg);
    const double lje = cfg.lambda_je;
    auto integrand = [&](double x) { return ctx.complement(x) * lje * std::exp(-lje * x); };
    return checked_probability(integrate_semi_infinite(integrand, 0.0, spec),
                               "intercept_probability");
}

SeriesResult intercept_probability_series(const NetworkConfig& cfg, const SeriesOptions& opt) {
    cfg.validate();
    SeriesResult res;
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    if (k.gamma_th == 0.0) {
        res.value = 1.0;
        res.converged = true;
        return res;
    }
    const TermSum best = best_relay_cdf_terms(cfg.relays);
    const double lre = cfg.lambda_re;
    const double lje = cfg.lambda_je;
    // Slope of the conditional exponent in the jammer power; the expansion
    // trades the jammer average for moments of the scaled spread factor.
    const double kappa = k.t2 * k.theta * (k.gamma_th + 1.0) / k.phi;
    const double lam10 = (lje + k.gamma_th * lre * k.theta / k.phi) / kappa;
    const double big_b = lam10 * k.lam_tilde;

    res.converged = true;
    double total = 0.0;
    // Tail integrals depend on (rate, q, w) only; rates repeat across terms.
    std::map<std::tuple<std::uint64_t, int, int>, double> cache;
    for (const Term& t : best.terms()) {
        const double r = t.rate;
        const int p = t.power;
        const double zeta = 2.0 * std::sqrt(r * k.gamma_th * lre * k.lam_tilde / k.psi);
        const double pre = -t.coeff * lre * lje * std::pow(k.gamma_th / k.psi, p) *
                           std::exp(big_b - lre * k.gamma_hat - r * k.gamma_th * k.t2 / k.psi);
        const std::uint64_t rbits = std::bit_cast<std::uint64_t>(r);
        double qsum = 0.0;
        for (int q = 0; q <= p; ++q) {
            double s = 0.0;
            double prev = std::numeric_limits<double>::infinity();
            double wcoeff = 1.0; // (-B)^w / w!
            bool conv = false;
            double neglected = 0.0;
            int w = 0;
            for (; w <= opt.max_terms; ++w) {
                if (w > 0) wcoeff *= -big_b / w;
                auto it = cache.find({rbits, q, w});
                if (it == cache.end()) {
                    double iv;
                    try {
                        iv = bessel_tail_integral(q, w, zeta);
                    } catch (const AccuracyError& e) {
                        iv = e.best_estimate;
                        res.converged = false;
                    }
                    it = cache.emplace(std::make_tuple(rbits, q, w), iv).first;
                }
                const double term = wcoeff * it->second;
                const double floor = opt.tail_tol * std::max(std::abs(s), 1e-300);
                if (std::abs(term) > prev && std::abs(term) > floor) {
                    neglected = std::abs(term); // asymptotic growth: stop before adding
                    break;
                }
                s += term;
                prev = std::abs(term);
                res.highest_order = std::max(res.highest_order, w);
                if (std::abs(term) <= floor) {
                    conv = true;
                    neglected = std::abs(term);
                    break;
                }
            }
            if (!conv) res.converged = false;
            if (s != 0.0)
                res.tail_bound = std::max(res.tail_bound, neglected / std::abs(s));
            qsum += static_cast<double>(binomial(p, q)) * std::pow(k.t2, p - q) *
                    std::pow(r * k.gamma_th / (k.psi * lre), 0.5 * (1 - q)) *
                    std::pow(k.lam_tilde, 0.5 * (q + 3)) / kappa * 2.0 * s;
        }
        total += pre * qsum;
    }
    res.value = total;
    return res;
}

} // namespace hstrn
