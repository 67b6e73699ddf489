#include "hstrn/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hstrn/specfun.hpp"

namespace hstrn {

double ShadowedRicianParams::alpha() const {
    const double s = 2.0 * b * m;
    return beta() * std::pow(s / (s + omega), m);
}

void ShadowedRicianParams::validate() const {
    if (m < 1 || m > 50) throw std::domain_error("shadowing severity m must be in [1, 50]");
    if (!(b > 0.0)) throw std::domain_error("scatter power b must be positive");
    if (!(omega >= 0.0)) throw std::domain_error("LOS power omega must be nonnegative");
}

double sr_zeta(const ShadowedRicianParams& p, int k) {
    if (k < 0) throw std::domain_error("sr_zeta: negative order");
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * pochhammer(1.0 - p.m, k) * std::pow(p.delta(), k) / (kfact * kfact);
}

double sr_pdf(const ShadowedRicianParams& p, double x) {
    if (x < 0.0) return 0.0;
    double poly = 0.0;
    double xk = 1.0;
    for (int k = 0; k < p.m; ++k) {
        poly += sr_zeta(p, k) * xk;
        xk *= x;
    }
    return p.alpha() * poly * std::exp(-p.theta1() * x);
}

double sr_cdf(const ShadowedRicianParams& p, double x) {
    if (x <= 0.0) return x < 0.0 ? 0.0 : sr_cdf_terms(p).evaluate(0.0);
    const double th1 = p.theta1();
    double s = 0.0;
    double kfact = 1.0;
    for (int k = 0; k < p.m; ++k) {
        if (k > 0) kfact *= k;
        const double zk = sr_zeta(p, k);
        double pfact = 1.0;
        for (int q = 0; q <= k; ++q) {
            if (q > 0) pfact *= q;
            s += zk * kfact / pfact * std::pow(th1, q - k - 1) * std::pow(x, q);
        }
    }
    return 1.0 - p.alpha() * s * std::exp(-th1 * x);
}

double sr_sample(const ShadowedRicianParams& p, CounterRng& rng) {
    // LOS power ~ Gamma(m, omega/m): sum of m unit exponentials, scaled.
    double g = 0.0;
    for (int i = 0; i < p.m; ++i) g += rng.exponential(1.0);
    g *= p.omega / p.m;
    const double phase = 6.283185307179586477 * rng.uniform();
    const double sb = std::sqrt(p.b);
    const double a = std::sqrt(g);
    const double re = a * std::cos(phase) + sb * rng.normal();
    const double im = a * std::sin(phase) + sb * rng.normal();
    return re * re + im * im;
}

void TermSum::add_term(double coeff, int power, double rate) {
    if (coeff == 0.0) return;
    for (Term& t : terms_) {
        if (t.power == power &&
            std::abs(t.rate - rate) <= 1e-12 * std::max(std::abs(t.rate), std::abs(rate))) {
            t.coeff += coeff;
            return;
        }
    }
    if (terms_.size() >= kMaxTerms)
        throw std::runtime_error("TermSum: term budget exceeded");
    terms_.push_back({coeff, power, rate});
}

TermSum TermSum::multiplied_by(const TermSum& other) const {
    TermSum out;
    out.constant = constant * other.constant;
    for (const Term& t : terms_) out.add_term(t.coeff * other.constant, t.power, t.rate);
    for (const Term& o : other.terms_) out.add_term(constant * o.coeff, o.power, o.rate);
    for (const Term& t : terms_)
        for (const Term& o : other.terms_)
            out.add_term(t.coeff * o.coeff, t.power + o.power, t.rate + o.rate);
    return out;
}

double TermSum::evaluate(double x) const {
    if (x < 0.0) throw std::domain_error("TermSum: negative argument");
    double v = constant;
    if (x == 0.0) {
        for (const Term& t : terms_)
            if (t.power == 0) v += t.coeff;
        return v;
    }
    const double lx = std::log(x);
    for (const Term& t : terms_) v += t.coeff * std::exp(t.power * lx - t.rate * x);
    return v;
}

TermSum sr_cdf_terms(const ShadowedRicianParams& p) {
    p.validate();
    const double th1 = p.theta1();
    const double al = p.alpha();
    TermSum ts;
    ts.constant = 1.0;
    double kfact = 1.0;
    for (int k = 0; k < p.m; ++k) {
        if (k > 0) kfact *= k;
        const double zk = sr_zeta(p, k);
        double pfact = 1.0;
        for (int q = 0; q <= k; ++q) {
            if (q > 0) pfact *= q;
            ts.add_term(-al * zk * kfact / pfact * std::pow(th1, q - k - 1), q, th1);
        }
    }
    return ts;
}

TermSum best_relay_cdf_terms(std::span<const ShadowedRicianParams> links) {
    if (links.empty()) throw std::domain_error("best_relay_cdf_terms: no links");
    TermSum acc = sr_cdf_terms(links[0]);
    for (std::size_t i = 1; i < links.size(); ++i)
        acc = acc.multiplied_by(sr_cdf_terms(links[i]));
    return acc;
}

double best_relay_cdf_eval(const TermSum& cdf, double x) {
    const double v = cdf.evaluate(x);
    if (!(v >= -1e-9 && v <= 1.0 + 1e-9))
        throw std::runtime_error("best_relay_cdf_eval: value outside [0,1]");
    return std::clamp(v, 0.0, 1.0);
}

} // namespace hstrn
