#include "hstrn/linkmodel.hpp"

#include <stdexcept>

namespace hstrn {

void NetworkConfig::validate() const {
    if (relays.empty()) throw std::domain_error("config: at least one relay is required");
    if (relays.size() > 8) throw std::domain_error("config: more than 8 relays is unsupported");
    for (const auto& r : relays) r.validate();
    if (!(lambda_rd > 0.0) || !(lambda_re > 0.0) || !(lambda_je > 0.0))
        throw std::domain_error("config: exponential rates must be positive");
    if (cee.sr < 0.0 || cee.rd < 0.0 || cee.re < 0.0 || cee.je < 0.0)
        throw std::domain_error("config: estimation error magnitudes must be nonnegative");
    if (!(c_th >= 0.0)) throw std::domain_error("config: rate threshold must be nonnegative");
}

double snr_destination(const NetworkConfig& cfg, double gamma_sr, double gamma_rd) {
    const double psi = cfg.power.psi();
    const double phi = cfg.power.phi();
    const double t2 = psi * cfg.cee.sr * cfg.cee.sr + 1.0;
    const double t4 = phi * cfg.cee.rd * cfg.cee.rd + 1.0;
    return psi * phi * gamma_sr * gamma_rd /
           (gamma_rd * phi * t2 + gamma_sr * psi * t4 + t2 * t4);
}

double snr_eavesdropper(const NetworkConfig& cfg, double gamma_sr, double gamma_re,
                        double gamma_je) {
    const double psi = cfg.power.psi();
    const double phi = cfg.power.phi();
    const double theta = cfg.power.theta();
    const double t2 = psi * cfg.cee.sr * cfg.cee.sr + 1.0;
    const double base = phi * cfg.cee.re * cfg.cee.re + theta * cfg.cee.je * cfg.cee.je + 1.0;
    const double lam = t2 * base;
    const double lam1 = base + theta * gamma_je;
    return psi * phi * gamma_sr * gamma_re /
           (gamma_re * phi * t2 + gamma_sr * psi * lam1 + gamma_je * theta * t2 + lam);
}

AnalysisConstants AnalysisConstants::from_config(const NetworkConfig& cfg) {
    AnalysisConstants k;
    k.gamma_th = gamma_threshold(cfg.c_th);
    k.psi = cfg.power.psi();
    k.phi = cfg.power.phi();
    k.theta = cfg.power.theta();
    k.t2 = k.psi * cfg.cee.sr * cfg.cee.sr + 1.0;
    k.t4 = k.phi * cfg.cee.rd * cfg.cee.rd + 1.0;
    k.xi = k.t2 * k.t4;
    k.gamma_tilde = k.gamma_th * k.t4 / k.phi;
    k.xi_tilde = k.gamma_tilde * k.t2 + k.xi / k.phi;
    const double base = k.phi * cfg.cee.re * cfg.cee.re + k.theta * cfg.cee.je * cfg.cee.je + 1.0;
    k.lam = k.t2 * base;
    k.gamma_hat = k.gamma_th * base / k.phi;
    k.lam_tilde = k.gamma_hat * k.t2 + k.lam / k.phi;
    return k;
}

} // namespace hstrn
