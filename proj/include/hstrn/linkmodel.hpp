#pragma once

#include <cmath>
#include <vector>

#include "hstrn/channels.hpp"

namespace hstrn {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

// Channel estimation error magnitudes per link (0 = perfect CSI).
struct CeeProfile {
    double sr = 0.0;
    double rd = 0.0;
    double re = 0.0;
    double je = 0.0;

    static CeeProfile uniform(double mu) { return {mu, mu, mu, mu}; }
};

// Transmit SNR budgets in dB: psi for the satellite uplink, phi for the
// relay downlink, theta for the jammer.
struct PowerProfile {
    double psi_db = 20.0;
    double phi_db = 20.0;
    double theta_db = 1.0;

    double psi() const { return db_to_linear(psi_db); }
    double phi() const { return db_to_linear(phi_db); }
    double theta() const { return db_to_linear(theta_db); }
};

struct NetworkConfig {
    std::vector<ShadowedRicianParams> relays; // satellite->relay fading per relay
    double lambda_rd = 1.0;                   // relay->destination Rayleigh power rate
    double lambda_re = 1.0;                   // relay->eavesdropper
    double lambda_je = 1.0;                   // jammer->eavesdropper
    CeeProfile cee;
    PowerProfile power;
    double c_th = 1.0; // secrecy rate threshold, bits/s/Hz

    void validate() const; // throws std::domain_error
};

// SNR threshold implied by the target rate over two hops.
inline double gamma_threshold(double c_th) {
    return std::exp2(2.0 * c_th) - 1.0;
}

// Variable-gain relay normalization, squared.
inline double amplification_gain_sq(double psi, double phi, double mu_sr, double gamma_sr) {
    return phi / (psi * (gamma_sr + mu_sr * mu_sr) + 1.0);
}

// End-to-end SNR at the destination given channel powers gamma_sr, gamma_rd.
double snr_destination(const NetworkConfig& cfg, double gamma_sr, double gamma_rd);

// End-to-end SNR at the eavesdropper under jamming, given channel powers.
double snr_eavesdropper(const NetworkConfig& cfg, double gamma_sr, double gamma_re,
                        double gamma_je);

// Quantities shared by every closed-form expression, precomputed once per
// configuration. Names follow the SNR algebra: t2/t4 are the estimation
// noise inflation factors of the two legitimate hops, xi their product,
// lam/gamma_hat the eavesdropper-side analogues at zero jammer power.
struct AnalysisConstants {
    double gamma_th;    // SNR threshold
    double psi, phi, theta;
    double t2;          // psi mu_sr^2 + 1
    double t4;          // phi mu_rd^2 + 1
    double xi;          // t2 t4
    double gamma_tilde; // gamma_th t4 / phi
    double xi_tilde;    // gamma_tilde t2 + xi / phi
    double lam;         // t2 (phi mu_re^2 + theta mu_je^2 + 1)
    double gamma_hat;   // gamma_th (phi mu_re^2 + theta mu_je^2 + 1) / phi
    double lam_tilde;   // gamma_hat t2 + lam / phi

    static AnalysisConstants from_config(const NetworkConfig& cfg);
};

} // namespace hstrn
