#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hstrn/linkmodel.hpp"

using namespace hstrn;

namespace {
bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(b), 1e-300);
}

NetworkConfig sample_config() {
    NetworkConfig cfg;
    cfg.relays = {ShadowedRicianParams::heavy()};
    cfg.cee = CeeProfile::uniform(0.25);
    cfg.power = {10.0, 10.0, 3.0};
    return cfg;
}
} // namespace

TEST_SUITE("linkmodel") {

TEST_CASE("decibel conversions") {
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK(rel_close(db_to_linear(10.0), 10.0, 1e-15));
    CHECK(rel_close(db_to_linear(20.0), 100.0, 1e-15));
    CHECK(rel_close(db_to_linear(-3.0), 0.50118723362727224, 1e-14));
    for (double db : {-7.0, 0.0, 13.5}) CHECK(rel_close(linear_to_db(db_to_linear(db)), db, 1e-12));
}

TEST_CASE("snr threshold from target rate") {
    CHECK(gamma_threshold(1.0) == 3.0);
    CHECK(gamma_threshold(0.0) == 0.0);
    CHECK(gamma_threshold(0.5) == 1.0);
    CHECK(rel_close(gamma_threshold(2.0), 15.0, 1e-15));
}

TEST_CASE("relay gain normalization") {
    CHECK(rel_close(amplification_gain_sq(10.0, 10.0, 0.25, 2.0), 10.0 / 21.625, 1e-15));
    CHECK(rel_close(amplification_gain_sq(10.0, 10.0, 0.25, 2.0), 0.46242774566473988, 1e-14));
    // more source power to normalize away -> smaller gain
    CHECK(amplification_gain_sq(20.0, 10.0, 0.25, 2.0) <
          amplification_gain_sq(10.0, 10.0, 0.25, 2.0));
}

TEST_CASE("destination snr") {
    const NetworkConfig cfg = sample_config();
    CHECK(rel_close(snr_destination(cfg, 2.0, 3.0), 600.0 / 83.890625, 1e-14));
    CHECK(rel_close(snr_destination(cfg, 2.0, 3.0), 7.1521698640342706, 1e-14));
    CHECK(snr_destination(cfg, 0.0, 3.0) == 0.0);
    CHECK(snr_destination(cfg, 2.0, 4.0) > snr_destination(cfg, 2.0, 3.0));
    CHECK(snr_destination(cfg, 3.0, 3.0) > snr_destination(cfg, 2.0, 3.0));
}

TEST_CASE("eavesdropper snr") {
    NetworkConfig cfg = sample_config();
    cfg.power.theta_db = linear_to_db(2.0);
    CHECK(rel_close(snr_eavesdropper(cfg, 1.0, 1.0, 1.0), 100.0 / 59.84375, 1e-13));
    CHECK(rel_close(snr_eavesdropper(cfg, 1.0, 1.0, 1.0), 1.671018276762402, 1e-13));
    // stronger jamming channel degrades the tap
    CHECK(snr_eavesdropper(cfg, 1.0, 1.0, 2.0) < snr_eavesdropper(cfg, 1.0, 1.0, 1.0));
    CHECK(snr_eavesdropper(cfg, 0.0, 1.0, 1.0) == 0.0);
}

TEST_CASE("precomputed analysis constants") {
    NetworkConfig cfg = sample_config();
    cfg.power = {13.0, 7.0, 4.0};
    cfg.c_th = 0.75;
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    CHECK(k.gamma_th == gamma_threshold(0.75));
    CHECK(rel_close(k.psi, db_to_linear(13.0), 1e-15));
    CHECK(rel_close(k.t2, k.psi * 0.0625 + 1.0, 1e-15));
    CHECK(rel_close(k.t4, k.phi * 0.0625 + 1.0, 1e-15));
    CHECK(k.xi == k.t2 * k.t4);
    CHECK(rel_close(k.gamma_tilde * k.phi, k.gamma_th * k.t4, 1e-15));
    CHECK(rel_close(k.xi_tilde, k.gamma_tilde * k.t2 + k.xi / k.phi, 1e-15));
    // eavesdropper-side spread collapses to t2 * gamma_hat * (1 + 1/gamma_th)
    CHECK(rel_close(k.lam_tilde, k.t2 * k.gamma_hat * (k.gamma_th + 1.0) / k.gamma_th, 1e-13));
}

TEST_CASE("perfect estimation collapses the inflation factors") {
    NetworkConfig cfg = sample_config();
    cfg.cee = CeeProfile::uniform(0.0);
    const AnalysisConstants k = AnalysisConstants::from_config(cfg);
    CHECK(k.t2 == 1.0);
    CHECK(k.t4 == 1.0);
    CHECK(k.xi == 1.0);
    CHECK(k.lam == 1.0);
}

TEST_CASE("configuration validation") {
    NetworkConfig cfg = sample_config();
    CHECK_NOTHROW(cfg.validate());
    NetworkConfig bad = cfg;
    bad.relays.clear();
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = cfg;
    bad.lambda_rd = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = cfg;
    bad.cee.re = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = cfg;
    bad.c_th = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = cfg;
    bad.relays.assign(9, ShadowedRicianParams::heavy());
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

} // TEST_SUITE
