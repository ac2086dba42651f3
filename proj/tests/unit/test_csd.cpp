#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "signet/bifurcation.hpp"
#include "signet/csd.hpp"

using namespace signet;

TEST_CASE("recovery rate recovers a pure exponential decay") {
    Trajectory traj;
    const double rate = 0.3, t_end = 80.0, dt = 0.01;
    for (double t = 0.0; t <= t_end + 1e-9; t += dt) {
        traj.times.push_back(t);
        traj.tie_std_series.push_back(0.4 + std::exp(-rate * t));
        traj.lambda1_series.push_back(0.0);
    }
    CHECK(recovery_rate(traj, 0.0) == doctest::Approx(rate).epsilon(1e-6));
}

TEST_CASE("recovery rate error paths") {
    Trajectory flat;
    for (double t = 0.0; t <= 10.0; t += 0.1) {
        flat.times.push_back(t);
        flat.tie_std_series.push_back(1.0); // no transient at all
        flat.lambda1_series.push_back(0.0);
    }
    CHECK_THROWS_AS(recovery_rate(flat, 0.0), DidNotRecoverError);

    Trajectory abrupt; // transient collapses immediately: nothing left to fit
    abrupt.times = {0.0, 0.1, 0.2};
    abrupt.tie_std_series = {1.0, 0.01, 0.0};
    abrupt.lambda1_series = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(recovery_rate(abrupt, 0.0), DidNotRecoverError);
}

TEST_CASE("power-law fit is exact on synthetic data") {
    std::vector<CsdPoint> points;
    for (double d : {0.1, 0.3, 0.7, 1.5, 2.5, 5.0})
        points.push_back({0.0, d, 0.2 * std::sqrt(d), true});
    const PowerLawFit fit = fit_power_law(points);
    CHECK(fit.exponent == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.prefactor_log == doctest::Approx(std::log(0.2)).epsilon(1e-12));

    points.resize(4);
    CHECK_THROWS_AS(fit_power_law(points), InsufficientPointsError);

    // the published fit reproduces its own example points
    CHECK(0.2 * std::pow(5.87, 0.51) == doctest::Approx(0.47).epsilon(0.06));
    CHECK(0.2 * std::pow(0.35, 0.51) == doctest::Approx(0.11).epsilon(0.08));
}

TEST_CASE("spearman rank correlation") {
    CHECK(spearman_rank_correlation({1, 2, 3, 4}, {2, 4, 6, 8}) == doctest::Approx(1.0));
    CHECK(spearman_rank_correlation({1, 2, 3, 4}, {8, 6, 4, 2}) == doctest::Approx(-1.0));
    CHECK(spearman_rank_correlation({1, 2, 3, 4, 5}, {1, 3, 2, 5, 4}) ==
          doctest::Approx(0.8).epsilon(1e-12));
    CHECK_THROWS_AS(spearman_rank_correlation({1, 1, 1}, {1, 2, 3}), DomainError);
}

TEST_CASE("csd experiment on the small two-faction system") {
    const int n = 10;
    const SignedNetwork XD = test::special_case_bias(n, 0.5);
    const ModelParams params = ModelParams::fromAlpha(1.0, 6.0, 0.03);
    SimConfig cfg;
    cfg.t_end = 600.0;
    cfg.conv_tol = 1e-7;

    const double lambda_d1 = 5.0; // N mu exactly for the faction bias
    const double sigma_c = params.beta * (critical_lambda_tilde(0.03, 1.0) - lambda_d1);
    std::vector<double> magnitudes;
    for (double f : {0.15, 0.4, 0.6, 0.75, 0.85, 0.92, 1.06, 1.2})
        magnitudes.push_back(f * sigma_c);
    magnitudes.push_back(0.0); // omitted per contract

    const auto points = csd_experiment(XD, params, magnitudes, cfg);
    REQUIRE(points.size() == 8); // zero magnitude dropped

    std::vector<double> ds, rs;
    double min_conv_d = 1e9, max_destab_d = -1e9;
    for (const auto& p : points) {
        CHECK(p.d == doctest::Approx(sigma_c - p.magnitude).epsilon(1e-9)); // beta = 1
        if (p.converged) {
            CHECK(p.r > 0.0);
            ds.push_back(p.d);
            rs.push_back(p.r);
            min_conv_d = std::min(min_conv_d, p.d);
        } else {
            max_destab_d = std::max(max_destab_d, p.d);
        }
    }
    REQUIRE(ds.size() >= 5);
    CHECK(max_destab_d > -1e9);                 // the supercritical points destabilized
    CHECK(max_destab_d < min_conv_d);           // no interleaving
    CHECK(max_destab_d < 0.25 * sigma_c);       // threshold sits near d = 0
    CHECK(spearman_rank_correlation(ds, rs) == doctest::Approx(1.0)); // r monotone in d
}
