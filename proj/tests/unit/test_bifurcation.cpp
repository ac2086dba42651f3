#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "signet/bifurcation.hpp"

using namespace signet;

TEST_CASE("special-case fixed points match the closed forms") {
    const SpecialCaseParams p{10, 0.5, 1.0, 6.0, 0.03};
    const SpecialFixedPoints fp = special_fixed_points(p);
    REQUIRE(fp.x_peace.has_value());
    REQUIRE(fp.x_unstable.has_value());
    CHECK(*fp.x_peace == doctest::Approx(0.6125741132772069).epsilon(1e-12));
    CHECK(*fp.x_unstable == doctest::Approx(2.7207592200561267).epsilon(1e-12));
    CHECK(fp.x_war == doctest::Approx(6.5).epsilon(1e-15));

    SpecialCaseParams weak = p;
    weak.beta = 0.5;
    CHECK(special_fixed_points(weak).x_war == doctest::Approx(12.5).epsilon(1e-15));

    SpecialCaseParams past = p;
    past.alpha = 0.06; // discriminant negative: lower branch pair gone
    const SpecialFixedPoints gone = special_fixed_points(past);
    CHECK_FALSE(gone.x_peace.has_value());
    CHECK_FALSE(gone.x_unstable.has_value());
}

TEST_CASE("formula fixed points can outlive the exact system near the shoulder") {
    // at beta = 2 the linear/plateau formulas still report three fixed points,
    // but the exact tanh system keeps only the peace root
    const SpecialCaseParams p{10, 0.5, 2.0, 6.0, 0.03};
    const SpecialFixedPoints fp = special_fixed_points(p);
    CHECK(fp.x_peace.has_value());
    CHECK(fp.x_unstable.has_value());
    CHECK(fp.x_war == doctest::Approx(3.5));
    const auto exact = test::special_case_roots(p.n, p.mu, p.beta, p.L, p.alpha, 12.0);
    CHECK(exact.size() == 1); // bisection oracle: only the peace equilibrium
}

TEST_CASE("special critical alphas") {
    const SpecialCaseParams p{10, 0.5, 1.0, 6.0, 0.03};
    const CriticalAlphas ca = special_critical_alphas(p);
    CHECK(ca.peace_to_war == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(ca.war_to_peace == doctest::Approx(6.0 / 422.5).epsilon(1e-12));

    double prev = 1.0;
    for (double L : {2.0, 6.0, 20.0, 100.0, 1000.0}) {
        SpecialCaseParams q = p;
        q.L = L;
        const double wp = special_critical_alphas(q).war_to_peace;
        CHECK(wp < prev);
        prev = wp;
    }
}

TEST_CASE("general peace-to-war threshold") {
    CHECK(alpha_peace_to_war(1.0, 5.0) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(alpha_peace_to_war(2.0, 5.0) ==
          doctest::Approx(2.0 * alpha_peace_to_war(1.0, 5.0)).epsilon(1e-15));
    CHECK(alpha_peace_to_war(1.0, 6.01) == doctest::Approx(1.0 / 24.04).epsilon(1e-12));
    CHECK_THROWS_AS(alpha_peace_to_war(1.0, 0.0), NonPositiveEigenvalueError);
    CHECK_THROWS_AS(alpha_peace_to_war(1.0, -3.0), NonPositiveEigenvalueError);
}

TEST_CASE("war-to-peace threshold reduces to the special case and orders below P->W") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int rep = 0; rep < 50; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 60);
        const double mu = unif(rng), beta = unif(rng), L = 4.0 * unif(rng);
        const SpecialCaseParams p{n, mu, beta, L, 0.01};
        const double general = alpha_war_to_peace(beta, L, n, n * mu);
        const double special = special_critical_alphas(p).war_to_peace;
        CHECK(general == doctest::Approx(special).epsilon(1e-12));
        CHECK(alpha_war_to_peace(beta, L, n, n * mu) <=
              alpha_peace_to_war(beta, n * mu) * (1.0 + 1e-12));
    }
    CHECK(alpha_war_to_peace(1.0, 1e9, 10, 5.0) < 1e-6);
}

TEST_CASE("lambda_peace limits and domain") {
    CHECK(lambda_peace(0.0, 1.0, 7.3) == doctest::Approx(7.3).epsilon(1e-15));
    CHECK(lambda_peace(1e-12, 1.0, 7.3) == doctest::Approx(7.3).epsilon(1e-9));

    const double beta = 1.0, lam = 5.0;
    const double a_star = alpha_peace_to_war(beta, lam);
    CHECK(lambda_peace(a_star, beta, lam) == doctest::Approx(2.0 * lam).epsilon(1e-9));
    CHECK(lambda_peace(a_star, beta, lam) ==
          doctest::Approx(beta / (2.0 * a_star)).epsilon(1e-9));
    CHECK_THROWS_AS(lambda_peace(a_star * 1.01, beta, lam), BeyondBifurcationError);
}

TEST_CASE("lambda_unstable merges with lambda_peace at the bifurcation") {
    const double beta = 0.5, lam = 1.0, alpha = 0.08;
    CHECK(lambda_peace(alpha, beta, lam) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK(lambda_unstable(alpha, beta, lam) == doctest::Approx(5.0).epsilon(1e-12));

    const double a_star = alpha_peace_to_war(beta, lam);
    CHECK(lambda_unstable(a_star, beta, lam) ==
          doctest::Approx(lambda_peace(a_star, beta, lam)).epsilon(1e-7));

    // monotone decreasing in alpha on its domain
    double prev = lambda_unstable(0.01, beta, lam);
    for (double a = 0.02; a < a_star; a += 0.01) {
        const double cur = lambda_unstable(a, beta, lam);
        CHECK(cur < prev);
        prev = cur;
    }

    // bistable ordering lambda_P < lambda_U < lambda_W
    CHECK(lambda_peace(alpha, beta, lam) < lambda_unstable(alpha, beta, lam));
    CHECK(lambda_unstable(alpha, beta, lam) < lambda_war(lam, 6.0, 10, beta));
}

TEST_CASE("lambda_war scales linearly and increases with the bias eigenvalue") {
    CHECK(lambda_war(1.6, 6.0, 10, 0.5) == doctest::Approx(1.6 + 120.0).epsilon(1e-15));
    CHECK(lambda_war(1.6, 6.0, 20, 0.5) - lambda_war(1.6, 6.0, 10, 0.5) ==
          doctest::Approx(120.0).epsilon(1e-12));
    CHECK(lambda_war(2.0, 6.0, 10, 0.5) > lambda_war(1.6, 6.0, 10, 0.5));
}

TEST_CASE("critical lambda tilde") {
    CHECK(critical_lambda_tilde(0.03, 1.0) == doctest::Approx(25.0 / 3.0).epsilon(1e-12));
    CHECK(critical_lambda_tilde(0.25, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (double c : {0.5, 2.0, 7.0})
        CHECK(critical_lambda_tilde(c * 0.03, c * 1.0) ==
              doctest::Approx(critical_lambda_tilde(0.03, 1.0)).epsilon(1e-12));
}

TEST_CASE("mode growth rates at the analytic fixed points") {
    const double beta = 1.0, lam = 5.0, alpha = 0.03;
    const double disc = std::sqrt(beta * beta - 4.0 * alpha * beta * lam);
    const auto at_peace = mode_growth_rates(alpha, beta, {lambda_peace(alpha, beta, lam)});
    CHECK(at_peace[0] == doctest::Approx(-disc).epsilon(1e-9));
    const auto at_unstable = mode_growth_rates(alpha, beta, {lambda_unstable(alpha, beta, lam)});
    CHECK(at_unstable[0] == doctest::Approx(disc).epsilon(1e-9));
    const double a_star = alpha_peace_to_war(beta, lam);
    const auto at_star = mode_growth_rates(a_star, beta, {lambda_peace(a_star, beta, lam)});
    CHECK(at_star[0] == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("regime classification brackets") {
    const double lam = 5.0;
    const RegimeReport low =
        classify_regime(ModelParams::fromAlpha(1.0, 6.0, 1e-4), lam, 10);
    CHECK(low.regime == Regime::MonostablePeace);
    const RegimeReport high =
        classify_regime(ModelParams::fromAlpha(1.0, 6.0, 0.2), lam, 10);
    CHECK(high.regime == Regime::MonostableWar);
    const RegimeReport mid =
        classify_regime(ModelParams::fromAlpha(1.0, 6.0, 0.03), lam, 10);
    CHECK(mid.regime == Regime::Bistable);
    CHECK(mid.alpha_war_to_peace <= mid.alpha_peace_to_war);
    CHECK(mid.alpha_peace_to_war == doctest::Approx(0.05));
}

TEST_CASE("reduced eigenvalue dynamics forms agree with the fixed-point formulas") {
    const double beta = 0.5, lam = 1.0, alpha = 0.08;
    const int n = 10;
    const ModelParams p = ModelParams::fromAlpha(beta, 6.0, alpha);

    CHECK(std::abs(eigen_rhs(lambda_peace(alpha, beta, lam), lam, p, EigenRhsForm::Transition,
                             n)) < 1e-9);
    CHECK(std::abs(eigen_rhs(lambda_unstable(alpha, beta, lam), lam, p, EigenRhsForm::Transition,
                             n)) < 1e-9);
    CHECK(std::abs(eigen_rhs(lambda_war(lam, 6.0, n, beta), lam, p, EigenRhsForm::Plateau, n)) <
          1e-9);

    // smooth interpolation keeps three zeros in the bistable regime
    int sign_changes = 0;
    double prev = eigen_rhs(0.0, lam, p, EigenRhsForm::Smooth, n);
    for (double l = 0.5; l < 200.0; l += 0.05) {
        const double cur = eigen_rhs(l, lam, p, EigenRhsForm::Smooth, n);
        if (prev * cur < 0.0) ++sign_changes;
        prev = cur;
    }
    CHECK(sign_changes == 3);
}

TEST_CASE("warm-started sweep locates both bifurcations with hysteresis") {
    const int n = 10;
    const double mu = 0.5, beta = 1.0, L = 6.0;
    const SignedNetwork XD = test::special_case_bias(n, mu);
    const ModelParams base = ModelParams::fromAlpha(beta, L, 0.01);
    SimConfig cfg;
    cfg.t_end = 400.0;
    cfg.record_stride = 25;

    std::vector<double> grid;
    for (double a = 0.010; a <= 0.0601; a += 0.0025) grid.push_back(a);

    const auto up = sweep_alpha(XD, base, grid, cfg, SweepDirection::Up);
    const auto up_jump = locate_jump(up);
    REQUIRE(up_jump.has_value());
    // exact scalar merge sits at 0.05011 (bisection oracle, see wp scan)
    CHECK(up_jump->alpha_mid == doctest::Approx(0.0501).epsilon(0.05));

    const auto down =
        sweep_alpha(XD, base, grid, cfg, SweepDirection::Down, up.back().report.state);
    const auto down_jump = locate_jump(down);
    REQUIRE(down_jump.has_value());
    CHECK(down_jump->alpha_mid < up_jump->alpha_mid); // hysteresis ordering
    // exact tangency of the tanh system is near 0.0233 (oracle scan)
    CHECK(down_jump->alpha_mid == doctest::Approx(0.02334).epsilon(0.12));

    // a grid entirely below the war-to-peace threshold shows no jump
    std::vector<double> low_grid{0.002, 0.004, 0.006, 0.008, 0.010};
    const auto flat = sweep_alpha(XD, base, low_grid, cfg, SweepDirection::Up);
    const auto flat_jump = locate_jump(flat);
    REQUIRE(flat_jump.has_value());
    CHECK(flat_jump->delta_tie_std < 0.1 * flat.front().report.tie_std + 1e-6);
}
