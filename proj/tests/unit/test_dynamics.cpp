#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "signet/bifurcation.hpp"
#include "signet/dynamics.hpp"

using namespace signet;

TEST_CASE("rhs_full is zero at the trivial fixed point") {
    const SignedNetwork zero(6);
    const ModelParams p = ModelParams::fromAlpha(1.0, 6.0, 0.03);
    const SignedNetwork r = rhs_full(zero, zero, p, zero);
    CHECK(r.weights().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rhs_full vanishes at the exact special-case war root") {
    const int n = 10;
    const double mu = 0.5, beta = 1.0, L = 6.0, alpha = 0.03;
    const auto roots = test::special_case_roots(n, mu, beta, L, alpha, 12.0);
    REQUIRE(roots.size() == 3);
    const double x_war = roots.back();
    CHECK(x_war == doctest::Approx(6.2688).epsilon(5e-3)); // bisection oracle value

    // two-faction state built from the scalar root, self-ties included
    Matrix state(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double si = i < n / 2 ? 1.0 : -1.0;
            const double sj = j < n / 2 ? 1.0 : -1.0;
            state(i, j) = x_war * si * sj;
        }
    const SignedNetwork X = SignedNetwork::fromSymmetrized(std::move(state));
    const SignedNetwork XD = test::special_case_bias(n, mu);
    const SignedNetwork r = rhs_full(X, XD, ModelParams::fromAlpha(beta, L, alpha), SignedNetwork(n));
    CHECK(r.weights().cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("rhs_full matches the quadratic approximation in the linear regime") {
    const double beta = 1.0, L = 6.0, alpha = 0.03;
    const ModelParams p = ModelParams::fromAlpha(beta, L, alpha);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const SignedNetwork X = test::random_symmetric(8, seed, 0.3);
        const SignedNetwork XD = test::random_symmetric(8, seed + 50, 0.3);
        const SignedNetwork r = rhs_full(X, XD, p, SignedNetwork(8));
        const Matrix x2 = X.weights() * X.weights();
        const Matrix approx = -beta * (X.weights() - XD.weights()) + alpha * x2;
        const double y_max = x2.cwiseAbs().maxCoeff();
        const double bound = std::pow(alpha, 3) * std::pow(y_max, 3) / (3.0 * L * L);
        CHECK((r.weights() - approx).cwiseAbs().maxCoeff() <= bound * (1.0 + 1e-9));
    }
}

TEST_CASE("rhs_full validates dimensions") {
    const ModelParams p = ModelParams::fromAlpha(1.0, 1.0, 0.1);
    CHECK_THROWS_AS(rhs_full(SignedNetwork(3), SignedNetwork(4), p, SignedNetwork(3)),
                    DimensionError);
}

TEST_CASE("pure balance rhs") {
    Vector u(5);
    u << 0.1, 0.3, -0.5, 0.7, 0.4;
    u.normalize();
    const SignedNetwork proj = SignedNetwork::fromSymmetrized(u * u.transpose());
    const SignedNetwork r = rhs_pure_balance(proj);
    CHECK((r.weights() - proj.weights()).cwiseAbs().maxCoeff() < 1e-12);

    Matrix faction = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) faction(i, j) = (i < 2) == (j < 2) ? 1.0 : -1.0;
    const SignedNetwork sq = rhs_pure_balance(SignedNetwork::fromMatrix(faction));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if ((i < 2) == (j < 2)) CHECK(sq(i, j) >= 0.0);

    CHECK(rhs_pure_balance(SignedNetwork(3)).weights().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("integrate stays at zero for the zero system") {
    SimConfig cfg;
    cfg.t_end = 5.0;
    const ModelParams p = ModelParams::fromAlpha(1.0, 2.0, 0.05);
    const Trajectory traj = integrate(SignedNetwork(4), SignedNetwork(4), p, {}, cfg);
    CHECK(traj.converged);
    CHECK(traj.snapshots.back().weights().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("integrate reaches the special-case peace root from the bias start") {
    const int n = 10;
    const double mu = 0.5, beta = 1.0, L = 6.0, alpha = 0.03;
    const auto roots = test::special_case_roots(n, mu, beta, L, alpha, 12.0);
    REQUIRE(roots.size() == 3);
    const double x_peace = roots.front();
    CHECK(x_peace == doctest::Approx(0.61255).epsilon(2e-4)); // bisection oracle

    const SignedNetwork XD = test::special_case_bias(n, mu);
    SimConfig cfg;
    cfg.t_end = 200.0;
    const Trajectory traj = integrate(XD, XD, ModelParams::fromAlpha(beta, L, alpha), {}, cfg);
    REQUIRE(traj.converged);
    const SignedNetwork& eq = traj.snapshots.back();
    CHECK(eq(0, 1) == doctest::Approx(x_peace).epsilon(1e-4));
    CHECK(eq(0, n - 1) == doctest::Approx(-x_peace).epsilon(1e-4));

    // self-ties stay positive at equilibrium when the self-bias is positive
    for (int i = 0; i < n; ++i) CHECK(eq(i, i) > 0.0);
}

TEST_CASE("integrate reaches the exact war root from a high start") {
    const int n = 10;
    const double mu = 0.5, beta = 1.0, L = 6.0, alpha = 0.03;
    const auto roots = test::special_case_roots(n, mu, beta, L, alpha, 12.0);
    const double x_war = roots.back();

    Matrix high(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double si = i < n / 2 ? 1.0 : -1.0;
            const double sj = j < n / 2 ? 1.0 : -1.0;
            high(i, j) = 8.0 * si * sj;
        }
    SimConfig cfg;
    cfg.t_end = 200.0;
    const Trajectory traj = integrate(SignedNetwork::fromSymmetrized(high),
                                      test::special_case_bias(n, mu),
                                      ModelParams::fromAlpha(beta, L, alpha), {}, cfg);
    REQUIRE(traj.converged);
    CHECK(traj.snapshots.back()(0, 1) == doctest::Approx(x_war).epsilon(1e-4));
}

TEST_CASE("analytic fixed points are near-stationary within their regime") {
    const int n = 10;
    const double mu = 0.5, beta = 1.0, L = 6.0, alpha = 0.03;
    const SignedNetwork XD = test::special_case_bias(n, mu);
    const ModelParams params = ModelParams::fromAlpha(beta, L, alpha);
    const auto fp = special_fixed_points({n, mu, beta, L, alpha});
    REQUIRE(fp.x_peace.has_value());

    Matrix state(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double si = i < n / 2 ? 1.0 : -1.0;
            const double sj = j < n / 2 ? 1.0 : -1.0;
            state(i, j) = *fp.x_peace * si * sj;
        }
    const SignedNetwork X0 = SignedNetwork::fromSymmetrized(std::move(state));
    // linear-regime formula, so only approximately stationary
    CHECK(rhs_full(X0, XD, params, SignedNetwork(n)).weights().cwiseAbs().maxCoeff() < 1e-3);

    SimConfig cfg;
    cfg.t_end = 100.0;
    const Trajectory traj = integrate(X0, XD, params, {}, cfg);
    REQUIRE(traj.converged);
    CHECK((traj.snapshots.back().weights() - X0.weights()).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("integrate is deterministic and keeps states exactly symmetric") {
    const SignedNetwork XD = test::random_symmetric(8, 3, 0.8);
    const ModelParams p = ModelParams::fromAlpha(1.0, 4.0, 0.02);
    SimConfig cfg;
    cfg.t_end = 10.0;
    const Trajectory a = integrate(XD, XD, p, {}, cfg);
    const Trajectory b = integrate(XD, XD, p, {}, cfg);
    REQUIRE(a.times.size() == b.times.size());
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        CHECK(a.times[i] == b.times[i]);
        CHECK(a.tie_std_series[i] == b.tie_std_series[i]);
        CHECK(a.lambda1_series[i] == b.lambda1_series[i]);
    }
    const Matrix& last = a.snapshots.back().weights();
    CHECK((last - last.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.snapshots.back().weights() - b.snapshots.back().weights()).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("halving dt moves the converged equilibrium by less than conv_tol") {
    const SignedNetwork XD = test::special_case_bias(10, 0.5);
    const ModelParams p = ModelParams::fromAlpha(1.0, 6.0, 0.03);
    SimConfig coarse;
    coarse.t_end = 200.0;
    SimConfig fine = coarse;
    fine.dt = coarse.dt / 2.0;
    const Trajectory a = integrate(XD, XD, p, {}, coarse);
    const Trajectory b = integrate(XD, XD, p, {}, fine);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK((a.snapshots.back().weights() - b.snapshots.back().weights()).cwiseAbs().maxCoeff() <
          coarse.conv_tol);
}

TEST_CASE("integrate throws StepTooLarge on absurd steps") {
    const SignedNetwork XD = test::special_case_bias(10, 0.5);
    SimConfig cfg;
    cfg.dt = 1000.0;
    cfg.t_end = 10000.0;
    cfg.blowup_threshold = 10.0;
    CHECK_THROWS_AS(integrate(XD, XD, ModelParams::fromAlpha(1.0, 6.0, 0.03), {}, cfg),
                    StepTooLargeError);
}

TEST_CASE("overlapping impulses add") {
    const int n = 6;
    const SignedNetwork XD = test::random_symmetric(n, 9, 0.4);
    const ModelParams p = ModelParams::fromAlpha(1.0, 4.0, 0.01);
    Vector u = Vector::Zero(n);
    u(0) = 1.0;
    const SignedNetwork dir = SignedNetwork::fromSymmetrized(u * u.transpose());

    SimConfig cfg;
    cfg.t_end = 2.0;
    const std::vector<PerturbationImpulse> two{{dir, 1.0, 0.0, 2.5}, {dir, 0.5, 0.0, 2.5}};
    const std::vector<PerturbationImpulse> one{{dir, 1.5, 0.0, 2.5}};
    const Trajectory a = integrate(XD, XD, p, two, cfg);
    const Trajectory b = integrate(XD, XD, p, one, cfg);
    CHECK((a.snapshots.back().weights() - b.snapshots.back().weights()).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("find_equilibrium classifications") {
    const int n = 10;
    const SignedNetwork XD = test::special_case_bias(n, 0.5);
    SimConfig cfg;
    cfg.t_end = 300.0;

    // alpha above the peace-to-war threshold: two-faction war
    const EquilibriumReport war =
        find_equilibrium(XD, XD, ModelParams::fromAlpha(1.0, 6.0, 0.1), cfg);
    CHECK(war.classification == Classification::War);
    CHECK((war.leading_vector.array() > 0.0).any());
    CHECK((war.leading_vector.array() < 0.0).any());

    // same forcing with an all-positive bias: harmony
    Matrix pos(n, n);
    pos.setConstant(0.5);
    const SignedNetwork XDpos = SignedNetwork::fromSymmetrized(std::move(pos));
    const EquilibriumReport harmony =
        find_equilibrium(XDpos, XDpos, ModelParams::fromAlpha(1.0, 6.0, 0.1), cfg);
    CHECK(harmony.classification == Classification::Harmony);
    CHECK((harmony.leading_vector.array() > 0.0).all());

    // zero everything: peace at the origin
    const EquilibriumReport peace =
        find_equilibrium(SignedNetwork(n), SignedNetwork(n), ModelParams::fromAlpha(1.0, 6.0, 0.03),
                         cfg);
    CHECK(peace.classification == Classification::Peace);
    CHECK(peace.tie_std == 0.0);

    // horizon too short: not converged
    SimConfig tiny = cfg;
    tiny.t_end = 0.05;
    const EquilibriumReport nc =
        find_equilibrium(XD, XD, ModelParams::fromAlpha(1.0, 6.0, 0.03), tiny);
    CHECK(nc.classification == Classification::NotConverged);
}

TEST_CASE("pure balance blows up in finite time toward the predicted pattern") {
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 5.0;
    cfg.blowup_threshold = 1e6;

    // closed under the dynamics: positive rank-one start stays all-positive
    const int n = 6;
    Vector u = Vector::Constant(n, 1.0);
    u += 0.1 * Vector::LinSpaced(n, 0.0, 1.0);
    u.normalize();
    const PureBalanceResult pos =
        simulate_pure_balance(SignedNetwork::fromSymmetrized(u * u.transpose()), cfg);
    CHECK(pos.trajectory.diverged);
    CHECK(pos.trajectory.t_final < cfg.t_end);
    CHECK((pos.sign_pattern.weights().array() > 0.0).all());

    // random start: end-state signs follow the leading eigenvector of X(0)
    const SignedNetwork X0 = test::random_symmetric(20, 17);
    const Spectrum s = eigendecompose(X0);
    const PureBalanceResult res = simulate_pure_balance(X0, cfg);
    CHECK(res.trajectory.diverged);
    const Vector v = s.leadingVector();
    int mismatches = 0;
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j) {
            const double predicted = v(i) * v(j) > 0.0 ? 1.0 : -1.0;
            if (res.sign_pattern(i, j) != predicted) ++mismatches;
        }
    CHECK(mismatches == 0);
}

TEST_CASE("pure balance rejects degenerate leading eigenvalues") {
    Matrix twin = Matrix::Zero(4, 4);
    twin(0, 1) = twin(1, 0) = 1.0;
    twin(2, 3) = twin(3, 2) = 1.0;
    SimConfig cfg;
    CHECK_THROWS_AS(simulate_pure_balance(SignedNetwork::fromMatrix(twin), cfg),
                    DegenerateEigenvalueError);
}
