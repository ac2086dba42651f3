#include "signet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace signet {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Peace: return "Peace";
        case Classification::War: return "War";
        case Classification::Harmony: return "Harmony";
        case Classification::Diverged: return "Diverged";
        case Classification::NotConverged: return "NotConverged";
    }
    return "?";
}

namespace {

struct ImpulseView {
    const Matrix* direction;
    double magnitude;
    double t_on;
    double t_off;
};

// Sum of active boxcar impulses at time t; returns false when none is active.
bool impulse_sum(const std::vector<ImpulseView>& impulses, double t, Matrix& out) {
    bool any = false;
    for (const auto& imp : impulses) {
        if (t >= imp.t_on && t < imp.t_off) {
            if (!any) {
                out.noalias() = imp.magnitude * (*imp.direction);
                any = true;
            } else {
                out.noalias() += imp.magnitude * (*imp.direction);
            }
        }
    }
    return any;
}

class RhsEvaluator {
public:
    RhsEvaluator(const Matrix& bias, const ModelParams& params, Eigen::Index n)
        : bias_(bias), beta_(params.beta), L_(params.L), alpha_over_L_(params.alpha() / params.L),
          x2_(n, n) {}

    void operator()(const Matrix& x, const Matrix* xt, Matrix& out) {
        x2_.noalias() = x * x;
        out = -beta_ * (x - bias_) + L_ * (alpha_over_L_ * x2_).array().tanh().matrix();
        if (xt) out.noalias() += *xt;
    }

private:
    const Matrix& bias_;
    double beta_, L_, alpha_over_L_;
    Matrix x2_;
};

double lambda_max(const Matrix& x) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(x, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

} // namespace

SignedNetwork rhs_full(const SignedNetwork& X, const SignedNetwork& X_D,
                       const ModelParams& params, const SignedNetwork& X_T_now) {
    params.validate();
    if (X.size() != X_D.size() || X.size() != X_T_now.size())
        throw DimensionError("rhs_full: operand sizes differ");
    RhsEvaluator rhs(X_D.weights(), params, X.size());
    Matrix out(X.size(), X.size());
    const Matrix& xt = X_T_now.weights();
    rhs(X.weights(), &xt, out);
    return SignedNetwork::fromSymmetrized(std::move(out), X.labels());
}

SignedNetwork rhs_pure_balance(const SignedNetwork& X) {
    Matrix out = X.weights() * X.weights();
    return SignedNetwork::fromSymmetrized(std::move(out), X.labels());
}

Trajectory integrate(const SignedNetwork& X0, const SignedNetwork& X_D,
                     const ModelParams& params,
                     const std::vector<PerturbationImpulse>& impulses, const SimConfig& cfg) {
    params.validate();
    cfg.validate();
    if (X0.size() != X_D.size()) throw DimensionError("integrate: X0 and X_D sizes differ");

    std::vector<ImpulseView> views;
    views.reserve(impulses.size());
    for (const auto& imp : impulses) {
        imp.validate();
        if (imp.direction.size() != X0.size())
            throw DimensionError("integrate: impulse direction size differs");
        views.push_back({&imp.direction.weights(), imp.magnitude, imp.t_on, imp.t_off});
    }

    // Convergence may not be declared while an impulse boundary still lies
    // strictly ahead of t inside the horizon; the state would change again.
    std::vector<double> boundaries;
    for (const auto& imp : impulses) {
        if (imp.t_on < cfg.t_end) boundaries.push_back(imp.t_on);
        if (imp.t_off < cfg.t_end) boundaries.push_back(imp.t_off);
    }
    std::sort(boundaries.begin(), boundaries.end());
    auto convergence_allowed = [&](double t) {
        auto it = std::upper_bound(boundaries.begin(), boundaries.end(), t);
        return it == boundaries.end();
    };

    const Eigen::Index n = X0.size();
    RhsEvaluator rhs(X_D.weights(), params, n);
    Matrix x = X0.weights();
    Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n), xt(n, n);

    Trajectory traj;
    auto record = [&](double t, const Matrix& state) {
        traj.times.push_back(t);
        traj.tie_std_series.push_back(detail::tie_std(state));
        traj.lambda1_series.push_back(lambda_max(state));
    };
    std::vector<double> wanted = cfg.snapshot_times;
    std::sort(wanted.begin(), wanted.end());
    std::size_t next_snap = 0;
    auto snapshot = [&](double t, const Matrix& state) {
        traj.snapshot_times.push_back(t);
        traj.snapshots.push_back(SignedNetwork::fromSymmetrized(state, X0.labels()));
    };

    double t = 0.0;
    record(t, x);
    snapshot(t, x);
    while (next_snap < wanted.size() && wanted[next_snap] <= 0.0) ++next_snap;

    const long n_steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-12));
    const double half = cfg.dt / 2.0;
    bool recorded_final = false;

    for (long step = 0; step < n_steps; ++step) {
        const Matrix* xt1 = impulse_sum(views, t, xt) ? &xt : nullptr;
        rhs(x, xt1, k1);

        if (convergence_allowed(t) && k1.cwiseAbs().maxCoeff() < cfg.conv_tol) {
            traj.converged = true;
            break;
        }

        stage.noalias() = x + half * k1;
        const Matrix* xt2 = impulse_sum(views, t + half, xt) ? &xt : nullptr;
        rhs(stage, xt2, k2);
        stage.noalias() = x + half * k2;
        rhs(stage, xt2, k3);
        stage.noalias() = x + cfg.dt * k3;
        const Matrix* xt4 = impulse_sum(views, t + cfg.dt, xt) ? &xt : nullptr;
        rhs(stage, xt4, k4);

        stage.noalias() = x + (cfg.dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        stage = ((stage + stage.transpose()) * 0.5).eval();

        const double delta = (stage - x).cwiseAbs().maxCoeff();
        if (!stage.allFinite() || delta > cfg.blowup_threshold / 2.0)
            throw StepTooLargeError("integrate: step at t=" + std::to_string(t) +
                                    " moved an entry by more than blowup_threshold/2");
        x.swap(stage);
        t += cfg.dt;

        const bool hit_blowup = x.cwiseAbs().maxCoeff() > cfg.blowup_threshold;
        const bool record_now = ((step + 1) % cfg.record_stride == 0) || hit_blowup;
        if (record_now) record(t, x);
        if (next_snap < wanted.size() && t >= wanted[next_snap]) {
            if (!record_now) record(t, x);
            snapshot(t, x);
            while (next_snap < wanted.size() && wanted[next_snap] <= t) ++next_snap;
        }
        if (hit_blowup) {
            traj.diverged = true;
            recorded_final = record_now;
            break;
        }
        recorded_final = record_now;
    }

    traj.t_final = t;
    if (!recorded_final && (traj.times.empty() || traj.times.back() < t)) record(t, x);
    if (traj.snapshot_times.empty() || traj.snapshot_times.back() < t) snapshot(t, x);
    return traj;
}

Classification classify_state(const SignedNetwork& state, const SignedNetwork& X_D,
                              bool converged, bool diverged, double war_factor) {
    if (diverged) return Classification::Diverged;
    if (!converged) return Classification::NotConverged;

    const Spectrum s = eigendecompose(state);
    const Vector v1 = s.leadingVector();
    const bool uniform_positive = (v1.array() > 0.0).all();
    const bool mixed_signs = (v1.array() > 0.0).any() && (v1.array() < 0.0).any();

    bool all_offdiag_positive = true;
    for (int i = 0; i < state.size() && all_offdiag_positive; ++i)
        for (int j = i + 1; j < state.size(); ++j)
            if (!(state(i, j) > 0.0)) {
                all_offdiag_positive = false;
                break;
            }

    if (all_offdiag_positive && uniform_positive) return Classification::Harmony;
    if (mixed_signs && tie_std(state) > war_factor * tie_std(X_D)) return Classification::War;
    return Classification::Peace;
}

EquilibriumReport find_equilibrium(const SignedNetwork& X0, const SignedNetwork& X_D,
                                   const ModelParams& params, const SimConfig& cfg,
                                   double war_factor) {
    Trajectory traj = integrate(X0, X_D, params, {}, cfg);
    const SignedNetwork& state = traj.snapshots.back();

    EquilibriumReport rep{state, Classification::NotConverged, traj.t_final, {}, {}, tie_std(state)};
    const Spectrum s = eigendecompose(state);
    rep.spectrum = s.eigenvalues;
    rep.leading_vector = s.leadingVector();
    rep.classification =
        classify_state(state, X_D, traj.converged, traj.diverged, war_factor);
    return rep;
}

PureBalanceResult simulate_pure_balance(const SignedNetwork& X0, const SimConfig& cfg) {
    cfg.validate();
    {
        const Spectrum s = eigendecompose(X0);
        if (X0.size() >= 2 && std::abs(s.eigenvalues(0) - s.eigenvalues(1)) < 1e-8)
            throw DegenerateEigenvalueError(
                "simulate_pure_balance: leading eigenvalue of X(0) is degenerate");
    }

    const Eigen::Index n = X0.size();
    Matrix x = X0.weights();
    Matrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), stage(n, n), trial(n, n);

    auto rk4 = [&](const Matrix& from, double h, Matrix& out) {
        k1.noalias() = from * from;
        stage.noalias() = from + (h / 2.0) * k1;
        k2.noalias() = stage * stage;
        stage.noalias() = from + (h / 2.0) * k2;
        k3.noalias() = stage * stage;
        stage.noalias() = from + h * k3;
        k4.noalias() = stage * stage;
        out.noalias() = from + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out = ((out + out.transpose()) * 0.5).eval();
    };

    Trajectory traj;
    auto record = [&](double t, const Matrix& state) {
        traj.times.push_back(t);
        traj.tie_std_series.push_back(detail::tie_std(state));
        traj.lambda1_series.push_back(lambda_max(state));
    };

    double t = 0.0;
    long step = 0;
    record(t, x);
    traj.snapshot_times.push_back(t);
    traj.snapshots.push_back(X0);

    while (t < cfg.t_end) {
        // Near the finite-time singularity a full step overshoots the pole;
        // halve locally until the move is finite and bounded.
        double h = cfg.dt;
        bool ok = false;
        for (int tries = 0; tries < 60; ++tries) {
            rk4(x, h, trial);
            if (trial.allFinite() &&
                (trial - x).cwiseAbs().maxCoeff() <= cfg.blowup_threshold / 2.0) {
                ok = true;
                break;
            }
            h /= 2.0;
        }
        if (!ok) {
            traj.diverged = true;
            break;
        }
        x.swap(trial);
        t += h;
        ++step;
        const bool hit = x.cwiseAbs().maxCoeff() > cfg.blowup_threshold;
        if (step % cfg.record_stride == 0 || hit) record(t, x);
        if (hit) {
            traj.diverged = true;
            break;
        }
    }

    traj.t_final = t;
    if (traj.times.back() < t) record(t, x);
    traj.snapshot_times.push_back(t);
    traj.snapshots.push_back(SignedNetwork::fromSymmetrized(x, X0.labels()));

    Matrix signs(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            signs(i, j) = x(i, j) > 0.0 ? 1.0 : (x(i, j) < 0.0 ? -1.0 : 0.0);

    return PureBalanceResult{std::move(traj),
                             SignedNetwork::fromSymmetrized(std::move(signs), X0.labels())};
}

} // namespace signet
