#include "signet/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signet/bifurcation.hpp"
#include "signet/parallel.hpp"
#include "signet/rng.hpp"
#include "signet/spectral.hpp"

namespace signet {

void PerturbationScheme::validate() const {
    if (!(sigma > 0.0)) throw DomainError("scheme sigma must be positive");
    if (n_samples < 1) throw DomainError("scheme needs n_samples >= 1");
    if (sparsity < 1) throw DomainError("scheme needs sparsity >= 1");
    if (top_k < 1) throw DomainError("scheme needs top_k >= 1");
}

SignedNetwork modified_bias(const SignedNetwork& X_D, const SignedNetwork& X_T, double beta) {
    if (X_D.size() != X_T.size()) throw DimensionError("modified_bias: operand sizes differ");
    if (!(beta > 0.0)) throw DomainError("modified_bias: beta must be positive");
    Matrix m = X_D.weights() + X_T.weights() / beta;
    return SignedNetwork::fromSymmetrized(std::move(m), X_D.labels());
}

MinEnergyResult min_energy_perturbation(const SignedNetwork& X_D, double alpha, double beta) {
    const double threshold = critical_lambda_tilde(alpha, beta);
    const Spectrum s = eigendecompose(X_D);
    const double lambda_d1 = s.leading();
    if (lambda_d1 >= threshold)
        throw AlreadyUnstableError("min_energy_perturbation: lambda_D1 >= beta/(4 alpha)");
    const Vector v = s.leadingVector();
    Matrix dir = v * v.transpose();
    return MinEnergyResult{SignedNetwork::fromSymmetrized(std::move(dir), X_D.labels()),
                           beta * (threshold - lambda_d1)};
}

namespace {

Matrix sign_outer(const Vector& v) {
    Vector u(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) u(i) = v(i) < 0.0 ? -1.0 : 1.0;
    return u * u.transpose();
}

} // namespace

std::vector<PerturbationResult> optimize_direction(const SignedNetwork& X_D, double alpha,
                                                   double beta, const PerturbationScheme& scheme,
                                                   int jobs) {
    scheme.validate();
    const double threshold = critical_lambda_tilde(alpha, beta);
    const double eps = scheme.epsilon >= 0.0 ? scheme.epsilon : 0.05 * threshold;
    const int n = X_D.size();
    const int n_dyads = n * (n - 1) / 2;
    const int k_dyads = std::min(scheme.sparsity, n_dyads);

    struct Scored {
        double objective = std::numeric_limits<double>::infinity();
        int index = -1;
        double error = 0.0;
    };
    std::vector<Scored> scored(static_cast<std::size_t>(scheme.n_samples));

    auto build_candidate = [&](int index, Matrix& out) {
        auto rng = make_rng(derive_seed(scheme.seed, static_cast<std::uint64_t>(index)));
        std::uniform_int_distribution<int> pick(0, n_dyads - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<int> chosen;
        chosen.reserve(static_cast<std::size_t>(k_dyads));
        while (static_cast<int>(chosen.size()) < k_dyads) {
            const int d = pick(rng);
            if (std::find(chosen.begin(), chosen.end(), d) == chosen.end()) chosen.push_back(d);
        }
        out.setZero(n, n);
        for (int d : chosen) {
            // dyad index -> (i, j), i < j, row-major over the upper triangle
            int i = 0, rem = d;
            while (rem >= n - 1 - i) {
                rem -= n - 1 - i;
                ++i;
            }
            const int j = i + 1 + rem;
            const double v = coin(rng) ? 1.0 : -1.0;
            out(i, j) = v;
            out(j, i) = v;
        }
        out *= scheme.sigma / out.norm();
    };

    parallel_for(scheme.n_samples, jobs, [&](int index) {
        Matrix xt(n, n);
        build_candidate(index, xt);
        Matrix xtilde = X_D.weights() + xt / beta;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(xtilde);
        const double lambda_tilde = solver.eigenvalues().maxCoeff();
        const double err = threshold - lambda_tilde;
        double objective = std::abs(err);
        if (scheme.kind != SchemeKind::EnergyMin) {
            const SignedNetwork xt_net = SignedNetwork::fromSymmetrized(std::move(xtilde));
            double phi1 = 0.0;
            try {
                phi1 = eigenvector_polarization(xt_net, 0);
            } catch (const AllZeroNetworkError&) {
                return; // degenerate candidate, skipped
            }
            if (scheme.kind == SchemeKind::Polarizing) {
                // the faction-promoting term is meaningful only for positive
                // polarization; candidates without any faction structure are out
                if (phi1 <= 0.0) return;
                objective += eps / phi1;
            } else {
                objective += eps * phi1;
            }
        }
        scored[static_cast<std::size_t>(index)] = Scored{objective, index, err};
    });

    std::vector<Scored> kept;
    kept.reserve(scored.size());
    for (const auto& s : scored)
        if (s.index >= 0) kept.push_back(s);
    std::sort(kept.begin(), kept.end(), [](const Scored& a, const Scored& b) {
        if (a.objective != b.objective) return a.objective < b.objective;
        return a.index < b.index;
    });

    // the candidate space is finite, so repeated draws are common; report
    // distinct directions only
    std::vector<PerturbationResult> results;
    Matrix xt(n, n);
    for (const auto& s : kept) {
        if (results.size() >= static_cast<std::size_t>(scheme.top_k)) break;
        build_candidate(s.index, xt);
        bool duplicate = false;
        for (const auto& prev : results)
            if ((prev.direction.weights() - xt).cwiseAbs().maxCoeff() == 0.0) {
                duplicate = true;
                break;
            }
        if (duplicate) continue;
        Matrix xtilde = X_D.weights() + xt / beta;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(xtilde);
        Vector lead = solver.eigenvectors().col(n - 1);
        results.push_back(PerturbationResult{
            SignedNetwork::fromSymmetrized(xt, X_D.labels()), s.objective, s.error,
            s.error <= 0.0, SignedNetwork::fromSymmetrized(sign_outer(lead), X_D.labels())});
    }
    return results;
}

SignedNetwork predict_war_state(const SignedNetwork& X_D, double L, double beta) {
    if (!(L > 0.0) || !(beta > 0.0)) throw DomainError("predict_war_state: L, beta must be positive");
    const Spectrum s = eigendecompose(X_D);
    if (X_D.size() >= 2 && std::abs(s.eigenvalues(0) - s.eigenvalues(1)) < 1e-8)
        throw DegenerateEigenvalueError("predict_war_state: leading eigenvalue not simple");
    Matrix m = X_D.weights() + (L / beta) * sign_outer(s.leadingVector());
    return SignedNetwork::fromSymmetrized(std::move(m), X_D.labels());
}

SignedNetwork predict_high_state(const SignedNetwork& X_D, const SignedNetwork& X_T, double alpha,
                                 double beta, double L) {
    if (!(L > 0.0)) throw DomainError("predict_high_state: L must be positive");
    const SignedNetwork xtilde = modified_bias(X_D, X_T, beta);
    const Spectrum s = eigendecompose(xtilde);
    if (s.leading() < critical_lambda_tilde(alpha, beta))
        throw NotDestabilizingError("predict_high_state: perturbation stays below threshold");
    Matrix m = (L / beta) * sign_outer(s.leadingVector());
    return SignedNetwork::fromSymmetrized(std::move(m), X_D.labels());
}

EdgeSensitivity edge_sensitivity_scan(const SignedNetwork& X_D, double delta, int jobs) {
    if (delta == 0.0) throw DomainError("edge_sensitivity_scan: delta must be nonzero");
    const int n = X_D.size();

    const Spectrum base = eigendecompose(X_D);
    const double lambda_base = base.leading();
    double phi_base = 0.0;
    try {
        phi_base = eigenvector_polarization(X_D, 0);
    } catch (const AllZeroNetworkError&) {
        phi_base = 0.0;
    }

    std::vector<std::pair<int, int>> dyads;
    dyads.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dyads.emplace_back(i, j);

    Matrix dl = Matrix::Zero(n, n), dp = Matrix::Zero(n, n);
    parallel_for(static_cast<int>(dyads.size()), jobs, [&](int idx) {
        const auto [i, j] = dyads[static_cast<std::size_t>(idx)];
        Matrix shifted = X_D.weights();
        shifted(i, j) += delta;
        shifted(j, i) += delta;
        const SignedNetwork net = SignedNetwork::fromSymmetrized(std::move(shifted));
        const Spectrum s = eigendecompose(net);
        dl(i, j) = dl(j, i) = s.leading() - lambda_base;
        dp(i, j) = dp(j, i) = eigenvector_polarization(net, 0) - phi_base;
    });
    return EdgeSensitivity{SignedNetwork::fromSymmetrized(std::move(dl), X_D.labels()),
                           SignedNetwork::fromSymmetrized(std::move(dp), X_D.labels())};
}

} // namespace signet
