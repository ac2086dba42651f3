#pragma once

#include <cstdint>
#include <vector>

#include "signet/network.hpp"

namespace signet {

enum class SchemeKind { EnergyMin, Polarizing, Harmonizing };

/// Random-search settings for optimize_direction.
struct PerturbationScheme {
    SchemeKind kind = SchemeKind::EnergyMin;
    double epsilon = -1.0;  ///< polarization weight; < 0 selects 0.05 * lambda_tilde_star
    double sigma = 1.0;     ///< energy budget ||X_T||_F
    int n_samples = 100000; ///< random candidates
    int sparsity = 4;       ///< max nonzero dyads per candidate
    std::uint64_t seed = 1;
    int top_k = 3;          ///< results returned

    void validate() const;
};

struct PerturbationResult {
    SignedNetwork direction;       ///< candidate X_T, ||.||_F = sigma
    double objective = 0.0;        ///< scheme objective value
    double error = 0.0;            ///< E = lambda_tilde_star - lambda_tilde_D1
    bool destabilizes = false;     ///< E <= 0
    SignedNetwork predicted_final; ///< sign-pattern u u^T of the predicted high state
};

/// X_D + X_T / beta: folds a sustained boxcar impulse into an effective bias.
SignedNetwork modified_bias(const SignedNetwork& X_D, const SignedNetwork& X_T, double beta);

struct MinEnergyResult {
    SignedNetwork direction; ///< s_D1 s_D1^T, unit Frobenius norm
    double sigma_min = 0.0;  ///< beta * (beta/(4 alpha) - lambda_D1)
};

/// Minimum-energy destabilizing perturbation, along the leading eigenvector
/// of X_D. Throws AlreadyUnstableError when lambda_D1 >= beta/(4 alpha).
MinEnergyResult min_energy_perturbation(const SignedNetwork& X_D, double alpha, double beta);

/// Random search over sparse +/-1 dyad patterns normalized to ||.||_F = sigma.
/// Objective: |E| for EnergyMin, |E| + eps/phi1 for Polarizing, |E| + eps*phi1
/// for Harmonizing, with phi1 the leading eigenvector polarization of the
/// modified bias matrix. Returns the top_k best candidates (ties broken by
/// candidate index). Deterministic for fixed seed regardless of jobs.
std::vector<PerturbationResult> optimize_direction(const SignedNetwork& X_D, double alpha,
                                                   double beta, const PerturbationScheme& scheme,
                                                   int jobs = 1);

/// Plateau-approximation war state X_D + (L/beta) u u^T, u = sign(s_D1).
/// Throws DegenerateEigenvalueError when the leading eigenvalue is not simple.
SignedNetwork predict_war_state(const SignedNetwork& X_D, double L, double beta);

/// Post-destabilization high state (L/beta) u u^T with u = sign of the
/// leading eigenvector of the modified bias matrix. Throws
/// NotDestabilizingError when lambda_tilde_D1 < beta/(4 alpha).
SignedNetwork predict_high_state(const SignedNetwork& X_D, const SignedNetwork& X_T,
                                 double alpha, double beta, double L);

struct EdgeSensitivity {
    SignedNetwork d_lambda1; ///< change in leading eigenvalue per dyad
    SignedNetwork d_phi1;    ///< change in leading eigenvector polarization per dyad
};

/// Shifts each dyad (i<j) of X_D by delta (symmetrically), recomputes
/// lambda1 and phi1, and stores the differences. The base matrix is never
/// modified. phi1 of an all-zero base is taken as 0 so the scan stays total.
/// Dyads are independent and evaluated on up to `jobs` threads.
EdgeSensitivity edge_sensitivity_scan(const SignedNetwork& X_D, double delta, int jobs = 1);

} // namespace signet
