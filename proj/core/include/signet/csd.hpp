#pragma once

#include <vector>

#include "signet/dynamics.hpp"
#include "signet/network.hpp"

namespace signet {

/// One perturb-and-relax measurement.
struct CsdPoint {
    double magnitude = 0.0; ///< impulse energy sigma
    double d = 0.0;         ///< eigenvalue distance to the bifurcation (see csd_experiment)
    double r = 0.0;         ///< recovery rate, valid when converged
    bool converged = false; ///< false when the impulse destabilized the system
};

/// Least-squares slope of log|tie_std(t) - tie_std_eq| against t, negated.
/// The window runs from t_release (plus `skip`, to drop fast non-modal
/// relaxation) until the residual first falls below 5% of its value at
/// t_release; tie_std_eq is the trajectory's final value. Throws
/// DidNotRecoverError when the residual never reaches the 5% mark.
double recovery_rate(const Trajectory& traj, double t_release, double skip = 0.0);

/// Critical-slowing-down experiment. Starting from the peace equilibrium of
/// X_D, applies each magnitude as a sustained impulse sigma * s1 s1^T (s1 the
/// unit leading eigenvector of X_D) and measures the relaxation rate of the
/// tie-std transient toward the shifted equilibrium. Magnitudes are processed
/// in ascending order, each run warm-started from the previous shifted
/// equilibrium so the transient stays in the linear neighborhood. d is the
/// distance of the modified bias eigenvalue from its critical value,
///   d = beta/(4 alpha) - (lambda_D1 + sigma/beta),
/// negative exactly when the impulse pushes past the threshold; such points
/// come back with converged = false and no rate. Zero magnitudes are omitted.
std::vector<CsdPoint> csd_experiment(const SignedNetwork& X_D, const ModelParams& params,
                                     std::vector<double> magnitudes, const SimConfig& cfg);

struct PowerLawFit {
    double exponent = 0.0;      ///< slope of log r vs log d
    double prefactor_log = 0.0; ///< intercept, natural log
};

/// Fits log r = exponent * log d + prefactor_log over the converged points
/// with d > 0. Throws InsufficientPointsError with fewer than 5 such points.
PowerLawFit fit_power_law(const std::vector<CsdPoint>& points);

/// Spearman rank correlation. Exposed for experiment summaries and tests.
double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace signet
