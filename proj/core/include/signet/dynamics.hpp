#pragma once

#include <string>
#include <vector>

#include "signet/network.hpp"
#include "signet/spectral.hpp"

namespace signet {

enum class Classification { Peace, War, Harmony, Diverged, NotConverged };

std::string to_string(Classification c);

/// Converged (or terminal) state with its spectral summary.
struct EquilibriumReport {
    SignedNetwork state;
    Classification classification = Classification::NotConverged;
    double t_converged = 0.0;
    Vector spectrum;        ///< eigenvalues descending
    Vector leading_vector;  ///< unit leading eigenvector, sign convention applied
    double tie_std = 0.0;
};

/// Full model right-hand side:
///   dX/dt = -beta (X - X_D) + L tanh((alpha/L) X^2) + X_T
/// where X^2 is the matrix square and tanh acts elementwise.
SignedNetwork rhs_full(const SignedNetwork& X, const SignedNetwork& X_D,
                       const ModelParams& params, const SignedNetwork& X_T_now);

/// Pure structural balance right-hand side dX/dt = X^2.
SignedNetwork rhs_pure_balance(const SignedNetwork& X);

/// Classical fixed-step RK4 integration of the full model with boxcar
/// impulses (overlapping impulses sum). The state is re-symmetrized after
/// every step. Stops early once max |dX/dt| < conv_tol, but never while an
/// impulse boundary still lies ahead inside the horizon. Declares divergence
/// when any |X_ij| exceeds cfg.blowup_threshold; throws StepTooLargeError if
/// a single step moves an entry by more than blowup_threshold/2.
Trajectory integrate(const SignedNetwork& X0, const SignedNetwork& X_D,
                     const ModelParams& params,
                     const std::vector<PerturbationImpulse>& impulses,
                     const SimConfig& cfg);

/// Classification rule shared by find_equilibrium and the CLI:
///  - Diverged on blow-up,
///  - NotConverged when integration hit the horizon,
///  - Harmony when every off-diagonal tie is positive and the leading
///    eigenvector has uniform sign,
///  - War when the leading eigenvector mixes signs and
///    tie_std(state) > war_factor * tie_std(X_D),
///  - Peace otherwise.
Classification classify_state(const SignedNetwork& state, const SignedNetwork& X_D,
                              bool converged, bool diverged, double war_factor = 3.0);

/// Integrates to convergence and classifies the endpoint via classify_state.
EquilibriumReport find_equilibrium(const SignedNetwork& X0, const SignedNetwork& X_D,
                                   const ModelParams& params, const SimConfig& cfg,
                                   double war_factor = 3.0);

struct PureBalanceResult {
    Trajectory trajectory;
    SignedNetwork sign_pattern; ///< sign(X) at the last finite step
};

/// Integrates dX/dt = X^2 until |X| reaches cfg.blowup_threshold. Near the
/// finite-time singularity the step is halved locally as needed so the last
/// recorded state actually sits at the threshold. Throws
/// DegenerateEigenvalueError when |lambda1 - lambda2| of X0 is below 1e-8
/// (the end state is then ill-defined).
PureBalanceResult simulate_pure_balance(const SignedNetwork& X0, const SimConfig& cfg);

} // namespace signet
