#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signet/dynamics.hpp"
#include "signet/network.hpp"

namespace signet {

/// Two equal, opposed factions; every dyadic bias is +/- mu.
struct SpecialCaseParams {
    int n = 2;
    double mu = 0.5;
    double beta = 1.0;
    double L = 1.0;
    double alpha = 0.1;

    void validate() const;
};

/// Closed-form fixed points of the reduced scalar system. x_peace/x_unstable
/// come from the linear-regime approximation and are absent when the
/// discriminant beta(beta - 4 N alpha mu) is negative; x_war comes from the
/// plateau approximation and is always reported. Both approximations can
/// disagree with the exact tanh system near the shoulder region; the
/// simulation (or a scalar bisection) is the cross-check.
struct SpecialFixedPoints {
    std::optional<double> x_peace;
    std::optional<double> x_unstable;
    double x_war = 0.0;
};

SpecialFixedPoints special_fixed_points(const SpecialCaseParams& p);

struct CriticalAlphas {
    double peace_to_war = 0.0; ///< beta / (4 N mu)
    double war_to_peace = 0.0; ///< L / (N (mu + L/beta)^2)
};

CriticalAlphas special_critical_alphas(const SpecialCaseParams& p);

/// alpha* = beta / (4 lambda_D1). Throws NonPositiveEigenvalueError when
/// lambda_D1 <= 0 (the mechanism needs a positive leading bias eigenvalue).
double alpha_peace_to_war(double beta, double lambda_d1);

/// alpha* = N L / (lambda_D1 + N L / beta)^2. Plateau-approximation estimate;
/// the paper's own caveat applies (less accurate than the peace-to-war one).
double alpha_war_to_peace(double beta, double L, int n, double lambda_d1);

/// Leading eigenvalue of the peace state,
///   lambda_P = (beta - sqrt(beta^2 - 4 alpha beta lambda_D1)) / (2 alpha),
/// evaluated in the cancellation-free form 2 beta lambda_D1 / (beta + sqrt(disc))
/// so alpha -> 0 continuously returns lambda_D1. Throws BeyondBifurcationError
/// when the discriminant is negative.
double lambda_peace(double alpha, double beta, double lambda_d1);

/// Lowest eigenvalue of the unstable state (same expression, + root).
double lambda_unstable(double alpha, double beta, double lambda_d1);

/// War-state leading eigenvalue bound lambda_D1 + L N / beta.
double lambda_war(double lambda_d1, double L, int n, double beta);

/// Critical modified-bias eigenvalue beta / (4 alpha).
double critical_lambda_tilde(double alpha, double beta);

/// Linearized mode growth rates nu_i = -beta + 2 alpha lambda_0i.
std::vector<double> mode_growth_rates(double alpha, double beta,
                                      const std::vector<double>& fixed_point_eigenvalues);

enum class Regime { MonostablePeace, Bistable, MonostableWar };

std::string to_string(Regime r);

struct RegimeReport {
    Regime regime = Regime::MonostablePeace;
    double alpha_peace_to_war = 0.0;
    double alpha_war_to_peace = 0.0;
};

/// Places params.alpha() against the two critical values.
RegimeReport classify_regime(const ModelParams& params, double lambda_d1, int n);

/// One-dimensional reduced eigenvalue dynamics d(lambda1)/dt used for
/// bifurcation diagrams: the transition form -beta(l - l_D1) + alpha l^2,
/// the plateau form -beta(l - l_D1) + L N, or a smooth tanh interpolation
/// between them with plateau scale L N.
enum class EigenRhsForm { Transition, Plateau, Smooth };

double eigen_rhs(double lambda1, double lambda_d1, const ModelParams& params,
                 EigenRhsForm form, int n);

enum class SweepDirection { Up, Down };

struct SweepPoint {
    double alpha = 0.0;
    EquilibriumReport report;
};

/// Warm-started equilibrium sweep over an alpha grid (ascending for Up,
/// descending for Down; the grid is sorted accordingly). Each point starts
/// from the previous equilibrium state; the first point starts from
/// `start` when given, else from X_D. NotConverged points are recorded,
/// not fatal.
std::vector<SweepPoint> sweep_alpha(const SignedNetwork& X_D, const ModelParams& params_base,
                                    std::vector<double> alpha_grid, const SimConfig& cfg,
                                    SweepDirection direction,
                                    const std::optional<SignedNetwork>& start = std::nullopt);

/// Largest tie-std discontinuity between adjacent grid points; ties broken
/// toward lower alpha. Empirical critical alpha is taken as the cell midpoint.
struct JumpLocation {
    double alpha_before = 0.0;
    double alpha_after = 0.0;
    double alpha_mid = 0.0;
    double delta_tie_std = 0.0;
};

std::optional<JumpLocation> locate_jump(const std::vector<SweepPoint>& points);

} // namespace signet
