#include "signet/bifurcation.hpp"

#include <algorithm>
#include <cmath>

namespace signet {

void SpecialCaseParams::validate() const {
    if (n < 2) throw DomainError("special case needs N >= 2");
    if (!(mu > 0.0)) throw DomainError("mu must be positive");
    if (!(beta > 0.0) || !(L > 0.0) || !(alpha > 0.0))
        throw DomainError("beta, L, alpha must be positive");
}

SpecialFixedPoints special_fixed_points(const SpecialCaseParams& p) {
    p.validate();
    SpecialFixedPoints fp;
    fp.x_war = p.L / p.beta + p.mu;
    const double disc = p.beta * (p.beta - 4.0 * p.n * p.alpha * p.mu);
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        fp.x_peace = (p.beta - root) / (2.0 * p.n * p.alpha);
        fp.x_unstable = (p.beta + root) / (2.0 * p.n * p.alpha);
    }
    return fp;
}

CriticalAlphas special_critical_alphas(const SpecialCaseParams& p) {
    p.validate();
    const double ratio = p.mu + p.L / p.beta;
    return {p.beta / (4.0 * p.n * p.mu), p.L / (p.n * ratio * ratio)};
}

double alpha_peace_to_war(double beta, double lambda_d1) {
    if (!(lambda_d1 > 0.0))
        throw NonPositiveEigenvalueError(
            "alpha_peace_to_war: leading bias eigenvalue must be positive");
    return beta / (4.0 * lambda_d1);
}

double alpha_war_to_peace(double beta, double L, int n, double lambda_d1) {
    const double denom = lambda_d1 + n * L / beta;
    if (!(denom > 0.0)) throw DomainError("alpha_war_to_peace: lambda_D1 + NL/beta must be positive");
    return n * L / (denom * denom);
}

double lambda_peace(double alpha, double beta, double lambda_d1) {
    if (alpha < 0.0) throw DomainError("lambda_peace: alpha must be nonnegative");
    const double disc = beta * beta - 4.0 * alpha * beta * lambda_d1;
    if (disc < 0.0)
        throw BeyondBifurcationError("lambda_peace: past the saddle-node point");
    // (beta - sqrt(disc)) / (2 alpha) rewritten to avoid cancellation and to
    // extend continuously to alpha = 0 where it equals lambda_D1.
    return 2.0 * beta * lambda_d1 / (beta + std::sqrt(disc));
}

double lambda_unstable(double alpha, double beta, double lambda_d1) {
    if (!(alpha > 0.0)) throw DomainError("lambda_unstable: alpha must be positive");
    const double disc = beta * beta - 4.0 * alpha * beta * lambda_d1;
    if (disc < 0.0)
        throw BeyondBifurcationError("lambda_unstable: past the saddle-node point");
    return (beta + std::sqrt(disc)) / (2.0 * alpha);
}

double lambda_war(double lambda_d1, double L, int n, double beta) {
    if (!(L > 0.0) || !(beta > 0.0)) throw DomainError("lambda_war: L, beta must be positive");
    return lambda_d1 + L * n / beta;
}

double critical_lambda_tilde(double alpha, double beta) {
    if (!(alpha > 0.0)) throw DomainError("critical_lambda_tilde: alpha must be positive");
    return beta / (4.0 * alpha);
}

std::vector<double> mode_growth_rates(double alpha, double beta,
                                      const std::vector<double>& fixed_point_eigenvalues) {
    std::vector<double> rates;
    rates.reserve(fixed_point_eigenvalues.size());
    for (double lam : fixed_point_eigenvalues) rates.push_back(-beta + 2.0 * alpha * lam);
    return rates;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::MonostablePeace: return "MonostablePeace";
        case Regime::Bistable: return "Bistable";
        case Regime::MonostableWar: return "MonostableWar";
    }
    return "?";
}

RegimeReport classify_regime(const ModelParams& params, double lambda_d1, int n) {
    params.validate();
    RegimeReport rep;
    rep.alpha_peace_to_war = alpha_peace_to_war(params.beta, lambda_d1);
    rep.alpha_war_to_peace = alpha_war_to_peace(params.beta, params.L, n, lambda_d1);
    const double a = params.alpha();
    if (a < rep.alpha_war_to_peace)
        rep.regime = Regime::MonostablePeace;
    else if (a < rep.alpha_peace_to_war)
        rep.regime = Regime::Bistable;
    else
        rep.regime = Regime::MonostableWar;
    return rep;
}

double eigen_rhs(double lambda1, double lambda_d1, const ModelParams& params, EigenRhsForm form,
                 int n) {
    params.validate();
    const double restoring = -params.beta * (lambda1 - lambda_d1);
    const double plateau = params.L * n;
    switch (form) {
        case EigenRhsForm::Transition:
            return restoring + params.alpha() * lambda1 * lambda1;
        case EigenRhsForm::Plateau:
            return restoring + plateau;
        case EigenRhsForm::Smooth:
            return restoring + plateau * std::tanh(params.alpha() * lambda1 * lambda1 / plateau);
    }
    throw DomainError("eigen_rhs: unknown form");
}

std::vector<SweepPoint> sweep_alpha(const SignedNetwork& X_D, const ModelParams& params_base,
                                    std::vector<double> alpha_grid, const SimConfig& cfg,
                                    SweepDirection direction,
                                    const std::optional<SignedNetwork>& start) {
    if (alpha_grid.empty()) throw DomainError("sweep_alpha: empty alpha grid");
    std::sort(alpha_grid.begin(), alpha_grid.end());
    if (direction == SweepDirection::Down)
        std::reverse(alpha_grid.begin(), alpha_grid.end());

    std::vector<SweepPoint> points;
    points.reserve(alpha_grid.size());
    SignedNetwork state = start ? *start : X_D;
    for (double alpha : alpha_grid) {
        const ModelParams params = ModelParams::fromAlpha(params_base.beta, params_base.L, alpha);
        EquilibriumReport rep = find_equilibrium(state, X_D, params, cfg);
        state = rep.state; // warm start, even when not converged
        points.push_back(SweepPoint{alpha, std::move(rep)});
    }
    return points;
}

std::optional<JumpLocation> locate_jump(const std::vector<SweepPoint>& points) {
    if (points.size() < 2) return std::nullopt;
    JumpLocation best;
    bool found = false;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double lo_alpha = std::min(points[i].alpha, points[i + 1].alpha);
        const double hi_alpha = std::max(points[i].alpha, points[i + 1].alpha);
        const double d = std::abs(points[i + 1].report.tie_std - points[i].report.tie_std);
        const bool better =
            !found || d > best.delta_tie_std ||
            (d == best.delta_tie_std && lo_alpha < best.alpha_before);
        if (better) {
            best = JumpLocation{lo_alpha, hi_alpha, 0.5 * (lo_alpha + hi_alpha), d};
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return best;
}

} // namespace signet
