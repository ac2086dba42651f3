#include "signet/csd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/bifurcation.hpp"
#include "signet/spectral.hpp"

namespace signet {

double recovery_rate(const Trajectory& traj, double t_release, double skip) {
    if (traj.times.size() < 3) throw DomainError("recovery_rate: trajectory too short");
    const double sigma_eq = traj.tie_std_series.back();

    std::size_t i_release = 0;
    while (i_release < traj.times.size() && traj.times[i_release] < t_release) ++i_release;
    if (i_release >= traj.times.size())
        throw DomainError("recovery_rate: t_release beyond trajectory");

    const double initial = std::abs(traj.tie_std_series[i_release] - sigma_eq);
    if (initial == 0.0) throw DidNotRecoverError("recovery_rate: no transient at t_release");
    const double floor = 0.05 * initial;

    std::size_t i_end = i_release;
    while (i_end < traj.times.size() &&
           std::abs(traj.tie_std_series[i_end] - sigma_eq) >= floor)
        ++i_end;
    if (i_end >= traj.times.size())
        throw DidNotRecoverError("recovery_rate: residual never fell below 5% of initial");

    const double t_start = t_release + skip;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long count = 0;
    for (std::size_t i = i_release; i < i_end; ++i) {
        if (traj.times[i] < t_start) continue;
        const double resid = std::abs(traj.tie_std_series[i] - sigma_eq);
        if (resid <= 0.0) continue;
        const double x = traj.times[i];
        const double y = std::log(resid);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) throw DidNotRecoverError("recovery_rate: fit window has fewer than 2 points");
    const double denom = count * sxx - sx * sx;
    if (denom == 0.0) throw DidNotRecoverError("recovery_rate: degenerate fit window");
    const double slope = (count * sxy - sx * sy) / denom;
    return -slope;
}

std::vector<CsdPoint> csd_experiment(const SignedNetwork& X_D, const ModelParams& params,
                                     std::vector<double> magnitudes, const SimConfig& cfg) {
    params.validate();
    cfg.validate();
    const double alpha = params.alpha();
    const double beta = params.beta;

    const Spectrum sd = eigendecompose(X_D);
    const double lambda_d1 = sd.leading();
    const Vector s1 = sd.leadingVector();
    const SignedNetwork direction =
        SignedNetwork::fromSymmetrized(s1 * s1.transpose(), X_D.labels());

    const EquilibriumReport peace = find_equilibrium(X_D, X_D, params, cfg);
    if (peace.classification != Classification::Peace)
        throw DomainError("csd_experiment: system has no stable peace state at these parameters");

    // War states sit far above the merged-eigenvalue level beta/(2 alpha);
    // halfway to the war bound separates the two outcomes robustly.
    const double peace_cap =
        0.5 * (beta / (2.0 * alpha) + lambda_war(lambda_d1, params.L, X_D.size(), beta));

    std::sort(magnitudes.begin(), magnitudes.end());
    std::vector<CsdPoint> points;
    points.reserve(magnitudes.size());

    SignedNetwork base = peace.state; // ladder: each run starts from the last shifted equilibrium
    for (double sigma : magnitudes) {
        if (sigma == 0.0) continue; // no transient, nothing to measure
        CsdPoint point;
        point.magnitude = sigma;
        point.d = critical_lambda_tilde(alpha, beta) - (lambda_d1 + sigma / beta);

        PerturbationImpulse imp{direction, sigma, 0.0, cfg.t_end + 1.0};
        Trajectory traj = integrate(base, X_D, params, {imp}, cfg);
        const SignedNetwork& final_state = traj.snapshots.back();
        const Spectrum sf = eigendecompose(final_state);

        const bool stayed_peaceful =
            traj.converged && !traj.diverged && sf.leading() < peace_cap;
        if (stayed_peaceful) {
            point.converged = true;
            point.r = recovery_rate(traj, 0.0, 1.0 / beta);
            base = final_state;
        } else {
            point.converged = false; // destabilized; keep the old base state
        }
        points.push_back(point);
    }
    return points;
}

PowerLawFit fit_power_law(const std::vector<CsdPoint>& points) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long count = 0;
    for (const auto& p : points) {
        if (!p.converged || !(p.d > 0.0)) continue;
        const double x = std::log(p.d);
        const double y = std::log(p.r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 5)
        throw InsufficientPointsError("fit_power_law: need at least 5 converged points with d > 0");
    const double denom = count * sxx - sx * sx;
    const double slope = (count * sxy - sx * sy) / denom;
    return PowerLawFit{slope, (sy - slope * sx) / count};
}

namespace {

std::vector<double> ranks(const std::vector<double>& xs) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> rank(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double mean_rank = 0.5 * (i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = mean_rank;
        i = j + 1;
    }
    return rank;
}

} // namespace

double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw DomainError("spearman_rank_correlation: need two equal-length series");
    const std::vector<double> rx = ranks(xs), ry = ranks(ys);
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    if (dx == 0.0 || dy == 0.0) throw DomainError("spearman_rank_correlation: constant series");
    return num / std::sqrt(dx * dy);
}

} // namespace signet
