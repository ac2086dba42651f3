#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "signet/errors.hpp"

namespace signet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense symmetric signed tie matrix with optional node labels.
///
/// The same container holds the evolving state X, the dyadic bias X_D,
/// perturbation directions X_T and every derived matrix (war prediction,
/// modularity matrix, ...). Symmetry and n >= 2 are enforced at
/// construction; instances are immutable values afterwards.
class SignedNetwork {
public:
    /// Zero network on n nodes.
    explicit SignedNetwork(int n, std::vector<std::string> labels = {});

    /// Wraps a symmetric matrix. Throws DimensionError if not square / n < 2,
    /// NonFiniteError on NaN/inf, DomainError if asymmetric beyond 1e-9
    /// relative. Tiny asymmetry (round-off) is folded to (W + W^T)/2.
    static SignedNetwork fromMatrix(Matrix weights, std::vector<std::string> labels = {});

    /// Same, but symmetrizes unconditionally. For generator internals.
    static SignedNetwork fromSymmetrized(Matrix weights, std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(weights_.rows()); }
    const Matrix& weights() const { return weights_; }
    double operator()(int i, int j) const { return weights_(i, j); }

    bool hasLabels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of node i, or its index as a string when unlabeled.
    std::string labelOf(int i) const;

    bool allFinite() const { return weights_.allFinite(); }

private:
    SignedNetwork(Matrix w, std::vector<std::string> labels, bool);
    Matrix weights_;
    std::vector<std::string> labels_;
};

/// Model parameters of the tie dynamics. alpha = L/gamma is derived, never stored.
struct ModelParams {
    double beta = 1.0;  ///< dyadic restoring strength, 1/time
    double L = 1.0;     ///< balance force plateau magnitude
    double gamma = 1.0; ///< transition half-width of the balance force

    double alpha() const { return L / gamma; }

    /// Convenience: choose gamma so that L/gamma equals the requested alpha.
    static ModelParams fromAlpha(double beta, double L, double alpha);

    void validate() const;
};

/// Boxcar impulse: sigma * direction applied on [t_on, t_off).
struct PerturbationImpulse {
    SignedNetwork direction; ///< unit Frobenius norm
    double magnitude = 0.0;  ///< sigma = Frobenius norm of the applied matrix
    double t_on = 0.0;
    double t_off = 0.0;

    void validate() const;
};

/// Fixed-step integration settings.
struct SimConfig {
    double dt = 0.01;
    double t_end = 400.0;
    double conv_tol = 1e-6;          ///< equilibrium tolerance on max |dX/dt|
    double blowup_threshold = 1e6;   ///< max |X_ij| before declaring divergence
    std::uint64_t seed = 1;
    int record_stride = 1;           ///< series recorded every this many steps
    std::vector<double> snapshot_times; ///< extra snapshots; first/last always kept

    void validate() const;
};

/// Recommended blow-up threshold for the full (bounded) model, 100*(L/beta + max|X_D|).
double default_blowup_threshold(const ModelParams& params, const SignedNetwork& bias);

/// Time series produced by the integrator. All per-time series share one
/// time axis; snapshots may be thinned and carry their own times.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> tie_std_series;
    std::vector<double> lambda1_series;
    std::vector<double> snapshot_times;
    std::vector<SignedNetwork> snapshots;
    bool converged = false;
    bool diverged = false;
    double t_final = 0.0;
};

/// sqrt of the sum of squared entries over the full matrix (both halves and
/// the diagonal). Throws NonFiniteError on non-finite entries.
double frobenius_norm(const SignedNetwork& net);

/// Population standard deviation over the n(n-1)/2 distinct off-diagonal ties.
double tie_std(const SignedNetwork& net);

namespace detail {
double frobenius_norm(const Matrix& w);
double tie_std(const Matrix& w);
} // namespace detail

} // namespace signet
