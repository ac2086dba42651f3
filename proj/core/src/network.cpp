#include "signet/network.hpp"

#include <cmath>
#include <utility>

namespace signet {

namespace {

void check_shape(const Matrix& w) {
    if (w.rows() != w.cols())
        throw DimensionError("weights matrix must be square, got " +
                             std::to_string(w.rows()) + "x" + std::to_string(w.cols()));
    if (w.rows() < 2) throw DimensionError("network needs at least 2 nodes");
}

void check_labels(const Matrix& w, const std::vector<std::string>& labels) {
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != w.rows())
        throw DimensionError("label count does not match node count");
}

} // namespace

SignedNetwork::SignedNetwork(int n, std::vector<std::string> labels)
    : weights_(Matrix::Zero(n, n)), labels_(std::move(labels)) {
    check_shape(weights_);
    check_labels(weights_, labels_);
}

SignedNetwork::SignedNetwork(Matrix w, std::vector<std::string> labels, bool)
    : weights_(std::move(w)), labels_(std::move(labels)) {}

SignedNetwork SignedNetwork::fromMatrix(Matrix weights, std::vector<std::string> labels) {
    check_shape(weights);
    check_labels(weights, labels);
    if (!weights.allFinite()) throw NonFiniteError("weights contain NaN or inf");
    const double scale = weights.cwiseAbs().maxCoeff();
    const double asym = (weights - weights.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * std::max(scale, 1.0))
        throw DomainError("weights matrix is not symmetric");
    if (asym > 0.0) weights = ((weights + weights.transpose()) * 0.5).eval();
    return SignedNetwork(std::move(weights), std::move(labels), true);
}

SignedNetwork SignedNetwork::fromSymmetrized(Matrix weights, std::vector<std::string> labels) {
    check_shape(weights);
    check_labels(weights, labels);
    Matrix sym = (weights + weights.transpose()) * 0.5;
    return SignedNetwork(std::move(sym), std::move(labels), true);
}

std::string SignedNetwork::labelOf(int i) const {
    if (hasLabels()) return labels_[static_cast<std::size_t>(i)];
    return std::to_string(i);
}

ModelParams ModelParams::fromAlpha(double beta, double L, double alpha) {
    if (alpha <= 0.0) throw DomainError("alpha must be positive");
    ModelParams p{beta, L, L / alpha};
    p.validate();
    return p;
}

void ModelParams::validate() const {
    if (!(beta > 0.0)) throw DomainError("beta must be positive");
    if (!(L > 0.0)) throw DomainError("L must be positive");
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
}

void PerturbationImpulse::validate() const {
    if (!(magnitude >= 0.0)) throw DomainError("impulse magnitude must be nonnegative");
    if (!(t_off > t_on)) throw DomainError("impulse requires t_off > t_on");
    const double norm = frobenius_norm(direction);
    if (std::abs(norm - 1.0) > 1e-8)
        throw DomainError("impulse direction must have unit Frobenius norm");
}

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
    if (!(conv_tol > 0.0)) throw DomainError("conv_tol must be positive");
    if (!(blowup_threshold > 0.0)) throw DomainError("blowup_threshold must be positive");
    if (record_stride < 1) throw DomainError("record_stride must be >= 1");
}

double default_blowup_threshold(const ModelParams& params, const SignedNetwork& bias) {
    return 100.0 * (params.L / params.beta + bias.weights().cwiseAbs().maxCoeff());
}

namespace detail {

double frobenius_norm(const Matrix& w) {
    if (!w.allFinite()) throw NonFiniteError("frobenius_norm: non-finite entry");
    return w.norm();
}

double tie_std(const Matrix& w) {
    if (!w.allFinite()) throw NonFiniteError("tie_std: non-finite entry");
    const Eigen::Index n = w.rows();
    const double count = static_cast<double>(n) * (static_cast<double>(n) - 1.0) / 2.0;
    double sum = 0.0, sumsq = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            sum += w(i, j);
            sumsq += w(i, j) * w(i, j);
        }
    const double mean = sum / count;
    const double var = std::max(0.0, sumsq / count - mean * mean);
    return std::sqrt(var);
}

} // namespace detail

double frobenius_norm(const SignedNetwork& net) { return detail::frobenius_norm(net.weights()); }

double tie_std(const SignedNetwork& net) { return detail::tie_std(net.weights()); }

} // namespace signet
