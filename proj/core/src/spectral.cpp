#include "signet/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "signet/rng.hpp"

namespace signet {

namespace detail {

void canonicalize_sign(Matrix& vectors) {
    for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
            const double a = std::abs(vectors(r, c));
            if (a > best) {
                best = a;
                imax = r;
            }
        }
        if (vectors(imax, c) < 0.0) vectors.col(c) *= -1.0;
    }
}

} // namespace detail

Spectrum eigendecompose(const SignedNetwork& net) {
    if (!net.allFinite()) throw NonFiniteError("eigendecompose: non-finite entry");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(net.weights());
    if (solver.info() != Eigen::Success)
        throw Error("eigendecompose: solver failed to converge");

    const Eigen::Index n = net.size();
    Spectrum s;
    s.eigenvalues = Vector(n);
    s.eigenvectors = Matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        s.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        s.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    detail::canonicalize_sign(s.eigenvectors);
    return s;
}

SignedNetwork modularity_matrix(const SignedNetwork& net) {
    const Matrix& x = net.weights();
    const double total_abs = x.cwiseAbs().sum();
    if (total_abs == 0.0) throw AllZeroNetworkError("modularity_matrix: all-zero network");
    const double two_m = total_abs; // m = total_abs / 2
    const Vector k = x.rowwise().sum();
    Matrix m = x - (k * k.transpose()) / two_m;
    return SignedNetwork::fromSymmetrized(std::move(m), net.labels());
}

double eigenvector_polarization(const SignedNetwork& net, int i) {
    if (i < 0 || i >= net.size()) throw DomainError("eigenvector index out of range");
    const Spectrum s = eigendecompose(net);
    const SignedNetwork m = modularity_matrix(net);
    const Vector v = s.eigenvectors.col(i);
    return v.dot(m.weights() * v);
}

double triad_imbalance(const SignedNetwork& net) {
    const Matrix& x = net.weights();
    const int n = net.size();
    double b = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double p = x(i, j) * x(j, k) * x(k, i);
                if (p < 0.0) b += -p;
            }
    return b;
}

double balance_eta(const SignedNetwork& net, int n_null, std::uint64_t seed) {
    if (net.size() < 3) throw DomainError("balance_eta needs at least 3 nodes");
    if (n_null < 10) throw DomainError("balance_eta needs n_null >= 10");
    if (!net.allFinite()) throw NonFiniteError("balance_eta: non-finite entry");

    const double b_obs = triad_imbalance(net);

    const int n = net.size();
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) values.push_back(net(i, j));

    double null_sum = 0.0;
    std::vector<double> shuffled(values.size());
    for (int rep = 0; rep < n_null; ++rep) {
        auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
        shuffled = values;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::uniform_int_distribution<int> coin(0, 1);
        Matrix m = Matrix::Zero(n, n);
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double v = coin(rng) ? shuffled[idx] : -shuffled[idx];
                m(i, j) = v;
                m(j, i) = v;
                ++idx;
            }
        null_sum += triad_imbalance(SignedNetwork::fromSymmetrized(std::move(m)));
    }
    const double null_mean = null_sum / n_null;
    if (null_mean == 0.0) throw DegenerateNullError("balance_eta: null ensemble has zero imbalance");
    return std::max(0.0, b_obs / null_mean);
}

} // namespace signet
