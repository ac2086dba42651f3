#pragma once

#include <cstdint>

#include "signet/network.hpp"

namespace signet {

/// Full symmetric eigendecomposition, eigenvalues descending.
///
/// Sign convention: in each eigenvector the largest-magnitude component is
/// positive (first such index on exact ties), which makes the decomposition
/// deterministic and comparable across runs.
struct Spectrum {
    Vector eigenvalues;  ///< descending
    Matrix eigenvectors; ///< orthonormal columns, column i pairs with eigenvalues[i]

    double leading() const { return eigenvalues(0); }
    Vector leadingVector() const { return eigenvectors.col(0); }
};

Spectrum eigendecompose(const SignedNetwork& net);

/// Signed modularity matrix M = X - k k^T / (2m) with k the vector of signed
/// strengths k_i = sum_j X_ij and m = (1/2) sum_ij |X_ij|.
/// Throws AllZeroNetworkError when m == 0.
SignedNetwork modularity_matrix(const SignedNetwork& net);

/// Eigenvector polarization phi_i = s_i^T M s_i for the i-th eigenvector
/// (descending order, 0-based).
double eigenvector_polarization(const SignedNetwork& net, int i);

/// Weighted triad imbalance B(X): sum over distinct triads i<j<k of
/// |X_ij X_jk X_ki| where the sign product is negative. 0 on exactly
/// balanced networks.
double triad_imbalance(const SignedNetwork& net);

/// Normalized balance score: B(X) divided by the mean B over n_null
/// sign-and-position shuffles of the off-diagonal entries. 0 = perfectly
/// balanced, 1 = null-model average. Throws DegenerateNullError when the
/// null mean is zero.
double balance_eta(const SignedNetwork& net, int n_null, std::uint64_t seed);

namespace detail {
/// Eigenvector sign convention applied in place, column by column.
void canonicalize_sign(Matrix& vectors);
} // namespace detail

} // namespace signet
