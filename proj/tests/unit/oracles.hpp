#pragma once

// Test-only oracles, independent of the library's solution paths.

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "signet/network.hpp"

namespace signet::test {

/// Bisection root of f on [lo, hi]; requires a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-13) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw std::runtime_error("bisect: no sign change in bracket");
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

/// Scalar per-tie dynamics of the equal-and-opposite special case:
/// dx/dt = -beta (x - mu) + L tanh(alpha N x^2 / L).
inline double special_case_rhs(double x, int n, double mu, double beta, double L, double alpha) {
    return -beta * (x - mu) + L * std::tanh(alpha * n * x * x / L);
}

/// All roots of the exact special-case scalar system on [0, x_hi], by
/// sign-change scan plus bisection.
inline std::vector<double> special_case_roots(int n, double mu, double beta, double L,
                                              double alpha, double x_hi) {
    const int cells = 40000;
    std::vector<double> roots;
    auto f = [&](double x) { return special_case_rhs(x, n, mu, beta, L, alpha); };
    double prev = f(0.0);
    for (int i = 1; i <= cells; ++i) {
        const double x = x_hi * i / cells;
        const double cur = f(x);
        if (prev * cur < 0.0)
            roots.push_back(bisect(f, x_hi * (i - 1) / cells, x, 1e-13));
        prev = cur;
    }
    return roots;
}

/// Two-faction +/-mu bias matrix of the special case, including diagonal
/// entries (the paper's reduction keeps self-ties at the ingroup value).
inline SignedNetwork special_case_bias(int n, double mu) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double si = i < n / 2 ? 1.0 : -1.0;
            const double sj = j < n / 2 ? 1.0 : -1.0;
            m(i, j) = mu * si * sj;
        }
    return SignedNetwork::fromSymmetrized(std::move(m));
}

/// Random symmetric Gaussian matrix with zero diagonal.
inline SignedNetwork random_symmetric(int n, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, scale);
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = gauss(rng);
    return SignedNetwork::fromSymmetrized(std::move(m));
}

/// Random permutation matrix.
inline Matrix random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix p = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1.0;
    return p;
}

} // namespace signet::test
