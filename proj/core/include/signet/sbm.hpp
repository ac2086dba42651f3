#pragma once

#include <cstdint>
#include <string>

#include "signet/network.hpp"

namespace signet {

/// Two-block signed stochastic block model with equal blocks and +/-1 ties.
struct BlockModelParams {
    int n = 2;               ///< even
    double d_in = 1.0;       ///< intra-block tie density
    double d_out = 1.0;      ///< inter-block tie density
    double p_in_plus = 1.0;  ///< P(+1 | tie present, intra)
    double p_out_plus = 0.0; ///< P(+1 | tie present, inter)
    std::uint64_t seed = 1;

    void validate() const;
};

/// Draws one network: each dyad gets a tie with the block-appropriate
/// density, signed +1 with the block-appropriate affinity, else -1.
/// Diagonal zero; symmetric. Block 1 is nodes [0, n/2).
SignedNetwork generate_block_model(const BlockModelParams& p);

/// Expected signal/noise decomposition <X_D> = N w u_H u_H^T + N m u_C u_C^T
/// plus a zero-mean residual of per-entry standard deviation noise_sigma.
/// band_edge = noise_sigma * sqrt(N) is the detectability threshold the
/// contrast eigenvalue must clear to be spectrally visible.
struct SignalSummary {
    double omega = 0.0;       ///< mean tie expectation
    double mu = 0.0;          ///< contrast expectation
    double lambda_h = 0.0;    ///< N * omega
    double lambda_c = 0.0;    ///< N * mu
    double noise_sigma = 0.0; ///< pooled residual std over off-diagonal entries
    double band_edge = 0.0;   ///< noise_sigma * sqrt(N)
};

SignalSummary signal_summary(const BlockModelParams& p);

/// Symmetric Gaussian bias: entries i<j drawn iid Normal(0, noise_scale^2)
/// plus contrast_strength * v_i v_j with v the +/-1 block vector; diagonal
/// zero. Requires even n when contrast_strength != 0.
SignedNetwork gaussian_bias(int n, double noise_scale, double contrast_strength,
                            std::uint64_t seed);

enum class Detectability { SignalAboveBand, SignalBelowBand };

std::string to_string(Detectability d);

/// SignalAboveBand iff lambda_c > band_edge.
Detectability detectability_check(const SignalSummary& summary);

} // namespace signet
