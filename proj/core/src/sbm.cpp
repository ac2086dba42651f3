#include "signet/sbm.hpp"

#include <cmath>

#include "signet/rng.hpp"

namespace signet {

namespace {

bool in_unit(double p) { return p >= 0.0 && p <= 1.0; }

} // namespace

void BlockModelParams::validate() const {
    if (n < 2 || n % 2 != 0) throw DomainError("block model needs even N >= 2");
    if (!in_unit(d_in) || !in_unit(d_out) || !in_unit(p_in_plus) || !in_unit(p_out_plus))
        throw DomainError("block model probabilities must lie in [0, 1]");
}

SignedNetwork generate_block_model(const BlockModelParams& p) {
    p.validate();
    auto rng = make_rng(p.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int half = p.n / 2;
    Matrix x = Matrix::Zero(p.n, p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j) {
            const bool intra = (i < half) == (j < half);
            const double density = intra ? p.d_in : p.d_out;
            const double affinity = intra ? p.p_in_plus : p.p_out_plus;
            if (unit(rng) < density) {
                const double v = unit(rng) < affinity ? 1.0 : -1.0;
                x(i, j) = v;
                x(j, i) = v;
            }
        }
    return SignedNetwork::fromSymmetrized(std::move(x));
}

SignalSummary signal_summary(const BlockModelParams& p) {
    p.validate();
    const double mean_in = p.d_in * (2.0 * p.p_in_plus - 1.0);
    const double mean_out = p.d_out * (2.0 * p.p_out_plus - 1.0);

    SignalSummary s;
    s.omega = 0.5 * (mean_in + mean_out);
    s.mu = 0.5 * (mean_in - mean_out);
    s.lambda_h = p.n * s.omega;
    s.lambda_c = p.n * s.mu;

    // Pooled residual variance over off-diagonal dyads: intra pairs number
    // (N/2)(N/2 - 1), inter pairs N^2/4. Entry second moment is the density.
    const double half = p.n / 2.0;
    const double c_in = half * (half - 1.0);
    const double c_out = half * half;
    const double var_in = p.d_in - mean_in * mean_in;
    const double var_out = p.d_out - mean_out * mean_out;
    s.noise_sigma = std::sqrt((c_in * var_in + c_out * var_out) / (c_in + c_out));
    s.band_edge = s.noise_sigma * std::sqrt(static_cast<double>(p.n));
    return s;
}

SignedNetwork gaussian_bias(int n, double noise_scale, double contrast_strength,
                            std::uint64_t seed) {
    if (n < 2) throw DomainError("gaussian_bias needs N >= 2");
    if (noise_scale < 0.0) throw DomainError("noise_scale must be nonnegative");
    if (contrast_strength != 0.0 && n % 2 != 0)
        throw DomainError("gaussian_bias with contrast needs even N");
    auto rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int half = n / 2;
    Matrix x = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double vi = i < half ? 1.0 : -1.0;
            const double vj = j < half ? 1.0 : -1.0;
            const double v = noise_scale * gauss(rng) + contrast_strength * vi * vj;
            x(i, j) = v;
            x(j, i) = v;
        }
    return SignedNetwork::fromSymmetrized(std::move(x));
}

std::string to_string(Detectability d) {
    return d == Detectability::SignalAboveBand ? "SignalAboveBand" : "SignalBelowBand";
}

Detectability detectability_check(const SignalSummary& summary) {
    return summary.lambda_c > summary.band_edge ? Detectability::SignalAboveBand
                                                : Detectability::SignalBelowBand;
}

} // namespace signet
