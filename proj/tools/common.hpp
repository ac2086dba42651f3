#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "signet/errors.hpp"
#include "signet/network.hpp"

namespace signet::cli {

inline constexpr const char* kToolVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;

inline std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// FNV-1a 64 digest of a file, hex-encoded. Reproducibility bookkeeping only.
std::string file_digest(const std::string& path);

/// Per-run bookkeeping: resolved parameters, input digests, produced files.
/// finalize() writes <out>/manifest.json; the result files themselves carry
/// no timestamps, so equal manifests (minus wall clock) mean equal outputs.
struct RunContext {
    std::string command;
    std::filesystem::path out_dir;
    std::uint64_t seed = 1;
    int jobs = 1;
    bool plot = false;
    OrderedJson params = OrderedJson::object();
    OrderedJson input_digests = OrderedJson::object();
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    std::filesystem::path output_path(const std::string& name) {
        outputs.push_back(name);
        return out_dir / name;
    }

    void note_input(const std::string& path) { input_digests[path] = file_digest(path); }

    void write_json(const std::string& name, const OrderedJson& doc) {
        const auto path = output_path(name);
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        out << doc.dump(2) << '\n';
    }

    void finalize();
};

/// Where the dyadic bias matrix comes from.
struct BiasOpts {
    std::string source = "gaussian"; ///< edges | matrix | sbm | gaussian
    std::string path;                ///< edges/matrix file
    int n = 50;
    double noise_std = 0.8;
    double contrast = 0.0;
    double d_in = 0.4;
    double d_out = 0.4;
    double p_in_plus = 1.0;
    double p_out_plus = 0.0;
    double scale_lo = -2.0; ///< edge-list rescale range
    double scale_hi = 2.0;
};

/// Materializes the bias matrix, records provenance in ctx.params /
/// input_digests, and writes bias_matrix.csv next to the other outputs.
SignedNetwork resolve_bias(const BiasOpts& opts, RunContext& ctx);

struct ParamOpts {
    double beta = 1.0;
    double L = 2.0;
    double alpha = 0.01;
};

ModelParams to_model_params(const ParamOpts& opts);

struct SimOpts {
    double dt = 0.01;
    double t_end = 400.0;
    double conv_tol = 1e-6;
    double blowup = 0.0; ///< 0 = derive 100*(L/beta + max|X_D|)
    int record_stride = 1;
};

SimConfig to_sim_config(const SimOpts& opts, const ParamOpts& params, const SignedNetwork& bias,
                        std::uint64_t seed);

/// Splits "a,b,c" into doubles; throws ConfigError on junk.
std::vector<double> parse_double_list(const std::string& text);

} // namespace signet::cli
