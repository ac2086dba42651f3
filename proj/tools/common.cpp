#include "common.hpp"

#include <charconv>
#include <sstream>

#include "signet/ingest.hpp"
#include "signet/sbm.hpp"

namespace signet::cli {

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for digest");
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

void RunContext::finalize() {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    OrderedJson manifest;
    manifest["command"] = command;
    manifest["tool_version"] = kToolVersion;
    manifest["seed"] = seed;
    manifest["jobs"] = jobs;
    manifest["parameters"] = params;
    manifest["input_digests"] = input_digests;
    manifest["outputs"] = outputs;
    manifest["wall_clock_sec"] = wall;
    std::ofstream out(out_dir / "manifest.json");
    if (!out) throw IoError("cannot write manifest.json");
    out << manifest.dump(2) << '\n';
}

SignedNetwork resolve_bias(const BiasOpts& opts, RunContext& ctx) {
    ctx.params["bias"]["source"] = opts.source;
    SignedNetwork bias(2);
    if (opts.source == "edges") {
        if (opts.path.empty()) throw ConfigError("--bias-path required for source 'edges'");
        ctx.note_input(opts.path);
        ctx.params["bias"]["path"] = opts.path;
        ctx.params["bias"]["scale"] = {opts.scale_lo, opts.scale_hi};
        bias = build_bias_matrix(load_edge_list_file(opts.path), opts.scale_lo, opts.scale_hi);
    } else if (opts.source == "matrix") {
        if (opts.path.empty()) throw ConfigError("--bias-path required for source 'matrix'");
        ctx.note_input(opts.path);
        ctx.params["bias"]["path"] = opts.path;
        bias = read_matrix_csv_file(opts.path);
    } else if (opts.source == "sbm") {
        BlockModelParams p{opts.n, opts.d_in, opts.d_out, opts.p_in_plus, opts.p_out_plus,
                           ctx.seed};
        try {
            p.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        ctx.params["bias"]["n"] = opts.n;
        ctx.params["bias"]["d_in"] = opts.d_in;
        ctx.params["bias"]["d_out"] = opts.d_out;
        ctx.params["bias"]["p_in_plus"] = opts.p_in_plus;
        ctx.params["bias"]["p_out_plus"] = opts.p_out_plus;
        bias = generate_block_model(p);
    } else if (opts.source == "gaussian") {
        ctx.params["bias"]["n"] = opts.n;
        ctx.params["bias"]["noise_std"] = opts.noise_std;
        ctx.params["bias"]["contrast"] = opts.contrast;
        try {
            bias = gaussian_bias(opts.n, opts.noise_std, opts.contrast, ctx.seed);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
    } else {
        throw ConfigError("unknown bias source '" + opts.source + "'");
    }
    write_matrix_csv_file(ctx.output_path("bias_matrix.csv").string(), bias);
    return bias;
}

ModelParams to_model_params(const ParamOpts& opts) {
    try {
        return ModelParams::fromAlpha(opts.beta, opts.L, opts.alpha);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

SimConfig to_sim_config(const SimOpts& opts, const ParamOpts& params, const SignedNetwork& bias,
                        std::uint64_t seed) {
    SimConfig cfg;
    cfg.dt = opts.dt;
    cfg.t_end = opts.t_end;
    cfg.conv_tol = opts.conv_tol;
    cfg.record_stride = opts.record_stride;
    cfg.seed = seed;
    cfg.blowup_threshold =
        opts.blowup > 0.0 ? opts.blowup
                          : default_blowup_threshold(to_model_params(params), bias);
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.empty()) continue;
        const char* begin = cell.data();
        const char* end = begin + cell.size();
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc{} || ptr != end)
            throw ConfigError("malformed number '" + cell + "' in list");
        out.push_back(v);
    }
    if (out.empty()) throw ConfigError("empty numeric list");
    return out;
}

} // namespace signet::cli
