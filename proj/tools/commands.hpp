#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace signet::cli {

struct SimulateOpts {
    BiasOpts bias;
    ParamOpts params;
    SimOpts sim;
    std::string alpha_schedule; ///< "t:alpha,t:alpha" changes on top of --alpha
    std::vector<std::string> impulses; ///< "sigma=S,on=T0,off=T1,dir=lead|dyad:A-B"
    std::string snap_times;     ///< comma list of snapshot times
};
void cmd_simulate(const SimulateOpts& opts, RunContext& ctx);

struct SweepOpts {
    BiasOpts bias;
    ParamOpts params;
    SimOpts sim;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    int alpha_steps = 0;
    std::string alpha_grid; ///< explicit comma list, overrides min/max/steps
    std::string direction = "both"; ///< up | down | both
};
void cmd_sweep(const SweepOpts& opts, RunContext& ctx);

struct RegimeOpts {
    BiasOpts bias;
    ParamOpts params;
};
void cmd_regime(const RegimeOpts& opts, RunContext& ctx);

struct SbmOpts {
    int n = 100;
    double d_in = 0.4;
    double d_out = 0.4;
    double p_in_plus = 1.0;
    double p_out_plus = 0.0;
    std::string p_out_sweep; ///< "lo:hi:count" sweep of p_out_plus
};
void cmd_sbm(const SbmOpts& opts, RunContext& ctx);

struct PerturbOpts {
    BiasOpts bias;
    ParamOpts params;
    double sigma = 0.0; ///< 0 = use sigma_min
    int samples = 100000;
    int sparsity = 4;
    int top_k = 3;
    double epsilon = -1.0;
    std::string schemes = "energy,polarizing,harmonizing";
};
void cmd_perturb(const PerturbOpts& opts, RunContext& ctx);

struct CsdOpts {
    BiasOpts bias;
    ParamOpts params;
    SimOpts sim;
    std::string magnitudes;    ///< explicit comma list of impulse energies
    int auto_points = 10;      ///< ladder size when magnitudes is empty
    bool include_destabilizing = true;
};
void cmd_csd(const CsdOpts& opts, RunContext& ctx);

struct SensitivityOpts {
    BiasOpts bias;
    std::vector<double> deltas; ///< default {-1, 1}
};
void cmd_sensitivity(const SensitivityOpts& opts, RunContext& ctx);

struct SpectraOpts {
    BiasOpts bias;
    int eta_null = 0; ///< >0: also report balance eta with this many null draws
};
void cmd_spectra(const SpectraOpts& opts, RunContext& ctx);

} // namespace signet::cli
