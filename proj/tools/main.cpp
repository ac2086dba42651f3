#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "common.hpp"

namespace {

using namespace signet;
using namespace signet::cli;

struct CommonOpts {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out = ".";
    bool plot = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--seed", opts.seed, "RNG seed");
    sub->add_option("--jobs", opts.jobs, "worker pool size")->check(CLI::PositiveNumber);
    sub->add_option("--out", opts.out, "output directory");
    sub->add_flag("--plot", opts.plot, "also write SVG plots");
}

void add_bias(CLI::App* sub, BiasOpts& opts) {
    sub->add_option("--bias", opts.source, "bias source: edges | matrix | sbm | gaussian");
    sub->add_option("--bias-path", opts.path, "edge-list or matrix CSV for file sources");
    sub->add_option("--n", opts.n, "node count for generated biases");
    sub->add_option("--noise-std", opts.noise_std, "gaussian per-entry std");
    sub->add_option("--contrast", opts.contrast, "gaussian two-block contrast strength");
    sub->add_option("--d-in", opts.d_in, "sbm intra-block tie density");
    sub->add_option("--d-out", opts.d_out, "sbm inter-block tie density");
    sub->add_option("--p-in-plus", opts.p_in_plus, "sbm intra-block positive-tie probability");
    sub->add_option("--p-out-plus", opts.p_out_plus, "sbm inter-block positive-tie probability");
    sub->add_option("--scale-lo", opts.scale_lo, "edge-list rescale lower bound");
    sub->add_option("--scale-hi", opts.scale_hi, "edge-list rescale upper bound");
}

void add_params(CLI::App* sub, ParamOpts& opts) {
    sub->add_option("--beta", opts.beta, "dyadic force strength");
    sub->add_option("--L", opts.L, "balance force plateau magnitude");
    sub->add_option("--alpha", opts.alpha, "balance sensitivity L/gamma");
}

void add_sim(CLI::App* sub, SimOpts& opts) {
    sub->add_option("--dt", opts.dt, "integration step");
    sub->add_option("--t-end", opts.t_end, "integration horizon");
    sub->add_option("--conv-tol", opts.conv_tol, "convergence tolerance on max |dX/dt|");
    sub->add_option("--blowup", opts.blowup, "blow-up threshold (0 = auto)");
    sub->add_option("--record-stride", opts.record_stride, "series recording stride");
}

int run_guarded(const std::string& command, const CommonOpts& common,
                const std::function<void(RunContext&)>& body) {
    RunContext ctx;
    ctx.command = command;
    ctx.out_dir = common.out;
    ctx.seed = common.seed;
    ctx.jobs = common.jobs;
    ctx.plot = common.plot;
    std::error_code ec;
    std::filesystem::create_directories(ctx.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + common.out + "'");
    body(ctx);
    ctx.finalize();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-network cooperation/conflict dynamics toolkit"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.set_config("--config", "", "config file; INI sections named after subcommands");
    app.require_subcommand(1);

    int exit_code = 0;
    auto guard = [&](const std::string& name, const CommonOpts& common,
                     std::function<void(RunContext&)> body) {
        exit_code = run_guarded(name, common, body);
    };

    // simulate
    auto sim_opts = std::make_shared<SimulateOpts>();
    auto sim_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("simulate", "integrate the tie dynamics");
        add_common(sub, *sim_common);
        add_bias(sub, sim_opts->bias);
        add_params(sub, sim_opts->params);
        add_sim(sub, sim_opts->sim);
        sub->add_option("--alpha-schedule", sim_opts->alpha_schedule,
                        "alpha changes, e.g. 15:0.1,30:0.05");
        sub->add_option("--impulse", sim_opts->impulses,
                        "boxcar impulse sigma=S,on=T0,off=T1[,dir=lead|dyad:A-B]");
        sub->add_option("--snap-times", sim_opts->snap_times, "snapshot times, comma list");
        sub->callback([&, sim_opts, sim_common] {
            guard("simulate", *sim_common, [&](RunContext& c) { cmd_simulate(*sim_opts, c); });
        });
    }

    // sweep
    auto sweep_opts = std::make_shared<SweepOpts>();
    auto sweep_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("sweep", "warm-started alpha sweep with hysteresis");
        add_common(sub, *sweep_common);
        add_bias(sub, sweep_opts->bias);
        add_params(sub, sweep_opts->params);
        add_sim(sub, sweep_opts->sim);
        sub->add_option("--alpha-min", sweep_opts->alpha_min, "sweep start");
        sub->add_option("--alpha-max", sweep_opts->alpha_max, "sweep end");
        sub->add_option("--alpha-steps", sweep_opts->alpha_steps, "grid size");
        sub->add_option("--alpha-grid", sweep_opts->alpha_grid, "explicit alpha grid, comma list");
        sub->add_option("--direction", sweep_opts->direction, "up | down | both");
        sub->callback([&, sweep_opts, sweep_common] {
            guard("sweep", *sweep_common, [&](RunContext& c) { cmd_sweep(*sweep_opts, c); });
        });
    }

    // regime
    auto regime_opts = std::make_shared<RegimeOpts>();
    auto regime_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("regime", "classify mono/bistable regime");
        add_common(sub, *regime_common);
        add_bias(sub, regime_opts->bias);
        add_params(sub, regime_opts->params);
        sub->callback([&, regime_opts, regime_common] {
            guard("regime", *regime_common, [&](RunContext& c) { cmd_regime(*regime_opts, c); });
        });
    }

    // sbm
    auto sbm_opts = std::make_shared<SbmOpts>();
    auto sbm_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("sbm", "signed block-model generation and signal summary");
        add_common(sub, *sbm_common);
        sub->add_option("--n", sbm_opts->n, "node count (even)");
        sub->add_option("--d-in", sbm_opts->d_in, "intra-block tie density");
        sub->add_option("--d-out", sbm_opts->d_out, "inter-block tie density");
        sub->add_option("--p-in-plus", sbm_opts->p_in_plus, "intra-block positive probability");
        sub->add_option("--p-out-plus", sbm_opts->p_out_plus, "inter-block positive probability");
        sub->add_option("--p-out-sweep", sbm_opts->p_out_sweep, "sweep p_out as lo:hi:count");
        sub->callback([&, sbm_opts, sbm_common] {
            guard("sbm", *sbm_common, [&](RunContext& c) { cmd_sbm(*sbm_opts, c); });
        });
    }

    // perturb
    auto pert_opts = std::make_shared<PerturbOpts>();
    auto pert_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("perturb", "destabilizing perturbation search");
        add_common(sub, *pert_common);
        add_bias(sub, pert_opts->bias);
        add_params(sub, pert_opts->params);
        sub->add_option("--sigma", pert_opts->sigma, "energy budget (0 = sigma_min)");
        sub->add_option("--samples", pert_opts->samples, "random candidates")
            ->check(CLI::PositiveNumber);
        sub->add_option("--sparsity", pert_opts->sparsity, "max dyads per candidate")
            ->check(CLI::PositiveNumber);
        sub->add_option("--top-k", pert_opts->top_k, "candidates reported")
            ->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", pert_opts->epsilon,
                        "polarization weight (<0 = 0.05 * threshold)");
        sub->add_option("--schemes", pert_opts->schemes, "comma list of schemes");
        sub->callback([&, pert_opts, pert_common] {
            guard("perturb", *pert_common, [&](RunContext& c) { cmd_perturb(*pert_opts, c); });
        });
    }

    // csd
    auto csd_opts = std::make_shared<CsdOpts>();
    auto csd_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("csd", "critical slowing down experiment");
        add_common(sub, *csd_common);
        add_bias(sub, csd_opts->bias);
        add_params(sub, csd_opts->params);
        add_sim(sub, csd_opts->sim);
        sub->add_option("--magnitudes", csd_opts->magnitudes, "impulse energies, comma list");
        sub->add_option("--auto-points", csd_opts->auto_points, "ladder size when auto");
        sub->add_flag("--destabilizing,!--no-destabilizing", csd_opts->include_destabilizing,
                      "append supercritical magnitudes in auto mode");
        sub->callback([&, csd_opts, csd_common] {
            guard("csd", *csd_common, [&](RunContext& c) { cmd_csd(*csd_opts, c); });
        });
    }

    // sensitivity
    auto sens_opts = std::make_shared<SensitivityOpts>();
    auto sens_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("sensitivity", "per-dyad lambda1/phi1 sensitivity scan");
        add_common(sub, *sens_common);
        add_bias(sub, sens_opts->bias);
        sub->add_option("--delta", sens_opts->deltas, "tie shift (repeatable; default -1 and 1)");
        sub->callback([&, sens_opts, sens_common] {
            guard("sensitivity", *sens_common,
                  [&](RunContext& c) { cmd_sensitivity(*sens_opts, c); });
        });
    }

    // spectra
    auto spec_opts = std::make_shared<SpectraOpts>();
    auto spec_common = std::make_shared<CommonOpts>();
    {
        CLI::App* sub = app.add_subcommand("spectra", "spectrum, modularity and polarization");
        add_common(sub, *spec_common);
        add_bias(sub, spec_opts->bias);
        sub->add_option("--eta-null", spec_opts->eta_null,
                        "null draws for balance eta (0 = skip)");
        sub->callback([&, spec_opts, spec_common] {
            guard("spectra", *spec_common, [&](RunContext& c) { cmd_spectra(*spec_opts, c); });
        });
    }

    // parent-level flags like --config remain usable after a subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return exit_code;
}
