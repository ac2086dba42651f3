#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "signet/bifurcation.hpp"
#include "signet/csd.hpp"
#include "signet/dynamics.hpp"
#include "signet/ingest.hpp"
#include "signet/perturbation.hpp"
#include "signet/rng.hpp"
#include "signet/sbm.hpp"
#include "signet/spectral.hpp"
#include "svg.hpp"

namespace signet::cli {

namespace {

std::ofstream open_csv(RunContext& ctx, const std::string& name) {
    const auto path = ctx.output_path(name);
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

int node_index(const SignedNetwork& net, const std::string& token) {
    if (net.hasLabels()) {
        const auto& labels = net.labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == token) return static_cast<int>(i);
    }
    try {
        const int idx = std::stoi(token);
        if (idx >= 0 && idx < net.size()) return idx;
    } catch (...) {
    }
    throw ConfigError("unknown node '" + token + "'");
}

OrderedJson faction_split(const SignedNetwork& pattern) {
    // Node split read off the sign pattern's first row relative to itself.
    const Spectrum s = eigendecompose(pattern);
    const Vector v = s.leadingVector();
    OrderedJson positive = OrderedJson::array(), negative = OrderedJson::array();
    for (int i = 0; i < pattern.size(); ++i) {
        if (v(i) >= 0.0)
            positive.push_back(pattern.labelOf(i));
        else
            negative.push_back(pattern.labelOf(i));
    }
    return OrderedJson{{"positive", positive}, {"negative", negative}};
}

OrderedJson dyads_of(const SignedNetwork& net) {
    OrderedJson dyads = OrderedJson::array();
    for (int i = 0; i < net.size(); ++i)
        for (int j = i + 1; j < net.size(); ++j)
            if (net(i, j) != 0.0)
                dyads.push_back(OrderedJson{{"a", net.labelOf(i)},
                                            {"b", net.labelOf(j)},
                                            {"value", net(i, j)}});
    return dyads;
}

} // namespace

// ---------------------------------------------------------------- simulate

namespace {

struct ParsedImpulse {
    double sigma = 0.0;
    double t_on = 0.0;
    double t_off = 0.0;
    std::string dir = "lead"; ///< lead | dyad:A-B
};

ParsedImpulse parse_impulse(const std::string& text) {
    ParsedImpulse imp;
    std::stringstream ss(text);
    std::string field;
    bool have_sigma = false, have_on = false, have_off = false;
    while (std::getline(ss, field, ',')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw ConfigError("impulse field needs key=value: " + field);
        const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        try {
            if (key == "sigma") {
                imp.sigma = std::stod(value);
                have_sigma = true;
            } else if (key == "on") {
                imp.t_on = std::stod(value);
                have_on = true;
            } else if (key == "off") {
                imp.t_off = std::stod(value);
                have_off = true;
            } else if (key == "dir") {
                imp.dir = value;
            } else {
                throw ConfigError("unknown impulse key '" + key + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            throw ConfigError("malformed impulse value '" + value + "'");
        }
    }
    if (!have_sigma || !have_on || !have_off)
        throw ConfigError("impulse needs sigma=, on=, off=");
    if (!(imp.t_off > imp.t_on)) throw ConfigError("impulse needs off > on");
    if (imp.sigma < 0.0) throw ConfigError("impulse sigma must be nonnegative");
    return imp;
}

SignedNetwork impulse_direction(const ParsedImpulse& imp, const SignedNetwork& bias) {
    if (imp.dir == "lead") {
        const Spectrum s = eigendecompose(bias);
        const Vector v = s.leadingVector();
        return SignedNetwork::fromSymmetrized(v * v.transpose(), bias.labels());
    }
    if (imp.dir.rfind("dyad:", 0) == 0) {
        const std::string spec = imp.dir.substr(5);
        const auto dash = spec.find('-');
        if (dash == std::string::npos) throw ConfigError("dyad direction needs A-B");
        const int i = node_index(bias, spec.substr(0, dash));
        const int j = node_index(bias, spec.substr(dash + 1));
        if (i == j) throw ConfigError("dyad direction needs two distinct nodes");
        Matrix m = Matrix::Zero(bias.size(), bias.size());
        m(i, j) = m(j, i) = 1.0 / std::sqrt(2.0);
        return SignedNetwork::fromSymmetrized(std::move(m), bias.labels());
    }
    throw ConfigError("unknown impulse direction '" + imp.dir + "'");
}

} // namespace

void cmd_simulate(const SimulateOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    ctx.params["beta"] = opts.params.beta;
    ctx.params["L"] = opts.params.L;
    ctx.params["alpha"] = opts.params.alpha;
    ctx.params["alpha_schedule"] = opts.alpha_schedule;
    ctx.params["impulses"] = opts.impulses;

    // schedule segments: (start time, alpha)
    std::vector<std::pair<double, double>> segments{{0.0, opts.params.alpha}};
    if (!opts.alpha_schedule.empty()) {
        std::stringstream ss(opts.alpha_schedule);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const auto colon = cell.find(':');
            if (colon == std::string::npos)
                throw ConfigError("alpha schedule entries need t:alpha");
            try {
                segments.emplace_back(std::stod(cell.substr(0, colon)),
                                      std::stod(cell.substr(colon + 1)));
            } catch (...) {
                throw ConfigError("malformed schedule entry '" + cell + "'");
            }
        }
        for (std::size_t i = 1; i < segments.size(); ++i)
            if (!(segments[i].first > segments[i - 1].first))
                throw ConfigError("alpha schedule times must increase");
    }

    std::vector<ParsedImpulse> impulses;
    for (const auto& text : opts.impulses) impulses.push_back(parse_impulse(text));

    std::vector<double> snap_times;
    if (!opts.snap_times.empty()) snap_times = parse_double_list(opts.snap_times);
    std::sort(snap_times.begin(), snap_times.end());

    const SimConfig base_cfg = to_sim_config(opts.sim, opts.params, bias, ctx.seed);

    std::vector<double> times, stds, lambdas;
    std::vector<std::pair<double, SignedNetwork>> snapshots;
    OrderedJson segments_json = OrderedJson::array();

    SignedNetwork state = bias;
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const double seg_start = segments[k].first;
        const double seg_end = k + 1 < segments.size() ? segments[k + 1].first : opts.sim.t_end;
        if (!(seg_end > seg_start)) throw ConfigError("schedule exceeds t_end");
        const ModelParams params =
            to_model_params(ParamOpts{opts.params.beta, opts.params.L, segments[k].second});

        SimConfig cfg = base_cfg;
        cfg.t_end = seg_end - seg_start;
        cfg.snapshot_times.clear();
        for (double t : snap_times)
            if (t > seg_start && t <= seg_end) cfg.snapshot_times.push_back(t - seg_start);

        std::vector<PerturbationImpulse> active;
        for (const auto& imp : impulses) {
            const double lo = std::max(imp.t_on - seg_start, 0.0);
            const double hi = std::min(imp.t_off - seg_start, cfg.t_end);
            if (hi > lo)
                active.push_back(
                    PerturbationImpulse{impulse_direction(imp, bias), imp.sigma, lo, hi});
        }

        Trajectory traj = integrate(state, bias, params, active, cfg);
        for (std::size_t i = (k == 0 ? 0 : 1); i < traj.times.size(); ++i) {
            times.push_back(traj.times[i] + seg_start);
            stds.push_back(traj.tie_std_series[i]);
            lambdas.push_back(traj.lambda1_series[i]);
        }
        for (std::size_t i = 0; i < traj.snapshot_times.size(); ++i)
            snapshots.emplace_back(traj.snapshot_times[i] + seg_start, traj.snapshots[i]);

        state = traj.snapshots.back();
        segments_json.push_back(OrderedJson{
            {"t_start", seg_start},
            {"alpha", segments[k].second},
            {"converged", traj.converged},
            {"classification",
             to_string(classify_state(state, bias, traj.converged, traj.diverged))},
            {"tie_std", tie_std(state)},
            {"lambda1", eigendecompose(state).leading()}});
        if (traj.diverged) break;
    }

    {
        auto out = open_csv(ctx, "trajectory.csv");
        out << "t,tie_std,lambda1\n";
        for (std::size_t i = 0; i < times.size(); ++i)
            out << format17(times[i]) << ',' << format17(stds[i]) << ','
                << format17(lambdas[i]) << '\n';
    }
    for (double want : snap_times) {
        const SignedNetwork* best = nullptr;
        double best_t = 0.0;
        for (const auto& [t, net] : snapshots)
            if (t >= want && (best == nullptr || t < best_t)) {
                best = &net;
                best_t = t;
            }
        if (best) {
            std::ostringstream name;
            name << "snapshot_t" << want << ".csv";
            write_matrix_csv_file(ctx.output_path(name.str()).string(), *best);
        }
    }
    ctx.write_json("result.json", OrderedJson{{"segments", segments_json}});

    if (ctx.plot) {
        SvgFigure fig("tie dispersion over time", "t", "sigma(X)");
        fig.addLine(times, stds, "#1f77b4");
        for (std::size_t k = 1; k < segments.size(); ++k)
            fig.addVLine(segments[k].first, "#888888");
        fig.write(ctx.output_path("trajectory.svg").string());

        SvgFigure fig2("leading eigenvalue over time", "t", "lambda1");
        fig2.addLine(times, lambdas, "#d62728");
        for (std::size_t k = 1; k < segments.size(); ++k)
            fig2.addVLine(segments[k].first, "#888888");
        fig2.write(ctx.output_path("lambda1.svg").string());
    }
}

// ------------------------------------------------------------------- sweep

void cmd_sweep(const SweepOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    const ModelParams params = to_model_params(
        ParamOpts{opts.params.beta, opts.params.L, opts.params.alpha > 0 ? opts.params.alpha : 1.0});

    std::vector<double> grid;
    if (!opts.alpha_grid.empty()) {
        grid = parse_double_list(opts.alpha_grid);
    } else {
        if (!(opts.alpha_max > opts.alpha_min) || opts.alpha_steps < 2)
            throw ConfigError("sweep needs --alpha-grid or alpha-min < alpha-max with steps >= 2");
        for (int i = 0; i < opts.alpha_steps; ++i)
            grid.push_back(opts.alpha_min +
                           (opts.alpha_max - opts.alpha_min) * i / (opts.alpha_steps - 1));
    }
    for (double a : grid)
        if (!(a > 0.0)) throw ConfigError("sweep alphas must be positive");
    std::sort(grid.begin(), grid.end());

    ctx.params["beta"] = opts.params.beta;
    ctx.params["L"] = opts.params.L;
    ctx.params["alpha_grid"] = grid;
    ctx.params["direction"] = opts.direction;

    const SimConfig cfg = to_sim_config(opts.sim, opts.params, bias, ctx.seed);
    const double lambda_d1 = eigendecompose(bias).leading();

    std::vector<SweepPoint> up, down;
    if (opts.direction == "up" || opts.direction == "both")
        up = sweep_alpha(bias, params, grid, cfg, SweepDirection::Up);
    if (opts.direction == "down" || opts.direction == "both") {
        std::optional<SignedNetwork> start;
        if (!up.empty()) start = up.back().report.state;
        down = sweep_alpha(bias, params, grid, cfg, SweepDirection::Down, start);
    }
    if (opts.direction != "up" && opts.direction != "down" && opts.direction != "both")
        throw ConfigError("direction must be up, down or both");

    {
        auto out = open_csv(ctx, "sweep.csv");
        out << "direction,alpha,classification,tie_std";
        for (int i = 1; i <= bias.size(); ++i) out << ",lambda_" << i;
        out << '\n';
        auto dump = [&](const char* dir, const std::vector<SweepPoint>& pts) {
            for (const auto& p : pts) {
                out << dir << ',' << format17(p.alpha) << ','
                    << to_string(p.report.classification) << ',' << format17(p.report.tie_std);
                for (int i = 0; i < p.report.spectrum.size(); ++i)
                    out << ',' << format17(p.report.spectrum(i));
                out << '\n';
            }
        };
        dump("up", up);
        dump("down", down);
    }

    OrderedJson summary;
    summary["lambda_D1"] = lambda_d1;
    summary["alpha_peace_to_war_predicted"] = alpha_peace_to_war(opts.params.beta, lambda_d1);
    summary["alpha_war_to_peace_predicted"] =
        alpha_war_to_peace(opts.params.beta, opts.params.L, bias.size(), lambda_d1);
    auto jump_json = [](const std::vector<SweepPoint>& pts) -> OrderedJson {
        const auto loc = locate_jump(pts);
        if (!loc) return nullptr;
        return OrderedJson{{"alpha_before", loc->alpha_before},
                           {"alpha_after", loc->alpha_after},
                           {"alpha_mid", loc->alpha_mid},
                           {"delta_tie_std", loc->delta_tie_std}};
    };
    if (!up.empty()) summary["jump_up"] = jump_json(up);
    if (!down.empty()) summary["jump_down"] = jump_json(down);
    ctx.write_json("sweep.json", summary);

    if (ctx.plot) {
        SvgFigure fig("hysteresis sweep", "alpha", "sigma(X)");
        auto line = [&](const std::vector<SweepPoint>& pts, const char* color) {
            if (pts.empty()) return;
            std::vector<double> xs, ys;
            for (const auto& p : pts) {
                xs.push_back(p.alpha);
                ys.push_back(p.report.tie_std);
            }
            fig.addLine(xs, ys, color);
        };
        line(up, "#1f77b4");
        line(down, "#d62728");
        fig.addVLine(summary["alpha_peace_to_war_predicted"].get<double>(), "#555555");
        fig.addVLine(summary["alpha_war_to_peace_predicted"].get<double>(), "#999999");
        fig.write(ctx.output_path("hysteresis.svg").string());

        SvgFigure spec_fig("equilibrium spectra vs alpha", "alpha", "lambda_i");
        std::vector<double> xs, ys;
        for (const auto& p : (up.empty() ? down : up))
            for (int i = 0; i < p.report.spectrum.size(); ++i) {
                xs.push_back(p.alpha);
                ys.push_back(p.report.spectrum(i));
            }
        spec_fig.addScatter(xs, ys, "#1f77b4");
        // analytic peace-state leading eigenvalue, where it exists
        std::vector<double> cx, cy;
        const double a_star = alpha_peace_to_war(opts.params.beta, lambda_d1);
        for (int i = 0; i <= 200; ++i) {
            const double a = grid.front() + (std::min(grid.back(), a_star) - grid.front()) * i / 200.0;
            if (a <= 0.0 || a > a_star) continue;
            cx.push_back(a);
            cy.push_back(lambda_peace(a, opts.params.beta, lambda_d1));
        }
        spec_fig.addLine(cx, cy, "#2ca02c", true);
        spec_fig.addVLine(a_star, "#555555");
        spec_fig.write(ctx.output_path("spectra_vs_alpha.svg").string());
    }
}

// ------------------------------------------------------------------ regime

void cmd_regime(const RegimeOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    const ModelParams params = to_model_params(opts.params);
    ctx.params["beta"] = opts.params.beta;
    ctx.params["L"] = opts.params.L;
    ctx.params["alpha"] = opts.params.alpha;

    const double lambda_d1 = eigendecompose(bias).leading();
    const RegimeReport rep = classify_regime(params, lambda_d1, bias.size());
    ctx.write_json("regime.json",
                   OrderedJson{{"lambda_D1", lambda_d1},
                               {"alpha", params.alpha()},
                               {"alpha_peace_to_war", rep.alpha_peace_to_war},
                               {"alpha_war_to_peace", rep.alpha_war_to_peace},
                               {"regime", to_string(rep.regime)}});
    std::cout << to_string(rep.regime) << '\n';
}

// --------------------------------------------------------------------- sbm

void cmd_sbm(const SbmOpts& opts, RunContext& ctx) {
    ctx.params["n"] = opts.n;
    ctx.params["d_in"] = opts.d_in;
    ctx.params["d_out"] = opts.d_out;
    ctx.params["p_in_plus"] = opts.p_in_plus;
    ctx.params["p_out_plus"] = opts.p_out_plus;

    auto summarize = [&](const BlockModelParams& p) {
        const SignalSummary sum = signal_summary(p);
        const SignedNetwork net = generate_block_model(p);
        const int n = p.n;
        Vector u_h = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
        Vector u_c(n);
        for (int i = 0; i < n; ++i) u_c(i) = (i < n / 2 ? 1.0 : -1.0) / std::sqrt(double(n));
        const double proj_h = u_h.dot(net.weights() * u_h);
        const double proj_c = u_c.dot(net.weights() * u_c);
        const double lambda1 = eigendecompose(net).leading();
        return std::make_tuple(sum, net, proj_h, proj_c, lambda1);
    };

    BlockModelParams base{opts.n, opts.d_in, opts.d_out, opts.p_in_plus, opts.p_out_plus,
                          ctx.seed};
    try {
        base.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    auto [sum, net, proj_h, proj_c, lambda1] = summarize(base);
    write_matrix_csv_file(ctx.output_path("sbm_matrix.csv").string(), net);
    ctx.write_json("signal.json",
                   OrderedJson{{"omega", sum.omega},
                               {"mu", sum.mu},
                               {"lambda_H", sum.lambda_h},
                               {"lambda_C", sum.lambda_c},
                               {"noise_sigma", sum.noise_sigma},
                               {"band_edge", sum.band_edge},
                               {"detectability", to_string(detectability_check(sum))},
                               {"empirical",
                                OrderedJson{{"lambda1", lambda1},
                                            {"proj_H", proj_h},
                                            {"proj_C", proj_c}}}});

    if (!opts.p_out_sweep.empty()) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        if (std::sscanf(opts.p_out_sweep.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 ||
            count < 2 || !(hi > lo))
            throw ConfigError("p-out-sweep needs lo:hi:count with count >= 2");
        ctx.params["p_out_sweep"] = opts.p_out_sweep;
        auto out = open_csv(ctx, "sbm_sweep.csv");
        out << "p_out_plus,lambda_C,lambda_H,band_edge,proj_C,proj_H,lambda1,detectability\n";
        std::vector<double> xs, lc, lh, be, l1;
        for (int i = 0; i < count; ++i) {
            BlockModelParams p = base;
            p.p_out_plus = lo + (hi - lo) * i / (count - 1);
            p.seed = derive_seed(ctx.seed, static_cast<std::uint64_t>(i));
            auto [s, n2, ph, pc, l] = summarize(p);
            out << format17(p.p_out_plus) << ',' << format17(s.lambda_c) << ','
                << format17(s.lambda_h) << ',' << format17(s.band_edge) << ','
                << format17(pc) << ',' << format17(ph) << ',' << format17(l) << ','
                << to_string(detectability_check(s)) << '\n';
            xs.push_back(p.p_out_plus);
            lc.push_back(s.lambda_c);
            lh.push_back(s.lambda_h);
            be.push_back(s.band_edge);
            l1.push_back(l);
        }
        if (ctx.plot) {
            SvgFigure fig("block-model signal structure", "p_out_plus", "eigenvalue");
            fig.addLine(xs, lc, "#d62728");
            fig.addLine(xs, lh, "#1f77b4");
            fig.addLine(xs, be, "#555555", true);
            fig.addScatter(xs, l1, "#2ca02c");
            fig.write(ctx.output_path("sbm_sweep.svg").string());
        }
    }

    if (ctx.plot) write_heatmap_svg(ctx.output_path("sbm_matrix.svg").string(), net, "bias matrix");
}

// ----------------------------------------------------------------- perturb

void cmd_perturb(const PerturbOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    ctx.params["beta"] = opts.params.beta;
    ctx.params["L"] = opts.params.L;
    ctx.params["alpha"] = opts.params.alpha;
    ctx.params["samples"] = opts.samples;
    ctx.params["sparsity"] = opts.sparsity;

    const double beta = opts.params.beta, alpha = opts.params.alpha;
    const MinEnergyResult me = min_energy_perturbation(bias, alpha, beta);
    const double lambda_d1 = eigendecompose(bias).leading();
    const double sigma = opts.sigma > 0.0 ? opts.sigma : me.sigma_min;

    int top_k = opts.top_k;
    if (top_k > opts.samples) {
        std::cerr << "warning: top-k clamped to n_samples (" << opts.samples << ")\n";
        top_k = opts.samples;
    }

    OrderedJson doc;
    doc["lambda_D1"] = lambda_d1;
    doc["lambda_tilde_star"] = critical_lambda_tilde(alpha, beta);
    doc["sigma_min"] = me.sigma_min;
    doc["sigma_used"] = sigma;
    doc["min_energy_direction"] = dyads_of(me.direction);

    std::map<std::string, SchemeKind> kinds{{"energy", SchemeKind::EnergyMin},
                                            {"polarizing", SchemeKind::Polarizing},
                                            {"harmonizing", SchemeKind::Harmonizing}};
    OrderedJson schemes_json = OrderedJson::object();
    std::stringstream ss(opts.schemes);
    std::string name;
    while (std::getline(ss, name, ',')) {
        const auto it = kinds.find(name);
        if (it == kinds.end()) throw ConfigError("unknown scheme '" + name + "'");
        PerturbationScheme scheme;
        scheme.kind = it->second;
        scheme.sigma = sigma;
        scheme.epsilon = opts.epsilon;
        scheme.n_samples = opts.samples;
        scheme.sparsity = opts.sparsity;
        scheme.seed = ctx.seed;
        scheme.top_k = top_k;
        const auto results = optimize_direction(bias, alpha, beta, scheme, ctx.jobs);
        OrderedJson arr = OrderedJson::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            arr.push_back(OrderedJson{{"objective", r.objective},
                                      {"error", r.error},
                                      {"destabilizes", r.destabilizes},
                                      {"dyads", dyads_of(r.direction)},
                                      {"predicted_split", faction_split(r.predicted_final)}});
            if (ctx.plot) {
                std::ostringstream fname;
                fname << "perturb_" << name << "_" << i + 1 << ".svg";
                write_heatmap_svg(ctx.output_path(fname.str()).string(), r.direction,
                                  name + " candidate " + std::to_string(i + 1));
            }
        }
        schemes_json[name] = arr;
    }
    doc["schemes"] = schemes_json;
    ctx.write_json("perturb.json", doc);

    if (ctx.plot)
        write_heatmap_svg(ctx.output_path("min_energy_direction.svg").string(), me.direction,
                          "minimum-energy direction");
}

// --------------------------------------------------------------------- csd

void cmd_csd(const CsdOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    const ModelParams params = to_model_params(opts.params);
    const SimConfig cfg = to_sim_config(opts.sim, opts.params, bias, ctx.seed);
    ctx.params["beta"] = opts.params.beta;
    ctx.params["L"] = opts.params.L;
    ctx.params["alpha"] = opts.params.alpha;

    std::vector<double> magnitudes;
    if (!opts.magnitudes.empty()) {
        magnitudes = parse_double_list(opts.magnitudes);
    } else {
        const double lambda_d1 = eigendecompose(bias).leading();
        const double sigma_min =
            params.beta * (critical_lambda_tilde(params.alpha(), params.beta) - lambda_d1);
        if (!(sigma_min > 0.0))
            throw AlreadyUnstableError("csd: system already past the bifurcation");
        if (opts.auto_points < 2) throw ConfigError("auto-points must be >= 2");
        // geometric ladder of remaining distances, 90% down to 6.5%
        const double top = 0.9, bottom = 0.065;
        for (int i = 0; i < opts.auto_points; ++i) {
            const double frac =
                top * std::pow(bottom / top, double(i) / (opts.auto_points - 1));
            magnitudes.push_back(sigma_min * (1.0 - frac));
        }
        if (opts.include_destabilizing) {
            magnitudes.push_back(sigma_min * 1.05);
            magnitudes.push_back(sigma_min * 1.25);
        }
    }
    ctx.params["magnitudes"] = magnitudes;

    const auto points = csd_experiment(bias, params, magnitudes, cfg);

    {
        auto out = open_csv(ctx, "csd.csv");
        out << "magnitude,d,r,converged\n";
        for (const auto& p : points)
            out << format17(p.magnitude) << ',' << format17(p.d) << ','
                << (p.converged ? format17(p.r) : std::string("nan")) << ','
                << (p.converged ? "true" : "false") << '\n';
    }

    OrderedJson doc;
    doc["n_points"] = points.size();
    std::vector<double> ds, rs;
    for (const auto& p : points)
        if (p.converged && p.d > 0.0) {
            ds.push_back(p.d);
            rs.push_back(p.r);
        }
    doc["n_converged"] = ds.size();
    const PowerLawFit fit = fit_power_law(points); // throws InsufficientPoints when too few
    doc["fit"] = OrderedJson{{"exponent", fit.exponent}, {"prefactor_log", fit.prefactor_log}};
    if (ds.size() >= 2) doc["spearman_r_d"] = spearman_rank_correlation(ds, rs);
    ctx.write_json("csd.json", doc);

    if (ctx.plot) {
        SvgFigure fig("critical slowing down", "d", "r");
        fig.useLogLog();
        fig.addScatter(ds, rs, "#1f77b4");
        std::vector<double> fx, fy;
        if (!ds.empty()) {
            const auto [dmin, dmax] = std::minmax_element(ds.begin(), ds.end());
            for (int i = 0; i <= 50; ++i) {
                const double d = *dmin * std::pow(*dmax / *dmin, i / 50.0);
                fx.push_back(d);
                fy.push_back(std::exp(fit.prefactor_log) * std::pow(d, fit.exponent));
            }
            fig.addLine(fx, fy, "#d62728", true);
        }
        fig.write(ctx.output_path("csd_loglog.svg").string());
    }
}

// ------------------------------------------------------------- sensitivity

void cmd_sensitivity(const SensitivityOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    std::vector<double> deltas = opts.deltas;
    if (deltas.empty()) deltas = {-1.0, 1.0};
    for (double d : deltas)
        if (d == 0.0) throw ConfigError("sensitivity delta must be nonzero");
    ctx.params["deltas"] = deltas;

    OrderedJson scans = OrderedJson::array();
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        const EdgeSensitivity scan = edge_sensitivity_scan(bias, deltas[k], ctx.jobs);
        std::ostringstream tag;
        tag << "delta" << k;
        write_matrix_csv_file(ctx.output_path("dlambda_" + tag.str() + ".csv").string(),
                              scan.d_lambda1);
        write_matrix_csv_file(ctx.output_path("dphi_" + tag.str() + ".csv").string(),
                              scan.d_phi1);

        struct Row {
            int i, j;
            double dl, dp;
        };
        std::vector<Row> rows;
        for (int i = 0; i < bias.size(); ++i)
            for (int j = i + 1; j < bias.size(); ++j)
                rows.push_back({i, j, scan.d_lambda1(i, j), scan.d_phi1(i, j)});
        std::sort(rows.begin(), rows.end(),
                  [](const Row& a, const Row& b) { return std::abs(a.dl) > std::abs(b.dl); });
        OrderedJson ranking = OrderedJson::array();
        for (const auto& r : rows)
            ranking.push_back(OrderedJson{{"a", bias.labelOf(r.i)},
                                          {"b", bias.labelOf(r.j)},
                                          {"d_lambda1", r.dl},
                                          {"d_phi1", r.dp}});
        scans.push_back(OrderedJson{{"delta", deltas[k]},
                                    {"files",
                                     {"dlambda_" + tag.str() + ".csv",
                                      "dphi_" + tag.str() + ".csv"}},
                                    {"ranking_by_abs_dlambda", ranking}});
        if (ctx.plot) {
            write_heatmap_svg(ctx.output_path("dlambda_" + tag.str() + ".svg").string(),
                              scan.d_lambda1, "d lambda1, delta=" + format17(deltas[k]));
            write_heatmap_svg(ctx.output_path("dphi_" + tag.str() + ".svg").string(),
                              scan.d_phi1, "d phi1, delta=" + format17(deltas[k]));
        }
    }
    ctx.write_json("sensitivity.json", OrderedJson{{"scans", scans}});
}

// ----------------------------------------------------------------- spectra

void cmd_spectra(const SpectraOpts& opts, RunContext& ctx) {
    const SignedNetwork bias = resolve_bias(opts.bias, ctx);
    const Spectrum s = eigendecompose(bias);
    const SignedNetwork mod = modularity_matrix(bias);
    const Spectrum sm = eigendecompose(mod);

    std::vector<double> phis;
    for (int i = 0; i < bias.size(); ++i) phis.push_back(eigenvector_polarization(bias, i));

    {
        auto out = open_csv(ctx, "spectra.csv");
        out << "index,eigenvalue,modularity_eigenvalue,phi\n";
        for (int i = 0; i < bias.size(); ++i)
            out << i + 1 << ',' << format17(s.eigenvalues(i)) << ','
                << format17(sm.eigenvalues(i)) << ',' << format17(phis[i]) << '\n';
    }

    const bool phi1_max =
        std::max_element(phis.begin(), phis.end()) == phis.begin();
    OrderedJson doc{{"lambda_D1", s.leading()}, {"phi1_is_largest", phi1_max}};
    if (opts.eta_null > 0)
        doc["balance_eta"] = balance_eta(bias, opts.eta_null, ctx.seed);
    ctx.write_json("spectra.json", doc);

    if (ctx.plot) {
        SvgFigure fig("spectrum and polarization", "index", "value");
        std::vector<double> idx;
        for (int i = 0; i < bias.size(); ++i) idx.push_back(i + 1);
        std::vector<double> ev(s.eigenvalues.data(), s.eigenvalues.data() + bias.size());
        std::vector<double> mv(sm.eigenvalues.data(), sm.eigenvalues.data() + bias.size());
        fig.addScatter(idx, ev, "#1f77b4");
        fig.addScatter(idx, mv, "#d62728");
        fig.addScatter(idx, phis, "#2ca02c");
        fig.write(ctx.output_path("spectra.svg").string());
        write_heatmap_svg(ctx.output_path("bias_heatmap.svg").string(), bias, "bias matrix");
    }
}

} // namespace signet::cli
