#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stit/config.hpp"
#include "stit/exact.hpp"
#include "stit/experiments.hpp"
#include "stit/mnw.hpp"
#include "stit/render.hpp"
#include "stit/serialize.hpp"

using nlohmann::json;

namespace {

int cmd_simulate(const stit::ExperimentConfig& cfg, const std::string& out) {
    stit::RngStream rng(cfg.seed, 0, 0);
    auto state = stit::run_mnw(cfg.make_window(cfg.window_size), cfg.make_spec(),
                               cfg.t, rng);
    json j = stit::tessellation_to_json(state);
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        stit::write_json_file(j, out);
    std::cerr << state.cells().size() << " cells, "
              << state.maximal_polytopes().size() << " facets\n";
    return 0;
}

int cmd_render(const std::string& in, const std::string& format,
               const std::string& out) {
    auto t = stit::tessellation_from_json(stit::read_json_file(in));
    stit::render_to_file(t, format, out);
    return 0;
}

int cmd_exact(const stit::ExperimentConfig& cfg, const std::string& quantity,
              double s) {
    auto spec = cfg.make_spec();
    auto w = cfg.make_window(cfg.window_size);
    auto phi = cfg.make_functional();
    json j;
    if (quantity == "variance") {
        auto r = stit::variance_exact(spec, w, cfg.t, phi, cfg.integrator);
        j = {{"quantity", "variance"},
             {"value", r.value},
             {"error_estimate", r.error_estimate},
             {"uncorrected", r.uncorrected}};
    } else if (quantity == "xi") {
        auto r = stit::xi_variance(spec, w, phi, cfg.integrator);
        j = {{"quantity", "xi_variance"},
             {"value", r.value},
             {"error_estimate", r.error_estimate},
             {"uncorrected", r.uncorrected}};
    } else if (quantity == "vw") {
        if (cfg.measure == "isotropic" && cfg.functional == "total_surface") {
            j = {{"quantity", "v_w"},
                 {"value", stit::v_w_isotropic(cfg.dim, w.volume(), 1.0)},
                 {"method", "closed form"}};
        } else {
            stit::RngStream rng(cfg.seed, 0, 0);
            double big_r = cfg.r_list.empty() ? 16.0 : cfg.r_list.back();
            auto r = stit::v_w_empirical(spec, w, phi, big_r,
                                         cfg.replications, rng);
            j = {{"quantity", "v_w"},
                 {"value", r.value},
                 {"error_estimate", r.std_error},
                 {"method", "simulation"},
                 {"R", big_r}};
        }
    } else if (quantity == "tau") {
        double big_r = cfg.r_list.empty() ? 16.0 : cfg.r_list.back();
        j = {{"quantity", "tau"},
             {"s", s},
             {"R", big_r},
             {"value", stit::tau(s, big_r)}};
    } else {
        std::cerr << "unknown quantity: " << quantity << "\n";
        return 1;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_experiment(stit::ExperimentConfig cfg, const std::string& out_dir) {
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    cfg.validate();
    auto result = stit::run_experiment(cfg);
    stit::write_result(result, cfg);
    std::cout << result.data.dump(2) << "\n";
    return result.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"STIT tessellation simulator"};
    app.require_subcommand(1);

    stit::ExperimentConfig cfg;
    std::string config_path, out, in, format = "svg", quantity = "variance";
    double tau_s = 0.5;

    auto add_model_opts = [&](CLI::App* sub) {
        sub->add_option("--dim", cfg.dim, "ambient dimension (2 or 3)");
        sub->add_option("--measure", cfg.measure, "isotropic | axis_aligned");
        sub->add_option("--window", cfg.window, "box | ball");
        sub->add_option("--size", cfg.window_size, "window side/radius");
        sub->add_option("--t", cfg.t, "time horizon");
        sub->add_option("--seed", cfg.seed, "master seed");
    };

    auto* sim = app.add_subcommand("simulate", "run one tessellation");
    add_model_opts(sim);
    sim->add_option("--out", out, "output JSON path (default stdout)");

    auto* ren = app.add_subcommand("render", "render a saved tessellation");
    ren->add_option("--in", in, "input JSON path")->required();
    ren->add_option("--format", format, "svg | obj");
    ren->add_option("--out", out, "output path")->required();

    auto* exa = app.add_subcommand("exact", "reference-value integrals");
    exa->add_option("--quantity", quantity, "variance | xi | vw | tau");
    exa->add_option("--config", config_path, "TOML config file");
    exa->add_option("--s", tau_s, "argument for tau");
    add_model_opts(exa);

    auto* exp = app.add_subcommand("experiment", "run a statistical experiment");
    exp->add_option("name", cfg.name, "experiment name (overrides config)");
    exp->add_option("--config", config_path, "TOML config file")->required();
    exp->add_option("--out", out, "output directory");
    exp->add_option("--workers", cfg.workers, "worker threads");
    exp->add_option("--seed", cfg.seed, "master seed override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(cfg, out);
        if (ren->parsed()) return cmd_render(in, format, out);
        if (exa->parsed()) {
            if (!config_path.empty())
                cfg = stit::ExperimentConfig::from_toml_file(config_path);
            return cmd_exact(cfg, quantity, tau_s);
        }
        if (exp->parsed()) {
            auto file_cfg = stit::ExperimentConfig::from_toml_file(config_path);
            if (!cfg.name.empty()) file_cfg.name = cfg.name;
            if (exp->count("--workers")) file_cfg.workers = cfg.workers;
            if (exp->count("--seed")) file_cfg.seed = cfg.seed;
            return cmd_experiment(file_cfg, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
