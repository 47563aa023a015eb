#include <CLI11.hpp>

#include "cli_app.hpp"

using skindepth::cli::GridSpec;
using skindepth::cli::RunConfig;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& omega_g, std::string& q_g,
                std::string& a_g) {
    cmd->add_option("--material", cfg.material,
                    "preset name (gold|gold-force-fit|potassium) or config path");
    cmd->add_option("--model", cfg.model, "local|boltzmann|lindhard");
    cmd->add_option("--axis", cfg.axis, "real|imag");
    cmd->add_option("--omega-grid", omega_g, "start:stop:count:log|lin (dimensionless)");
    cmd->add_option("--q-grid", q_g, "start:stop:count:log|lin (dimensionless)");
    cmd->add_option("--a-grid", a_g, "start:stop:count:log|lin (nm)");
    cmd->add_option("--theta", cfg.theta_deg, "incidence angle, degrees");
    cmd->add_option("--geometry", cfg.geometry, "pp|sp");
    cmd->add_option("--radius-nm", cfg.radius_nm, "sphere radius, nm (sp geometry)");
    cmd->add_option("--tol", cfg.tol, "relative tolerance override");
    cmd->add_option("--override", cfg.override_mode, "perfect-conductor|local-f|none");
    cmd->add_option("--kf", cfg.k_fermi, "Fermi wave number ck_F/omega_p (lindhard)");
    cmd->add_option("--out", cfg.out_path, "output path (default stdout)");
    cmd->add_option("--format", cfg.format, "csv|json");
    cmd->add_option("--workers", cfg.workers,
                    "worker threads (default: SKINDEPTH_WORKERS, then hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal optical response, surface impedances and the Casimir force"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string omega_g, q_g, a_g;

    for (const char* name : {"eps", "impedance", "absorptance", "force", "correction",
                             "presets"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub, cfg, omega_g, q_g, a_g);
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return skindepth::cli::kExitUsage;
    }

    try {
        if (!omega_g.empty()) cfg.omega_grid = skindepth::cli::parse_grid(omega_g);
        if (!q_g.empty()) cfg.q_grid = skindepth::cli::parse_grid(q_g);
        if (!a_g.empty()) cfg.a_grid = skindepth::cli::parse_grid(a_g);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return skindepth::cli::kExitUsage;
    }

    return skindepth::cli::run_command(cfg);
}
