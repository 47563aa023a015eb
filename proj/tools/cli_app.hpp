#pragma once

#include <optional>
#include <string>
#include <vector>

namespace skindepth::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnsupported = 2;
inline constexpr int kExitPartial = 3;

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log_spaced = true;
    bool is_set = false;

    std::vector<double> points() const;
};

// Parses "start:stop:count:log|lin"; throws DomainError on bad shape.
GridSpec parse_grid(const std::string& text);

struct RunConfig {
    std::string command;            // eps|impedance|absorptance|force|correction|presets
    std::string material = "gold";  // preset name or config-file path
    std::string model = "boltzmann";
    std::string axis = "imag";
    GridSpec omega_grid;
    GridSpec q_grid;
    GridSpec a_grid;  // nm
    double theta_deg = 0.0;
    std::string geometry = "pp";  // pp|sp
    double radius_nm = 0.0;
    double tol = 0.0;  // 0 = module defaults
    std::string override_mode = "none";  // none|perfect-conductor|local-f
    double k_fermi = 0.0;  // dimensionless ck_F/omega_p (lindhard)
    std::string out_path;  // empty = stdout
    std::string format = "csv";
    int workers = 0;  // 0 = SKINDEPTH_WORKERS env, then hardware
};

// Tabular output: cells are pre-formatted (12 significant digits); an
// unconverged numeric cell is empty and the row's flag column is 0.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
std::string format_cell(double v);

// Runs a fully-validated config; returns the process exit code.
int run_command(const RunConfig& cfg);

// Like run_command but hands the table back (used by tests).
int run_command(const RunConfig& cfg, Table* out_table);

int resolve_workers(int flag_value);

}  // namespace skindepth::cli
