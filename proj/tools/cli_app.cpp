#include "cli_app.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "skindepth/force.hpp"
#include "skindepth/optics.hpp"

namespace skindepth::cli {

namespace {

using nlohmann::json;

MaterialParams resolve_material(const std::string& spec) {
    for (const auto& name : preset_names())
        if (spec == name) return preset(spec);
    return load_material_config(spec);
}

ResponseModel parse_model(const std::string& m) {
    if (m == "local") return ResponseModel::local;
    if (m == "boltzmann") return ResponseModel::boltzmann;
    if (m == "lindhard") return ResponseModel::lindhard;
    throw DomainError("unknown model '" + m + "' (local|boltzmann|lindhard)");
}

FrequencyAxis parse_axis(const std::string& a) {
    if (a == "real") return FrequencyAxis::real;
    if (a == "imag") return FrequencyAxis::imaginary;
    throw DomainError("unknown axis '" + a + "' (real|imag)");
}

// Deterministic work-stealing over grid indices; results land in
// pre-assigned slots so the merge order never depends on the worker count.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(count - 1);
    for (int w = 1; w < count; ++w) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
}

struct RowBuild {
    std::vector<std::string> cells;
    bool converged = true;
    bool unsupported = false;
    std::string error_text;
};

void push_num(RowBuild& row, double v, bool ok = true) {
    if (ok && std::isfinite(v))
        row.cells.push_back(format_cell(v));
    else
        row.cells.emplace_back();  // empty cell, flagged by the converged column
}

int emit(const RunConfig& cfg, const Table& t, Table* out_table, bool all_converged) {
    if (out_table) *out_table = t;
    const std::string text = cfg.format == "json" ? to_json(t) : to_csv(t);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << cfg.out_path << "'\n";
            return kExitUsage;
        }
        out << text;
    }
    return all_converged ? kExitOk : kExitPartial;
}

GridSpec require_grid(const GridSpec& g, const char* flag) {
    if (!g.is_set) throw DomainError(std::string("missing required ") + flag);
    return g;
}

int cmd_presets(const RunConfig& cfg, Table* out_table) {
    Table t;
    t.columns = {"name", "omega_p_rad_s", "gamma", "v_f_over_c", "penetration_depth_nm"};
    for (const auto& name : preset_names()) {
        auto m = preset(name);
        t.rows.push_back({name, format_cell(m.omega_p), format_cell(m.gamma),
                          format_cell(m.v_f_over_c), format_cell(penetration_depth_nm(m))});
    }
    return emit(cfg, t, out_table, true);
}

int cmd_eps(const RunConfig& cfg, Table* out_table) {
    const auto mat = resolve_material(cfg.material);
    const auto model = parse_model(cfg.model);
    const auto axis = parse_axis(cfg.axis);
    if (model == ResponseModel::lindhard && axis == FrequencyAxis::imaginary)
        throw UnsupportedError("lindhard dielectric functions are real-axis only");
    if (model == ResponseModel::lindhard && !(cfg.k_fermi > 0.0))
        throw DomainError("lindhard model requires --kf > 0");

    const auto omegas = require_grid(cfg.omega_grid, "--omega-grid").points();
    const auto ks = require_grid(cfg.q_grid, "--q-grid (wave-vector grid for eps)").points();

    Table t;
    t.columns = {"omega", "k", "model", "axis", "eps_l_re", "eps_l_im",
                 "eps_t_re", "eps_t_im", "converged"};
    std::vector<RowBuild> rows(omegas.size() * ks.size());

    parallel_for(rows.size(), resolve_workers(cfg.workers), [&](std::size_t idx) {
        const double omega = omegas[idx / ks.size()];
        const double k = ks[idx % ks.size()];
        RowBuild& row = rows[idx];
        row.cells = {format_cell(omega), format_cell(k), cfg.model, cfg.axis};
        std::complex<double> el, et;
        if (model == ResponseModel::local) {
            const ResponsePoint p{axis, omega, 0.0};
            el = et = drude_local(p, mat);
        } else if (axis == FrequencyAxis::imaginary) {
            const double v = mat.v_f_over_c * k / (omega + mat.gamma);
            auto d = boltzmann_imag(omega, v, mat);
            el = d.eps_l;
            et = d.eps_t;
        } else if (model == ResponseModel::boltzmann) {
            auto d = boltzmann_real(omega, k, mat);
            el = d.eps_l;
            et = d.eps_t;
        } else {
            auto d = lindhard_real(omega, k, cfg.k_fermi, mat);
            el = d.eps_l;
            et = d.eps_t;
        }
        push_num(row, el.real());
        push_num(row, el.imag());
        push_num(row, et.real());
        push_num(row, et.imag());
        row.cells.push_back("1");
    });

    for (auto& r : rows) t.rows.push_back(std::move(r.cells));
    return emit(cfg, t, out_table, true);
}

int cmd_impedance(const RunConfig& cfg, Table* out_table) {
    const auto mat = resolve_material(cfg.material);
    const auto model = parse_model(cfg.model);
    const auto axis = parse_axis(cfg.axis);
    if (model == ResponseModel::lindhard && axis == FrequencyAxis::imaginary)
        throw UnsupportedError("lindhard impedances are real-axis only");

    ImpedanceOptions opts;
    opts.model = model;
    opts.k_fermi = cfg.k_fermi;
    if (cfg.tol > 0.0) opts.rel_tol = cfg.tol;
    if (cfg.override_mode == "local-f") opts.f_override = FOverride::unit;

    const auto omegas = require_grid(cfg.omega_grid, "--omega-grid").points();
    const auto qs = require_grid(cfg.q_grid, "--q-grid").points();

    Table t;
    t.columns = {"omega", "Q",        "model",    "axis",  "z_s_re", "z_s_im",
                 "z_p_re", "z_p_im",  "omega_z_p_re", "omega_z_p_im", "err_s",  "err_p",
                 "converged"};
    std::vector<RowBuild> rows(omegas.size() * qs.size());

    parallel_for(rows.size(), resolve_workers(cfg.workers), [&](std::size_t idx) {
        const double omega = omegas[idx / qs.size()];
        const double q = qs[idx % qs.size()];
        RowBuild& row = rows[idx];
        row.cells = {format_cell(omega), format_cell(q), cfg.model, cfg.axis};
        const ResponsePoint p{axis, omega, q};
        ImpedancePair z;
        if (model == ResponseModel::local)
            z = local_pair(p, mat);
        else if (axis == FrequencyAxis::imaginary)
            z = nonlocal_pair_imag(p, mat, opts);
        else
            z = nonlocal_pair_real(p, mat, opts);
        row.converged = z.converged;
        push_num(row, z.z_s.real(), z.converged);
        push_num(row, z.z_s.imag(), z.converged);
        push_num(row, z.z_p.real(), z.converged);
        push_num(row, z.z_p.imag(), z.converged);
        push_num(row, z.omega_z_p.real(), z.converged);
        push_num(row, z.omega_z_p.imag(), z.converged);
        push_num(row, z.err_s);
        push_num(row, z.err_p);
        row.cells.push_back(z.converged ? "1" : "0");
    });

    bool all_ok = true;
    for (auto& r : rows) {
        all_ok = all_ok && r.converged;
        t.rows.push_back(std::move(r.cells));
    }
    return emit(cfg, t, out_table, all_ok);
}

int cmd_absorptance(const RunConfig& cfg, Table* out_table) {
    const auto mat = resolve_material(cfg.material);
    const auto model = parse_model(cfg.model);
    if (model == ResponseModel::local)
        throw DomainError("absorptance sweeps always emit the local columns; "
                          "pick the nonlocal model (boltzmann|lindhard)");
    ImpedanceOptions opts;
    opts.model = model;
    opts.k_fermi = cfg.k_fermi;
    if (model == ResponseModel::lindhard && !(cfg.k_fermi > 0.0))
        throw DomainError("lindhard model requires --kf > 0");
    if (cfg.tol > 0.0) opts.rel_tol = cfg.tol;

    const auto omegas = require_grid(cfg.omega_grid, "--omega-grid").points();

    Table t;
    t.columns = {"omega_dimensionless", "Q", "A_s_local", "A_s_nonlocal",
                 "A_p_local", "A_p_nonlocal", "converged"};
    std::vector<AbsorptanceRow> rows(omegas.size());

    parallel_for(rows.size(), resolve_workers(cfg.workers), [&](std::size_t i) {
        auto r = absorptance_sweep(mat, cfg.theta_deg, {omegas[i]}, opts);
        rows[i] = r.front();
    });

    bool all_ok = true;
    for (const auto& r : rows) {
        all_ok = all_ok && r.converged;
        RowBuild row;
        push_num(row, r.omega);
        push_num(row, r.q);
        push_num(row, r.a_s_local);
        push_num(row, r.a_s_nonlocal, r.converged);
        push_num(row, r.a_p_local);
        push_num(row, r.a_p_nonlocal, r.converged);
        row.cells.push_back(r.converged ? "1" : "0");
        t.rows.push_back(std::move(row.cells));
    }
    return emit(cfg, t, out_table, all_ok);
}

ForceOptions force_options(const RunConfig& cfg) {
    ForceOptions o;
    o.model = parse_model(cfg.model);
    if (cfg.tol > 0.0) o.rel_tol = cfg.tol;
    if (cfg.override_mode == "perfect-conductor")
        o.r_override = ReflectionOverride::perfect_conductor;
    else if (cfg.override_mode == "local-f")
        o.f_override = FOverride::unit;
    return o;
}

int cmd_force(const RunConfig& cfg, Table* out_table) {
    const auto mat = resolve_material(cfg.material);
    const bool sphere = cfg.geometry == "sp";
    if (!sphere && cfg.geometry != "pp")
        throw DomainError("unknown geometry '" + cfg.geometry + "' (pp|sp)");
    if (sphere && !(cfg.radius_nm > 0.0))
        throw DomainError("sphere-plate geometry requires --radius-nm > 0");
    const auto opts = force_options(cfg);
    if (opts.model == ResponseModel::lindhard)
        throw UnsupportedError("force runs on the imaginary axis; lindhard is real-axis only");

    const auto seps = require_grid(cfg.a_grid, "--a-grid").points();

    Table t;
    t.columns = {"a_nm", "geometry", "model", "value", "value_s", "value_p",
                 "eta", "err", "converged"};
    std::vector<ForceResult> results(seps.size());

    parallel_for(results.size(), resolve_workers(cfg.workers), [&](std::size_t i) {
        results[i] = sphere ? force_sphere_plate(seps[i], cfg.radius_nm, mat, opts)
                            : force_plate_plate(seps[i], mat, opts);
    });

    bool all_ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& f = results[i];
        all_ok = all_ok && f.converged;
        double ideal;
        if (sphere) {
            const double a = seps[i] * 1e-9;
            ideal = -std::pow(3.14159265358979323846, 3) * constants::hbar_c_J_m *
                    (cfg.radius_nm * 1e-9) / (360.0 * a * a * a);
        } else {
            ideal = ideal_force(seps[i]);
        }
        RowBuild row;
        push_num(row, seps[i]);
        row.cells.push_back(cfg.geometry);
        row.cells.push_back(cfg.model);
        push_num(row, f.value, f.converged);
        push_num(row, f.value_s, f.converged);
        push_num(row, f.value_p, f.converged);
        push_num(row, f.value / ideal, f.converged);
        push_num(row, f.error);
        row.cells.push_back(f.converged ? "1" : "0");
        t.rows.push_back(std::move(row.cells));
    }
    return emit(cfg, t, out_table, all_ok);
}

int cmd_correction(const RunConfig& cfg, Table* out_table) {
    const auto mat = resolve_material(cfg.material);
    const bool sphere = cfg.geometry == "sp";
    if (!sphere && cfg.geometry != "pp")
        throw DomainError("unknown geometry '" + cfg.geometry + "' (pp|sp)");
    if (sphere && !(cfg.radius_nm > 0.0))
        throw DomainError("sphere-plate geometry requires --radius-nm > 0");

    ForceOptions opts;
    if (cfg.tol > 0.0) opts.correction_rel_tol = cfg.tol;

    const auto seps = require_grid(cfg.a_grid, "--a-grid").points();

    Table t;
    t.columns = {"a_nm", "dF_rel_total", "dF_rel_p", "dF_rel_s", "geometry",
                 "dF_abs", "F_local", "err_rel", "converged"};
    std::vector<CorrectionResult> results(seps.size());

    parallel_for(results.size(), resolve_workers(cfg.workers), [&](std::size_t i) {
        results[i] = nonlocal_correction(seps[i],
                                         mat,
                                         sphere ? Geometry::sphere_plate
                                                : Geometry::plate_plate,
                                         opts, cfg.radius_nm);
    });

    bool all_ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& c = results[i];
        all_ok = all_ok && c.converged;
        RowBuild row;
        push_num(row, seps[i]);
        push_num(row, c.rel_total, c.converged);
        push_num(row, c.rel_p, c.converged);
        push_num(row, c.rel_s, c.converged);
        row.cells.push_back(cfg.geometry);
        push_num(row, c.delta_force, c.converged);
        push_num(row, c.force_local, c.converged);
        push_num(row, c.error_rel);
        row.cells.push_back(c.converged ? "1" : "0");
        t.rows.push_back(std::move(row.cells));
    }
    return emit(cfg, t, out_table, all_ok);
}

}  // namespace

std::vector<double> GridSpec::points() const {
    std::vector<double> p;
    p.reserve(count);
    if (log_spaced) {
        const double la = std::log(start), lb = std::log(stop);
        for (int i = 0; i < count; ++i)
            p.push_back(std::exp(la + (lb - la) * i / (count - 1)));
    } else {
        for (int i = 0; i < count; ++i)
            p.push_back(start + (stop - start) * i / (count - 1));
    }
    p.back() = stop;  // exact endpoint regardless of rounding
    p.front() = start;
    return p;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    double start, stop;
    int count;
    char mode[8] = {0};
    if (std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &start, &stop, &count, mode) != 4)
        throw DomainError("grid spec must be start:stop:count:log|lin, got '" + text + "'");
    g.start = start;
    g.stop = stop;
    g.count = count;
    const std::string m = mode;
    if (m == "log")
        g.log_spaced = true;
    else if (m == "lin")
        g.log_spaced = false;
    else
        throw DomainError("grid spacing must be log or lin, got '" + m + "'");
    if (g.count < 2) throw DomainError("grid count must be >= 2");
    if (!(g.start < g.stop)) throw DomainError("grid start must be < stop");
    if (g.log_spaced && !(g.start > 0.0))
        throw DomainError("log grid requires start > 0");
    g.is_set = true;
    return g;
}

std::string format_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            const std::string& cell = row[i];
            if (cell.empty()) {
                obj[t.columns[i]] = nullptr;
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end && *end == '\0')
                obj[t.columns[i]] = v;
            else
                obj[t.columns[i]] = cell;
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SKINDEPTH_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int run_command(const RunConfig& cfg, Table* out_table) {
    try {
        if (cfg.command == "presets") return cmd_presets(cfg, out_table);
        if (cfg.command == "eps") return cmd_eps(cfg, out_table);
        if (cfg.command == "impedance") return cmd_impedance(cfg, out_table);
        if (cfg.command == "absorptance") return cmd_absorptance(cfg, out_table);
        if (cfg.command == "force") return cmd_force(cfg, out_table);
        if (cfg.command == "correction") return cmd_correction(cfg, out_table);
        std::cerr << "unknown command '" << cfg.command << "'\n";
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_command(const RunConfig& cfg) { return run_command(cfg, nullptr); }

}  // namespace skindepth::cli
