#include "skindepth/materials.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

namespace skindepth {

namespace {

double parse_double(const std::string& tok, long line) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + tok + "'", line);
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw ParseError("trailing garbage after number: '" + tok + "'", line);
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ChiTable::ChiTable(std::vector<double> omega_grid, std::vector<double> chi_values)
    : omega_(std::move(omega_grid)), chi_(std::move(chi_values)) {
    if (omega_.size() != chi_.size())
        throw DomainError("chi table: grid and value counts differ");
    for (std::size_t i = 0; i < omega_.size(); ++i) {
        if (!(omega_[i] > 0.0))
            throw DomainError("chi table: omega grid must be positive");
        if (i > 0 && !(omega_[i] > omega_[i - 1]))
            throw DomainError("chi table: omega grid must be strictly increasing");
        if (chi_[i] < 0.0)
            throw DomainError("chi table: chi must be non-negative");
    }
    log_omega_.reserve(omega_.size());
    for (double w : omega_) log_omega_.push_back(std::log(w));
}

double ChiTable::operator()(double omega) const {
    if (omega_.empty()) return 0.0;
    if (omega <= omega_.front()) return chi_.front();
    if (omega >= omega_.back()) return chi_.back();
    const double x = std::log(omega);
    auto it = std::upper_bound(log_omega_.begin(), log_omega_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - log_omega_.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - log_omega_[lo]) / (log_omega_[hi] - log_omega_[lo]);
    return chi_[lo] + t * (chi_[hi] - chi_[lo]);
}

ChiTable ChiTable::from_csv(std::istream& in) {
    std::vector<double> w, chi;
    std::string line;
    long lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header_seen) {
            std::string squeezed;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
            if (squeezed != "omega_dimensionless,chi")
                throw ParseError("expected header 'omega_dimensionless,chi'", lineno);
            header_seen = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("expected two comma-separated fields", lineno);
        const double wv = parse_double(trim(line.substr(0, comma)), lineno);
        const double cv = parse_double(trim(line.substr(comma + 1)), lineno);
        if (!(wv > 0.0)) throw ParseError("omega must be positive", lineno);
        if (cv < 0.0) throw ParseError("chi must be non-negative", lineno);
        if (!w.empty() && !(wv > w.back())) throw ParseError("omega grid must be strictly increasing", lineno);
        w.push_back(wv);
        chi.push_back(cv);
    }
    return ChiTable(std::move(w), std::move(chi));
}

ChiTable load_chi_table(std::istream& in) { return ChiTable::from_csv(in); }

MaterialParams MaterialParams::without_chi() const {
    MaterialParams m = *this;
    m.chi_ib = ChiTable{};
    return m;
}

void MaterialParams::validate() const {
    if (!(omega_p > 0.0) || !std::isfinite(omega_p))
        throw DomainError("material '" + name + "': omega_p must be positive and finite");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw DomainError("material '" + name + "': gamma must be in [0, 1)");
    if (!(v_f_over_c > 0.0 && v_f_over_c < 1.0))
        throw DomainError("material '" + name + "': v_F/c must be in (0, 1)");
}

MaterialParams preset(std::string_view name) {
    using constants::c_cm_per_s;
    MaterialParams m;
    if (name == "gold") {
        m = {1.37e16, 3e-3, 1.4e8 / c_cm_per_s, {}, "gold"};
    } else if (name == "gold-force-fit") {
        m = {1.37e16, 4e-3, 1.4e8 / c_cm_per_s, {}, "gold-force-fit"};
    } else if (name == "potassium") {
        // omega_p borrowed from the gold preset; potassium runs are
        // dimensionless (absorptance curves) where only gamma and v_F/c enter.
        m = {1.37e16, 1e-3, 0.85e8 / c_cm_per_s, {}, "potassium"};
    } else {
        std::string msg = "unknown preset '" + std::string(name) + "'; available:";
        for (const auto& p : preset_names()) msg += " " + p;
        throw NotFoundError(msg);
    }
    m.validate();
    return m;
}

std::vector<std::string> preset_names() { return {"gold", "gold-force-fit", "potassium"}; }

double penetration_depth_nm(const MaterialParams& m) {
    m.validate();
    return constants::c_m_per_s / m.omega_p * 1e9;
}

ResponsePoint to_dimensionless(const MaterialParams& m, double omega_rad_s, double q_per_m) {
    m.validate();
    if (omega_rad_s < 0.0) throw DomainError("to_dimensionless: omega must be >= 0");
    if (q_per_m < 0.0) throw DomainError("to_dimensionless: q must be >= 0");
    return {FrequencyAxis::real, omega_rad_s / m.omega_p,
            constants::c_m_per_s * q_per_m / m.omega_p};
}

std::pair<double, double> to_physical(const MaterialParams& m, const ResponsePoint& p) {
    return {p.omega * m.omega_p, p.q * m.omega_p / constants::c_m_per_s};
}

MaterialParams load_material_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("cannot open material config '" + path + "'");
    MaterialParams m;
    bool have_wp = false, have_gamma = false, have_vf = false;
    std::string line;
    long lineno = 0;
    std::string chi_path;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "omega_p_rad_s") {
            m.omega_p = parse_double(val, lineno);
            have_wp = true;
        } else if (key == "gamma") {
            m.gamma = parse_double(val, lineno);
            have_gamma = true;
        } else if (key == "v_f_cm_s") {
            m.v_f_over_c = parse_double(val, lineno) / constants::c_cm_per_s;
            have_vf = true;
        } else if (key == "name") {
            m.name = val;
        } else if (key == "chi_table") {
            chi_path = val;
        } else {
            throw ParseError("unknown key '" + key + "'", lineno);
        }
    }
    if (!have_wp || !have_gamma || !have_vf)
        throw DomainError("material config '" + path +
                          "': omega_p_rad_s, gamma and v_f_cm_s are all required");
    if (m.name.empty()) m.name = std::filesystem::path(path).stem().string();
    if (!chi_path.empty()) {
        std::filesystem::path p(chi_path);
        if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
        std::ifstream chi_in(p);
        if (!chi_in) throw NotFoundError("cannot open chi table '" + p.string() + "'");
        m.chi_ib = ChiTable::from_csv(chi_in);
    }
    m.validate();
    return m;
}

double matsubara_frequency(int n, double temperature_K, const MaterialParams& m) {
    if (n < 0) throw DomainError("matsubara_frequency: n must be >= 0");
    if (temperature_K < 0.0) throw DomainError("matsubara_frequency: T must be >= 0");
    return 2.0 * std::numbers::pi * n * constants::k_boltzmann_J_per_K * temperature_K /
           (constants::hbar_J_s * m.omega_p);
}

}  // namespace skindepth
