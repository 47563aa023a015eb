#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "skindepth/constants.hpp"
#include "skindepth/errors.hpp"

namespace skindepth {

enum class FrequencyAxis { real, imaginary };

// Evaluation site in dimensionless units: Omega = omega/omega_p,
// Q = c q/omega_p (q is the wave vector along the surface).
struct ResponsePoint {
    FrequencyAxis axis = FrequencyAxis::real;
    double omega = 0.0;  // Omega >= 0
    double q = 0.0;      // Q >= 0

    // Real axis only: Q > Omega means the vacuum-side normal wave number
    // is imaginary. Derived, never stored.
    bool evanescent() const { return axis == FrequencyAxis::real && q > omega; }
};

// Tabulated interband susceptibility chi_IB(Omega) on a strictly
// increasing Omega grid. Interpolation is linear in log(Omega); queries
// outside the grid clamp to the endpoint values. An empty table is
// chi identically zero.
class ChiTable {
  public:
    ChiTable() = default;
    ChiTable(std::vector<double> omega_grid, std::vector<double> chi_values);

    static ChiTable from_csv(std::istream& in);

    double operator()(double omega) const;
    bool empty() const { return omega_.empty(); }
    std::size_t size() const { return omega_.size(); }

  private:
    std::vector<double> omega_;
    std::vector<double> log_omega_;
    std::vector<double> chi_;
};

// Physical identity of a metal. gamma and v_f_over_c are dimensionless
// (relaxation rate omega_tau/omega_p and Fermi velocity v_F/c).
struct MaterialParams {
    double omega_p = 0.0;     // rad/s
    double gamma = 0.0;       // omega_tau / omega_p, in [0, 1)
    double v_f_over_c = 0.0;  // in (0, 1)
    ChiTable chi_ib;          // empty => identically zero
    std::string name;

    double chi(double omega_dimensionless) const { return chi_ib(omega_dimensionless); }
    MaterialParams without_chi() const;
    void validate() const;
};

// Built-in parameter sets; names: gold, gold-force-fit, potassium.
MaterialParams preset(std::string_view name);
std::vector<std::string> preset_names();

// delta = c/omega_p in nanometres.
double penetration_depth_nm(const MaterialParams& m);

// (omega [rad/s], q [1/m]) -> (Omega, Q) on the real axis.
ResponsePoint to_dimensionless(const MaterialParams& m, double omega_rad_s, double q_per_m);

// Inverse of to_dimensionless; returns {omega [rad/s], q [1/m]}.
std::pair<double, double> to_physical(const MaterialParams& m, const ResponsePoint& p);

// CSV schema: header "omega_dimensionless,chi", two decimal floats per
// row, '#' comments allowed.
ChiTable load_chi_table(std::istream& in);

// Flat key=value config: omega_p_rad_s, gamma, v_f_cm_s, name,
// chi_table (path, resolved relative to the config file).
MaterialParams load_material_config(const std::string& path);

// Matsubara frequency Omega_n = 2 pi n k T / (hbar omega_p). Documented
// helper for finite-temperature work; no force path sums over it.
double matsubara_frequency(int n, double temperature_K, const MaterialParams& m);

}  // namespace skindepth
