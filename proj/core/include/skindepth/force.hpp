#pragma once

#include "skindepth/impedance.hpp"
#include "skindepth/optics.hpp"

namespace skindepth {

enum class Geometry { plate_plate, sphere_plate };

// Test seams on the reflection coefficients of the force integrands.
enum class ReflectionOverride { none, perfect_conductor, zero };

struct ForceOptions {
    ResponseModel model = ResponseModel::boltzmann;  // or local (Drude)
    ReflectionOverride r_override = ReflectionOverride::none;
    FOverride f_override = FOverride::none;
    double rel_tol = 1e-4;            // full-force double integrals
    double correction_rel_tol = 1e-2; // difference integrands
    double impedance_rel_tol = 1e-6;  // inner chi-integrals
    bool include_chi_ib = false;      // corrections drop chi_IB unless asked
};

// Pressure (plate-plate, Pa) or force (sphere-plate, N); negative values
// are attractive. Per-polarization parts sum to the total.
struct ForceResult {
    Geometry geometry = Geometry::plate_plate;
    double separation_nm = 0.0;
    double sphere_radius_nm = 0.0;  // sphere_plate only
    double value = 0.0;
    double value_s = 0.0;
    double value_p = 0.0;
    ResponseModel model = ResponseModel::boltzmann;
    double error = 0.0;
    bool converged = true;
    bool pfa_regime = true;  // R >= 10 a; flagged, never enforced
};

// Relative correction delta F / F_local and its per-polarization split;
// the split entries are <= 0 (nonlocality weakens the force).
struct CorrectionResult {
    Geometry geometry = Geometry::plate_plate;
    double separation_nm = 0.0;
    double delta_force = 0.0;  // F_nonlocal - F_local, Pa or N
    double rel_total = 0.0;
    double rel_s = 0.0;
    double rel_p = 0.0;
    double force_local = 0.0;
    double error_rel = 0.0;  // estimate on rel_total
    bool converged = true;
};

// Ideal-metal Casimir pressure -pi^2 hbar c / (240 a^4), Pa.
double ideal_force(double a_nm);

ForceResult force_plate_plate(double a_nm, const MaterialParams& m,
                              const ForceOptions& opts = {});

ForceResult force_sphere_plate(double a_nm, double radius_nm, const MaterialParams& m,
                               const ForceOptions& opts = {});

// eta(a) = F_pp(a) / F_c(a).
double reduction_factor(double a_nm, const MaterialParams& m,
                        const ForceOptions& opts = {});

// Nonlocal correction computed from the difference integrand directly
// (never as a difference of two large force values).
CorrectionResult nonlocal_correction(double a_nm, const MaterialParams& m,
                                     Geometry geometry, const ForceOptions& opts = {},
                                     double radius_nm = 0.0);

}  // namespace skindepth
