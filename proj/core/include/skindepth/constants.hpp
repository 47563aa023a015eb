#pragma once

// CODATA values. All SI <-> dimensionless conversion happens in the
// materials module; everything downstream works in units of omega_p and
// the penetration depth c/omega_p.
namespace skindepth::constants {

inline constexpr double c_m_per_s = 2.99792458e8;        // exact
inline constexpr double c_cm_per_s = 2.99792458e10;
inline constexpr double hbar_J_s = 1.054571817e-34;      // CODATA 2018
inline constexpr double k_boltzmann_J_per_K = 1.380649e-23;  // exact
inline constexpr double hbar_c_J_m = hbar_J_s * c_m_per_s;

}  // namespace skindepth::constants
