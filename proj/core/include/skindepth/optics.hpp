#pragma once

#include <complex>
#include <vector>

#include "skindepth/impedance.hpp"

namespace skindepth {

struct ReflectionPair {
    std::complex<double> r_s;
    std::complex<double> r_p;
    ResponsePoint point;
    ResponseModel model = ResponseModel::local;
};

// Real-axis reflection amplitudes from the impedances. Evanescent sites
// (Q > Omega) use the continued vacuum root i*sqrt(Q^2 - Omega^2).
ReflectionPair reflection_real(const ResponsePoint& p, const ImpedancePair& z);

// Imaginary-axis amplitudes
//  r_s = (Omega - kappa Z_s)/(Omega + kappa Z_s)
//  r_p = (kappa - Omega Z_p)/(kappa + Omega Z_p),  kappa = sqrt(Omega^2+Q^2);
// consumes the precomputed product Omega*Z_p.
ReflectionPair reflection_imag(const ResponsePoint& p, const ImpedancePair& z);

// A = 1 - |r|^2 per polarization (real-axis input).
struct Absorptance {
    double a_s;
    double a_p;
};
Absorptance absorptance(const ReflectionPair& r);

struct AbsorptanceRow {
    double omega;
    double q;
    double a_s_local;
    double a_s_nonlocal;
    double a_p_local;
    double a_p_nonlocal;
    bool converged;
};

// Both models, both polarizations per grid frequency, at incidence angle
// theta (Q = Omega sin theta).
std::vector<AbsorptanceRow> absorptance_sweep(const MaterialParams& m, double theta_deg,
                                              const std::vector<double>& omega_grid,
                                              const ImpedanceOptions& opts = {});

}  // namespace skindepth
