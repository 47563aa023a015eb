#pragma once

#include <complex>

#include "skindepth/dielectric.hpp"
#include "skindepth/materials.hpp"
#include "skindepth/quadrature.hpp"

namespace skindepth {

// Surface impedances for the two polarizations at one (Omega, Q) site.
// On the imaginary axis both values are real and positive; omega_z_p
// carries the product Omega*Z_p, which is what reflection code consumes
// (Z_p itself grows like 1/Omega at low frequency).
struct ImpedancePair {
    std::complex<double> z_s;
    std::complex<double> z_p;
    std::complex<double> omega_z_p;
    ResponsePoint point;
    ResponseModel model = ResponseModel::local;
    double err_s = 0.0;  // quadrature error estimates (zero for closed forms)
    double err_p = 0.0;
    bool converged = true;
};

struct ImpedanceOptions {
    ResponseModel model = ResponseModel::boltzmann;
    FOverride f_override = FOverride::none;
    double rel_tol = 1e-6;
    double k_fermi = 0.0;  // dimensionless ck_F/omega_p; required for lindhard
};

// Classical (local) impedances from a given permittivity. Real axis uses
// the root with non-negative imaginary part so the transmitted wave decays
// into the metal; imaginary axis uses positive real roots.
ImpedancePair local_pair(const ResponsePoint& p, std::complex<double> eps);

// Local impedances from the Drude permittivity of the material.
ImpedancePair local_pair(const ResponsePoint& p, const MaterialParams& m);

// Nonlocal impedances on the imaginary axis via the chi-integrals
// (k_z = q sinh(chi)); Boltzmann model only.
ImpedancePair nonlocal_pair_imag(const ResponsePoint& p, const MaterialParams& m,
                                 const ImpedanceOptions& opts = {});

// Nonlocal impedances on the real axis; Boltzmann or Lindhard model.
// Propagating (Q <= Omega) and evanescent (Q > Omega) sites are both valid.
ImpedancePair nonlocal_pair_real(const ResponsePoint& p, const MaterialParams& m,
                                 const ImpedanceOptions& opts = {});

// The low-frequency chi-integrals
//  F(b) = (2/pi) Int cosh^2/(cosh^3 + b^3), G(b) = (2/pi) Int sinh^2/(cosh^3 + b^3),
// evaluated to 1e-10 relative.
struct AsymptoticFG {
    double f;
    double g;
};
AsymptoticFG asymptotic_FG(double b);

// Strong-anomalous-regime impedances Z_s = (Omega/Q) F(b),
// Z_p = (Q/Omega)/sqrt(1+3(c/(v_F Q))^2) + (Omega/Q) G(b).
// regime_valid is false when min_chi v < 10 (asymptotics unjustified there).
struct LowFreqImpedances {
    double z_s;
    double z_p;
    double b;
    double v_min;
    bool regime_valid;
};
LowFreqImpedances low_freq_impedances(double omega, double q, const MaterialParams& m);

// Leontovich (Q -> 0) limit of the strong anomalous skin effect on the
// imaginary axis.
double leontovich(double omega, const MaterialParams& m);

namespace detail {
// Single-polarization imaginary-axis chi-integrals; the force kernels only
// ever need one of the two at a time.
struct ZPart {
    double value;
    double error;
    bool converged;
};
ZPart zs_imag_raw(double omega, double q, const MaterialParams& m, FOverride f_override,
                  double rel_tol);
ZPart zp_imag_raw(double omega, double q, const MaterialParams& m, FOverride f_override,
                  double rel_tol);
}  // namespace detail

}  // namespace skindepth
