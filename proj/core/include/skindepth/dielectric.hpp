#pragma once

#include <complex>

#include "skindepth/materials.hpp"

namespace skindepth {

enum class ResponseModel { local, boltzmann, lindhard };

// Test seam: forcing f_t = f_l = 1 collapses every nonlocal expression to
// its local counterpart, which is the strongest oracle for the quadrature
// plumbing downstream.
enum class FOverride { none, unit };

// Complex (eps_l, eps_t) at one evaluation site. On the imaginary axis both
// values are real (imaginary parts identically zero).
struct DielectricPair {
    std::complex<double> eps_l;
    std::complex<double> eps_t;
    ResponseModel model = ResponseModel::local;
    ResponsePoint point;
    double k = 0.0;  // dimensionless ck/omega_p
    double z = 0.0;  // k/(2 k_F); nonzero only for lindhard
};

// Local Drude permittivity (plus tabulated interband susceptibility).
// Real axis:      1 + chi - 1/(Omega(Omega + i gamma))
// Imaginary axis: 1 + chi + 1/(Omega(Omega + gamma))
std::complex<double> drude_local(const ResponsePoint& p, const MaterialParams& m);

// Boltzmann (quasi-free electron) dielectric pair on the real frequency
// axis; u = (v_F/c) k / (Omega + i gamma), principal-branch logarithm.
DielectricPair boltzmann_real(double omega, double k, const MaterialParams& m,
                              FOverride f_override = FOverride::none);

// Imaginary-axis pair as a function of v = (v_F/c) Q cosh(chi)/(Omega+gamma);
// all outputs real.
DielectricPair boltzmann_imag(double omega, double v, const MaterialParams& m,
                              FOverride f_override = FOverride::none);

// Self-consistent-field (Lindhard) pair with finite relaxation on the real
// axis; z = k/(2 k_F) with the Fermi wave number supplied by the caller in
// the same dimensionless unit as k.
DielectricPair lindhard_real(double omega, double k, double k_fermi,
                             const MaterialParams& m);

// Analytic continuation of the Lindhard forms to imaginary frequencies is
// not provided; always throws UnsupportedError.
DielectricPair lindhard_imag(double omega, double v, const MaterialParams& m);

namespace detail {
// Nonlocal shape functions, exposed for tests. Series evaluation below
// |u| = 0.05 where the closed forms cancel catastrophically.
std::complex<double> f_t_real(std::complex<double> u);
std::complex<double> f_l_real(std::complex<double> u, double gamma_over_omega);
double f_t_imag(double v);
double f_l_imag(double v, double gamma_over_omega);
// Lindhard shape functions; cancellation-safe in z via an odd-derivative
// series when z is small against the distance of 1/u from the cut.
std::complex<double> f_t_lindhard(std::complex<double> u, double z);
std::complex<double> f_l_lindhard(std::complex<double> u, double z);
}  // namespace detail

}  // namespace skindepth
