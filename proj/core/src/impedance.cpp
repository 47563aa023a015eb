#include "skindepth/impedance.hpp"

#include <cmath>
#include <numbers>

namespace skindepth {

using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

// Dispatch for the dielectric pair used inside the real-axis integrals.
DielectricPair eval_pair_real(double omega, double k, const MaterialParams& m,
                              const ImpedanceOptions& opts) {
    if (opts.model == ResponseModel::lindhard)
        return lindhard_real(omega, k, opts.k_fermi, m);
    return boltzmann_real(omega, k, m, opts.f_override);
}

}  // namespace

ImpedancePair local_pair(const ResponsePoint& p, cplx eps) {
    ImpedancePair z;
    z.point = p;
    z.model = ResponseModel::local;

    if (std::abs(eps) == 0.0) throw PoleError("local_pair: eps = 0 is a pole of Z_p");

    if (p.axis == FrequencyAxis::imaginary) {
        if (!(p.omega > 0.0)) throw DomainError("local_pair: Omega must be > 0");
        const double e = eps.real();
        const double ratio = p.q / p.omega;
        const double s = std::sqrt(e + ratio * ratio);
        z.z_s = 1.0 / s;
        z.z_p = s / e;
        z.omega_z_p = p.omega * z.z_p;
        return z;
    }

    if (!(p.omega > 0.0)) throw DomainError("local_pair: Omega must be > 0");
    const double ratio = p.q / p.omega;
    cplx w = std::sqrt(eps - ratio * ratio);
    if (w.imag() < 0.0) w = -w;  // transmitted wave decays into the metal
    if (std::abs(w) == 0.0) throw PoleError("local_pair: eps = (Q/Omega)^2 is a pole of Z_s");
    z.z_s = 1.0 / w;
    z.z_p = w / eps;
    z.omega_z_p = p.omega * z.z_p;
    return z;
}

ImpedancePair local_pair(const ResponsePoint& p, const MaterialParams& m) {
    return local_pair(p, drude_local(p, m));
}

namespace detail {

ZPart zs_imag_raw(double omega, double q, const MaterialParams& m, FOverride f_override,
                  double rel_tol) {
    const double r2 = (omega / q) * (omega / q);
    const double v_scale = m.v_f_over_c * q / (omega + m.gamma);
    quad::Options qopt{rel_tol, 0.0};

    auto integrand = [&](double chi) {
        const double ch = std::cosh(chi);
        const DielectricPair d = boltzmann_imag(omega, v_scale * ch, m, f_override);
        return ch / (ch * ch + r2 * d.eps_t.real());
    };
    auto r = quad::integrate_semi_infinite(integrand, 0.0, quad::Decay::sech(), qopt);

    const double pref = 2.0 / pi * (omega / q);
    return {pref * r.value, pref * r.error, r.converged};
}

ZPart zp_imag_raw(double omega, double q, const MaterialParams& m, FOverride f_override,
                  double rel_tol) {
    const double r2 = (omega / q) * (omega / q);
    const double v_scale = m.v_f_over_c * q / (omega + m.gamma);
    quad::Options qopt{rel_tol, 0.0};

    auto integrand = [&](double chi) {
        const double ch = std::cosh(chi);
        const DielectricPair d = boltzmann_imag(omega, v_scale * ch, m, f_override);
        return (1.0 / ch) * (1.0 / (r2 * d.eps_l.real()) +
                             (ch * ch - 1.0) / (ch * ch + r2 * d.eps_t.real()));
    };
    auto r = quad::integrate_semi_infinite(integrand, 0.0, quad::Decay::sech(), qopt);

    const double pref = 2.0 / pi * (omega / q);
    return {pref * r.value, pref * r.error, r.converged};
}

}  // namespace detail

ImpedancePair nonlocal_pair_imag(const ResponsePoint& p, const MaterialParams& m,
                                 const ImpedanceOptions& opts) {
    if (p.axis != FrequencyAxis::imaginary)
        throw DomainError("nonlocal_pair_imag: point must be on the imaginary axis");
    if (!(p.omega > 0.0) || !(p.q > 0.0))
        throw DomainError("nonlocal_pair_imag: Omega and Q must be > 0");
    if (opts.model == ResponseModel::lindhard)
        throw UnsupportedError("nonlocal impedances at imaginary frequencies support "
                               "the boltzmann model only");
    if (opts.model == ResponseModel::local)
        throw UnsupportedError("use local_pair for the local model");

    const auto rs = detail::zs_imag_raw(p.omega, p.q, m, opts.f_override, opts.rel_tol);
    const auto rp = detail::zp_imag_raw(p.omega, p.q, m, opts.f_override, opts.rel_tol);

    ImpedancePair z;
    z.point = p;
    z.model = ResponseModel::boltzmann;
    z.z_s = rs.value;
    z.z_p = rp.value;
    z.omega_z_p = p.omega * rp.value;
    z.err_s = rs.error;
    z.err_p = rp.error;
    z.converged = rs.converged && rp.converged;
    return z;
}

ImpedancePair nonlocal_pair_real(const ResponsePoint& p, const MaterialParams& m,
                                 const ImpedanceOptions& opts) {
    if (p.axis != FrequencyAxis::real)
        throw DomainError("nonlocal_pair_real: point must be on the real axis");
    if (!(p.omega > 0.0)) throw DomainError("nonlocal_pair_real: Omega must be > 0");
    if (p.q < 0.0) throw DomainError("nonlocal_pair_real: Q must be >= 0");
    if (opts.model == ResponseModel::local)
        throw UnsupportedError("use local_pair for the local model");
    if (opts.model == ResponseModel::lindhard && !(opts.k_fermi > 0.0))
        throw DomainError("nonlocal_pair_real: lindhard model needs k_fermi > 0");

    const double omega = p.omega;
    const double q = p.q;
    const double om2 = omega * omega;

    // k_z in [0, inf) mapped through K = s tan(theta); s tracks the scale
    // where Omega^2 eps_t - Q^2 - K^2 turns over.
    const cplx eps_loc = drude_local(p, m);
    const double scale = std::max(std::sqrt(q * q + om2 * std::abs(eps_loc)), 1e-8);

    quad::Options qopt{opts.rel_tol, 0.0};

    auto zs_integrand = [&](double theta) -> cplx {
        const double t = std::tan(theta);
        const double K = scale * t;
        const double jac = scale * (1.0 + t * t);
        const double k = std::hypot(q, K);
        const DielectricPair d = eval_pair_real(omega, k, m, opts);
        return jac / (om2 * d.eps_t - q * q - K * K);
    };
    auto rs = quad::integrate(zs_integrand, 0.0, 0.5 * pi, qopt);

    auto zp_integrand = [&](double theta) -> cplx {
        const double t = std::tan(theta);
        const double K = scale * t;
        const double jac = scale * (1.0 + t * t);
        const double k2 = q * q + K * K;
        const DielectricPair d = eval_pair_real(omega, std::sqrt(k2), m, opts);
        return jac / k2 *
               (q * q / (om2 * d.eps_l) + K * K / (om2 * d.eps_t - k2));
    };
    auto rp = quad::integrate(zp_integrand, 0.0, 0.5 * pi, qopt);

    const cplx pref = cplx(0.0, 2.0 / pi * omega);
    ImpedancePair z;
    z.point = p;
    z.model = opts.model;
    z.z_s = pref * rs.value;
    z.z_p = pref * rp.value;
    z.omega_z_p = omega * z.z_p;
    z.err_s = 2.0 / pi * omega * rs.error;
    z.err_p = 2.0 / pi * omega * rp.error;
    z.converged = rs.converged && rp.converged;
    return z;
}

AsymptoticFG asymptotic_FG(double b) {
    if (b < 0.0) throw DomainError("asymptotic_FG: b must be >= 0");
    const double b3 = b * b * b;
    quad::Options qopt{1e-10, 0.0};

    auto f_int = quad::integrate_semi_infinite(
        [&](double chi) {
            const double ch = std::cosh(chi);
            return ch * ch / (ch * ch * ch + b3);
        },
        0.0, quad::Decay::sech(), qopt);
    auto g_int = quad::integrate_semi_infinite(
        [&](double chi) {
            const double sh = std::sinh(chi);
            const double ch = std::cosh(chi);
            return sh * sh / (ch * ch * ch + b3);
        },
        0.0, quad::Decay::sech(), qopt);

    return {2.0 / pi * f_int.value, 2.0 / pi * g_int.value};
}

LowFreqImpedances low_freq_impedances(double omega, double q, const MaterialParams& m) {
    if (!(omega > 0.0) || !(q > 0.0))
        throw DomainError("low_freq_impedances: Omega and Q must be > 0");
    const double c_over_vf = 1.0 / m.v_f_over_c;
    const double b = std::cbrt(0.75 * pi * c_over_vf * omega) / q;
    const auto fg = asymptotic_FG(b);

    const double tf = (q / omega) / std::sqrt(1.0 + 3.0 * c_over_vf * c_over_vf / (q * q));
    LowFreqImpedances r;
    r.b = b;
    r.z_s = omega / q * fg.f;
    r.z_p = tf + omega / q * fg.g;
    r.v_min = m.v_f_over_c * q / (omega + m.gamma);  // chi = 0 minimizes cosh
    r.regime_valid = r.v_min >= 10.0;
    return r;
}

double leontovich(double omega, const MaterialParams& m) {
    if (!(omega > 0.0)) throw DomainError("leontovich: Omega must be > 0");
    return 4.0 / (3.0 * std::sqrt(3.0)) *
           std::cbrt(4.0 / (3.0 * pi) * m.v_f_over_c * omega * omega);
}

}  // namespace skindepth
