#include "skindepth/force.hpp"

#include <cmath>
#include <numbers>

#include "skindepth/constants.hpp"

namespace skindepth {

using std::numbers::pi;

namespace {

enum class Pol { s, p };

// Squared imaginary-axis reflection coefficient for one polarization.
double r2_imag(Pol pol, double omega, double q, const MaterialParams& m,
               const ForceOptions& opts, bool& converged) {
    if (opts.r_override == ReflectionOverride::perfect_conductor) return 1.0;
    if (opts.r_override == ReflectionOverride::zero) return 0.0;

    const double kappa = std::hypot(omega, q);
    double r;
    if (opts.model == ResponseModel::local) {
        const ResponsePoint p{FrequencyAxis::imaginary, omega, q};
        const double eps = drude_local(p, m).real();
        const double w = std::sqrt(eps + (q / omega) * (q / omega));
        if (pol == Pol::s) {
            const double zs = 1.0 / w;
            r = (omega - kappa * zs) / (omega + kappa * zs);
        } else {
            const double ozp = omega * w / eps;
            r = (kappa - ozp) / (kappa + ozp);
        }
    } else {
        if (pol == Pol::s) {
            const auto zs = detail::zs_imag_raw(omega, q, m, opts.f_override,
                                                opts.impedance_rel_tol);
            if (!zs.converged) converged = false;
            r = (omega - kappa * zs.value) / (omega + kappa * zs.value);
        } else {
            const auto zp = detail::zp_imag_raw(omega, q, m, opts.f_override,
                                                opts.impedance_rel_tol);
            if (!zp.converged) converged = false;
            const double ozp = omega * zp.value;
            r = (kappa - ozp) / (kappa + ozp);
        }
    }
    return r * r;
}

// (r^-2 e^x - 1)^-1 written overflow-free; x = 2 d kappa.
inline double pressure_kernel(double r2, double x) {
    const double t = r2 * std::exp(-x);
    return t / (1.0 - t);
}

struct Integral2D {
    double value;
    double error;
    bool converged;
};

// Nested adaptive integral of f(omega, q) over the quarter-plane, truncated
// where the exp(-2 d kappa) kernel kills everything beyond kappa = 40/d.
template <typename F>
Integral2D integrate_quarter_plane(F&& f, double d, double rel_tol) {
    const double kmax = 40.0 / d;
    quad::Options inner_opt{rel_tol / 10.0, 0.0};
    quad::Options outer_opt{rel_tol, 0.0};

    bool inner_ok = true;
    long evals = 0;
    auto outer = [&](double omega) {
        auto inner = [&](double q) { return f(omega, q); };
        auto r = quad::integrate(inner, 0.0, kmax, inner_opt);
        evals += r.evaluations;
        if (!r.converged) inner_ok = false;
        return r.value;
    };
    auto r = quad::integrate(outer, 0.0, kmax, outer_opt);
    return {r.value, r.error, r.converged && inner_ok};
}

}  // namespace

double ideal_force(double a_nm) {
    if (!(a_nm > 0.0)) throw DomainError("ideal_force: separation must be > 0");
    const double a = a_nm * 1e-9;
    return -pi * pi / 240.0 * constants::hbar_c_J_m / (a * a * a * a);
}

ForceResult force_plate_plate(double a_nm, const MaterialParams& m,
                              const ForceOptions& opts) {
    if (!(a_nm > 0.0)) throw DomainError("force_plate_plate: separation must be > 0");
    if (opts.model == ResponseModel::lindhard)
        throw UnsupportedError("force integrals run on the imaginary axis; "
                               "the lindhard model is real-axis only");
    m.validate();

    const double delta_m = constants::c_m_per_s / m.omega_p;
    const double d = a_nm * 1e-9 / delta_m;
    const double pref = -constants::hbar_c_J_m /
                        (2.0 * pi * pi * delta_m * delta_m * delta_m * delta_m);

    ForceResult out;
    out.geometry = Geometry::plate_plate;
    out.separation_nm = a_nm;
    out.model = opts.model;

    bool imp_ok = true;
    auto make_integrand = [&](Pol pol) {
        return [&, pol](double omega, double q) {
            const double kappa = std::hypot(omega, q);
            const double r2 = r2_imag(pol, omega, q, m, opts, imp_ok);
            return q * kappa * pressure_kernel(r2, 2.0 * d * kappa);
        };
    };

    const auto is = integrate_quarter_plane(make_integrand(Pol::s), d, opts.rel_tol);
    const auto ip = integrate_quarter_plane(make_integrand(Pol::p), d, opts.rel_tol);

    out.value_s = pref * is.value;
    out.value_p = pref * ip.value;
    out.value = out.value_s + out.value_p;
    out.error = -pref * (is.error + ip.error);
    out.converged = is.converged && ip.converged && imp_ok;
    return out;
}

ForceResult force_sphere_plate(double a_nm, double radius_nm, const MaterialParams& m,
                               const ForceOptions& opts) {
    if (!(a_nm > 0.0)) throw DomainError("force_sphere_plate: separation must be > 0");
    if (!(radius_nm > 0.0)) throw DomainError("force_sphere_plate: radius must be > 0");
    if (opts.model == ResponseModel::lindhard)
        throw UnsupportedError("force integrals run on the imaginary axis; "
                               "the lindhard model is real-axis only");
    m.validate();

    const double delta_m = constants::c_m_per_s / m.omega_p;
    const double d = a_nm * 1e-9 / delta_m;
    const double pref = constants::hbar_c_J_m * (radius_nm * 1e-9) /
                        (2.0 * pi * delta_m * delta_m * delta_m);

    ForceResult out;
    out.geometry = Geometry::sphere_plate;
    out.separation_nm = a_nm;
    out.sphere_radius_nm = radius_nm;
    out.model = opts.model;
    out.pfa_regime = radius_nm >= 10.0 * a_nm;

    bool imp_ok = true;
    auto make_integrand = [&](Pol pol) {
        return [&, pol](double omega, double q) {
            const double kappa = std::hypot(omega, q);
            const double r2 = r2_imag(pol, omega, q, m, opts, imp_ok);
            return q * std::log1p(-r2 * std::exp(-2.0 * d * kappa));
        };
    };

    const auto is = integrate_quarter_plane(make_integrand(Pol::s), d, opts.rel_tol);
    const auto ip = integrate_quarter_plane(make_integrand(Pol::p), d, opts.rel_tol);

    out.value_s = pref * is.value;
    out.value_p = pref * ip.value;
    out.value = out.value_s + out.value_p;
    out.error = pref * (is.error + ip.error);
    out.converged = is.converged && ip.converged && imp_ok;
    return out;
}

double reduction_factor(double a_nm, const MaterialParams& m, const ForceOptions& opts) {
    return force_plate_plate(a_nm, m, opts).value / ideal_force(a_nm);
}

CorrectionResult nonlocal_correction(double a_nm, const MaterialParams& m,
                                     Geometry geometry, const ForceOptions& opts,
                                     double radius_nm) {
    if (!(a_nm > 0.0)) throw DomainError("nonlocal_correction: separation must be > 0");
    if (geometry == Geometry::sphere_plate && !(radius_nm > 0.0))
        throw DomainError("nonlocal_correction: sphere-plate needs a radius");

    // The reference configuration drops the empirical interband
    // susceptibility from both legs of the difference.
    const MaterialParams mat = opts.include_chi_ib ? m : m.without_chi();
    mat.validate();

    const double delta_m = constants::c_m_per_s / mat.omega_p;
    const double d = a_nm * 1e-9 / delta_m;

    ForceOptions nl = opts;
    nl.model = ResponseModel::boltzmann;
    ForceOptions loc = opts;
    loc.model = ResponseModel::local;

    bool imp_ok = true;
    auto make_delta = [&](Pol pol) {
        return [&, pol](double omega, double q) {
            const double kappa = std::hypot(omega, q);
            const double x = 2.0 * d * kappa;
            const double e = std::exp(-x);
            const double y_nl = r2_imag(pol, omega, q, mat, nl, imp_ok) * e;
            const double y_loc = r2_imag(pol, omega, q, mat, loc, imp_ok) * e;
            if (geometry == Geometry::plate_plate)
                return q * kappa * (y_nl - y_loc) / ((1.0 - y_nl) * (1.0 - y_loc));
            return q * (std::log1p(-y_nl) - std::log1p(-y_loc));
        };
    };

    const auto is = integrate_quarter_plane(make_delta(Pol::s), d, opts.correction_rel_tol);
    const auto ip = integrate_quarter_plane(make_delta(Pol::p), d, opts.correction_rel_tol);

    ForceResult f_loc = geometry == Geometry::plate_plate
                            ? force_plate_plate(a_nm, mat, loc)
                            : force_sphere_plate(a_nm, radius_nm, mat, loc);

    double pref;
    if (geometry == Geometry::plate_plate) {
        pref = -constants::hbar_c_J_m /
               (2.0 * pi * pi * delta_m * delta_m * delta_m * delta_m);
    } else {
        pref = constants::hbar_c_J_m * (radius_nm * 1e-9) /
               (2.0 * pi * delta_m * delta_m * delta_m);
    }

    CorrectionResult out;
    out.geometry = geometry;
    out.separation_nm = a_nm;
    out.delta_force = pref * (is.value + ip.value);
    out.force_local = f_loc.value;
    out.rel_s = pref * is.value / f_loc.value;
    out.rel_p = pref * ip.value / f_loc.value;
    out.rel_total = out.rel_s + out.rel_p;
    out.error_rel = std::abs(pref) * (is.error + ip.error) / std::abs(f_loc.value) +
                    std::abs(out.rel_total) * f_loc.error / std::abs(f_loc.value);
    out.converged = is.converged && ip.converged && imp_ok && f_loc.converged;
    return out;
}

}  // namespace skindepth
