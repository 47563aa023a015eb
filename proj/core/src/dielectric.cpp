#include "skindepth/dielectric.hpp"

#include <cassert>
#include <cmath>

namespace skindepth {

using cplx = std::complex<double>;

namespace {

// Series crossover: below this the closed forms lose ~1e-12 of relative
// accuracy to cancellation while the series are already exact to eps.
constexpr double kSeriesCut = 0.15;

cplx log_ratio(cplx u) {
    // ln((1+u)/(1-u)), principal branch. The cut is the real axis |u|>=1.
    if (std::abs(u.imag()) < 1e-300 && std::abs(u.real()) >= 1.0)
        throw BranchCutError("log argument on the branch cut (|Re u| >= 1, Im u = 0)");
    return std::log((1.0 + u) / (1.0 - u));
}

// w*ln((w+1)/(w-1)) with w = 1/u, safe for small |u|:
// = 2(1 + u^2/3 + u^4/5 + ...).
cplx w_log_ratio(cplx u) {
    if (std::abs(u) < kSeriesCut) {
        const cplx u2 = u * u;
        cplx s = u2 / 19.0;
        for (int n = 17; n >= 3; n -= 2) s = u2 * (1.0 / n + s);
        return 2.0 * (1.0 + s);
    }
    return log_ratio(u) / u;
}

// 1 - L(u)/(2u) = -(u^2/3 + u^4/5 + ...); the small-u cancellation here is
// the worst one in the Boltzmann forms.
cplx one_minus_half_wL(cplx u) {
    if (std::abs(u) < kSeriesCut) {
        const cplx u2 = u * u;
        cplx t = 1.0 / 19.0;
        for (int n = 17; n >= 3; n -= 2) t = 1.0 / n + u2 * t;
        return -u2 * t;
    }
    return 1.0 - 0.5 * log_ratio(u) / u;
}

// Relaxation bracket [1 + i(gamma/Omega)(1 - L/(2u))] shared by the
// Boltzmann f_l and the Lindhard eps_l assembly.
cplx relaxation_bracket(cplx u, double gamma_over_omega) {
    return 1.0 + cplx(0.0, gamma_over_omega) * one_minus_half_wL(u);
}

}  // namespace

namespace detail {

std::complex<double> f_t_real(cplx u) {
    if (std::abs(u) < kSeriesCut) {
        // sum 3 u^(2n) / ((2n+1)(2n+3))
        const cplx u2 = u * u;
        cplx s = 3.0 / (19.0 * 21.0);
        for (int n = 8; n >= 0; --n) s = 3.0 / ((2 * n + 1.0) * (2 * n + 3.0)) + u2 * s;
        return s;
    }
    const cplx L = log_ratio(u);
    return 1.5 / (u * u * u) * (u - 0.5 * (1.0 - u * u) * L);
}

std::complex<double> f_l_real(cplx u, double gamma_over_omega) {
    cplx num;
    if (std::abs(u) < kSeriesCut) {
        const cplx u2 = u * u;
        // numerator (3/u^3)(-u + L/2) = sum 3 u^(2n)/(2n+3)
        num = 3.0 / 21.0;
        for (int n = 8; n >= 0; --n) num = 3.0 / (2 * n + 3.0) + u2 * num;
    } else {
        const cplx L = log_ratio(u);
        num = 3.0 / (u * u * u) * (-u + 0.5 * L);
    }
    return num / relaxation_bracket(u, gamma_over_omega);
}

double f_t_imag(double v) {
    if (v < kSeriesCut) {
        // alternating series 3 (-v^2)^n / ((2n+1)(2n+3))
        const double v2 = v * v;
        double s = 3.0 / (19.0 * 21.0);
        for (int n = 8; n >= 0; --n) s = 3.0 / ((2 * n + 1.0) * (2 * n + 3.0)) - v2 * s;
        return s;
    }
    return 1.5 / (v * v * v) * (-v + (1.0 + v * v) * std::atan(v));
}

double f_l_imag(double v, double gamma_over_omega) {
    // A = (v - atan v)/v^3;  f_l = 3A / (1 + (gamma/Omega) v^2 A)
    double A;
    if (v < kSeriesCut) {
        const double v2 = v * v;
        A = 1.0 / 21.0;
        for (int n = 9; n >= 1; --n) A = 1.0 / (2 * n + 1.0) - v2 * A;
    } else {
        A = (v - std::atan(v)) / (v * v * v);
    }
    return 3.0 * A / (1.0 + gamma_over_omega * v * v * A);
}

std::complex<double> f_t_lindhard(cplx u, double z) {
    const cplx w = 1.0 / u;
    const cplx w2m1 = w * w - 1.0;
    const double dist = std::min(std::abs(w - 1.0), std::abs(w + 1.0));

    if (z < 0.01 * dist) {
        // h(x) = (1-x^2)^2 ln((x+1)/(x-1)) is odd, so
        // h(z-w) + h(z+w) = h(w+z) - h(w-z) = 2z h' + z^3 h'''/3 + z^5 h^(5)/60.
        cplx t0;
        if (std::abs(u) < 1e-2) {
            const cplx u2 = u * u;
            t0 = 1.0 + u2 * (0.2 + u2 * (3.0 / 35.0 + u2 / 21.0));
        } else {
            const cplx L = log_ratio(u);
            t0 = 0.75 * w * (2.0 * w - w2m1 * L);  // (3/8)(3w^2+1) - (3/16) h'(w)
        }
        const cplx wL = w_log_ratio(u);
        const cplx h3 = 24.0 * wL - 36.0 - 16.0 / w2m1;
        const cplx h5 = -48.0 / w2m1 + 48.0 * (w * w + 1.0) / (w2m1 * w2m1) -
                        32.0 * (3.0 * w * w + 1.0) / (w2m1 * w2m1 * w2m1);
        return t0 + z * z * (0.375 - h3 / 32.0) - z * z * z * z * h5 / 640.0;
    }

    auto h = [](cplx x) {
        const cplx q = 1.0 - x * x;
        return q * q * std::log((x + 1.0) / (x - 1.0));
    };
    return 0.375 * (z * z + 3.0 * w * w + 1.0) - 3.0 / (32.0 * z) * (h(z - w) + h(z + w));
}

std::complex<double> f_l_lindhard(cplx u, double z) {
    const cplx w = 1.0 / u;
    const cplx w2m1 = w * w - 1.0;
    const double dist = std::min(std::abs(w - 1.0), std::abs(w + 1.0));

    if (z < 0.01 * dist) {
        // g(x) = (1-x^2) ln((x+1)/(x-1)) is odd:
        // g(z-w) + g(z+w) = 2z g' + z^3 g'''/3 + z^5 g^(5)/60, and
        // 1/2 + g'(w)/4 = 1 - (1/2) w ln((w+1)/(w-1)).
        cplx t0;
        if (std::abs(u) < 1e-2) {
            const cplx u2 = u * u;
            t0 = -u2 * (1.0 / 3.0 + u2 * (0.2 + u2 * (1.0 / 7.0 + u2 / 9.0)));
        } else {
            t0 = 1.0 - 0.5 * w_log_ratio(u);
        }
        const cplx g3 = -8.0 / (w2m1 * w2m1);
        const cplx g5 = 32.0 / (w2m1 * w2m1 * w2m1) -
                        192.0 * w * w / (w2m1 * w2m1 * w2m1 * w2m1);
        return t0 + z * z * g3 / 24.0 + z * z * z * z * g5 / 480.0;
    }

    auto g = [](cplx x) { return (1.0 - x * x) * std::log((x + 1.0) / (x - 1.0)); };
    return 0.5 + 1.0 / (8.0 * z) * (g(z - w) + g(z + w));
}

}  // namespace detail

std::complex<double> drude_local(const ResponsePoint& p, const MaterialParams& m) {
    if (p.axis == FrequencyAxis::imaginary) {
        if (!(p.omega > 0.0))
            throw DomainError("drude_local: Omega = 0 is a pole on the imaginary axis");
        return 1.0 + m.chi(p.omega) + 1.0 / (p.omega * (p.omega + m.gamma));
    }
    if (!(p.omega > 0.0))
        throw DomainError("drude_local: Omega = 0 is a pole on the real axis");
    return 1.0 + m.chi(p.omega) - 1.0 / (p.omega * cplx(p.omega, m.gamma));
}

DielectricPair boltzmann_real(double omega, double k, const MaterialParams& m,
                              FOverride f_override) {
    if (!(omega > 0.0)) throw DomainError("boltzmann_real: Omega must be > 0");
    if (k < 0.0) throw DomainError("boltzmann_real: k must be >= 0");

    const cplx denom = omega * cplx(omega, m.gamma);
    const cplx u = m.v_f_over_c * k / cplx(omega, m.gamma);
    // sign convention: u = v_F k/(omega + i omega_tau) has Im(u) <= 0 for
    // real positive inputs, which keeps the log off its cut whenever gamma > 0
    assert(u.imag() <= 0.0);
    const double chi = m.chi(omega);

    cplx ft = 1.0, fl = 1.0;
    if (f_override == FOverride::none) {
        ft = detail::f_t_real(u);
        fl = detail::f_l_real(u, m.gamma / omega);
    }

    DielectricPair d;
    d.eps_t = 1.0 + chi - ft / denom;
    d.eps_l = 1.0 + chi - fl / denom;
    d.model = ResponseModel::boltzmann;
    d.point = {FrequencyAxis::real, omega, 0.0};
    d.k = k;
    return d;
}

DielectricPair boltzmann_imag(double omega, double v, const MaterialParams& m,
                              FOverride f_override) {
    if (!(omega > 0.0)) throw DomainError("boltzmann_imag: Omega must be > 0");
    if (v < 0.0) throw DomainError("boltzmann_imag: v must be >= 0");

    const double denom = omega * (omega + m.gamma);
    const double chi = m.chi(omega);

    double ft = 1.0, fl = 1.0;
    if (f_override == FOverride::none) {
        ft = detail::f_t_imag(v);
        fl = detail::f_l_imag(v, m.gamma / omega);
    }

    DielectricPair d;
    d.eps_t = 1.0 + chi + ft / denom;
    d.eps_l = 1.0 + chi + fl / denom;
    d.model = ResponseModel::boltzmann;
    d.point = {FrequencyAxis::imaginary, omega, 0.0};
    d.k = v * (omega + m.gamma) / m.v_f_over_c;
    return d;
}

DielectricPair lindhard_real(double omega, double k, double k_fermi,
                             const MaterialParams& m) {
    if (!(omega > 0.0)) throw DomainError("lindhard_real: Omega must be > 0");
    if (!(k > 0.0)) throw DomainError("lindhard_real: k must be > 0");
    if (!(k_fermi > 0.0)) throw DomainError("lindhard_real: k_F must be > 0");

    const double z = k / (2.0 * k_fermi);
    const cplx u = m.v_f_over_c * k / cplx(omega, m.gamma);
    const cplx denom = omega * cplx(omega, m.gamma);

    DielectricPair d;
    d.eps_t = 1.0 - detail::f_t_lindhard(u, z) / denom;

    // eps_w is the collisionless response at the relaxation-shifted
    // frequency; combined with the same relaxation bracket as the
    // Boltzmann f_l it recovers the Boltzmann pair exactly as z -> 0.
    const cplx eps_w_m1 = 3.0 / (u * u * denom) * detail::f_l_lindhard(u, z);
    d.eps_l = 1.0 + eps_w_m1 / relaxation_bracket(u, m.gamma / omega);

    d.model = ResponseModel::lindhard;
    d.point = {FrequencyAxis::real, omega, 0.0};
    d.k = k;
    d.z = z;
    return d;
}

DielectricPair lindhard_imag(double, double, const MaterialParams&) {
    throw UnsupportedError(
        "lindhard dielectric functions are not provided on the imaginary axis");
}

}  // namespace skindepth
