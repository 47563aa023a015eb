#include "skindepth/optics.hpp"

#include <cmath>
#include <numbers>

namespace skindepth {

using cplx = std::complex<double>;

ReflectionPair reflection_real(const ResponsePoint& p, const ImpedancePair& z) {
    if (p.axis != FrequencyAxis::real)
        throw DomainError("reflection_real: point must be on the real axis");

    // Vacuum-side normal wave number (over omega_p/c); Im >= 0 so the
    // evanescent branch decays away from the interface.
    cplx w = std::sqrt(cplx(p.omega * p.omega - p.q * p.q, 0.0));
    if (w.imag() < 0.0) w = -w;

    const cplx den_s = p.omega + z.z_s * w;
    const cplx den_p = w + p.omega * z.z_p;
    if (std::abs(den_s) == 0.0 || std::abs(den_p) == 0.0)
        throw PoleError("reflection_real: degenerate denominator");

    ReflectionPair r;
    r.point = p;
    r.model = z.model;
    r.r_s = (p.omega - z.z_s * w) / den_s;
    r.r_p = (w - p.omega * z.z_p) / den_p;
    return r;
}

ReflectionPair reflection_imag(const ResponsePoint& p, const ImpedancePair& z) {
    if (p.axis != FrequencyAxis::imaginary)
        throw DomainError("reflection_imag: point must be on the imaginary axis");
    const double kappa = std::hypot(p.omega, p.q);

    ReflectionPair r;
    r.point = p;
    r.model = z.model;
    r.r_s = (p.omega - kappa * z.z_s) / (p.omega + kappa * z.z_s);
    r.r_p = (kappa - z.omega_z_p) / (kappa + z.omega_z_p);
    return r;
}

Absorptance absorptance(const ReflectionPair& r) {
    if (r.point.axis != FrequencyAxis::real)
        throw DomainError("absorptance: real-axis reflection input required");
    return {1.0 - std::norm(r.r_s), 1.0 - std::norm(r.r_p)};
}

std::vector<AbsorptanceRow> absorptance_sweep(const MaterialParams& m, double theta_deg,
                                              const std::vector<double>& omega_grid,
                                              const ImpedanceOptions& opts) {
    if (!(theta_deg >= 0.0 && theta_deg < 90.0))
        throw DomainError("absorptance_sweep: theta must lie in [0, 90) degrees");
    const double sin_t = std::sin(theta_deg * std::numbers::pi / 180.0);

    std::vector<AbsorptanceRow> rows;
    rows.reserve(omega_grid.size());
    for (double omega : omega_grid) {
        ResponsePoint p{FrequencyAxis::real, omega, omega * sin_t};
        const auto z_loc = local_pair(p, m);
        const auto z_nl = nonlocal_pair_real(p, m, opts);
        const auto a_loc = absorptance(reflection_real(p, z_loc));
        const auto a_nl = absorptance(reflection_real(p, z_nl));
        rows.push_back({omega, p.q, a_loc.a_s, a_nl.a_s, a_loc.a_p, a_nl.a_p,
                        z_nl.converged});
    }
    return rows;
}

}  // namespace skindepth
