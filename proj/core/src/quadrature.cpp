#include "skindepth/quadrature.hpp"

namespace skindepth::quad {

IntegralResult integrate_adaptive(const IntegralSpec& spec) {
    if (!spec.integrand) throw DomainError("integrate_adaptive: missing integrand");
    Options opt{spec.rel_tol, spec.abs_floor};
    if (spec.domain.semi_infinite)
        return integrate_semi_infinite(spec.integrand, spec.domain.a, spec.decay, opt);
    return integrate(spec.integrand, spec.domain.a, spec.domain.b, opt);
}

IntegralResult integrate_2d(const Domain& outer_domain, Decay outer_decay, double outer_rel_tol,
                            const std::function<IntegralSpec(double)>& inner,
                            double abs_floor) {
    bool inner_ok = true;
    bool tol_checked = false;
    long inner_evals = 0;
    double inner_err_max = 0.0;

    auto outer_f = [&](double x) {
        IntegralSpec s = inner(x);
        if (!tol_checked) {
            if (s.rel_tol > outer_rel_tol / 10.0 + 1e-18)
                throw DomainError("integrate_2d: inner rel_tol must be <= outer/10");
            tol_checked = true;
        }
        IntegralResult r = integrate_adaptive(s);
        inner_evals += r.evaluations;
        if (!r.converged) inner_ok = false;
        inner_err_max = std::max(inner_err_max, r.error);
        return r.value;
    };

    Options opt{outer_rel_tol, abs_floor};
    Result<double> r;
    if (outer_domain.semi_infinite)
        r = integrate_semi_infinite(outer_f, outer_domain.a, outer_decay, opt);
    else
        r = integrate(outer_f, outer_domain.a, outer_domain.b, opt);
    r.evaluations += inner_evals;
    r.converged = r.converged && inner_ok;
    return r;
}

namespace {

// 7-point Gauss-Legendre on [-1,1].
constexpr double kGl7X[7] = {
    -0.949107912342758524526189684047851, -0.741531185599394439863864773280788,
    -0.405845151377397166906606412076961, 0.0,
    0.405845151377397166906606412076961,  0.741531185599394439863864773280788,
    0.949107912342758524526189684047851};
constexpr double kGl7W[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

// Quintic smoothstep: clusters panel boundaries at both endpoints, taming
// integrable singularities like x^(-1/2) without evaluating the endpoint.
inline double grade(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }

}  // namespace

IntegralResult brute_force_oracle(const IntegralSpec& spec, long n_panels) {
    if (!spec.integrand) throw DomainError("brute_force_oracle: missing integrand");
    if (n_panels < 2) throw DomainError("brute_force_oracle: need at least 2 panels");

    double a = spec.domain.a;
    double b = spec.domain.semi_infinite ? detail::initial_truncation(a, spec.decay)
                                         : spec.domain.b;
    const double len = b - a;

    double sum = 0.0;
    for (long i = 0; i < n_panels; ++i) {
        const double t0 = static_cast<double>(i) / n_panels;
        const double t1 = static_cast<double>(i + 1) / n_panels;
        const double x0 = a + len * grade(t0);
        const double x1 = a + len * grade(t1);
        const double c = 0.5 * (x0 + x1);
        const double h = 0.5 * (x1 - x0);
        double s = 0.0;
        for (int j = 0; j < 7; ++j) s += kGl7W[j] * spec.integrand(c + h * kGl7X[j]);
        sum += s * h;
    }

    IntegralResult r;
    r.value = sum;
    r.error = 0.0;  // the oracle reports no estimate; it is the reference
    r.evaluations = 7 * n_panels;
    r.converged = true;
    return r;
}

}  // namespace skindepth::quad
