#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

#include "skindepth/errors.hpp"

// Adaptive Gauss-Kronrod (G7,K15) integration tuned for the semi-infinite,
// exponentially / algebraically / sech-decaying integrands that appear in
// the impedance and force integrals. Deterministic: no randomized rules,
// fixed subdivision order, fixed summation order.
namespace skindepth::quad {

enum class DecayKind { none, exponential, algebraic, sech };

struct Decay {
    DecayKind kind = DecayKind::none;
    double rate = 1.0;  // exponential: f ~ e^(-rate*x); algebraic: f ~ x^(-rate)

    static Decay exponential(double r) { return {DecayKind::exponential, r}; }
    static Decay algebraic(double p) { return {DecayKind::algebraic, p}; }
    static Decay sech() { return {DecayKind::sech, 1.0}; }
};

struct Options {
    double rel_tol = 1e-6;
    double abs_floor = 0.0;       // absolute error target; 0 means rel-only
    int max_intervals = 4000;
};

template <typename T>
struct Result {
    T value{};
    double error = 0.0;       // estimate; for truncated domains includes the tail bound
    long evaluations = 0;
    bool converged = false;
};

namespace detail {

// QUADPACK dqk15 nodes and weights.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double norm_of(double v) { return std::abs(v); }
inline double norm_of(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
    double a, b;
    T value;
    double error;
};

// One K15 application on [a,b]; QUADPACK-style error scaling.
template <typename F, typename T = std::invoke_result_t<F, double>>
Panel<T> kronrod15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const T fc = f(center);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    double resabs = kWgk[7] * norm_of(fc);

    T fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const T f1 = f(center - dx);
        const T f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        const T sum = f1 + f2;
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (norm_of(f1) + norm_of(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }

    const T mean = resk * 0.5;
    double resasc = kWgk[7] * norm_of(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (norm_of(fv[j] - mean) + norm_of(fv[14 - j] - mean));

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = norm_of(resk - resg) * std::abs(half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(err, eps50 * resabs);
    // a non-finite integrand must keep the panel at the top of the heap
    // without wrecking the comparator's strict weak ordering
    if (!std::isfinite(err)) err = std::numeric_limits<double>::max();
    p.error = err;
    return p;
}

}  // namespace detail

// Adaptive integration over the finite interval [a,b].
template <typename F, typename T = std::invoke_result_t<F, double>>
Result<T> integrate(F&& f, double a, double b, const Options& opt = {}) {
    if (!(a < b)) throw DomainError("integrate: requires a < b");
    if (!(opt.rel_tol > 1e-14 && opt.rel_tol < 1e-1))
        throw DomainError("integrate: rel_tol must lie in (1e-14, 1e-1)");

    using detail::Panel;
    std::vector<Panel<T>> panels;
    panels.reserve(64);

    // Seed with a few uniform panels so narrow interior features are seen.
    constexpr int kSeed = 8;
    long evals = 0;
    for (int i = 0; i < kSeed; ++i) {
        const double x0 = a + (b - a) * i / kSeed;
        const double x1 = (i == kSeed - 1) ? b : a + (b - a) * (i + 1) / kSeed;
        panels.push_back(detail::kronrod15(f, x0, x1));
        evals += 15;
    }

    auto worse = [](const Panel<T>& p, const Panel<T>& q) {
        if (p.error != q.error) return p.error < q.error;
        return p.a > q.a;  // deterministic tie-break
    };
    std::make_heap(panels.begin(), panels.end(), worse);

    T total{};
    double err_total = 0.0;
    for (const auto& p : panels) {
        total += p.value;
        err_total += p.error;
    }

    int stuck = 0;
    double stuck_error = 0.0;  // unrefinable panels still count toward the estimate
    while (static_cast<int>(panels.size()) < opt.max_intervals) {
        const double target = std::max(opt.rel_tol * detail::norm_of(total), opt.abs_floor);
        if (err_total + stuck_error <= target) break;

        std::pop_heap(panels.begin(), panels.end(), worse);
        Panel<T> top = panels.back();
        panels.pop_back();

        const double mid = 0.5 * (top.a + top.b);
        if (!(mid > top.a && mid < top.b)) {
            // The floating-point grid is exhausted here; take the panel off
            // the heap's radar but keep its error in the books.
            ++stuck;
            err_total -= top.error;
            stuck_error += top.error;
            top.error = 0.0;
            panels.push_back(top);
            std::push_heap(panels.begin(), panels.end(), worse);
            if (stuck > 64) break;
            continue;
        }
        auto left = detail::kronrod15(f, top.a, mid);
        auto right = detail::kronrod15(f, mid, top.b);
        evals += 30;

        total += left.value + right.value - top.value;
        err_total += left.error + right.error - top.error;

        panels.push_back(left);
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(right);
        std::push_heap(panels.begin(), panels.end(), worse);
    }

    // Re-sum in spatial order: deterministic and slightly better conditioned.
    std::sort(panels.begin(), panels.end(),
              [](const Panel<T>& p, const Panel<T>& q) { return p.a < q.a; });
    T value{};
    double err = stuck_error;
    for (const auto& p : panels) {
        value += p.value;
        err += p.error;
    }

    Result<T> r;
    r.value = value;
    r.error = err;
    r.evaluations = evals;
    r.converged = err <= std::max(opt.rel_tol * detail::norm_of(value), opt.abs_floor);
    return r;
}

namespace detail {

// Truncation point and tail bound for [x, inf) given the decay hint and
// the integrand magnitude at the truncation point.
inline double initial_truncation(double a, const Decay& d) {
    switch (d.kind) {
        case DecayKind::exponential:
            if (!(d.rate > 0.0)) throw DomainError("exponential decay hint needs rate > 0");
            return a + 80.0 / d.rate;
        case DecayKind::sech:
            return a + 45.0;
        case DecayKind::algebraic: {
            if (!(d.rate > 1.0)) throw DomainError("algebraic decay hint needs power > 1");
            return std::max(std::abs(a), 1.0) * 1e4;
        }
        default:
            throw DomainError("semi-infinite integration requires a decay hint");
    }
}

inline double tail_bound(double b, double f_at_b, const Decay& d) {
    const double mag = std::abs(f_at_b);
    switch (d.kind) {
        case DecayKind::exponential:
            return mag / d.rate;
        case DecayKind::sech:
            return 2.0 * mag;  // integral of sech from b is 2*atan(e^-b) <= 2e^-b
        case DecayKind::algebraic:
            return mag * b / (d.rate - 1.0);
        default:
            return 0.0;
    }
}

inline double extension_step(double b, double a, const Decay& d) {
    switch (d.kind) {
        case DecayKind::exponential:
            return b + 40.0 / d.rate - a;  // widths relative to a
        case DecayKind::sech:
            return b + 20.0 - a;
        default:
            return 2.0 * (b - a);  // double the algebraic window
    }
}

}  // namespace detail

// Adaptive integration over [a, inf). The domain is truncated where the
// decay hint bounds the tail below the tolerance; the tail bound is added
// to the error estimate. If the bound is not yet small enough the window
// is extended (a hedge against an optimistic hint).
template <typename F, typename T = std::invoke_result_t<F, double>>
Result<T> integrate_semi_infinite(F&& f, double a, Decay decay, const Options& opt = {}) {
    // Half the budget goes to the interior, half to the truncation tail.
    Options half = opt;
    half.rel_tol = std::max(0.5 * opt.rel_tol, 1.05e-14);
    double b = detail::initial_truncation(a, decay);
    Result<T> r = integrate(f, a, b, half);
    double tail = detail::tail_bound(b, detail::norm_of(f(b)), decay);
    r.evaluations += 1;

    int extensions = 0;
    while (tail > 0.5 * std::max(opt.rel_tol * detail::norm_of(r.value), opt.abs_floor) &&
           extensions < 8) {
        const double b2 = a + detail::extension_step(b, a, decay);
        Result<T> ext = integrate(f, b, b2, half);
        r.value += ext.value;
        r.error += ext.error;
        r.evaluations += ext.evaluations + 1;
        r.converged = r.converged && ext.converged;
        b = b2;
        tail = detail::tail_bound(b, detail::norm_of(f(b)), decay);
        ++extensions;
    }
    r.error += tail;
    r.converged = r.converged &&
                  r.error <= std::max(opt.rel_tol * detail::norm_of(r.value), opt.abs_floor);
    return r;
}

// ---------------------------------------------------------------------------
// std::function-level API used across module boundaries.

struct Domain {
    double a = 0.0;
    double b = 0.0;          // ignored when semi_infinite
    bool semi_infinite = false;

    static Domain finite(double a, double b) { return {a, b, false}; }
    static Domain from(double a) { return {a, 0.0, true}; }
};

struct IntegralSpec {
    std::function<double(double)> integrand;
    Domain domain;
    double rel_tol = 1e-6;
    double abs_floor = 0.0;
    Decay decay;  // required for semi-infinite domains
};

using IntegralResult = Result<double>;

IntegralResult integrate_adaptive(const IntegralSpec& spec);

// Nested adaptive quadrature: the outer integrand at x is the inner
// integral produced by `inner(x)`. Inner tolerances must be at least 10x
// tighter than the outer one; inner failures surface as converged=false.
IntegralResult integrate_2d(const Domain& outer_domain, Decay outer_decay, double outer_rel_tol,
                            const std::function<IntegralSpec(double)>& inner,
                            double abs_floor = 0.0);

// Fixed, deterministic composite rule used only as a cross-check oracle:
// n panels of 7-point Gauss-Legendre over the hint-truncated domain, with
// panel boundaries graded toward the endpoints (quintic smoothstep map) so
// integrable endpoint singularities converge too.
IntegralResult brute_force_oracle(const IntegralSpec& spec, long n_panels);

}  // namespace skindepth::quad
