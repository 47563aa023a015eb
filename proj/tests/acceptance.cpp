// Acceptance suite: one numbered criterion per function, each printing a
// single PASS/FAIL line. Run with no arguments for the full suite or with
// a criterion number to run just that one (the ctest registration does the
// latter).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "skindepth/force.hpp"
#include "skindepth/optics.hpp"

using namespace skindepth;
using std::numbers::pi;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> g;
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) g.push_back(std::exp(la + (lb - la) * i / (n - 1)));
    return g;
}

char buffer[256];
std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    std::snprintf(buffer, sizeof(buffer), f, a, b, c);
    return buffer;
}

// 1. F(0)=1, G(0)=1/2 to 1e-9; numeric F,G at b=50,100 match the printed
//    large-b expansions within 0.1%.
Check criterion_1() {
    Check c;
    auto fg0 = asymptotic_FG(0.0);
    c.require(std::abs(fg0.f - 1.0) < 1e-9, fmt("F(0)=%.12g", fg0.f));
    c.require(std::abs(fg0.g - 0.5) < 1e-9, fmt("G(0)=%.12g", fg0.g));
    for (double b : {50.0, 100.0}) {
        auto fg = asymptotic_FG(b);
        const double b3 = b * b * b;
        const double fa = 4.0 / (3.0 * std::sqrt(3.0)) / b + (std::log(2 * b) - 0.5) / (pi * b3);
        const double ga = 4.0 / (3.0 * std::sqrt(3.0)) / b - (std::log(2 * b) + 0.5) / (pi * b3);
        c.require(std::abs(fg.f - fa) / fa < 1e-3, fmt("F(%g) off asymptote by %.2e", b, std::abs(fg.f - fa) / fa));
        c.require(std::abs(fg.g - ga) / ga < 1e-3, fmt("G(%g) off asymptote by %.2e", b, std::abs(fg.g - ga) / ga));
    }
    return c;
}

// 2. Unit-f override: nonlocal imaginary-axis impedances equal the local
//    closed forms to 1e-8 relative on a 20x20 log grid.
Check criterion_2() {
    Check c;
    auto gold = preset("gold");
    ImpedanceOptions opts;
    opts.f_override = FOverride::unit;
    opts.rel_tol = 1e-10;
    double worst = 0.0;
    for (double omega : log_grid(1e-5, 1.0, 20)) {
        for (double q : log_grid(1e-4, 10.0, 20)) {
            ResponsePoint p{FrequencyAxis::imaginary, omega, q};
            auto nl = nonlocal_pair_imag(p, gold, opts);
            auto loc = local_pair(p, gold);
            worst = std::max(worst, std::abs(nl.z_s.real() - loc.z_s.real()) / loc.z_s.real());
            worst = std::max(worst, std::abs(nl.z_p.real() - loc.z_p.real()) / loc.z_p.real());
        }
    }
    c.require(worst < 1e-8, fmt("max relative deviation %.3e (need < 1e-8)", worst));
    if (c.ok) c.detail = fmt("max relative deviation %.3e", worst);
    return c;
}

// 3. Leontovich consistency: full nonlocal Z_s, Z_p at Q=1e-6 vs the
//    closed form, gold, within 1%.
//
//    Expected to FAIL for gold (gamma = 3e-3): the strong-anomalous-regime
//    asymptotics behind the closed form require v >> 1 at the dominant part
//    of the chi-integral, and for gold v never exceeds ~0.95 below the
//    relaxation frequency. The full integrals track the *local* impedance
//    (to ~2%, exactly the band criterion 4 pins) which sits 2.1x-3.9x above
//    the Leontovich value in this window. Kept faithful to the stated
//    criterion rather than weakened; see the project notes.
Check criterion_3() {
    Check c;
    auto gold = preset("gold");
    for (double omega : {1e-5, 1e-4, 1e-3}) {
        ResponsePoint p{FrequencyAxis::imaginary, omega, 1e-6};
        auto nl = nonlocal_pair_imag(p, gold, {});
        const double zl = leontovich(omega, gold);
        const double dev_s = std::abs(nl.z_s.real() - zl) / zl;
        const double dev_p = std::abs(nl.z_p.real() - zl) / zl;
        c.require(dev_s < 0.01, fmt("Omega=%g: Z_s off Leontovich by %.1f%%", omega, 100 * dev_s));
        c.require(dev_p < 0.01, fmt("Omega=%g: Z_p off Leontovich by %.1f%%", omega, 100 * dev_p));
    }
    return c;
}

// 4. Deviation band: max over Omega of |Z_s - Z_s_loc|/Z_s_loc in
//    [0.5%, 4%] for gold at Q in {1e-2, 1e-1}.
Check criterion_4() {
    Check c;
    auto gold = preset("gold");
    for (double q : {1e-2, 1e-1}) {
        double worst = 0.0;
        for (double omega : log_grid(1e-5, 1e-1, 41)) {
            ResponsePoint p{FrequencyAxis::imaginary, omega, q};
            auto nl = nonlocal_pair_imag(p, gold, {});
            auto loc = local_pair(p, gold);
            worst = std::max(worst,
                             std::abs(nl.z_s.real() - loc.z_s.real()) / loc.z_s.real());
        }
        c.require(worst >= 0.005 && worst <= 0.04,
                  fmt("Q=%g: max deviation %.3f%% outside [0.5%%, 4%%]", q, 100 * worst));
        if (c.ok) c.detail += fmt("Q=%g: %.2f%%  ", q, 100 * worst);
    }
    return c;
}

// 5. Thomas-Fermi signature: Z_p/Z_p_loc monotone in falling Omega at
//    Q=0.1, and Omega Z_p -> Q^2 (v_F/c)/sqrt(3) within 2% at Omega=1e-6.
Check criterion_5() {
    Check c;
    auto gold = preset("gold");
    const double q = 0.1;
    double prev = 0.0;
    for (double omega : log_grid(1e-5, 1e-2, 13)) {
        // descending Omega means ascending ratio; scan ascending and check decline
        ResponsePoint p{FrequencyAxis::imaginary, omega, q};
        const double ratio = nonlocal_pair_imag(p, gold, {}).z_p.real() /
                             local_pair(p, gold).z_p.real();
        if (prev != 0.0)
            c.require(ratio < prev, fmt("ratio not monotone at Omega=%g", omega));
        prev = ratio;
    }
    ResponsePoint p{FrequencyAxis::imaginary, 1e-6, q};
    auto nl = nonlocal_pair_imag(p, gold, {});
    const double tf = q * q * gold.v_f_over_c / std::sqrt(3.0);
    const double dev = std::abs(nl.omega_z_p.real() - tf) / tf;
    c.require(dev < 0.02, fmt("Omega*Z_p off the TF limit by %.2f%%", 100 * dev));
    if (c.ok) c.detail = fmt("TF limit deviation %.3f%%", 100 * dev);
    return c;
}

// 6. Perfect-conductor pipeline identity and exact ideal-force scaling.
Check criterion_6() {
    Check c;
    auto gold = preset("gold-force-fit");
    ForceOptions opts;
    opts.r_override = ReflectionOverride::perfect_conductor;
    for (double a : {100.0, 500.0, 2000.0}) {
        const double eta = reduction_factor(a, gold, opts);
        c.require(std::abs(eta - 1.0) < 1e-3, fmt("eta(%g nm) = %.6f", a, eta));
    }
    for (double a : {80.0, 1000.0}) {
        const double ratio = ideal_force(a) / ideal_force(2 * a);
        c.require(std::abs(ratio - 16.0) < 16.0 * 1e-14, fmt("F(a)/F(2a) = %.15g", ratio));
    }
    return c;
}

// 7. Absorptance reproduction, desk scale: anomalous-skin excess at normal
//    incidence somewhere in [1e-4, 1e-2]; an interior maximum of
//    dA_p = A_p_nl - A_p_loc inside [0.03, 0.3] at 75 degrees, absent for s.
Check criterion_7() {
    Check c;
    auto potassium = preset("potassium");

    bool excess = false;
    auto rows0 = absorptance_sweep(potassium, 0.0, log_grid(1e-4, 1e-2, 9));
    for (const auto& r : rows0) excess = excess || (r.a_s_nonlocal > r.a_s_local);
    c.require(excess, "no anomalous-skin absorptance excess at normal incidence");

    const auto grid = log_grid(0.02, 0.5, 23);
    auto rows75 = absorptance_sweep(potassium, 75.0, grid);
    std::vector<double> dap, das;
    for (const auto& r : rows75) {
        dap.push_back(r.a_p_nonlocal - r.a_p_local);
        das.push_back(r.a_s_nonlocal - r.a_s_local);
    }
    auto interior_max = [&](const std::vector<double>& d) {
        for (std::size_t i = 1; i + 1 < d.size(); ++i) {
            if (grid[i] < 0.03 || grid[i] > 0.3) continue;
            if (d[i] > d[i - 1] && d[i] > d[i + 1]) return grid[i];
        }
        return -1.0;
    };
    const double peak_p = interior_max(dap);
    const double peak_s = interior_max(das);
    c.require(peak_p > 0.0, "no interior maximum of dA_p in [0.03, 0.3]");
    c.require(peak_s < 0.0, fmt("unexpected interior maximum of dA_s at Omega=%g", peak_s));
    if (c.ok) c.detail = fmt("dA_p peak near Omega=%.3f", peak_p);
    return c;
}

// 8. Headline correction: gold plate-plate over [100, 300] nm gives a
//    negative relative correction with magnitude in [0.1%, 1%]; p dominates
//    s everywhere; the sphere-plate relative correction is strictly smaller.
Check criterion_8() {
    Check c;
    auto gold = preset("gold");
    for (double a : {100.0, 150.0, 200.0, 250.0, 300.0}) {
        auto pp = nonlocal_correction(a, gold, Geometry::plate_plate);
        c.require(pp.converged, fmt("plate-plate correction unconverged at %g nm", a));
        c.require(pp.rel_total < 0.0, fmt("correction not negative at %g nm", a));
        const double mag = std::abs(pp.rel_total);
        c.require(mag >= 1e-3 && mag <= 1e-2,
                  fmt("|dF/F| = %.4f%% outside [0.1%%, 1%%] at a=%g nm", 100 * mag, a));
        c.require(std::abs(pp.rel_s) < std::abs(pp.rel_p),
                  fmt("s does not stay below p at a=%g nm", a));

        auto sp = nonlocal_correction(a, gold, Geometry::sphere_plate, {}, 5e4);
        c.require(std::abs(sp.rel_total) < std::abs(pp.rel_total),
                  fmt("sphere-plate correction not smaller at a=%g nm", a));
        if (c.ok) c.detail = fmt("last point a=%g nm: pp %.3f%%", a, 100 * pp.rel_total);
    }
    return c;
}

// 9. Difference-integrand result equals the directly subtracted forces
//    within the combined error bars at a = 275 nm.
Check criterion_9() {
    Check c;
    auto gold = preset("gold");
    auto diff = nonlocal_correction(275.0, gold, Geometry::plate_plate);

    ForceOptions nl;
    nl.model = ResponseModel::boltzmann;
    ForceOptions loc;
    loc.model = ResponseModel::local;
    const MaterialParams mat = gold.without_chi();
    auto f_nl = force_plate_plate(275.0, mat, nl);
    auto f_loc = force_plate_plate(275.0, mat, loc);

    const double direct = f_nl.value - f_loc.value;
    const double err = std::abs(diff.error_rel * diff.force_local) + f_nl.error + f_loc.error;
    c.require(std::abs(diff.delta_force - direct) <= err,
              fmt("paths differ: %.4e vs %.4e (allow %.2e)", diff.delta_force, direct, err));
    if (c.ok)
        c.detail = fmt("delta %.4e Pa vs direct %.4e Pa", diff.delta_force, direct);
    return c;
}

// 10. Lindhard-to-Boltzmann consistency: sup deviation over a 5x5 grid at
//     z = 1e-4 below 1e-3; halving z shrinks it by a factor in [3, 5].
Check criterion_10() {
    Check c;
    auto gold = preset("gold");
    const std::vector<double> omegas{0.01, 0.02, 0.05, 0.1, 0.2};
    const std::vector<double> ks{0.5, 1.0, 1.5, 2.0, 3.0};

    auto sup_dev = [&](double z) {
        double worst = 0.0;
        for (double omega : omegas) {
            for (double k : ks) {
                auto b = boltzmann_real(omega, k, gold);
                auto l = lindhard_real(omega, k, k / (2.0 * z), gold);
                worst = std::max(worst, std::abs(l.eps_t - b.eps_t) / std::abs(b.eps_t));
                worst = std::max(worst, std::abs(l.eps_l - b.eps_l) / std::abs(b.eps_l));
            }
        }
        return worst;
    };

    const double d1 = sup_dev(1e-4);
    const double d2 = sup_dev(5e-5);
    c.require(d1 < 1e-3, fmt("sup deviation %.3e at z=1e-4 (need < 1e-3)", d1));
    const double ratio = d1 / d2;
    c.require(ratio >= 3.0 && ratio <= 5.0, fmt("halving ratio %.2f outside [3, 5]", ratio));
    if (c.ok) c.detail = fmt("sup dev %.2e, halving ratio %.2f", d1, ratio);
    return c;
}

// 11. Adaptive engine vs brute-force oracle to 1e-8 on the canonical
//     integrals and on the Z_s chi-integrand at (Omega=1e-2, Q=1e-1, gold).
Check criterion_11() {
    Check c;

    auto compare = [&](quad::IntegralSpec spec, const char* name, long panels = 1000000) {
        auto fine = quad::brute_force_oracle(spec, panels);
        quad::IntegralResult adap;
        if (spec.domain.semi_infinite) {
            adap = quad::integrate_adaptive(spec);
        } else {
            quad::Options opt{spec.rel_tol, 0.0};
            opt.max_intervals = 20000;
            adap = quad::integrate(spec.integrand, spec.domain.a, spec.domain.b, opt);
        }
        const double rel = std::abs(adap.value - fine.value) / std::abs(fine.value);
        c.require(rel < 1e-8, std::string(name) + fmt(": oracle mismatch %.3e", rel));
    };

    quad::IntegralSpec s1;
    s1.integrand = [](double x) { return std::exp(-x); };
    s1.domain = quad::Domain::from(0.0);
    s1.decay = quad::Decay::exponential(1.0);
    s1.rel_tol = 1e-10;
    compare(s1, "exp(-x)");

    quad::IntegralSpec s2;
    s2.integrand = [](double x) { return 1.0 / std::cosh(x); };
    s2.domain = quad::Domain::from(0.0);
    s2.decay = quad::Decay::sech();
    s2.rel_tol = 1e-10;
    compare(s2, "sech(x)");

    quad::IntegralSpec s3;
    s3.integrand = [](double x) { return 1.0 / std::sqrt(x); };
    s3.domain = quad::Domain::finite(0.0, 1.0);
    s3.rel_tol = 1e-9;
    compare(s3, "x^-1/2");

    auto gold = preset("gold");
    const double omega = 1e-2, q = 1e-1;
    const double r2 = (omega / q) * (omega / q);
    const double v_scale = gold.v_f_over_c * q / (omega + gold.gamma);
    quad::IntegralSpec s4;
    s4.integrand = [&](double chi) {
        const double ch = std::cosh(chi);
        auto d = boltzmann_imag(omega, v_scale * ch, gold);
        return ch / (ch * ch + r2 * d.eps_t.real());
    };
    s4.domain = quad::Domain::from(0.0);
    s4.decay = quad::Decay::sech();
    s4.rel_tol = 1e-10;
    compare(s4, "Z_s chi-integrand");
    return c;
}

using Criterion = std::function<Check()>;

struct Entry {
    int id;
    const char* label;
    Criterion fn;
};

const Entry kCriteria[] = {
    {1, "asymptotic anchors F(0), G(0), large-b expansions", criterion_1},
    {2, "local-reduction oracle (unit-f override, 20x20 grid)", criterion_2},
    {3, "Leontovich consistency at Q=1e-6 (gold)", criterion_3},
    {4, "percent-level Z_s deviation band (gold)", criterion_4},
    {5, "Thomas-Fermi signature in Z_p (gold)", criterion_5},
    {6, "perfect-conductor pipeline identity", criterion_6},
    {7, "absorptance qualitative reproduction (potassium)", criterion_7},
    {8, "headline nonlocal correction, 100-300 nm (gold)", criterion_8},
    {9, "difference-vs-direct cross-check at 275 nm", criterion_9},
    {10, "Lindhard-to-Boltzmann z->0 consistency", criterion_10},
    {11, "quadrature oracle equivalence", criterion_11},
};

int run_one(const Entry& e) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c = e.fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s%s%s  [%.1fs]\n", c.ok ? "PASS" : "FAIL", e.id,
                e.label, c.detail.empty() ? "" : " -- ", c.detail.c_str(), secs);
    std::fflush(stdout);
    return c.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        const int want = std::atoi(argv[1]);
        for (const auto& e : kCriteria)
            if (e.id == want) return run_one(e);
        std::fprintf(stderr, "no criterion %d\n", want);
        return 2;
    }
    int failures = 0;
    for (const auto& e : kCriteria) failures += run_one(e);
    std::printf("%d of %zu criteria failed\n", failures, std::size(kCriteria));
    return failures == 0 ? 0 : 1;
}
