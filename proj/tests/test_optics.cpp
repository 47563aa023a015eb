#include <doctest.h>

#include <cmath>
#include <complex>

#include "prop.hpp"
#include "skindepth/optics.hpp"

using namespace skindepth;
using cplx = std::complex<double>;

TEST_CASE("real-axis reflection trivial cases") {
    SUBCASE("vacuum impedance match gives r = 0") {
        ResponsePoint p{FrequencyAxis::real, 0.3, 0.0};
        auto z = local_pair(p, cplx(1.0, 0.0));
        auto r = reflection_real(p, z);
        CHECK(std::abs(r.r_s) < 1e-14);
        CHECK(std::abs(r.r_p) < 1e-14);
    }

    SUBCASE("Z -> 0 gives r_s = r_p = 1") {
        ResponsePoint p{FrequencyAxis::real, 0.3, 0.1};
        ImpedancePair z;
        z.point = p;
        z.z_s = z.z_p = 0.0;
        z.omega_z_p = 0.0;
        auto r = reflection_real(p, z);
        CHECK(r.r_s.real() == doctest::Approx(1.0));
        CHECK(r.r_p.real() == doctest::Approx(1.0));
    }

    SUBCASE("normal incidence reduces to the Fresnel magnitude") {
        // impedance-form amplitude is (sqrt(eps)-1)/(sqrt(eps)+1); the textbook
        // s-convention differs by an overall sign, the square is shared.
        const cplx eps(2.89, 0.4);
        ResponsePoint p{FrequencyAxis::real, 0.2, 0.0};
        auto r = reflection_real(p, local_pair(p, eps));
        const cplx fresnel = (1.0 - std::sqrt(eps)) / (1.0 + std::sqrt(eps));
        CHECK(std::abs(r.r_s * r.r_s - fresnel * fresnel) < 1e-13);
        CHECK(std::abs(std::abs(r.r_s) - std::abs(fresnel)) < 1e-13);
    }
}

TEST_CASE("imaginary-axis reflection") {
    SUBCASE("vacuum impedances give r = 0") {
        ResponsePoint p{FrequencyAxis::imaginary, 0.3, 0.4};
        auto z = local_pair(p, cplx(1.0, 0.0));
        auto r = reflection_imag(p, z);
        CHECK(std::abs(r.r_s) < 1e-14);
        CHECK(std::abs(r.r_p) < 1e-14);
    }

    SUBCASE("Z -> 0 gives r_s = r_p = 1") {
        ResponsePoint p{FrequencyAxis::imaginary, 0.3, 0.4};
        ImpedancePair z;
        z.point = p;
        z.z_s = z.z_p = z.omega_z_p = 0.0;
        auto r = reflection_imag(p, z);
        CHECK(r.r_s.real() == doctest::Approx(1.0));
        CHECK(r.r_p.real() == doctest::Approx(1.0));
    }

    SUBCASE("Thomas-Fermi keeps r_p strictly below 1 as Omega -> 0") {
        auto gold = preset("gold");
        const double q = 0.1;
        ResponsePoint p{FrequencyAxis::imaginary, 1e-6, q};
        auto z = nonlocal_pair_imag(p, gold, {});
        auto r = reflection_imag(p, z);
        const double limit =
            (q - q * q * gold.v_f_over_c / std::sqrt(3.0)) /
            (q + q * q * gold.v_f_over_c / std::sqrt(3.0));
        CHECK(r.r_p.real() < 1.0);
        CHECK(r.r_p.real() == doctest::Approx(limit).epsilon(1e-3));
    }
}

TEST_CASE("duality: local impedances reproduce the dielectric-form Fresnel") {
    auto gold = preset("gold");
    for (double omega : {1e-4, 1e-2, 0.3}) {
        for (double q : {1e-3, 0.1, 2.0}) {
            ResponsePoint p{FrequencyAxis::imaginary, omega, q};
            const double eps = drude_local(p, gold).real();
            auto r = reflection_imag(p, local_pair(p, gold));

            const double kappa = std::hypot(omega, q);
            const double w_metal = std::sqrt(eps * omega * omega + q * q);
            const double rs_eps = (kappa - w_metal) / (kappa + w_metal);
            const double rp_eps = (eps * kappa - w_metal) / (eps * kappa + w_metal);

            // r_p matches the Lifshitz dielectric form exactly; r_s up to
            // the overall sign convention (only squares enter the force).
            CHECK(r.r_p.real() == doctest::Approx(rp_eps).epsilon(1e-12));
            CHECK((r.r_s * r.r_s).real() ==
                  doctest::Approx(rs_eps * rs_eps).epsilon(1e-12));
        }
    }
}

TEST_CASE("absorptance arithmetic") {
    ResponsePoint p{FrequencyAxis::real, 0.1, 0.0};
    ReflectionPair r;
    r.point = p;

    r.r_s = r.r_p = cplx(1.0, 0.0);
    CHECK(absorptance(r).a_s == doctest::Approx(0.0));

    r.r_s = r.r_p = cplx(0.6, 0.0);
    CHECK(absorptance(r).a_s == doctest::Approx(0.64));

    r.r_s = r.r_p = cplx(0.0, 0.0);
    CHECK(absorptance(r).a_p == doctest::Approx(1.0));

    r.point.axis = FrequencyAxis::imaginary;
    CHECK_THROWS_AS(absorptance(r), DomainError);
}

TEST_CASE("absorptance sweep basics") {
    auto potassium = preset("potassium");
    std::vector<double> grid{1e-4, 1e-3, 1e-2};

    SUBCASE("normal incidence: s and p coincide at every grid point") {
        auto rows = absorptance_sweep(potassium, 0.0, grid);
        REQUIRE(rows.size() == 3);
        for (const auto& row : rows) {
            CHECK(row.a_s_local == doctest::Approx(row.a_p_local).epsilon(1e-10));
            CHECK(row.a_s_nonlocal == doctest::Approx(row.a_p_nonlocal).epsilon(1e-6));
            CHECK(row.q == 0.0);
        }
    }

    SUBCASE("passivity: 0 <= A <= 1 on real-axis sweeps") {
        for (double theta : {0.0, 40.0, 75.0}) {
            auto rows = absorptance_sweep(potassium, theta, grid);
            for (const auto& row : rows) {
                for (double a : {row.a_s_local, row.a_s_nonlocal, row.a_p_local,
                                 row.a_p_nonlocal}) {
                    CHECK(a >= 0.0);
                    CHECK(a <= 1.0);
                }
            }
        }
    }

    SUBCASE("anomalous skin effect raises absorptance at low frequency") {
        auto rows = absorptance_sweep(potassium, 0.0, {3e-3});
        CHECK(rows[0].a_s_nonlocal > rows[0].a_s_local);
    }

    SUBCASE("angle validation") {
        CHECK_THROWS_AS(absorptance_sweep(potassium, 90.0, grid), DomainError);
        CHECK_THROWS_AS(absorptance_sweep(potassium, -5.0, grid), DomainError);
    }
}

TEST_CASE("property: imaginary-axis reflection bounds for both models (gold presets)") {
    Prop rng(0xca51);
    for (const char* name : {"gold", "gold-force-fit"}) {
        auto m = preset(name);
        for (int i = 0; i < 25; ++i) {
            const double omega = rng.log_uniform(1e-4, 0.8);
            const double q = rng.log_uniform(1e-3, 5.0);
            ResponsePoint p{FrequencyAxis::imaginary, omega, q};
            auto r_loc = reflection_imag(p, local_pair(p, m));
            auto r_nl = reflection_imag(p, nonlocal_pair_imag(p, m, {}));
            for (double r : {r_loc.r_s.real(), r_loc.r_p.real(), r_nl.r_s.real(),
                             r_nl.r_p.real()}) {
                CHECK(r >= 0.0);
                CHECK(r <= 1.0);
            }
        }
    }
}
