#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "errors.hpp"
#include "units.hpp"

using namespace msfa;

TEST_CASE("wavelength to omega") {
    CHECK(wavelength_to_omega(45.563353) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wavelength_to_omega(800.0) == doctest::Approx(0.0569542).epsilon(1e-6));
    // linear in 1/lambda
    CHECK(wavelength_to_omega(400.0) ==
          doctest::Approx(2.0 * wavelength_to_omega(800.0)).epsilon(1e-14));
    CHECK_THROWS_AS(wavelength_to_omega(0.0), DomainError);
    CHECK_THROWS_AS(wavelength_to_omega(-1.0), DomainError);
}

TEST_CASE("intensity to field and back") {
    CHECK(intensity_to_field(3.50945e16) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(intensity_to_field(2e13) == doctest::Approx(0.023872).epsilon(3e-5));
    CHECK(intensity_to_field(0.0) == 0.0);
    CHECK_THROWS_AS(intensity_to_field(-1.0), DomainError);

    for (double i : {1e10, 2e13, 5e14, 3.50945e16}) {
        const double f = intensity_to_field(i);
        CHECK(field_to_intensity(f) == doctest::Approx(i).epsilon(1e-12));
    }
    CHECK_THROWS_AS(field_to_intensity(-0.5), DomainError);
}

TEST_CASE("derive_params") {
    const LaserParams p = derive_params(0.023872, 0.0569542);
    CHECK(p.up == doctest::Approx(0.043922).epsilon(2e-5));
    CHECK(p.alpha0 == doctest::Approx(7.3593).epsilon(2e-4));
    // exact by construction
    CHECK(p.up == 0.023872 * 0.023872 / (4.0 * 0.0569542 * 0.0569542));
    CHECK(p.alpha0 * p.omega * p.omega ==
          doctest::Approx(p.field_peak).epsilon(1e-14));

    const LaserParams zero = derive_params(0.0, 0.3);
    CHECK(zero.up == 0.0);
    CHECK(zero.alpha0 == 0.0);

    CHECK_THROWS_AS(derive_params(0.1, 0.0), DomainError);
    CHECK_THROWS_AS(derive_params(-0.1, 0.5), DomainError);
}

TEST_CASE("up scales linearly with intensity at fixed omega") {
    const double omega = 0.0569542;
    for (double i : {1e12, 2e13, 7e14}) {
        const LaserParams a = derive_params(intensity_to_field(i), omega);
        const LaserParams b = derive_params(intensity_to_field(2.0 * i), omega);
        CHECK(b.up == doctest::Approx(2.0 * a.up).epsilon(1e-12));
    }
}

TEST_CASE("coulomb correction") {
    CHECK(coulomb_correction(1.0, 1.0) == 1.0);
    CHECK(coulomb_correction(2.0, 8.0) == doctest::Approx(1.0).epsilon(1e-14));
    // kappa = 1 collapses to (1/F)^2
    CHECK(coulomb_correction(1.0, 0.023872) ==
          doctest::Approx(1754.7788).epsilon(1e-6));
    for (double f : {0.01, 0.023872, 0.3}) {
        CHECK(coulomb_correction(1.0, f) * f * f ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(coulomb_correction(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(coulomb_correction(0.0, 0.5), DomainError);
}
