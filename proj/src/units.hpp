#pragma once

// Hartree atomic units throughout; nm / eV / W/cm^2 appear only at I/O
// boundaries and are converted through the constants below.

namespace msfa {

// 2*pi*hbar*c expressed as lambda[nm] * omega[hartree].
inline constexpr double kNmHartree = 45.563353;
// Atomic unit of intensity in W/cm^2.
inline constexpr double kIntensityAu = 3.50945e16;
inline constexpr double kEvPerHartree = 27.211386;

struct LaserParams {
    double omega = 0.0;       // angular frequency (hartree)
    double field_peak = 0.0;  // peak electric field (a.u.)
    double up = 0.0;          // ponderomotive energy F^2/(4 w^2) (hartree)
    double alpha0 = 0.0;      // quiver amplitude F/w^2 (bohr)
    // Provenance only; zero when the laser was specified directly in a.u.
    double wavelength_nm = 0.0;
    double intensity_wcm2 = 0.0;
};

double wavelength_to_omega(double lambda_nm);
double intensity_to_field(double i_wcm2);
double field_to_intensity(double field_au);

LaserParams derive_params(double field_au, double omega_hartree);

// (kappa^3/F)^(2/kappa); diverges for F -> 0.
double coulomb_correction(double kappa, double field_au);

}  // namespace msfa
