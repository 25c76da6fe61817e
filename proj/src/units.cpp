#include "units.hpp"

#include <cmath>

#include "errors.hpp"

namespace msfa {

double wavelength_to_omega(double lambda_nm) {
    if (!(lambda_nm > 0.0))
        throw DomainError("wavelength must be positive (got " + std::to_string(lambda_nm) + " nm)");
    return kNmHartree / lambda_nm;
}

double intensity_to_field(double i_wcm2) {
    if (i_wcm2 < 0.0)
        throw DomainError("intensity must be non-negative (got " + std::to_string(i_wcm2) + " W/cm^2)");
    return std::sqrt(i_wcm2 / kIntensityAu);
}

double field_to_intensity(double field_au) {
    if (field_au < 0.0)
        throw DomainError("field must be non-negative (got " + std::to_string(field_au) + " a.u.)");
    return field_au * field_au * kIntensityAu;
}

LaserParams derive_params(double field_au, double omega_hartree) {
    if (!(omega_hartree > 0.0))
        throw DomainError("omega must be positive");
    if (field_au < 0.0)
        throw DomainError("field must be non-negative");
    LaserParams p;
    p.omega = omega_hartree;
    p.field_peak = field_au;
    p.up = field_au * field_au / (4.0 * omega_hartree * omega_hartree);
    p.alpha0 = field_au / (omega_hartree * omega_hartree);
    return p;
}

double coulomb_correction(double kappa, double field_au) {
    if (!(kappa > 0.0))
        throw DomainError("kappa must be positive");
    if (!(field_au > 0.0))
        throw DomainError("Coulomb correction diverges for zero field");
    return std::pow(kappa * kappa * kappa / field_au, 2.0 / kappa);
}

}  // namespace msfa
