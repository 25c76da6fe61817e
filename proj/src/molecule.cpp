#include "molecule.hpp"

#include <cmath>

#include "errors.hpp"

namespace msfa {

double kappa_from_eion(double e_ion) {
    if (!(e_ion > 0.0)) throw DomainError("ionization energy must be positive");
    return std::sqrt(2.0 * e_ion);
}

double s_orbital_ft(double k, double kappa) {
    if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
    if (k < 0.0) throw DomainError("momentum magnitude must be non-negative");
    const double denom = k * k + kappa * kappa;
    return 2.0 * std::sqrt(2.0) / M_PI * std::pow(kappa, 2.5) / (denom * denom);
}

double lcao_overlap(double kappa, double r_sep) {
    if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
    if (!(r_sep >= 0.0)) throw DomainError("separation must be non-negative");
    const double x = kappa * r_sep;
    return std::exp(-x) * (1.0 + x + x * x / 3.0);
}

double lcao_norm(double overlap) {
    if (!(overlap > -1.0)) throw DomainError("overlap must exceed -1");
    return 1.0 / std::sqrt(2.0 * (1.0 + overlap));
}

namespace {

// Fold an orientation angle into [0, pi/2] using the symmetry of a
// homonuclear molecule: chi -> chi mod pi, then reflect about pi/2.
double fold_chi(double chi) {
    if (!std::isfinite(chi)) throw DomainError("chi must be finite");
    double c = std::fmod(chi, M_PI);
    if (c < 0.0) c += M_PI;
    if (c > M_PI / 2.0) c = M_PI - c;
    return c;
}

}  // namespace

MoleculeModel MoleculeModel::create(double r_sep, double e_ion, int n_electrons,
                                    double chi) {
    if (!(r_sep >= 0.0)) throw DomainError("separation must be non-negative");
    if (n_electrons < 1) throw DomainError("electron count must be at least 1");
    MoleculeModel m;
    m.r_sep = r_sep;
    m.e_ion = e_ion;
    m.kappa = kappa_from_eion(e_ion);
    m.n_electrons = n_electrons;
    m.overlap = lcao_overlap(m.kappa, r_sep);
    m.norm_a = lcao_norm(m.overlap);
    m.chi = fold_chi(chi);
    return m;
}

MoleculeModel MoleculeModel::with_chi(double chi) const {
    MoleculeModel m = *this;
    m.chi = fold_chi(chi);
    return m;
}

}  // namespace msfa
