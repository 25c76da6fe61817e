#pragma once

namespace msfa {

double kappa_from_eion(double e_ion);

// Fourier transform of the normalized 1s orbital sqrt(kappa^3/pi) exp(-kappa r):
//   <k|phi> = (2 sqrt(2)/pi) kappa^{5/2} / (k^2 + kappa^2)^2
// with the unitary (2pi)^{-3/2} transform convention.
double s_orbital_ft(double k, double kappa);

// 1s-1s overlap S = exp(-kappa R) (1 + kappa R + (kappa R)^2 / 3).
double lcao_overlap(double kappa, double r_sep);

// Bonding-combination normalization a = 1/sqrt(2(1+S)).
double lcao_norm(double overlap);

// Homonuclear diatomic with a bonding HOMO built from two s orbitals at
// +-R/2. Orientation chi is the angle between the internuclear axis and
// the polarization axis; inversion symmetry folds any input angle into
// [0, pi/2].
struct MoleculeModel {
    double r_sep = 0.0;       // internuclear separation (bohr)
    double e_ion = 0.0;       // ionization energy (hartree)
    double kappa = 0.0;       // orbital exponent sqrt(2 e_ion) (1/bohr)
    int n_electrons = 2;      // HOMO occupation
    double overlap = 0.0;     // S at (kappa, r_sep)
    double norm_a = 0.0;      // LCAO normalization
    double chi = 0.0;         // orientation angle (radians), in [0, pi/2]

    static MoleculeModel create(double r_sep, double e_ion, int n_electrons = 2,
                                double chi = 0.0);
    MoleculeModel with_chi(double chi) const;
};

}  // namespace msfa
