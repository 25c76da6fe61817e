#pragma once

#include <vector>

#include "molecule.hpp"
#include "units.hpp"

namespace msfa {

// Angular-quadrature control shared by the rate and ratio integrals.
struct QuadSpec {
    double rel_tol = 1e-8;
    int init_order = 32;
    int max_order = 4096;
};

struct ChannelKinematics {
    int n_photons = 0;
    bool open = false;
    double k_n = 0.0;     // electron momentum (a.u.); 0 when closed
    double energy = 0.0;  // k_n^2/2 (hartree); 0 when closed
};

// k_N from N*omega = k^2/2 + Up + E_ion; channels at or below threshold
// are closed.
ChannelKinematics channel_kinematics(int n, const LaserParams& laser, double e_ion);

// Smallest N whose channel is open.
int n_min_open(const LaserParams& laser, double e_ion);

struct AtiChannel {
    int n_photons = 0;
    double k_n = 0.0;
    double energy = 0.0;  // hartree
    double rate = 0.0;    // Gamma_N (a.u.)
    bool open = false;
};

struct AtiSpectrum {
    std::vector<AtiChannel> channels;  // ascending N starting at the lowest open one
    LaserParams laser;
    MoleculeModel molecule;
};

// Rate per solid angle for emission direction (cos_theta, phi) measured
// from the polarization axis; the internuclear axis sits at mol.chi in
// the phi = 0 plane.
double differential_rate(double cos_theta, double phi, int n,
                         const LaserParams& laser, const MoleculeModel& mol);

// Gamma_N = N_e * sphere integral of differential_rate. chi = 0 uses the
// azimuthally symmetric 1D form, chi = pi/2 the J_0 closed-form azimuthal
// factor, any other chi a tensor-product rule in (cos theta, phi); the
// order doubles from quad.init_order until the value is stable to
// quad.rel_tol. Closed channels return 0.
double channel_rate(int n, const LaserParams& laser, const MoleculeModel& mol,
                    const QuadSpec& quad = {});

// Same integral forced through the 2D tensor-product path at every chi;
// cross-check route for the reduced forms.
double channel_rate_full(int n, const LaserParams& laser, const MoleculeModel& mol,
                         const QuadSpec& quad = {});

struct SpectrumOptions {
    // Highest channel; 0 picks the first N whose rate drops below
    // tail_rel_cutoff times the running spectrum maximum, never going past
    // N_min + tail_cap.
    int n_max = 0;
    double tail_rel_cutoff = 1e-12;
    int tail_cap = 200;
    int threads = 0;  // 0 = hardware concurrency
    QuadSpec quad;
};

// Channel rates N_min..n_max at the molecule's orientation. Channels are
// evaluated in parallel into preassigned slots, so the result does not
// depend on scheduling.
AtiSpectrum ati_spectrum(const LaserParams& laser, const MoleculeModel& mol,
                         const SpectrumOptions& opt = {});

// integral_0^{2pi} cos^2(delta cos phi) dphi = pi (1 + J_0(2 delta)).
double azimuthal_identity(double delta);

// Parallel/perpendicular ratio X_N from the reduced 1D integrals,
//   X = int dc J_n^2(g c, b) cos^2(d c) /
//       int dc J_n^2(g c, b) [1 + J_0(2 d sqrt(1-c^2))]/2,
// parameterized by g = alpha0 k, b = Up/(2 omega), d = R k / 2.
double ratio_exact_from_params(int n, double g, double b, double d,
                               const QuadSpec& quad = {});

double ratio_exact(int n, const LaserParams& laser, const MoleculeModel& mol,
                   const QuadSpec& quad = {});

// Strong-field limit cos^2(R k / 2).
double ratio_approx(double k_n, double r_sep);

// Electron energy of the first interference node, pi^2/(2 R^2).
double interference_min_energy(double r_sep);

struct RatioPoint {
    int n_photons = 0;
    double k_n = 0.0;
    double energy = 0.0;  // hartree
    double x_exact = 0.0;
    double x_approx = 0.0;
};

struct RatioCurve {
    std::vector<RatioPoint> points;
    LaserParams laser;
    MoleculeModel molecule;
};

// X_N per open channel, N_min..n_max (opt.n_max = 0 defaults to
// N_min + 30, roughly the energy window over which the interference
// minimum shows up for near-IR parameters).
RatioCurve ratio_curve(const LaserParams& laser, const MoleculeModel& mol,
                       const SpectrumOptions& opt = {});

}  // namespace msfa
