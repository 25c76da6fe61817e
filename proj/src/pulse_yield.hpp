#pragma once

#include <functional>
#include <vector>

#include "molecule.hpp"
#include "sfa_rates.hpp"
#include "units.hpp"

namespace msfa {

struct PulseSpec {
    int n_cycles = 10;
    double f0 = 0.0;     // peak field (a.u.)
    double omega = 0.0;  // carrier frequency (hartree)
    double duration() const;  // n_cycles * 2 pi / omega (a.u. of time)
};

// F0 cos^2(pi t / T) for |t| <= T/2, 0 outside; t = 0 is the pulse center.
double envelope(double t, const PulseSpec& pulse);

// Which field the Coulomb correction C^2 sees inside the pulse integral.
enum class CoulombField { kEnvelope, kPeak };

// Gamma_total(F) sampled on a log-spaced field grid so the time quadrature
// interpolates instead of recomputing channel sums. Rates are stored with
// C^2 evaluated at the instantaneous field; the peak-field variant is a
// closed-form rescale, (F/F0)^(2/kappa).
struct RateTable {
    std::vector<double> fields;  // ascending, > 0
    std::vector<double> rates;   // Gamma_total at each field
    double kappa = 0.0;

    // Piecewise log-log linear; power-law extrapolation below the grid,
    // clamp above; 0 at zero field.
    double total_rate(double field) const;

    static RateTable build(double omega, const MoleculeModel& mol, double f_min,
                           double f_max, int n_points,
                           const SpectrumOptions& opt = {});
};

struct YieldOptions {
    double time_rel_tol = 1e-6;
    CoulombField coulomb_field = CoulombField::kEnvelope;
    int field_grid_points = 64;
    double field_floor_frac = 0.02;  // table starts at this fraction of F0
    SpectrumOptions spectrum;
};

// P = 1 - exp(-integral Gamma(F_env(t)) dt) for an arbitrary rate model;
// exposed separately so a closed-form stub rate can exercise the time
// integration on its own.
double pulse_yield_from_rate(const std::function<double(double)>& rate_of_field,
                             const PulseSpec& pulse, double rel_tol = 1e-6);

double pulse_yield(const RateTable& table, const PulseSpec& pulse,
                   const YieldOptions& opt = {});

// Convenience: builds a table spanning [floor_frac * F0, F0] first.
double pulse_yield(double omega, const MoleculeModel& mol, const PulseSpec& pulse,
                   const YieldOptions& opt = {});

// Iso-intensity volume weight of a focused Gaussian beam,
// dV/dI proportional to I^(-5/2) (I0 - I)^(1/2) (I0 + 2I).
double focal_weight(double intensity, double peak_intensity);

struct YieldPoint {
    double intensity = 0.0;  // W/cm^2
    double yield = 0.0;
};

struct YieldCurve {
    std::vector<YieldPoint> points;  // ascending intensity
    double chi = 0.0;
    bool focal_averaged = false;
};

// S(I0) = integral_{I_min}^{I0} Y(I) dV/dI dI with log-log interpolation
// of Y between tabulated points; the sqrt endpoint is removed by
// substitution before the adaptive quadrature.
double focal_average(const YieldCurve& curve, double peak_intensity,
                     double min_intensity, double rel_tol = 1e-6);

struct RatioScanPoint {
    double intensity = 0.0;   // peak intensity (W/cm^2)
    double yield_par = 0.0;   // raw yield, or focal signal when averaged
    double yield_perp = 0.0;
    double ratio = 0.0;       // NaN when the perpendicular yield vanishes
};

struct RatioScanOptions {
    bool with_focal = false;
    double focal_imin_frac = 0.01;  // focal cutoff I_min = frac * I0
    double rescale = 1.0;           // multiplies the ratio column
    int threads = 0;
    YieldOptions yield;
};

// Parallel and perpendicular pulse yields over an ascending peak-intensity
// grid, optionally focal-volume averaged, and their ratio.
std::vector<RatioScanPoint> ratio_scan(const std::vector<double>& intensities,
                                       double omega, const MoleculeModel& mol,
                                       int n_cycles,
                                       const RatioScanOptions& opt = {});

}  // namespace msfa
