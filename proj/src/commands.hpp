#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace msfa {

struct IntensityGrid {
    double i_min = 0.0;  // W/cm^2
    double i_max = 0.0;
    int n_points = 20;
};

// Log-spaced intensities, endpoints included.
std::vector<double> log_grid(const IntensityGrid& grid);

// Each writer emits a deterministic CSV (header comments echo the
// resolved config); an empty out_path writes to stdout.

// Channel rates for chi = 0 and chi = pi/2 side by side.
void cmd_spectrum(const RunConfig& cfg, const std::string& out_path);

// Per-channel parallel/perpendicular ratio, exact and strong-field forms;
// a dense cos^2(R k / 2) overlay lands next to out_path with an
// "_overlay" suffix (skipped when writing to stdout).
void cmd_ratio(const RunConfig& cfg, const std::string& out_path);

// Pulse-integrated yields and their ratio over a peak-intensity grid.
void cmd_yield(const RunConfig& cfg, const IntensityGrid& grid,
               const std::string& out_path);

// Focal-volume-averaged signals and ratio; external 2-column curves are
// aligned onto the grid for comparison. default_scale multiplies the
// first external curve (and the external ratio column).
void cmd_focal(const RunConfig& cfg, const IntensityGrid& grid,
               const std::vector<std::string>& external_paths,
               double default_scale, const std::string& out_path);

// Diagnostics for the generalized-Bessel evaluator: Parseval residual,
// recurrence residual, and v = 0 reduction error.
std::string bessel_check_report(double u, double v, int n_min, int n_max);
void cmd_bessel_check(double u, double v, int n_min, int n_max,
                      const std::string& out_path);

}  // namespace msfa
