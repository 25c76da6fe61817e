#pragma once

#include <string>
#include <utility>
#include <vector>

#include "molecule.hpp"
#include "pulse_yield.hpp"
#include "sfa_rates.hpp"
#include "units.hpp"

namespace msfa {

// All run parameters, parsed from a line-based `key = value` file.
// Exactly one of intensity_Wcm2 / field_au must be given.
struct RunConfig {
    double wavelength_nm = 0.0;
    double intensity_wcm2 = 0.0;
    bool has_intensity = false;
    double field_au = 0.0;
    bool has_field = false;
    double r_bohr = 0.0;
    double e_ion_hartree = 0.0;
    int n_e = 2;
    double chi_deg = 0.0;
    int n_cycles = 10;
    double quad_tol = 1e-8;
    int quad_max_order = 4096;
    int n_max = 0;  // 0 = automatic spectrum tail
    double tail_rel_cutoff = 1e-12;
    double time_tol = 1e-6;
    int field_grid_points = 64;
    double field_floor_frac = 0.02;
    std::string coulomb_field = "envelope";  // or "peak"
    double focal_imin_frac = 0.01;
    int threads = 0;  // 0 = hardware concurrency
    int precision = 17;
};

// Parses and validates; unknown or duplicate keys and malformed values
// are reported with their line number.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& name);

// Applies one `key = value` assignment (same key set as the file) and
// re-validates; used for command-line overrides.
void config_set(RunConfig& cfg, const std::string& key, const std::string& value);

LaserParams laser_from(const RunConfig& cfg);
MoleculeModel molecule_from(const RunConfig& cfg);
SpectrumOptions spectrum_options_from(const RunConfig& cfg);
YieldOptions yield_options_from(const RunConfig& cfg);

// Resolved key/value pairs in fixed order, for CSV header echoes.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg);

}  // namespace msfa
