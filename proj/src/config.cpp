#include "config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace msfa {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& where) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected a number, got '" + v + "'");
    }
}

int parse_int(const std::string& v, const std::string& where) {
    try {
        size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size() || x < -2147483647L || x > 2147483647L)
            throw std::invalid_argument(v);
        return static_cast<int>(x);
    } catch (const std::exception&) {
        throw ConfigError(where + ": expected an integer, got '" + v + "'");
    }
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value,
               const std::string& where) {
    if (key == "wavelength_nm") {
        cfg.wavelength_nm = parse_double(value, where);
    } else if (key == "intensity_Wcm2") {
        cfg.intensity_wcm2 = parse_double(value, where);
        cfg.has_intensity = true;
    } else if (key == "field_au") {
        cfg.field_au = parse_double(value, where);
        cfg.has_field = true;
    } else if (key == "R_bohr") {
        cfg.r_bohr = parse_double(value, where);
    } else if (key == "E_ion_hartree") {
        cfg.e_ion_hartree = parse_double(value, where);
    } else if (key == "N_e") {
        cfg.n_e = parse_int(value, where);
    } else if (key == "chi_deg") {
        cfg.chi_deg = parse_double(value, where);
    } else if (key == "n_cycles") {
        cfg.n_cycles = parse_int(value, where);
    } else if (key == "quad_tol") {
        cfg.quad_tol = parse_double(value, where);
    } else if (key == "quad_max_order") {
        cfg.quad_max_order = parse_int(value, where);
    } else if (key == "n_max") {
        cfg.n_max = parse_int(value, where);
    } else if (key == "tail_rel_cutoff") {
        cfg.tail_rel_cutoff = parse_double(value, where);
    } else if (key == "time_tol") {
        cfg.time_tol = parse_double(value, where);
    } else if (key == "field_grid_points") {
        cfg.field_grid_points = parse_int(value, where);
    } else if (key == "field_floor_frac") {
        cfg.field_floor_frac = parse_double(value, where);
    } else if (key == "coulomb_field") {
        cfg.coulomb_field = value;
    } else if (key == "focal_imin_frac") {
        cfg.focal_imin_frac = parse_double(value, where);
    } else if (key == "threads") {
        cfg.threads = parse_int(value, where);
    } else if (key == "precision") {
        cfg.precision = parse_int(value, where);
    } else {
        throw ConfigError(where + ": unknown key '" + key + "'");
    }
}

void validate(const RunConfig& cfg) {
    if (!(cfg.wavelength_nm > 0.0))
        throw ConfigError("wavelength_nm must be positive");
    if (cfg.has_intensity && cfg.has_field)
        throw ConfigError("intensity_Wcm2 and field_au are both set; give exactly one");
    if (!cfg.has_intensity && !cfg.has_field)
        throw ConfigError("one of intensity_Wcm2 or field_au must be set");
    if (cfg.has_intensity && !(cfg.intensity_wcm2 > 0.0))
        throw ConfigError("intensity_Wcm2 must be positive");
    if (cfg.has_field && !(cfg.field_au > 0.0))
        throw ConfigError("field_au must be positive");
    if (!(cfg.r_bohr >= 0.0)) throw ConfigError("R_bohr must be non-negative");
    if (!(cfg.e_ion_hartree > 0.0))
        throw ConfigError("E_ion_hartree must be positive");
    if (cfg.n_e < 1) throw ConfigError("N_e must be at least 1");
    if (!std::isfinite(cfg.chi_deg)) throw ConfigError("chi_deg must be finite");
    if (cfg.n_cycles < 1) throw ConfigError("n_cycles must be at least 1");
    if (!(cfg.quad_tol > 0.0 && cfg.quad_tol <= 0.1))
        throw ConfigError("quad_tol must be in (0, 0.1]");
    if (cfg.quad_max_order < 64)
        throw ConfigError("quad_max_order must be at least 64");
    if (cfg.n_max < 0) throw ConfigError("n_max must be non-negative");
    if (!(cfg.tail_rel_cutoff > 0.0 && cfg.tail_rel_cutoff < 1.0))
        throw ConfigError("tail_rel_cutoff must be in (0, 1)");
    if (!(cfg.time_tol > 0.0 && cfg.time_tol <= 0.1))
        throw ConfigError("time_tol must be in (0, 0.1]");
    if (cfg.field_grid_points < 8)
        throw ConfigError("field_grid_points must be at least 8");
    if (!(cfg.field_floor_frac > 0.0 && cfg.field_floor_frac < 1.0))
        throw ConfigError("field_floor_frac must be in (0, 1)");
    if (cfg.coulomb_field != "envelope" && cfg.coulomb_field != "peak")
        throw ConfigError("coulomb_field must be 'envelope' or 'peak'");
    if (!(cfg.focal_imin_frac > 0.0 && cfg.focal_imin_frac < 1.0))
        throw ConfigError("focal_imin_frac must be in (0, 1)");
    if (cfg.threads < 0) throw ConfigError("threads must be non-negative");
    if (cfg.precision < 6 || cfg.precision > 17)
        throw ConfigError("precision must be in [6, 17]");
}

std::string fmt(double x, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& name) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::set<std::string> seen;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = name + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(where + ": expected 'key = value'");
        if (!seen.insert(key).second)
            throw ConfigError(where + ": duplicate key '" + key + "'");
        apply_key(cfg, key, value, where);
    }
    for (const char* required : {"wavelength_nm", "R_bohr", "E_ion_hartree"}) {
        if (!seen.count(required))
            throw ConfigError(name + ": missing mandatory key '" +
                              std::string(required) + "'");
    }
    validate(cfg);
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

void config_set(RunConfig& cfg, const std::string& key, const std::string& value) {
    RunConfig next = cfg;
    // An override replaces, never duplicates, the laser amplitude choice.
    if (key == "intensity_Wcm2") next.has_field = false;
    if (key == "field_au") next.has_intensity = false;
    apply_key(next, key, value, "override " + key);
    validate(next);
    cfg = next;
}

LaserParams laser_from(const RunConfig& cfg) {
    const double field =
        cfg.has_field ? cfg.field_au : intensity_to_field(cfg.intensity_wcm2);
    LaserParams laser = derive_params(field, wavelength_to_omega(cfg.wavelength_nm));
    laser.wavelength_nm = cfg.wavelength_nm;
    laser.intensity_wcm2 =
        cfg.has_intensity ? cfg.intensity_wcm2 : field_to_intensity(field);
    return laser;
}

MoleculeModel molecule_from(const RunConfig& cfg) {
    return MoleculeModel::create(cfg.r_bohr, cfg.e_ion_hartree, cfg.n_e,
                                 cfg.chi_deg * M_PI / 180.0);
}

SpectrumOptions spectrum_options_from(const RunConfig& cfg) {
    SpectrumOptions opt;
    opt.n_max = cfg.n_max;
    opt.tail_rel_cutoff = cfg.tail_rel_cutoff;
    opt.threads = cfg.threads;
    opt.quad.rel_tol = cfg.quad_tol;
    opt.quad.max_order = cfg.quad_max_order;
    return opt;
}

YieldOptions yield_options_from(const RunConfig& cfg) {
    YieldOptions opt;
    opt.time_rel_tol = cfg.time_tol;
    opt.coulomb_field = cfg.coulomb_field == "peak" ? CoulombField::kPeak
                                                    : CoulombField::kEnvelope;
    opt.field_grid_points = cfg.field_grid_points;
    opt.field_floor_frac = cfg.field_floor_frac;
    opt.spectrum = spectrum_options_from(cfg);
    return opt;
}

std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg) {
    const LaserParams laser = laser_from(cfg);
    const int p = cfg.precision;
    std::vector<std::pair<std::string, std::string>> echo;
    echo.emplace_back("wavelength_nm", fmt(cfg.wavelength_nm, p));
    echo.emplace_back("intensity_Wcm2", fmt(laser.intensity_wcm2, p));
    echo.emplace_back("field_au", fmt(laser.field_peak, p));
    echo.emplace_back("R_bohr", fmt(cfg.r_bohr, p));
    echo.emplace_back("E_ion_hartree", fmt(cfg.e_ion_hartree, p));
    echo.emplace_back("N_e", std::to_string(cfg.n_e));
    echo.emplace_back("chi_deg", fmt(cfg.chi_deg, p));
    echo.emplace_back("n_cycles", std::to_string(cfg.n_cycles));
    echo.emplace_back("quad_tol", fmt(cfg.quad_tol, p));
    echo.emplace_back("quad_max_order", std::to_string(cfg.quad_max_order));
    echo.emplace_back("n_max", std::to_string(cfg.n_max));
    echo.emplace_back("tail_rel_cutoff", fmt(cfg.tail_rel_cutoff, p));
    echo.emplace_back("time_tol", fmt(cfg.time_tol, p));
    echo.emplace_back("field_grid_points", std::to_string(cfg.field_grid_points));
    echo.emplace_back("field_floor_frac", fmt(cfg.field_floor_frac, p));
    echo.emplace_back("coulomb_field", cfg.coulomb_field);
    echo.emplace_back("focal_imin_frac", fmt(cfg.focal_imin_frac, p));
    echo.emplace_back("threads", std::to_string(cfg.threads));
    echo.emplace_back("precision", std::to_string(cfg.precision));
    return echo;
}

}  // namespace msfa
