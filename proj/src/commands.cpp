#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>

#include "csv.hpp"
#include "errors.hpp"
#include "parallel.hpp"
#include "pulse_yield.hpp"
#include "sfa_rates.hpp"
#include "specialfn.hpp"
#include "version.hpp"

namespace msfa {

namespace {

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream os(path);
    if (!os) throw IoError("cannot open output file '" + path + "'");
    fn(os);
    os.flush();
    if (!os) throw IoError("write failed for '" + path + "'");
}

std::string overlay_path(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "_overlay";
    return path.substr(0, dot) + "_overlay" + path.substr(dot);
}

void write_preamble(CsvWriter& csv, const char* command, const RunConfig& cfg) {
    csv.comment(std::string("msfa ") + kVersion + " " + command);
    csv.comment("constants: nm_hartree=" + format_double(kNmHartree, 17) +
                " intensity_au_Wcm2=" + format_double(kIntensityAu, 17) +
                " ev_per_hartree=" + format_double(kEvPerHartree, 17));
    for (const auto& [key, value] : config_echo(cfg))
        csv.comment("config: " + key + " = " + value);
}

void write_laser_lines(CsvWriter& csv, const LaserParams& laser,
                       const MoleculeModel& mol, int precision) {
    csv.comment("derived: omega_hartree = " + format_double(laser.omega, precision));
    csv.comment("derived: up_hartree = " + format_double(laser.up, precision));
    csv.comment("derived: alpha0_bohr = " + format_double(laser.alpha0, precision));
    csv.comment("derived: kappa_au = " + format_double(mol.kappa, precision));
    csv.comment("derived: n_min = " +
                std::to_string(n_min_open(laser, mol.e_ion)));
}

// Grow a spectrum channel-by-channel up to n_top (auto tails for the two
// orientations can stop at different N; the CSV wants aligned rows).
void extend_spectrum(AtiSpectrum& spec, int n_top, const SpectrumOptions& opt) {
    if (spec.channels.empty()) return;
    const int n_from = spec.channels.back().n_photons + 1;
    if (n_from > n_top) return;
    const size_t base = spec.channels.size();
    spec.channels.resize(base + (n_top - n_from + 1));
    parallel_for(0, n_top - n_from + 1, opt.threads, [&](int i) {
        const int n = n_from + i;
        const ChannelKinematics kin =
            channel_kinematics(n, spec.laser, spec.molecule.e_ion);
        AtiChannel& ch = spec.channels[base + i];
        ch.n_photons = n;
        ch.k_n = kin.k_n;
        ch.energy = kin.energy;
        ch.open = kin.open;
        if (kin.open)
            ch.rate = channel_rate(n, spec.laser, spec.molecule, opt.quad);
    });
}

}  // namespace

std::vector<double> log_grid(const IntensityGrid& grid) {
    if (!(grid.i_min > 0.0))
        throw ConfigError("i-min must be positive");
    if (!(grid.i_max > grid.i_min))
        throw ConfigError("i-max must exceed i-min");
    if (grid.n_points < 2) throw ConfigError("n-points must be at least 2");
    std::vector<double> out(grid.n_points);
    const double step = std::log(grid.i_max / grid.i_min) / (grid.n_points - 1);
    for (int i = 0; i < grid.n_points; ++i)
        out[i] = grid.i_min * std::exp(i * step);
    out.back() = grid.i_max;
    return out;
}

void cmd_spectrum(const RunConfig& cfg, const std::string& out_path) {
    const LaserParams laser = laser_from(cfg);
    const MoleculeModel mol = molecule_from(cfg);
    const SpectrumOptions opt = spectrum_options_from(cfg);
    AtiSpectrum par = ati_spectrum(laser, mol.with_chi(0.0), opt);
    AtiSpectrum perp = ati_spectrum(laser, mol.with_chi(M_PI / 2.0), opt);
    if (!par.channels.empty() && !perp.channels.empty()) {
        const int n_top = std::max(par.channels.back().n_photons,
                                   perp.channels.back().n_photons);
        extend_spectrum(par, n_top, opt);
        extend_spectrum(perp, n_top, opt);
    }
    with_output(out_path, [&](std::ostream& os) {
        CsvWriter csv(os, cfg.precision);
        write_preamble(csv, "spectrum", cfg);
        write_laser_lines(csv, laser, mol, cfg.precision);
        if (par.channels.empty()) {
            csv.comment("warning: n_max is below the lowest open channel; "
                        "spectrum is empty");
        }
        csv.columns({"N", "energy_hartree", "energy_eV", "rate_parallel_au",
                     "rate_perpendicular_au"});
        for (size_t i = 0; i < par.channels.size(); ++i) {
            const AtiChannel& a = par.channels[i];
            const AtiChannel& b = perp.channels[i];
            csv.row({CsvWriter::cell(a.n_photons), csv.cell(a.energy),
                     csv.cell(a.energy * kEvPerHartree), csv.cell(a.rate),
                     csv.cell(b.rate)});
        }
    });
}

void cmd_ratio(const RunConfig& cfg, const std::string& out_path) {
    const LaserParams laser = laser_from(cfg);
    const MoleculeModel mol = molecule_from(cfg);
    const SpectrumOptions opt = spectrum_options_from(cfg);
    const RatioCurve curve = ratio_curve(laser, mol, opt);
    with_output(out_path, [&](std::ostream& os) {
        CsvWriter csv(os, cfg.precision);
        write_preamble(csv, "ratio", cfg);
        write_laser_lines(csv, laser, mol, cfg.precision);
        if (mol.r_sep > 0.0) {
            const double e_min = interference_min_energy(mol.r_sep);
            csv.comment("derived: interference_min_eV = " +
                        format_double(e_min * kEvPerHartree, cfg.precision));
        }
        csv.columns({"N", "energy_eV", "x_exact", "x_approx"});
        for (const RatioPoint& pt : curve.points) {
            csv.row({CsvWriter::cell(pt.n_photons),
                     csv.cell(pt.energy * kEvPerHartree), csv.cell(pt.x_exact),
                     csv.cell(pt.x_approx)});
        }
    });
    if (out_path.empty() || curve.points.empty()) return;
    // Dense strong-field curve over the same energy window, for overlay
    // against the per-channel points.
    const double e_top = curve.points.back().energy;
    const int n_dense = 400;
    with_output(overlay_path(out_path), [&](std::ostream& os) {
        CsvWriter csv(os, cfg.precision);
        write_preamble(csv, "ratio-overlay", cfg);
        csv.columns({"energy_eV", "x_approx"});
        for (int j = 0; j <= n_dense; ++j) {
            const double energy = e_top * j / n_dense;
            const double k = std::sqrt(2.0 * energy);
            csv.row({csv.cell(energy * kEvPerHartree),
                     csv.cell(ratio_approx(k, mol.r_sep))});
        }
    });
}

void cmd_yield(const RunConfig& cfg, const IntensityGrid& grid,
               const std::string& out_path) {
    const std::vector<double> intensities = log_grid(grid);
    const MoleculeModel mol = molecule_from(cfg);
    RatioScanOptions opt;
    opt.with_focal = false;
    opt.threads = cfg.threads;
    opt.yield = yield_options_from(cfg);
    const double omega = wavelength_to_omega(cfg.wavelength_nm);
    const std::vector<RatioScanPoint> scan =
        ratio_scan(intensities, omega, mol, cfg.n_cycles, opt);
    with_output(out_path, [&](std::ostream& os) {
        CsvWriter csv(os, cfg.precision);
        write_preamble(csv, "yield", cfg);
        csv.columns({"intensity_Wcm2", "yield_parallel", "yield_perpendicular",
                     "ratio"});
        for (const RatioScanPoint& pt : scan) {
            csv.row({csv.cell(pt.intensity), csv.cell(pt.yield_par),
                     csv.cell(pt.yield_perp), csv.cell(pt.ratio)});
        }
    });
}

void cmd_focal(const RunConfig& cfg, const IntensityGrid& grid,
               const std::vector<std::string>& external_paths,
               double default_scale, const std::string& out_path) {
    if (!std::isfinite(default_scale) || default_scale <= 0.0)
        throw ConfigError("scale must be a positive number");
    const std::vector<double> intensities = log_grid(grid);
    std::vector<ExternalCurve> externals;
    externals.reserve(external_paths.size());
    for (const std::string& path : external_paths)
        externals.push_back(read_external_curve(path));

    const MoleculeModel mol = molecule_from(cfg);
    RatioScanOptions opt;
    opt.with_focal = true;
    opt.focal_imin_frac = cfg.focal_imin_frac;
    opt.threads = cfg.threads;
    opt.yield = yield_options_from(cfg);
    const double omega = wavelength_to_omega(cfg.wavelength_nm);
    const std::vector<RatioScanPoint> scan =
        ratio_scan(intensities, omega, mol, cfg.n_cycles, opt);

    with_output(out_path, [&](std::ostream& os) {
        CsvWriter csv(os, cfg.precision);
        write_preamble(csv, "focal", cfg);
        std::vector<std::string> cols{"intensity_Wcm2", "yield_parallel_focal",
                                      "yield_perpendicular_focal", "ratio_focal"};
        for (size_t e = 0; e < externals.size(); ++e) {
            const ExternalCurve& ext = externals[e];
            const double scale = ext.scale * (e == 0 ? default_scale : 1.0);
            csv.comment("external: " + ext.label +
                        " scale = " + format_double_shortest(scale));
            cols.push_back("ext_" + ext.label);
        }
        if (externals.size() >= 2) cols.push_back("ext_ratio");
        csv.columns(cols);
        for (const RatioScanPoint& pt : scan) {
            std::vector<std::string> cells{
                csv.cell(pt.intensity), csv.cell(pt.yield_par),
                csv.cell(pt.yield_perp), csv.cell(pt.ratio)};
            std::vector<double> vals(externals.size());
            for (size_t e = 0; e < externals.size(); ++e) {
                const double scale = externals[e].scale * (e == 0 ? default_scale : 1.0);
                vals[e] = scale * externals[e].value_at(pt.intensity);
                cells.push_back(csv.cell(vals[e]));
            }
            if (externals.size() >= 2) {
                const double den = vals[1];
                cells.push_back(csv.cell(
                    den != 0.0 ? vals[0] / den
                               : std::numeric_limits<double>::quiet_NaN()));
            }
            csv.row(cells);
        }
    });
}

std::string bessel_check_report(double u, double v, int n_min, int n_max) {
    if (n_min > n_max) throw ConfigError("n-min must not exceed n-max");
    char buf[128];
    std::string report;
    std::snprintf(buf, sizeof buf, "bessel-check: u=%.17g v=%.17g orders [%d, %d]\n",
                  u, v, n_min, n_max);
    report += buf;

    const int cut =
        static_cast<int>(std::ceil(std::fabs(u) + 2.0 * std::fabs(v))) + 60;
    const std::vector<double> row = gen_bessel_row(-cut, cut, u, v);
    double parseval = 0.0;
    for (double j : row) parseval += j * j;
    std::snprintf(buf, sizeof buf, "parseval_residual = %.6e (sum over |n| <= %d)\n",
                  std::fabs(parseval - 1.0), cut);
    report += buf;

    const std::vector<double> wide = gen_bessel_row(n_min - 2, n_max + 2, u, v);
    double rec = 0.0;
    for (int n = n_min; n <= n_max; ++n) {
        const int i = n - (n_min - 2);
        const double lhs = n * wide[i];
        const double rhs = 0.5 * u * (wide[i - 1] + wide[i + 1]) +
                           v * (wide[i - 2] + wide[i + 2]);
        rec = std::max(rec, std::fabs(lhs - rhs));
    }
    std::snprintf(buf, sizeof buf, "recurrence_max_residual = %.6e\n", rec);
    report += buf;

    double red = 0.0;
    for (int n = n_min; n <= n_max; ++n)
        red = std::max(red, std::fabs(gen_bessel(n, u, 0.0) - bessel_j(n, u)));
    std::snprintf(buf, sizeof buf, "v0_reduction_max_error = %.6e\n", red);
    report += buf;
    return report;
}

void cmd_bessel_check(double u, double v, int n_min, int n_max,
                      const std::string& out_path) {
    const std::string report = bessel_check_report(u, v, n_min, n_max);
    with_output(out_path, [&](std::ostream& os) { os << report; });
}

}  // namespace msfa
