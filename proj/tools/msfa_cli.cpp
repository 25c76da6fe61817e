#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msfa.h"

namespace {

int exit_code_for(int status) {
    switch (status) {
        case MSFA_OK:
            return 0;
        case MSFA_ERR_CONFIG:
            return 2;
        case MSFA_ERR_NUMERIC:
            return 3;
        default:
            return 1;
    }
}

int finish(int status) {
    if (status != MSFA_OK) std::fprintf(stderr, "error: %s\n", msfa_last_error());
    return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Velocity-gauge molecular SFA: channel rates, ATI spectra, "
                 "interference ratios, pulse yields, focal averaging"};
    app.set_version_flag("--version", []() { return std::string(msfa_version()); });
    app.require_subcommand(1);

    std::string config_path, out_path, chi;
    double i_min = 0.0, i_max = 0.0, scale = 1.0;
    int n_points = 20;

    auto add_common = [&](CLI::App* cmd, bool needs_grid) {
        cmd->add_option("--config", config_path, "run configuration file")
            ->required();
        cmd->add_option("--out", out_path, "output CSV path (default stdout)");
        cmd->add_option("--chi", chi, "orientation override (degrees)");
        if (needs_grid) {
            cmd->add_option("--i-min", i_min, "lowest peak intensity (W/cm^2)")
                ->required();
            cmd->add_option("--i-max", i_max, "highest peak intensity (W/cm^2)")
                ->required();
            cmd->add_option("--n-points", n_points, "intensity grid points");
        }
    };

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "ATI channel rates for parallel and perpendicular alignment");
    add_common(spectrum, false);

    CLI::App* ratio = app.add_subcommand(
        "ratio", "per-channel parallel/perpendicular interference ratio");
    add_common(ratio, false);

    CLI::App* yield_cmd = app.add_subcommand(
        "yield", "pulse-integrated yields over a peak-intensity scan");
    add_common(yield_cmd, true);

    CLI::App* focal = app.add_subcommand(
        "focal", "focal-volume-averaged yield ratio, with optional comparison curves");
    add_common(focal, true);
    std::vector<std::string> external_paths;
    focal->add_option("--scale", scale,
                      "factor applied to the first external curve");
    focal->add_option("externals", external_paths,
                      "external 2-column comparison curves");

    double u = 0.0, v = 0.0;
    int n_lo = -40, n_hi = 40;
    CLI::App* bessel = app.add_subcommand(
        "bessel-check", "generalized-Bessel diagnostics for given (u, v)");
    bessel->add_option("u", u, "first Bessel argument")->required();
    bessel->add_option("v", v, "second Bessel argument")->required();
    bessel->add_option("--n-min", n_lo, "lowest order checked");
    bessel->add_option("--n-max", n_hi, "highest order checked");
    bessel->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is a config error
    }

    const char* out = out_path.empty() ? nullptr : out_path.c_str();
    if (*bessel) return finish(msfa_bessel_check(u, v, n_lo, n_hi, out));

    msfa_config* cfg = nullptr;
    int status = msfa_config_load(config_path.c_str(), &cfg);
    if (status == MSFA_OK && !chi.empty())
        status = msfa_config_set(cfg, "chi_deg", chi.c_str());
    if (status == MSFA_OK) {
        if (*spectrum) {
            status = msfa_run_spectrum(cfg, out);
        } else if (*ratio) {
            status = msfa_run_ratio(cfg, out);
        } else if (*yield_cmd) {
            status = msfa_run_yield(cfg, i_min, i_max, n_points, out);
        } else if (*focal) {
            std::vector<const char*> ext;
            ext.reserve(external_paths.size());
            for (const std::string& p : external_paths) ext.push_back(p.c_str());
            status = msfa_run_focal(cfg, i_min, i_max, n_points,
                                    ext.empty() ? nullptr : ext.data(),
                                    static_cast<int>(ext.size()), scale, out);
        }
    }
    msfa_config_free(cfg);
    return finish(status);
}
