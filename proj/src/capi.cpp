#include "msfa.h"

#include <exception>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "version.hpp"

namespace {

thread_local std::string t_last_error;

int fail(int code, const char* what) {
    t_last_error = what;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return MSFA_OK;
    } catch (const msfa::ConfigError& e) {
        return fail(MSFA_ERR_CONFIG, e.what());
    } catch (const msfa::ConvergenceError& e) {
        return fail(MSFA_ERR_NUMERIC, e.what());
    } catch (const msfa::IoError& e) {
        return fail(MSFA_ERR_IO, e.what());
    } catch (const msfa::DomainError& e) {
        return fail(MSFA_ERR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(MSFA_ERR_DOMAIN, e.what());
    }
}

std::string path_or_stdout(const char* out_path) {
    return out_path ? std::string(out_path) : std::string();
}

}  // namespace

struct msfa_config {
    msfa::RunConfig cfg;
};

extern "C" {

const char* msfa_version(void) { return msfa::kVersion; }

const char* msfa_last_error(void) { return t_last_error.c_str(); }

int msfa_config_load(const char* path, msfa_config** out) {
    if (!path || !out) return fail(MSFA_ERR_CONFIG, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto* handle = new msfa_config{msfa::parse_config(path)};
        *out = handle;
    });
}

int msfa_config_set(msfa_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(MSFA_ERR_CONFIG, "null argument");
    return guarded([&] { msfa::config_set(cfg->cfg, key, value); });
}

void msfa_config_free(msfa_config* cfg) { delete cfg; }

int msfa_run_spectrum(const msfa_config* cfg, const char* out_path) {
    if (!cfg) return fail(MSFA_ERR_CONFIG, "null config");
    return guarded([&] { msfa::cmd_spectrum(cfg->cfg, path_or_stdout(out_path)); });
}

int msfa_run_ratio(const msfa_config* cfg, const char* out_path) {
    if (!cfg) return fail(MSFA_ERR_CONFIG, "null config");
    return guarded([&] { msfa::cmd_ratio(cfg->cfg, path_or_stdout(out_path)); });
}

int msfa_run_yield(const msfa_config* cfg, double i_min, double i_max,
                   int n_points, const char* out_path) {
    if (!cfg) return fail(MSFA_ERR_CONFIG, "null config");
    return guarded([&] {
        msfa::cmd_yield(cfg->cfg, {i_min, i_max, n_points},
                        path_or_stdout(out_path));
    });
}

int msfa_run_focal(const msfa_config* cfg, double i_min, double i_max,
                   int n_points, const char* const* external_paths,
                   int n_external, double default_scale, const char* out_path) {
    if (!cfg) return fail(MSFA_ERR_CONFIG, "null config");
    if (n_external < 0 || (n_external > 0 && !external_paths))
        return fail(MSFA_ERR_CONFIG, "bad external curve list");
    return guarded([&] {
        std::vector<std::string> externals;
        externals.reserve(n_external);
        for (int i = 0; i < n_external; ++i) {
            if (!external_paths[i])
                throw msfa::ConfigError("null external curve path");
            externals.emplace_back(external_paths[i]);
        }
        msfa::cmd_focal(cfg->cfg, {i_min, i_max, n_points}, externals,
                        default_scale, path_or_stdout(out_path));
    });
}

int msfa_bessel_check(double u, double v, int n_min, int n_max,
                      const char* out_path) {
    return guarded([&] {
        msfa::cmd_bessel_check(u, v, n_min, n_max, path_or_stdout(out_path));
    });
}

}  // extern "C"
