#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "msfa.h"

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    REQUIRE(os.good());
    os << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool file_exists(const std::string& path) {
    return std::ifstream(path).good();
}

// cheap two-photon configuration
const char* kFastConfigText =
    "wavelength_nm = 100\n"
    "intensity_Wcm2 = 1e12\n"
    "R_bohr = 1.4\n"
    "E_ion_hartree = 0.6045\n";

struct ConfigHandle {
    msfa_config* cfg = nullptr;
    ~ConfigHandle() { msfa_config_free(cfg); }
};

}  // namespace

TEST_CASE("version string") {
    CHECK(std::string(msfa_version()) == "1.0.0");
}

TEST_CASE("config load failure sets the error code and message") {
    msfa_config* cfg = nullptr;
    CHECK(msfa_config_load("t_capi_no_such_file.cfg", &cfg) == MSFA_ERR_CONFIG);
    CHECK(cfg == nullptr);
    CHECK(std::string(msfa_last_error()).find("cannot read") != std::string::npos);

    CHECK(msfa_config_load(nullptr, &cfg) == MSFA_ERR_CONFIG);
    CHECK(msfa_config_load("x", nullptr) == MSFA_ERR_CONFIG);

    write_file("t_capi_bad.cfg", "wavelength_nm = -1\n");
    CHECK(msfa_config_load("t_capi_bad.cfg", &cfg) == MSFA_ERR_CONFIG);
    CHECK(std::string(msfa_last_error()).size() > 0);
    std::remove("t_capi_bad.cfg");
}

TEST_CASE("config handles load, override, and free") {
    write_file("t_capi_ok.cfg", kFastConfigText);
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_ok.cfg", &h.cfg) == MSFA_OK);
    REQUIRE(h.cfg != nullptr);
    CHECK(std::string(msfa_last_error()).empty());

    CHECK(msfa_config_set(h.cfg, "chi_deg", "90") == MSFA_OK);
    CHECK(std::string(msfa_last_error()).empty());
    CHECK(msfa_config_set(h.cfg, "no_such_key", "1") == MSFA_ERR_CONFIG);
    CHECK(std::string(msfa_last_error()).find("unknown key") != std::string::npos);
    CHECK(msfa_config_set(h.cfg, "quad_tol", "half") == MSFA_ERR_CONFIG);
    CHECK(msfa_config_set(nullptr, "chi_deg", "0") == MSFA_ERR_CONFIG);
    CHECK(msfa_config_set(h.cfg, nullptr, "0") == MSFA_ERR_CONFIG);
    CHECK(msfa_config_set(h.cfg, "chi_deg", nullptr) == MSFA_ERR_CONFIG);

    msfa_config_free(nullptr);  // must be a no-op
    std::remove("t_capi_ok.cfg");
}

TEST_CASE("ratio run writes the main and overlay files") {
    write_file("t_capi_run.cfg", kFastConfigText);
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_run.cfg", &h.cfg) == MSFA_OK);
    REQUIRE(msfa_config_set(h.cfg, "n_max", "10") == MSFA_OK);

    CHECK(msfa_run_ratio(h.cfg, "t_capi_ratio.csv") == MSFA_OK);
    CHECK(std::string(msfa_last_error()).empty());
    REQUIRE(file_exists("t_capi_ratio.csv"));
    REQUIRE(file_exists("t_capi_ratio_overlay.csv"));
    CHECK(read_file("t_capi_ratio.csv").rfind("# msfa", 0) == 0);
    CHECK(read_file("t_capi_ratio_overlay.csv").rfind("# msfa", 0) == 0);

    CHECK(msfa_run_ratio(nullptr, "t_capi_ratio.csv") == MSFA_ERR_CONFIG);

    std::remove("t_capi_run.cfg");
    std::remove("t_capi_ratio.csv");
    std::remove("t_capi_ratio_overlay.csv");
}

TEST_CASE("spectrum run") {
    write_file("t_capi_spec.cfg", kFastConfigText);
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_spec.cfg", &h.cfg) == MSFA_OK);
    REQUIRE(msfa_config_set(h.cfg, "n_max", "8") == MSFA_OK);
    CHECK(msfa_run_spectrum(h.cfg, "t_capi_spec.csv") == MSFA_OK);
    CHECK(read_file("t_capi_spec.csv").find("rate_parallel_au") != std::string::npos);
    CHECK(msfa_run_spectrum(nullptr, "x.csv") == MSFA_ERR_CONFIG);
    std::remove("t_capi_spec.cfg");
    std::remove("t_capi_spec.csv");
}

TEST_CASE("yield run validates its grid") {
    write_file("t_capi_yield.cfg", kFastConfigText);
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_yield.cfg", &h.cfg) == MSFA_OK);

    CHECK(msfa_run_yield(h.cfg, 0.0, 1e12, 2, "t_capi_yield.csv") == MSFA_ERR_CONFIG);
    CHECK(std::string(msfa_last_error()).find("i-min") != std::string::npos);
    CHECK(msfa_run_yield(h.cfg, 1e12, 1e12, 2, "t_capi_yield.csv") == MSFA_ERR_CONFIG);
    CHECK(msfa_run_yield(h.cfg, 1e12, 2e12, 1, "t_capi_yield.csv") == MSFA_ERR_CONFIG);

    CHECK(msfa_run_yield(h.cfg, 5e11, 1e12, 2, "t_capi_yield.csv") == MSFA_OK);
    CHECK(read_file("t_capi_yield.csv").find("yield_parallel") != std::string::npos);
    std::remove("t_capi_yield.cfg");
    std::remove("t_capi_yield.csv");
}

TEST_CASE("focal run checks the external list") {
    write_file("t_capi_focal.cfg", kFastConfigText);
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_focal.cfg", &h.cfg) == MSFA_OK);

    CHECK(msfa_run_focal(h.cfg, 1e12, 2e12, 2, nullptr, 1, 1.0, "t_capi_focal.csv") ==
          MSFA_ERR_CONFIG);
    const char* null_entry[] = {nullptr};
    CHECK(msfa_run_focal(h.cfg, 1e12, 2e12, 2, null_entry, 1, 1.0,
                         "t_capi_focal.csv") == MSFA_ERR_CONFIG);
    const char* missing[] = {"t_capi_no_curve.csv"};
    CHECK(msfa_run_focal(h.cfg, 1e12, 2e12, 2, missing, 1, 1.0,
                         "t_capi_focal.csv") == MSFA_ERR_IO);

    CHECK(msfa_run_focal(h.cfg, 1e12, 2e12, 2, nullptr, 0, 1.0,
                         "t_capi_focal.csv") == MSFA_OK);
    CHECK(read_file("t_capi_focal.csv").find("ratio_focal") != std::string::npos);
    std::remove("t_capi_focal.cfg");
    std::remove("t_capi_focal.csv");
}

TEST_CASE("bessel check") {
    CHECK(msfa_bessel_check(7.36, 0.386, -40, 40, "t_capi_bessel.txt") == MSFA_OK);
    CHECK(read_file("t_capi_bessel.txt").find("parseval_residual") !=
          std::string::npos);
    CHECK(msfa_bessel_check(1.0, 1.0, 5, -5, "t_capi_bessel.txt") ==
          MSFA_ERR_CONFIG);
    CHECK(std::string(msfa_last_error()).find("n-min") != std::string::npos);
    std::remove("t_capi_bessel.txt");
}

TEST_CASE("quadrature exhaustion surfaces as a numeric error") {
    write_file("t_capi_hard.cfg",
               "wavelength_nm = 800\n"
               "intensity_Wcm2 = 1e14\n"
               "R_bohr = 3.0\n"
               "E_ion_hartree = 0.6045\n"
               "quad_tol = 1e-15\n"
               "quad_max_order = 64\n");
    ConfigHandle h;
    REQUIRE(msfa_config_load("t_capi_hard.cfg", &h.cfg) == MSFA_OK);
    CHECK(msfa_run_ratio(h.cfg, "t_capi_hard.csv") == MSFA_ERR_NUMERIC);
    CHECK(std::string(msfa_last_error()).find("not converged") != std::string::npos);
    std::remove("t_capi_hard.cfg");
    std::remove("t_capi_hard.csv");
    std::remove("t_capi_hard_overlay.csv");
}
