#include "sfa_rates.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "specialfn.hpp"

namespace msfa {

namespace {

constexpr double kAbsFloor = 1e-300;
// Dispatch slack for the chi = 0 / chi = pi/2 reduced paths; angles are
// continuous so anything this close is the same physics.
constexpr double kChiEps = 1e-12;

// J_n^2(g c_i, b) on the nodes of a Gauss-Legendre rule, scaled by the
// peak |J_n| so steep channels do not underflow when squared. Returns the
// peak; the true squared values are jsq[i] * peak^2. J_n^2 is even in c
// (parity flips only the sign of J_n), so one series evaluation covers
// each +-c pair.
double jsq_on_nodes(const GlRule& rule, const GenBesselSeries& series, int n,
                    double g, std::vector<double>& jsq) {
    const int m = static_cast<int>(rule.nodes.size());
    const int half = (m + 1) / 2;
    std::vector<double> jhalf(half);
    double peak = 0.0;
    for (int i = 0; i < half; ++i) {
        jhalf[i] = series(n, g * rule.nodes[i]);
        peak = std::max(peak, std::fabs(jhalf[i]));
    }
    jsq.assign(m, 0.0);
    if (peak == 0.0) return 0.0;
    for (int i = 0; i < half; ++i) {
        const double t = jhalf[i] / peak;
        jsq[i] = t * t;
        jsq[m - 1 - i] = jsq[i];
    }
    return peak;
}

double sin_from_cos(double c) { return std::sqrt(std::max(0.0, 1.0 - c * c)); }

// Azimuthal integral of cos^2(d (c cos(chi) + s sin(chi) cos(phi))) by a
// Gauss-Legendre rule on [0, pi], doubled by the phi -> -phi symmetry.
double azimuthal_by_quadrature(double d, double c, double s, double chi,
                               const GlRule& phi_rule) {
    const double p = c * std::cos(chi);
    const double q = s * std::sin(chi);
    double acc = 0.0;
    const int m = static_cast<int>(phi_rule.nodes.size());
    for (int j = 0; j < m; ++j) {
        const double phi = 0.5 * M_PI * (phi_rule.nodes[j] + 1.0);
        const double z = std::cos(d * (p + q * std::cos(phi)));
        acc += phi_rule.weights[j] * z * z;
    }
    return acc * M_PI;  // (pi/2 interval scale) * 2 for [0, 2pi]
}

enum class SpherePath { kReduced, kTensor };

// Sphere integral of J_n^2(g c, b) times the two-center factor, with the
// J_n^2 values rescaled by peak^-2 (caller multiplies peak^2 back in).
double sphere_integral_scaled(int n, double g, double b, double d, double chi,
                              SpherePath path, int order, double* peak_out) {
    const GlRule& rule = gl_rule(order);
    const GenBesselSeries series(b);
    std::vector<double> jsq;
    const double peak = jsq_on_nodes(rule, series, n, g, jsq);
    *peak_out = peak;
    if (peak == 0.0) return 0.0;

    const bool par = std::fabs(chi) < kChiEps;
    const bool perp = std::fabs(chi - M_PI / 2.0) < kChiEps;
    double acc = 0.0;
    const int m = static_cast<int>(rule.nodes.size());
    for (int i = 0; i < m; ++i) {
        const double c = rule.nodes[i];
        double az;
        if (path == SpherePath::kReduced && par) {
            const double z = std::cos(d * c);
            az = 2.0 * M_PI * z * z;
        } else if (path == SpherePath::kReduced && perp) {
            az = azimuthal_identity(d * sin_from_cos(c));
        } else {
            az = azimuthal_by_quadrature(d, c, sin_from_cos(c), chi, rule);
        }
        acc += rule.weights[i] * jsq[i] * az;
    }
    return acc;
}

double pair_residual(double cur, double prev) {
    return std::fabs(cur - prev) / std::max(std::fabs(cur), kAbsFloor);
}

double sphere_integral(int n, double g, double b, double d, double chi,
                       SpherePath path, const QuadSpec& quad) {
    double peak = 0.0;
    int order = std::max(4, quad.init_order);
    double prev = sphere_integral_scaled(n, g, b, d, chi, path, order, &peak);
    prev *= peak * peak;
    double residual = INFINITY;
    while (order < quad.max_order) {
        order *= 2;
        double cur = sphere_integral_scaled(n, g, b, d, chi, path, order, &peak);
        cur *= peak * peak;
        if (std::fabs(cur - prev) <= quad.rel_tol * std::fabs(cur) + kAbsFloor)
            return cur;
        residual = pair_residual(cur, prev);
        prev = cur;
    }
    throw ConvergenceError("channel N=" + std::to_string(n) +
                               ": angular quadrature not converged at order " +
                               std::to_string(quad.max_order),
                           residual);
}

struct ChannelGeometry {
    double g = 0.0;  // alpha0 * k
    double b = 0.0;  // Up / (2 omega)
    double d = 0.0;  // R * k / 2
    double prefactor = 0.0;  // everything outside the angular integral
};

ChannelGeometry channel_geometry(const ChannelKinematics& kin, const LaserParams& laser,
                                 const MoleculeModel& mol) {
    ChannelGeometry geo;
    geo.g = laser.alpha0 * kin.k_n;
    geo.b = laser.up / (2.0 * laser.omega);
    geo.d = 0.5 * mol.r_sep * kin.k_n;
    const double c2 = coulomb_correction(mol.kappa, laser.field_peak);
    const double det = laser.up - kin.n_photons * laser.omega;
    const double structure = 2.0 * mol.norm_a * s_orbital_ft(kin.k_n, mol.kappa);
    geo.prefactor = mol.n_electrons * 2.0 * M_PI * c2 * kin.k_n * det * det *
                    structure * structure;
    return geo;
}

double rate_by_path(int n, const LaserParams& laser, const MoleculeModel& mol,
                    SpherePath path, const QuadSpec& quad) {
    const ChannelKinematics kin = channel_kinematics(n, laser, mol.e_ion);
    if (!kin.open) return 0.0;
    const ChannelGeometry geo = channel_geometry(kin, laser, mol);
    return geo.prefactor * sphere_integral(n, geo.g, geo.b, geo.d, mol.chi, path, quad);
}

}  // namespace

ChannelKinematics channel_kinematics(int n, const LaserParams& laser, double e_ion) {
    if (n < 0) throw DomainError("photon count must be non-negative");
    if (!(e_ion > 0.0)) throw DomainError("ionization energy must be positive");
    ChannelKinematics kin;
    kin.n_photons = n;
    const double excess = n * laser.omega - (laser.up + e_ion);
    if (excess > 0.0) {
        kin.open = true;
        kin.k_n = std::sqrt(2.0 * excess);
        kin.energy = excess;
    }
    return kin;
}

int n_min_open(const LaserParams& laser, double e_ion) {
    if (!(e_ion > 0.0)) throw DomainError("ionization energy must be positive");
    if (!(laser.omega > 0.0)) throw DomainError("omega must be positive");
    int n = static_cast<int>(std::ceil((laser.up + e_ion) / laser.omega));
    while (!channel_kinematics(n, laser, e_ion).open) ++n;
    return n;
}

double differential_rate(double cos_theta, double phi, int n,
                         const LaserParams& laser, const MoleculeModel& mol) {
    if (std::fabs(cos_theta) > 1.0 + 1e-12)
        throw DomainError("cos(theta) outside [-1, 1]");
    cos_theta = std::clamp(cos_theta, -1.0, 1.0);
    const ChannelKinematics kin = channel_kinematics(n, laser, mol.e_ion);
    if (!kin.open)
        throw DomainError("channel N=" + std::to_string(n) + " is closed");
    const ChannelGeometry geo = channel_geometry(kin, laser, mol);
    const double j = gen_bessel(n, geo.g * cos_theta, geo.b);
    const double k_dot_rhat = cos_theta * std::cos(mol.chi) +
                              sin_from_cos(cos_theta) * std::sin(mol.chi) * std::cos(phi);
    const double two_center = std::cos(geo.d * k_dot_rhat);
    // prefactor carries N_e, which belongs to the integrated rate only.
    return geo.prefactor / mol.n_electrons * j * j * two_center * two_center;
}

double channel_rate(int n, const LaserParams& laser, const MoleculeModel& mol,
                    const QuadSpec& quad) {
    return rate_by_path(n, laser, mol, SpherePath::kReduced, quad);
}

double channel_rate_full(int n, const LaserParams& laser, const MoleculeModel& mol,
                         const QuadSpec& quad) {
    return rate_by_path(n, laser, mol, SpherePath::kTensor, quad);
}

AtiSpectrum ati_spectrum(const LaserParams& laser, const MoleculeModel& mol,
                         const SpectrumOptions& opt) {
    AtiSpectrum spec;
    spec.laser = laser;
    spec.molecule = mol;
    const int nmin = n_min_open(laser, mol.e_ion);
    if (opt.n_max != 0 && opt.n_max < nmin) return spec;  // caller warns

    auto fill_block = [&](int n_begin, int n_end) {
        std::vector<AtiChannel> block(n_end - n_begin);
        parallel_for(0, n_end - n_begin, opt.threads, [&](int i) {
            const int n = n_begin + i;
            const ChannelKinematics kin = channel_kinematics(n, laser, mol.e_ion);
            AtiChannel& ch = block[i];
            ch.n_photons = n;
            ch.k_n = kin.k_n;
            ch.energy = kin.energy;
            ch.open = kin.open;
            if (kin.open) ch.rate = channel_rate(n, laser, mol, opt.quad);
        });
        spec.channels.insert(spec.channels.end(), block.begin(), block.end());
    };

    if (opt.n_max != 0) {
        fill_block(nmin, opt.n_max + 1);
        return spec;
    }

    // Auto tail: extend blockwise until a channel falls below
    // tail_rel_cutoff of the running maximum. The stop rule scans in N
    // order, so the result is independent of the block size.
    const int cap = nmin + opt.tail_cap;
    const int block_size = 16;
    double peak_rate = 0.0;
    int n_next = nmin;
    while (n_next <= cap) {
        const int n_end = std::min(cap, n_next + block_size - 1) + 1;
        fill_block(n_next, n_end);
        for (size_t i = spec.channels.size() - (n_end - n_next);
             i < spec.channels.size(); ++i) {
            peak_rate = std::max(peak_rate, spec.channels[i].rate);
            if (spec.channels[i].rate < opt.tail_rel_cutoff * peak_rate) {
                spec.channels.resize(i + 1);
                return spec;
            }
        }
        n_next = n_end;
    }
    return spec;
}

double azimuthal_identity(double delta) {
    return M_PI * (1.0 + bessel_j(0, 2.0 * delta));
}

double ratio_exact_from_params(int n, double g, double b, double d,
                               const QuadSpec& quad) {
    auto eval = [&](int order) {
        const GlRule& rule = gl_rule(order);
        const GenBesselSeries series(b);
        std::vector<double> jsq;
        const double peak = jsq_on_nodes(rule, series, n, g, jsq);
        if (peak == 0.0)
            throw ConvergenceError(
                "ratio N=" + std::to_string(n) +
                    ": generalized-Bessel factor underflows to zero",
                0.0);
        double num = 0.0, den = 0.0;
        const int m = static_cast<int>(rule.nodes.size());
        for (int i = 0; i < m; ++i) {
            const double c = rule.nodes[i];
            const double wj = rule.weights[i] * jsq[i];
            const double z = std::cos(d * c);
            num += wj * z * z;
            den += wj * 0.5 * (1.0 + bessel_j(0, 2.0 * d * sin_from_cos(c)));
        }
        if (!(den > 0.0))
            throw ConvergenceError(
                "ratio N=" + std::to_string(n) + ": denominator underflow", 0.0);
        return num / den;
    };

    int order = std::max(4, quad.init_order);
    double prev = eval(order);
    double residual = INFINITY;
    while (order < quad.max_order) {
        order *= 2;
        const double cur = eval(order);
        if (std::fabs(cur - prev) <= quad.rel_tol * std::fabs(cur) + kAbsFloor)
            return cur;
        residual = pair_residual(cur, prev);
        prev = cur;
    }
    throw ConvergenceError("ratio N=" + std::to_string(n) +
                               ": quadrature not converged at order " +
                               std::to_string(quad.max_order),
                           residual);
}

double ratio_exact(int n, const LaserParams& laser, const MoleculeModel& mol,
                   const QuadSpec& quad) {
    const ChannelKinematics kin = channel_kinematics(n, laser, mol.e_ion);
    if (!kin.open)
        throw DomainError("channel N=" + std::to_string(n) + " is closed");
    const double g = laser.alpha0 * kin.k_n;
    const double b = laser.up / (2.0 * laser.omega);
    const double d = 0.5 * mol.r_sep * kin.k_n;
    return ratio_exact_from_params(n, g, b, d, quad);
}

double ratio_approx(double k_n, double r_sep) {
    if (k_n < 0.0) throw DomainError("momentum must be non-negative");
    if (r_sep < 0.0) throw DomainError("separation must be non-negative");
    const double z = std::cos(0.5 * r_sep * k_n);
    return z * z;
}

double interference_min_energy(double r_sep) {
    if (!(r_sep > 0.0)) throw DomainError("separation must be positive");
    return M_PI * M_PI / (2.0 * r_sep * r_sep);
}

RatioCurve ratio_curve(const LaserParams& laser, const MoleculeModel& mol,
                       const SpectrumOptions& opt) {
    RatioCurve curve;
    curve.laser = laser;
    curve.molecule = mol;
    const int nmin = n_min_open(laser, mol.e_ion);
    const int nmax = opt.n_max != 0 ? opt.n_max : nmin + 30;
    if (nmax < nmin) return curve;
    curve.points.resize(nmax - nmin + 1);
    parallel_for(0, nmax - nmin + 1, opt.threads, [&](int i) {
        const int n = nmin + i;
        const ChannelKinematics kin = channel_kinematics(n, laser, mol.e_ion);
        RatioPoint& pt = curve.points[i];
        pt.n_photons = n;
        pt.k_n = kin.k_n;
        pt.energy = kin.energy;
        pt.x_exact = ratio_exact(n, laser, mol, opt.quad);
        pt.x_approx = ratio_approx(kin.k_n, mol.r_sep);
    });
    return curve;
}

}  // namespace msfa
