#include "pulse_yield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"
#include "interp.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"

namespace msfa {

double PulseSpec::duration() const {
    if (!(omega > 0.0)) throw DomainError("pulse omega must be positive");
    if (n_cycles < 1) throw DomainError("pulse must span at least one cycle");
    return n_cycles * 2.0 * M_PI / omega;
}

double envelope(double t, const PulseSpec& pulse) {
    const double T = pulse.duration();
    if (std::fabs(t) >= T / 2.0) return 0.0;
    const double c = std::cos(M_PI * t / T);
    return pulse.f0 * c * c;
}

double RateTable::total_rate(double field) const {
    if (field <= 0.0) return 0.0;
    if (fields.size() < 2) return rates.empty() ? 0.0 : rates.front();
    if (field >= fields.back()) return rates.back();
    size_t hi;
    if (field < fields.front()) {
        // Power-law continuation of the lowest segment; rates fall steeply
        // with field, so this decays toward zero.
        hi = 1;
        if (!(rates[0] > 0.0) || !(rates[1] > 0.0)) return 0.0;
    } else {
        hi = std::upper_bound(fields.begin(), fields.end(), field) - fields.begin();
    }
    return loglog_interp(field, fields[hi - 1], rates[hi - 1], fields[hi], rates[hi]);
}

RateTable RateTable::build(double omega, const MoleculeModel& mol, double f_min,
                           double f_max, int n_points, const SpectrumOptions& opt) {
    if (!(f_min > 0.0) || !(f_max > f_min))
        throw DomainError("rate table needs 0 < f_min < f_max");
    if (n_points < 2) throw DomainError("rate table needs at least 2 points");
    RateTable table;
    table.kappa = mol.kappa;
    table.fields.resize(n_points);
    table.rates.resize(n_points);
    const double step = std::log(f_max / f_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i)
        table.fields[i] = f_min * std::exp(i * step);
    table.fields.back() = f_max;
    parallel_for(0, n_points, opt.threads, [&](int i) {
        SpectrumOptions inner = opt;
        inner.threads = 1;  // parallelism lives at the grid level here
        const LaserParams laser = derive_params(table.fields[i], omega);
        const AtiSpectrum spec = ati_spectrum(laser, mol, inner);
        double total = 0.0;
        for (const AtiChannel& ch : spec.channels) total += ch.rate;
        table.rates[i] = total;
    });
    return table;
}

double pulse_yield_from_rate(const std::function<double(double)>& rate_of_field,
                             const PulseSpec& pulse, double rel_tol) {
    if (pulse.f0 == 0.0) return 0.0;
    const double T = pulse.duration();
    // cos^2 envelope is even in t, so integrate one half and double.
    const double half = adaptive_simpson(
        [&](double t) { return rate_of_field(envelope(t, pulse)); }, 0.0, T / 2.0,
        rel_tol);
    const double exposure = 2.0 * std::max(0.0, half);
    return -std::expm1(-exposure);
}

double pulse_yield(const RateTable& table, const PulseSpec& pulse,
                   const YieldOptions& opt) {
    if (opt.coulomb_field == CoulombField::kEnvelope)
        return pulse_yield_from_rate(
            [&](double f) { return table.total_rate(f); }, pulse, opt.time_rel_tol);
    // Peak-field Coulomb correction: C^2(F0)/C^2(F) = (F/F0)^(2/kappa).
    const double expo = 2.0 / table.kappa;
    return pulse_yield_from_rate(
        [&](double f) {
            if (f <= 0.0) return 0.0;
            return table.total_rate(f) * std::pow(f / pulse.f0, expo);
        },
        pulse, opt.time_rel_tol);
}

double pulse_yield(double omega, const MoleculeModel& mol, const PulseSpec& pulse,
                   const YieldOptions& opt) {
    if (pulse.f0 == 0.0) return 0.0;
    const RateTable table =
        RateTable::build(omega, mol, opt.field_floor_frac * pulse.f0, pulse.f0,
                         opt.field_grid_points, opt.spectrum);
    return pulse_yield(table, pulse, opt);
}

double focal_weight(double intensity, double peak_intensity) {
    if (!(intensity > 0.0)) throw DomainError("intensity must be positive");
    if (!(intensity <= peak_intensity))
        throw DomainError("intensity exceeds the peak intensity");
    return std::pow(intensity, -2.5) * std::sqrt(peak_intensity - intensity) *
           (peak_intensity + 2.0 * intensity);
}

namespace {

// Piecewise-power-law read of a yield curve.
double curve_value(const YieldCurve& curve, double intensity) {
    const auto& pts = curve.points;
    const auto it = std::lower_bound(
        pts.begin(), pts.end(), intensity,
        [](const YieldPoint& p, double x) { return p.intensity < x; });
    if (it == pts.begin()) return pts.front().yield;
    if (it == pts.end()) return pts.back().yield;
    const YieldPoint& b = *it;
    const YieldPoint& a = *(it - 1);
    return loglog_interp(intensity, a.intensity, a.yield, b.intensity, b.yield);
}

}  // namespace

double focal_average(const YieldCurve& curve, double peak_intensity,
                     double min_intensity, double rel_tol) {
    if (!(min_intensity > 0.0))
        throw DomainError("focal cutoff intensity must be positive");
    if (!(peak_intensity > min_intensity))
        throw DomainError("peak intensity must exceed the focal cutoff");
    if (curve.points.size() < 2)
        throw DomainError("yield curve needs at least 2 points");
    for (size_t i = 1; i < curve.points.size(); ++i)
        if (!(curve.points[i].intensity > curve.points[i - 1].intensity))
            throw DomainError("yield curve intensities must be ascending");
    const double lo = curve.points.front().intensity;
    const double hi = curve.points.back().intensity;
    if (lo > min_intensity * (1.0 + 1e-12) || hi < peak_intensity * (1.0 - 1e-12))
        throw DomainError("yield curve covers [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] but the average needs [" +
                          std::to_string(min_intensity) + ", " +
                          std::to_string(peak_intensity) + "]");

    // Substitute u = sqrt(I0 - I); the weight's (I0 - I)^(1/2) endpoint
    // becomes 2 u^2 (3 I0 - 2 u^2) (I0 - u^2)^(-5/2), smooth at u = 0.
    const double i0 = peak_intensity;
    auto integrand = [&](double u) {
        const double intensity = i0 - u * u;
        return 2.0 * u * u * (3.0 * i0 - 2.0 * u * u) *
               std::pow(intensity, -2.5) * curve_value(curve, intensity);
    };

    // Integrate piecewise between the curve knots so the quadrature never
    // straddles an interpolation kink; pieces ascend in u (descend in I).
    std::vector<double> breaks{0.0};
    for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it) {
        if (it->intensity < i0 && it->intensity > min_intensity)
            breaks.push_back(std::sqrt(i0 - it->intensity));
    }
    breaks.push_back(std::sqrt(i0 - min_intensity));
    double total = 0.0;
    for (size_t i = 1; i < breaks.size(); ++i) {
        if (breaks[i] > breaks[i - 1])
            total += adaptive_simpson(integrand, breaks[i - 1], breaks[i], rel_tol);
    }
    return total;
}

std::vector<RatioScanPoint> ratio_scan(const std::vector<double>& intensities,
                                       double omega, const MoleculeModel& mol,
                                       int n_cycles, const RatioScanOptions& opt) {
    if (intensities.empty()) throw DomainError("intensity scan is empty");
    for (size_t i = 0; i < intensities.size(); ++i) {
        if (!(intensities[i] > 0.0))
            throw DomainError("scan intensities must be positive");
        if (i > 0 && !(intensities[i] > intensities[i - 1]))
            throw DomainError("scan intensities must be ascending");
    }
    const MoleculeModel par = mol.with_chi(0.0);
    const MoleculeModel perp = mol.with_chi(M_PI / 2.0);

    // One rate table per orientation spanning the whole scan (extended
    // down to the focal cutoff when averaging); every yield then reuses
    // the same tables.
    const double i_lo =
        opt.with_focal ? opt.focal_imin_frac * intensities.front() : intensities.front();
    const double f_lo = opt.yield.field_floor_frac * intensity_to_field(i_lo);
    const double f_hi = intensity_to_field(intensities.back());
    const int n_table = std::max(
        opt.yield.field_grid_points,
        static_cast<int>(std::ceil(40.0 * std::log10(f_hi / f_lo))) + 1);
    SpectrumOptions table_opt = opt.yield.spectrum;
    table_opt.threads = opt.threads;
    const RateTable table_par =
        RateTable::build(omega, par, f_lo, f_hi, n_table, table_opt);
    const RateTable table_perp =
        RateTable::build(omega, perp, f_lo, f_hi, n_table, table_opt);

    auto yield_at = [&](const RateTable& table, double intensity) {
        PulseSpec pulse;
        pulse.n_cycles = n_cycles;
        pulse.omega = omega;
        pulse.f0 = intensity_to_field(intensity);
        return pulse_yield(table, pulse, opt.yield);
    };

    std::vector<RatioScanPoint> scan(intensities.size());
    if (!opt.with_focal) {
        parallel_for(0, static_cast<int>(intensities.size()), opt.threads, [&](int i) {
            RatioScanPoint& pt = scan[i];
            pt.intensity = intensities[i];
            pt.yield_par = yield_at(table_par, intensities[i]);
            pt.yield_perp = yield_at(table_perp, intensities[i]);
            pt.ratio = pt.yield_perp > 0.0
                           ? opt.rescale * pt.yield_par / pt.yield_perp
                           : std::numeric_limits<double>::quiet_NaN();
        });
        return scan;
    }

    // Focal averaging needs yields on a dense grid reaching below the scan
    // window; build the two curves once, then average per scan point.
    const double grid_lo = opt.focal_imin_frac * intensities.front();
    const double grid_hi = intensities.back();
    const int n_grid = std::max(
        48, static_cast<int>(std::ceil(24.0 * std::log10(grid_hi / grid_lo))) + 1);
    YieldCurve curve_par, curve_perp;
    curve_par.chi = 0.0;
    curve_perp.chi = M_PI / 2.0;
    curve_par.points.resize(n_grid);
    curve_perp.points.resize(n_grid);
    const double step = std::log(grid_hi / grid_lo) / (n_grid - 1);
    parallel_for(0, n_grid, opt.threads, [&](int i) {
        const double intensity =
            i + 1 == n_grid ? grid_hi : grid_lo * std::exp(i * step);
        curve_par.points[i] = {intensity, yield_at(table_par, intensity)};
        curve_perp.points[i] = {intensity, yield_at(table_perp, intensity)};
    });

    parallel_for(0, static_cast<int>(intensities.size()), opt.threads, [&](int i) {
        RatioScanPoint& pt = scan[i];
        pt.intensity = intensities[i];
        const double cutoff = opt.focal_imin_frac * intensities[i];
        pt.yield_par = focal_average(curve_par, intensities[i], cutoff);
        pt.yield_perp = focal_average(curve_perp, intensities[i], cutoff);
        pt.ratio = pt.yield_perp > 0.0
                       ? opt.rescale * pt.yield_par / pt.yield_perp
                       : std::numeric_limits<double>::quiet_NaN();
    });
    return scan;
}

}  // namespace msfa
