#include "specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "errors.hpp"

namespace msfa {

namespace {

// Signed lookup into a row of J_0..J_max(|x|): handles negative order and
// negative argument through J_{-m}(x) = J_m(-x) = (-1)^m J_m(x).
inline double row_at(const std::vector<double>& row, int m, bool x_negative) {
    const int ma = std::abs(m);
    double val = row[static_cast<std::size_t>(ma)];
    bool neg = false;
    if (m < 0 && (ma & 1)) neg = !neg;
    if (x_negative && (ma & 1)) neg = !neg;
    return neg ? -val : val;
}

constexpr double kRescaleLimit = 1e250;

}  // namespace

std::vector<double> bessel_j_row(int m_max, double x) {
    if (m_max < 0) throw DomainError("bessel_j_row: negative order bound");
    if (!std::isfinite(x) || x < 0.0) throw DomainError("bessel_j_row: argument must be finite and >= 0");

    std::vector<double> row(static_cast<std::size_t>(m_max) + 1, 0.0);
    if (x == 0.0) {
        row[0] = 1.0;
        return row;
    }

    // Downward recurrence with normalization (Miller). Start well above both
    // the requested order and the turning point m ~ x.
    const int base = std::max(m_max, static_cast<int>(std::ceil(x)));
    int m_start = base + 60 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(base)));
    if (m_start & 1) ++m_start;

    double j_up = 0.0;    // J_{m+1} (unnormalized)
    double j_cur = 1e-30; // J_m at m = m_start
    double norm = 2.0 * j_cur;  // m_start is even
    if (m_start <= m_max) row[static_cast<std::size_t>(m_start)] = j_cur;

    for (int m = m_start; m >= 1; --m) {
        const double j_down = (2.0 * m / x) * j_cur - j_up;  // J_{m-1}
        j_up = j_cur;
        j_cur = j_down;
        const int mm = m - 1;
        if (mm <= m_max) row[static_cast<std::size_t>(mm)] = j_cur;
        if (mm == 0)
            norm += j_cur;
        else if ((mm & 1) == 0)
            norm += 2.0 * j_cur;

        if (std::fabs(j_cur) > kRescaleLimit) {
            const double s = 1.0 / kRescaleLimit;
            j_up *= s;
            j_cur *= s;
            norm *= s;
            for (int i = mm; i <= m_max; ++i) row[static_cast<std::size_t>(i)] *= s;
        }
    }

    const double scale = 1.0 / norm;
    for (double& r : row) r *= scale;
    return row;
}

double bessel_j(int m, double x) {
    const int ma = std::abs(m);
    const double xa = std::fabs(x);
    const auto row = bessel_j_row(ma, xa);
    double val = row[static_cast<std::size_t>(ma)];
    bool neg = false;
    if (m < 0 && (ma & 1)) neg = !neg;
    if (x < 0.0 && (ma & 1)) neg = !neg;
    return neg ? -val : val;
}

namespace {

// k range where J_k(v) still matters; ordinary Bessel factors collapse
// super-exponentially past their order/argument turnover.
inline int v_cutoff(double v) { return static_cast<int>(std::ceil(std::fabs(v))) + 36; }

// Series over k with the J_k(v) row precomputed; terms added outward from
// k = 0 and truncated on partial-sum stagnation.
double gen_bessel_core(int n, double u, const std::vector<double>& jv_row, bool v_negative,
                       int k_cut, int* terms_out) {
    const int m_max = std::abs(n) + 2 * k_cut;
    const auto ju_row = bessel_j_row(m_max, std::fabs(u));
    const bool u_neg = u < 0.0;

    double sum = row_at(ju_row, n, u_neg) * jv_row[0];
    double scale = std::max(std::fabs(sum), 1e-300);
    int terms = 1;
    int stall = 0;
    for (int k = 1; k <= k_cut; ++k) {
        const double jvk = row_at(jv_row, k, v_negative);
        const double jvmk = row_at(jv_row, -k, v_negative);
        const double t = row_at(ju_row, n - 2 * k, u_neg) * jvk +
                         row_at(ju_row, n + 2 * k, u_neg) * jvmk;
        sum += t;
        terms += 2;
        scale = std::max(scale, std::fabs(sum));
        if (std::fabs(t) < 1e-17 * scale) {
            if (++stall >= 2) break;
        } else {
            stall = 0;
        }
    }
    if (terms_out) *terms_out = terms;
    return sum;
}

}  // namespace

double gen_bessel(int n, double u, double v) {
    if (v == 0.0) return bessel_j(n, u);
    if (u == 0.0) {
        if (n & 1) return 0.0;
        return bessel_j(n / 2, v);
    }
    const int k_cut = v_cutoff(v);
    const auto jv_row = bessel_j_row(k_cut, std::fabs(v));
    return gen_bessel_core(n, u, jv_row, v < 0.0, k_cut, nullptr);
}

GenBesselEval gen_bessel_eval(int n, double u, double v) {
    GenBesselEval ev;
    ev.order = n;
    ev.arg_u = u;
    ev.arg_v = v;
    if (v == 0.0) {
        ev.value = bessel_j(n, u);
        ev.truncation_terms = 1;
        return ev;
    }
    if (u == 0.0) {
        ev.value = (n & 1) ? 0.0 : bessel_j(n / 2, v);
        ev.truncation_terms = 1;
        return ev;
    }
    const int k_cut = v_cutoff(v);
    const auto jv_row = bessel_j_row(k_cut, std::fabs(v));
    ev.value = gen_bessel_core(n, u, jv_row, v < 0.0, k_cut, &ev.truncation_terms);
    return ev;
}

std::vector<double> gen_bessel_row(int n_min, int n_max, double u, double v) {
    if (n_min > n_max) throw DomainError("gen_bessel_row: n_min > n_max");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_max - n_min) + 1);
    if (v == 0.0) {
        const int m_max = std::max(std::abs(n_min), std::abs(n_max));
        const auto ju_row = bessel_j_row(m_max, std::fabs(u));
        for (int n = n_min; n <= n_max; ++n) out.push_back(row_at(ju_row, n, u < 0.0));
        return out;
    }
    const int k_cut = v_cutoff(v);
    const auto jv_row = bessel_j_row(k_cut, std::fabs(v));
    if (u == 0.0) {
        for (int n = n_min; n <= n_max; ++n)
            out.push_back((n & 1) ? 0.0 : row_at(jv_row, n / 2, v < 0.0));
        return out;
    }
    for (int n = n_min; n <= n_max; ++n)
        out.push_back(gen_bessel_core(n, u, jv_row, v < 0.0, k_cut, nullptr));
    return out;
}

GenBesselSeries::GenBesselSeries(double v) : v_(v), k_cut_(v_cutoff(v)) {
    jv_ = bessel_j_row(k_cut_, std::fabs(v));
}

double GenBesselSeries::operator()(int n, double u) const {
    if (v_ == 0.0) return bessel_j(n, u);
    if (u == 0.0) {
        if (n & 1) return 0.0;
        return row_at(jv_, n / 2, v_ < 0.0);
    }
    return gen_bessel_core(n, u, jv_, v_ < 0.0, k_cut_, nullptr);
}

}  // namespace msfa
