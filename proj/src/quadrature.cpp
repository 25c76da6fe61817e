#include "quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "errors.hpp"

namespace msfa {

namespace {

GlRule compute_gl(int n) {
    GlRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton on P_n with the Tricomi initial guess; symmetric pairs.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= n; ++m) {
                const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) {
                // one polishing pass after convergence
                p0 = 1.0;
                p1 = x;
                for (int m = 2; m <= n; ++m) {
                    const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                x -= p1 / pp;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
    }
    if (n & 1) {
        // middle node of odd rules sits exactly at 0; P_n'(0) = n P_{n-1}(0)
        double p0 = 1.0, p1 = 0.0;
        for (int m = 2; m <= n; ++m) {
            const double p2 = (-(m - 1.0) * p0) / m;
            p0 = p1;
            p1 = p2;
        }
        const double pp = n * p0;
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
        rule.weights[static_cast<std::size_t>(n / 2)] = 2.0 / (pp * pp);
    }
    return rule;
}

std::map<int, GlRule>& gl_cache() {
    static std::map<int, GlRule> cache;
    return cache;
}

std::mutex gl_mutex;

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol_abs, int depth,
                    int max_depth) {
    const double ml = 0.5 * (a + m), mr = 0.5 * (m + b);
    const double fml = f(ml), fmr = f(mr);
    const double left = (m - a) / 6.0 * (fa + 4.0 * fml + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * fmr + fb);
    const double delta = left + right - whole;
    // Below a few ulps of the local mass, delta is rounding noise and no
    // amount of further splitting can drive it down; stop there.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                         (std::fabs(left) + std::fabs(right));
    if (depth >= max_depth || std::fabs(delta) <= std::max(15.0 * tol_abs, noise))
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, ml, fml, left, 0.5 * tol_abs, depth + 1, max_depth) +
           simpson_step(f, m, fm, b, fb, mr, fmr, right, 0.5 * tol_abs, depth + 1, max_depth);
}

}  // namespace

const GlRule& gl_rule(int order) {
    if (order < 1) throw DomainError("gl_rule: order must be >= 1");
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto& cache = gl_cache();
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_floor, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double scale = std::max(std::fabs(whole), abs_floor);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, 0, max_depth);
}

}  // namespace msfa
