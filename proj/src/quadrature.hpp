#pragma once

#include <functional>
#include <vector>

namespace msfa {

struct GlRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// Gauss-Legendre rule of the given order; computed once and cached
// (thread-safe), so repeated lookups return identical arrays.
const GlRule& gl_rule(int order);

// Integrate f over [a, b] to the given relative tolerance by adaptive
// Simpson bisection. abs_floor guards the stopping test when the integral
// is legitimately ~0.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_floor = 1e-300, int max_depth = 48);

}  // namespace msfa
