#pragma once

#include <vector>

namespace msfa {

// Ordinary Bessel function of the first kind, integer order.
// Accurate to better than 1e-12 absolute for |x| <= 200.
double bessel_j(int m, double x);

// J_0(x) ... J_{m_max}(x) in one downward-recurrence pass.
std::vector<double> bessel_j_row(int m_max, double x);

// Generalized Bessel function of two arguments,
//   J_n(u,v) = sum_k J_{n-2k}(u) J_k(v),
// equivalently the Fourier coefficients of the generating function
//   exp(i(u sin t + v sin 2t)) = sum_n J_n(u,v) exp(i n t).
// Note: references that attach the opposite sign to the second-harmonic
// term get J_n(u,-v) = sum_k (-1)^k J_{n-2k}(u) J_k(v) instead; squared
// values at v >= 0 under the convention here are what the rates use, and
// the u-parity J_n(-u,v) = (-1)^n J_n(u,v) keeps J_n^2 convention-proof.
double gen_bessel(int n, double u, double v);

// gen_bessel over a contiguous order range; element i is order n_min + i.
std::vector<double> gen_bessel_row(int n_min, int n_max, double u, double v);

struct GenBesselEval {
    int order = 0;
    double arg_u = 0.0;
    double arg_v = 0.0;
    double value = 0.0;
    int truncation_terms = 0;  // series terms actually summed
};

GenBesselEval gen_bessel_eval(int n, double u, double v);

// Reusable evaluator for many orders/u at one fixed v: caches the J_k(v)
// row so per-channel angular grids do not recompute it.
class GenBesselSeries {
public:
    explicit GenBesselSeries(double v);
    double operator()(int n, double u) const;
    double v() const { return v_; }

private:
    double v_;
    int k_cut_;
    std::vector<double> jv_;  // J_0(|v|) .. J_{k_cut}(|v|)
};

}  // namespace msfa
