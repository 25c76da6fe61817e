#pragma once

#include <cmath>

namespace msfa {

// Log-log linear interpolation between (x0, y0) and (x1, y1), falling
// back to plain linear wherever an ordinate is non-positive (underflowed
// yields/rates). Exact for power laws.
inline double loglog_interp(double x, double x0, double y0, double x1, double y1) {
    if (y0 > 0.0 && y1 > 0.0) {
        const double t = std::log(x / x0) / std::log(x1 / x0);
        return y0 * std::exp(t * std::log(y1 / y0));
    }
    const double t = (x - x0) / (x1 - x0);
    return y0 + t * (y1 - y0);
}

}  // namespace msfa
