#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ggm/errors.hpp"

namespace ggm {

// Finite-difference weights for the m-th derivative at x0 from arbitrary
// nodes (Fornberg's recurrence). Returns one weight per node.
inline std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m) {
    const int n = static_cast<int>(x.size());
    if (n < m + 1) raise(errc::invalid_parameter, "too few nodes for derivative order");
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

// Weights on uniform nodes 0..npts-1 (spacing dx) for the m-th derivative at
// node `at`.
inline std::vector<double> fd_weights_uniform(int npts, double dx, int m, int at) {
    std::vector<double> x(npts);
    for (int i = 0; i < npts; ++i) x[i] = i * dx;
    return fd_weights(at * dx, x, m);
}

// Composite Simpson on uniform samples; a 3/8 tail handles an odd interval
// count. Falls back to trapezoid below four points.
inline double simpson(const std::vector<double>& f, double dx) {
    const size_t n = f.size();
    if (n < 2) return 0.0;
    if (n < 4) {
        double s = 0.5 * (f.front() + f.back());
        for (size_t i = 1; i + 1 < n; ++i) s += f[i];
        return s * dx;
    }
    size_t intervals = n - 1;
    size_t simpson_end = intervals % 2 == 0 ? n - 1 : n - 4;
    double s = 0.0;
    for (size_t i = 0; i + 2 <= simpson_end; i += 2)
        s += dx / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    if (intervals % 2 != 0) {
        size_t i = n - 4;
        s += 3.0 * dx / 8.0 * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
    }
    return s;
}

// Cumulative integral I_i = int_0^{x_i} f with fourth-order interval rules
// (cubic through the four nearest nodes).
inline std::vector<double> cumulative_integral(const std::vector<double>& f, double dx) {
    const size_t n = f.size();
    std::vector<double> I(n, 0.0);
    if (n < 2) return I;
    if (n < 4) {
        for (size_t i = 1; i < n; ++i) I[i] = I[i - 1] + 0.5 * dx * (f[i - 1] + f[i]);
        return I;
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        double piece;
        if (i == 0)
            piece = dx / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        else if (i + 2 == n)
            piece = dx / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
        else
            piece = dx / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
        I[i + 1] = I[i] + piece;
    }
    return I;
}

// Trapezoid for periodic samples over a full period (spectrally accurate for
// smooth periodic integrands).
inline double periodic_trapezoid(const std::vector<double>& f, double dx) {
    double s = 0.0;
    for (double v : f) s += v;
    return s * dx;
}

}  // namespace ggm
