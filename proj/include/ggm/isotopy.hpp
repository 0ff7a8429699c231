#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ggm/diskmetric.hpp"
#include "ggm/errors.hpp"
#include "ggm/numeric.hpp"

namespace ggm {

// Conformal factor u on the closed unit disk, metric e^{2u} (dsigma^2 +
// sigma^2 dphi^2), sampled on a polar grid: sigma_j = j/radial for
// j = 0..radial, phi_k = 2 pi k/angular. Row 0 is the pole (one value,
// replicated across angles).
struct ConformalDisk {
    int radial = 0;
    int angular = 0;
    std::vector<double> u;  // (radial+1) * angular, row-major in j

    ConformalDisk() = default;
    ConformalDisk(int r, int a) : radial(r), angular(a) {
        if (r < 2 || a < 2) raise(errc::grid_too_coarse, "conformal grid needs at least 2x2");
        u.assign(static_cast<size_t>(r + 1) * a, 0.0);
    }

    double& at(int j, int k) { return u[static_cast<size_t>(j) * angular + k]; }
    double at(int j, int k) const { return u[static_cast<size_t>(j) * angular + k]; }
    double sigma(int j) const { return static_cast<double>(j) / radial; }
    double dsigma() const { return 1.0 / radial; }
    double dphi() const { return 2.0 * std::numbers::pi / angular; }

    bool same_grid(const ConformalDisk& o) const {
        return radial == o.radial && angular == o.angular;
    }

    // Length of the boundary circle, int e^u dphi at sigma = 1.
    double boundary_length() const {
        double s = 0.0;
        for (int k = 0; k < angular; ++k) s += std::exp(at(radial, k));
        return s * dphi();
    }
};

// Flat-metric Laplacian on the polar grid. Interior rows use a three-point
// radial stencil fitted to be exact on {1, log sigma, sigma^2} plus the
// periodic angular second difference; the pole is handled by averaging the
// first ring. The exactness on log sigma matters: factors of disks with flat
// boundaries behave like c - log sigma near sigma = 1, and the plain central
// stencil misreads that tail by O(dsigma^2/sigma^4). Boundary row values are
// NaN (not computed).
inline std::vector<double> laplacian(const ConformalDisk& cd) {
    if (cd.radial < 16 || cd.angular < 16)
        raise(errc::grid_too_coarse, "laplacian needs at least a 16x16 grid");
    const int J = cd.radial, K = cd.angular;
    const double ds = cd.dsigma(), dp = cd.dphi();
    std::vector<double> out(static_cast<size_t>(J + 1) * K,
                            std::numeric_limits<double>::quiet_NaN());

    double pole_mean = 0.0;
    for (int k = 0; k < K; ++k) pole_mean += cd.at(1, k);
    pole_mean /= K;
    double pole_val = 4.0 * (pole_mean - cd.at(0, 0)) / (ds * ds);
    for (int k = 0; k < K; ++k) out[k] = pole_val;

    for (int j = 1; j < J; ++j) {
        double A, C;
        if (j == 1) {
            A = 0.5 / (ds * ds);
            C = 1.5 / (ds * ds);
        } else {
            double M = std::log(static_cast<double>(j) / (j - 1));
            double L = std::log(static_cast<double>(j + 1) / j);
            double ratio = L / M;
            double denom = ratio * (1.0 - 2.0 * j) + (2.0 * j + 1.0);
            C = 4.0 / (ds * ds * denom);
            A = C * ratio;
        }
        double sig = cd.sigma(j);
        double ang = 1.0 / (sig * sig * dp * dp);
        for (int k = 0; k < K; ++k) {
            int km = k == 0 ? K - 1 : k - 1;
            int kp = k == K - 1 ? 0 : k + 1;
            double c0 = cd.at(j, k);
            double radial_part = A * (cd.at(j - 1, k) - c0) + C * (cd.at(j + 1, k) - c0);
            double angular_part = ang * ((cd.at(j, km) - c0) + (cd.at(j, kp) - c0));
            out[static_cast<size_t>(j) * K + k] = radial_part + angular_part;
        }
    }
    return out;
}

struct ConformalReport {
    double max_interior_laplacian = 0.0;  // max of Delta u over computed rows
    double boundary_normal_defect = 0.0;  // max |d_nu u + 1| on the boundary
    double outer_ring_laplacian = 0.0;    // max |Delta u| on the last interior ring
    double boundary_length = 0.0;
};

inline ConformalReport conformal_report(const ConformalDisk& cd) {
    ConformalReport rep;
    auto lap = laplacian(cd);
    const int J = cd.radial, K = cd.angular;
    rep.max_interior_laplacian = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < J; ++j)
        for (int k = 0; k < K; ++k)
            rep.max_interior_laplacian =
                std::max(rep.max_interior_laplacian, lap[static_cast<size_t>(j) * K + k]);
    for (int k = 0; k < K; ++k)
        rep.outer_ring_laplacian = std::max(
            rep.outer_ring_laplacian, std::abs(lap[static_cast<size_t>(J - 1) * K + k]));
    auto w = fd_weights_uniform(5, cd.dsigma(), 1, 4);
    for (int k = 0; k < K; ++k) {
        double d = 0.0;
        for (int i = 0; i < 5; ++i) d += w[i] * cd.at(J - 4 + i, k);
        rep.boundary_normal_defect = std::max(rep.boundary_normal_defect, std::abs(d + 1.0));
    }
    rep.boundary_length = cd.boundary_length();
    return rep;
}

// Conformal-polar form of a revolution profile: with log sigma(rho) =
// int drho/h normalized so sigma(rho_max) = 1, the factor is e^u = h/sigma.
// The integral is regularized at the pole by subtracting 1/rho, where
// h = rho + O(rho^3). Interpolation runs on w = log h against xi = log sigma,
// so the -log sigma part of u is carried exactly onto the target grid.
inline ConformalDisk standard_factor(const DiskProfile& d, int radial, int angular) {
    const int N = d.segments();
    if (N < 10) raise(errc::grid_too_coarse, "profile too coarse");
    for (int i = 1; i <= N; ++i)
        if (!(d.h[i] > 0.0)) raise(errc::profile_singular, "warping function vanishes");

    const double dr = d.drho();
    std::vector<double> reg(N + 1);
    reg[0] = 0.0;
    for (int i = 1; i <= N; ++i) reg[i] = 1.0 / d.h[i] - 1.0 / d.rho(i);
    std::vector<double> G = cumulative_integral(reg, dr);
    const double FN = std::log(d.rho_max) + G[N];

    std::vector<double> xi(N + 1), w(N + 1);
    xi[0] = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= N; ++i) {
        xi[i] = std::log(d.rho(i)) + G[i] - FN;
        w[i] = std::log(d.h[i]);
    }

    ConformalDisk cd(radial, angular);
    for (int k = 0; k < angular; ++k) cd.at(0, k) = FN;
    for (int j = 1; j <= radial; ++j) {
        double target = std::log(cd.sigma(j));
        // 4-point Lagrange in xi around the bracketing source interval.
        auto it = std::upper_bound(xi.begin() + 1, xi.end(), target);
        int hi = static_cast<int>(it - xi.begin());
        int lo = std::clamp(hi - 2, 1, N - 3);
        double val = 0.0;
        for (int m = lo; m < lo + 4; ++m) {
            double term = w[m];
            for (int n = lo; n < lo + 4; ++n) {
                if (n == m) continue;
                term *= (target - xi[n]) / (xi[m] - xi[n]);
            }
            val += term;
        }
        double uj = val - target;
        for (int k = 0; k < angular; ++k) cd.at(j, k) = uj;
    }
    return cd;
}

// Path of conformal factors e^{2 w_s}, w_s = (1-s) u0 + s u + a(s)/2, with
// a(s) normalizing every boundary length to that of u0.
struct IsotopyPath {
    std::vector<double> s;
    std::vector<double> a;
    std::vector<ConformalDisk> members;
    double boundary_length = 0.0;
};

inline IsotopyPath deform(const ConformalDisk& u, const ConformalDisk& u0, int steps,
                          double sign_tolerance = 1e-6) {
    if (!u.same_grid(u0)) raise(errc::grid_mismatch, "factors live on different grids");
    if (steps < 1) raise(errc::invalid_parameter, "need at least one step");
    const int J = u.radial, K = u.angular;
    const double r = u0.boundary_length();

    IsotopyPath path;
    path.boundary_length = r;
    for (int step = 0; step <= steps; ++step) {
        double s = static_cast<double>(step) / steps;
        ConformalDisk member(J, K);
        double blend_length = 0.0;
        for (int k = 0; k < K; ++k)
            blend_length += std::exp((1.0 - s) * u0.at(J, k) + s * u.at(J, k));
        blend_length *= member.dphi();
        double a = 2.0 * std::log(r / blend_length);
        for (int j = 0; j <= J; ++j)
            for (int k = 0; k < K; ++k)
                member.at(j, k) = (1.0 - s) * u0.at(j, k) + s * u.at(j, k) + 0.5 * a;

        auto lap = laplacian(member);
        for (int j = 0; j < J; ++j)
            for (int k = 0; k < K; ++k) {
                double v = lap[static_cast<size_t>(j) * K + k];
                if (v > sign_tolerance)
                    raise(errc::curvature_sign_violation,
                          "curvature sign fails at step " + std::to_string(step) +
                              " (input factors are not nonnegatively curved)");
            }

        path.s.push_back(s);
        path.a.push_back(a);
        path.members.push_back(std::move(member));
    }
    return path;
}

}  // namespace ggm
