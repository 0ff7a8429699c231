#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "ggm/errors.hpp"
#include "ggm/numeric.hpp"

namespace ggm {

// Rotationally symmetric disk metric drho^2 + h(rho)^2 dphi^2, sampled on a
// uniform grid. h(0) = 0, h'(0) = 1 for a smooth pole; the boundary circle is
// a geodesic when h'(rho_max) = 0.
struct DiskProfile {
    std::vector<double> h;  // h at rho_i = i * drho, i = 0..segments
    double rho_max = 0.0;

    int segments() const { return static_cast<int>(h.size()) - 1; }
    double drho() const { return rho_max / segments(); }
    double rho(int i) const { return i * drho(); }
    double boundary_length() const { return 2.0 * std::numbers::pi * h.back(); }
};

struct DiskTolerances {
    double geodesic = 1e-10;       // |h'(rho_max)|
    double flatness = 1e-6;        // scaled per derivative order, see verify
    double min_curvature = 1e-12;  // min K >= -min_curvature
};

struct CurvatureReport {
    double min_K = 0.0;
    double total_curvature = 0.0;           // integral of K dA
    double boundary_geodesic_defect = 0.0;  // |h'(rho_max)|
    std::vector<double> flatness;           // |h^(k)(rho_max)|, k = 2..4
    double boundary_length = 0.0;
    bool geodesic_ok = false;
    bool flatness_ok = false;
    bool curvature_sign_ok = false;

    bool passes() const { return geodesic_ok && flatness_ok && curvature_sign_ok; }
};

using ShapeFunction = std::function<double(double)>;

// Even cutoff bump: positive on [0,1), vanishing to all orders at 1, with
// psi(0) = 1/e so the synthesized disk has positive curvature at the pole.
inline ShapeFunction standard_shape() {
    return [](double x) {
        if (x <= -1.0 || x >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - x * x));
    };
}

// Bump vanishing to all orders at both endpoints; gives a disk that is flat
// at the pole as well.
inline ShapeFunction flat_bump_shape() {
    return [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return std::exp(-1.0 / (x * (1.0 - x)));
    };
}

namespace detail {

// RK4 for h'' = -c psi(rho) h, h(0) = 0, h'(0) = 1 on [0,1] with N steps.
// Returns the samples and writes h'(1).
inline std::vector<double> integrate_profile(const ShapeFunction& psi, int N, double c,
                                             double& hp_end) {
    std::vector<double> h(N + 1);
    double dx = 1.0 / N;
    double y = 0.0, yp = 1.0;
    h[0] = 0.0;
    auto acc = [&](double x, double hv) { return -c * psi(x) * hv; };
    for (int i = 0; i < N; ++i) {
        double x = i * dx;
        double k1 = yp, l1 = acc(x, y);
        double k2 = yp + 0.5 * dx * l1, l2 = acc(x + 0.5 * dx, y + 0.5 * dx * k1);
        double k3 = yp + 0.5 * dx * l2, l3 = acc(x + 0.5 * dx, y + 0.5 * dx * k2);
        double k4 = yp + dx * l3, l4 = acc(x + dx, y + dx * k3);
        y += dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        yp += dx / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
        h[i + 1] = y;
    }
    hp_end = yp;
    return h;
}

}  // namespace detail

// Build the standard disk: solve h'' = -c psi(rho) h with pole conditions,
// shooting on the curvature amplitude c until the boundary is geodesic, then
// apply the homothety h -> lambda h(./lambda) fixing the boundary length.
// The two end conditions decouple: shooting handles h'(1) = 0, the homothety
// the length.
inline DiskProfile synthesize_standard_disk(const ShapeFunction& psi, int N,
                                            double target_boundary_length) {
    if (N < 100) raise(errc::grid_too_coarse, "need at least 100 grid intervals");
    if (!(target_boundary_length > 0.0))
        raise(errc::invalid_parameter, "boundary length must be positive");
    // Positivity probed on a fixed coarse lattice: shapes with flat cutoffs
    // underflow to 0.0 near the endpoints on fine grids, which is fine.
    for (int i = 1; i < 128; ++i) {
        if (psi(i / 128.0) < 0.0 || (i > 16 && i < 112 && !(psi(i / 128.0) > 0.0)))
            raise(errc::invalid_shape, "shape function must be positive on (0,1)");
    }

    double hp = 0.0;
    double c_lo = 0.0, c_hi = 1.0;
    detail::integrate_profile(psi, N, c_hi, hp);
    int doublings = 0;
    while (hp > 0.0) {
        c_lo = c_hi;
        c_hi *= 2.0;
        detail::integrate_profile(psi, N, c_hi, hp);
        if (++doublings > 60) raise(errc::shooting_failed, "no sign change while bracketing");
    }
    for (int it = 0; it < 200 && (c_hi - c_lo) > 1e-16 * c_hi; ++it) {
        double mid = 0.5 * (c_lo + c_hi);
        detail::integrate_profile(psi, N, mid, hp);
        (hp > 0.0 ? c_lo : c_hi) = mid;
    }
    double c = 0.5 * (c_lo + c_hi);
    std::vector<double> h = detail::integrate_profile(psi, N, c, hp);
    if (!(std::abs(hp) < 1e-10)) raise(errc::shooting_failed, "bisection did not converge");
    if (!(h[N] > 0.0)) raise(errc::shooting_failed, "profile collapsed before the boundary");

    double lambda = target_boundary_length / (2.0 * std::numbers::pi * h[N]);
    DiskProfile d;
    d.rho_max = lambda;
    d.h.resize(N + 1);
    for (int i = 0; i <= N; ++i) d.h[i] = lambda * h[i];
    return d;
}

inline DiskProfile scale(const DiskProfile& d, double r) {
    if (!(r > 0.0)) raise(errc::invalid_parameter, "scale factor must be positive");
    DiskProfile out = d;
    out.rho_max *= r;
    for (double& v : out.h) v *= r;
    return out;
}

inline CurvatureReport verify(const DiskProfile& d, const DiskTolerances& tol = {}) {
    const int N = d.segments();
    if (N < 10) raise(errc::grid_too_coarse, "need at least 10 grid intervals");
    const double dr = d.drho();
    const auto& h = d.h;
    auto at = [&](int i) { return i >= 0 ? h[i] : -h[-i]; };  // odd extension at the pole

    // Second derivative: fourth-order central stencil inside. The last two
    // points use the compact backward second difference, which cancels
    // exactly on constant data; wide one-sided stencils would amplify
    // rounding noise right where valid profiles are flat.
    // Stencils written as differences against the center value so they cancel
    // exactly on constant data.
    std::vector<double> hpp(N + 1, 0.0);
    for (int i = 1; i <= N - 2; ++i) {
        double c0 = at(i);
        hpp[i] = (-(at(i - 2) - c0) + 16.0 * (at(i - 1) - c0) + 16.0 * (at(i + 1) - c0) -
                  (at(i + 2) - c0)) /
                 (12.0 * dr * dr);
    }
    for (int i : {N - 1, N})
        hpp[i] = ((h[i - 2] - h[i - 1]) + (h[i] - h[i - 1])) / (dr * dr);

    CurvatureReport rep;
    // K at the pole from the odd third derivative; K = -h''/h elsewhere.
    // Second differences below the sample quantization floor (a 1-ulp step in
    // h reads as ~eps h/dr^2) are reported as zero curvature.
    const double eps = std::numeric_limits<double>::epsilon();
    auto floored = [&](double value, double noise_scale) {
        return std::abs(value) < 4.0 * eps * noise_scale ? 0.0 : value;
    };
    double k0_num = floored((h[2] - h[1]) - h[1], std::abs(h[2]));
    rep.min_K = -k0_num / (dr * dr * dr);
    for (int i = 1; i <= N; ++i)
        rep.min_K = std::min(rep.min_K, -floored(hpp[i], h[i] / (dr * dr)) / h[i]);

    std::vector<double> f(N + 1);
    f[0] = 0.0;
    for (int i = 1; i <= N; ++i) f[i] = -2.0 * std::numbers::pi * hpp[i];
    rep.total_curvature = simpson(f, dr);

    {
        auto w = fd_weights_uniform(5, dr, 1, 4);
        double s = 0.0;
        for (int k = 0; k < 5; ++k) s += w[k] * h[N - 4 + k];
        rep.boundary_geodesic_defect = std::abs(s);
    }

    for (int k = 2; k <= 4; ++k) {
        int pts = k + 3;
        auto w = fd_weights_uniform(pts, dr, k, pts - 1);
        double s = 0.0;
        for (int j = 0; j < pts; ++j) s += w[j] * h[N - (pts - 1) + j];
        rep.flatness.push_back(std::abs(s));
    }

    rep.boundary_length = d.boundary_length();
    rep.geodesic_ok = rep.boundary_geodesic_defect <= tol.geodesic;
    rep.curvature_sign_ok = rep.min_K >= -tol.min_curvature;
    rep.flatness_ok = true;
    for (int k = 2; k <= 4; ++k) {
        // Threshold scaled by the grid: an estimate of h^(k) from samples can
        // only be trusted down to noise of order eps/dr^k.
        double threshold = tol.flatness * std::pow(dr, 1 - k);
        if (rep.flatness[k - 2] > threshold) rep.flatness_ok = false;
    }
    return rep;
}

// Extend the profile by a flat collar h = h(rho_max); requires a flat geodesic
// boundary, otherwise the junction would not be smooth. The collar length is
// quantized to whole grid steps (at least one when positive).
inline DiskProfile attach_flat_collar(const DiskProfile& d, double length,
                                      const DiskTolerances& tol = {}) {
    if (length < 0.0) raise(errc::invalid_parameter, "collar length must be nonnegative");
    if (length == 0.0) return d;
    CurvatureReport rep = verify(d, tol);
    if (!rep.geodesic_ok || !rep.flatness_ok)
        raise(errc::boundary_not_flat, "boundary fails the geodesic/flatness checks");
    long long n = std::max(1LL, std::llround(length / d.drho()));
    DiskProfile out = d;
    out.rho_max += n * d.drho();
    out.h.insert(out.h.end(), n, d.h.back());
    return out;
}

inline double surface_area(const DiskProfile& d) {
    std::vector<double> f(d.h.size());
    for (size_t i = 0; i < d.h.size(); ++i) f[i] = 2.0 * std::numbers::pi * d.h[i];
    return simpson(f, d.drho());
}

}  // namespace ggm
