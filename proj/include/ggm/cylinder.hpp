#pragma once

#include <cmath>
#include <utility>

#include "ggm/lattice.hpp"
#include "ggm/slope.hpp"

namespace ggm {

// Parameters (r, theta, t) of the screw motion g(x,s) = (R_theta(x), s + t)
// generating a twisted cylinder. Squared lengths and the twist are carried
// exactly; square roots are taken only on output.
struct CylinderParams {
    Rational r_sq;   // boundary geodesic length squared
    Rational theta;  // rotation fraction in [0,1)
    Rational t_sq;   // translation length squared

    CylinderParams(Rational rs, Rational th, Rational ts)
        : r_sq(std::move(rs)), theta(std::move(th)), t_sq(std::move(ts)) {
        if (!(r_sq > 0) || !(t_sq > 0))
            raise(errc::invalid_parameter, "cylinder lengths must be positive");
        if (theta < 0 || theta >= 1)
            raise(errc::invalid_parameter, "twist " + theta.str() + " outside [0,1)");
    }

    double r() const { return std::sqrt(r_sq.to_double()); }
    double t() const { return std::sqrt(t_sq.to_double()); }

    friend bool operator==(const CylinderParams& a, const CylinderParams& b) {
        return a.r_sq == b.r_sq && a.theta == b.theta && a.t_sq == b.t_sq;
    }
};

// Cylinder generated by the foliation direction F: r = |v|, theta the twist
// of the normalized marking, t = |vhat - theta v|.
inline CylinderParams cylinder_from_foliation(const FlatTorus& T, const LatticeVector& F) {
    Marking m = normalized_marking(T, F);
    MarkingParams mp = marking_params(T, m);
    return CylinderParams(mp.r_sq, mp.theta, mp.t_sq);
}

// Inverse dictionary: the boundary torus in the basis (v, vhat), i.e.
// v = r e1 and vhat = theta v + t e2.
inline FlatTorus boundary_torus(const CylinderParams& c) {
    Rational g12 = c.theta * c.r_sq;
    Rational g22 = c.theta * c.theta * c.r_sq + c.t_sq;
    return FlatTorus(GramMatrix(c.r_sq, g12, g22));
}

struct AngleReport {
    double cos_alpha;    // <v1,v2>/(r1 r2) straight from the Gram matrix
    double residual_q;   // (q + p theta1) r1/r2 - cos_alpha
    double residual_b;   // (b - p theta2) r2/r1 - cos_alpha
};

// The angle between the two foliation directions, computed three ways.
inline AngleReport angle_between(const FlatTorus& T, const LatticeVector& F1,
                                 const LatticeVector& F2) {
    SlopeData s = slope_of(T, F1, F2);
    MarkingParams m1 = marking_params(T, normalized_marking(T, F1));
    MarkingParams m2 = marking_params(T, normalized_marking(T, F2));
    double r1 = std::sqrt(m1.r_sq.to_double());
    double r2 = std::sqrt(m2.r_sq.to_double());
    double direct = inner(T, F1, F2).to_double() / (r1 * r2);
    double via_q = (Rational(s.q) + Rational(s.p) * m1.theta).to_double() * r1 / r2;
    double via_b = (Rational(s.b) - Rational(s.p) * m2.theta).to_double() * r2 / r1;
    return AngleReport{direct, via_q - direct, via_b - direct};
}

// The metric with orthogonal nullity foliations in the slope-(q,p) family.
// Exists iff 0 <= -q/p < 1; then theta1 = -q/p, theta2 = b/p with b the
// residue of q^{-1} in [0,p), r2 = p t1, and t2 = r1/p (covolume r1 t1 = r2 t2).
inline std::pair<CylinderParams, CylinderParams> orthogonal_configuration(Int q, Int p,
                                                                          const Rational& t1,
                                                                          const Rational& r1) {
    if (p == 0 || gcd(abs(q), abs(p)) != 1)
        raise(errc::not_coprime, "slope " + q.str() + "/" + p.str());
    if (!(t1 > 0) || !(r1 > 0)) raise(errc::invalid_parameter, "lengths must be positive");
    if (p < 0) { p = -p; q = -q; }
    Rational theta1 = Rational(-q, p);
    if (theta1 < 0 || theta1 >= 1)
        raise(errc::slope_out_of_range, "-q/p = " + theta1.str() +
                                            " outside [0,1); no orthogonal metric in this family");
    Int b = p == 1 ? Int(0) : mod_inverse(q, p);
    CylinderParams c1(r1 * r1, theta1, t1 * t1);
    CylinderParams c2(Rational(p * p) * t1 * t1, Rational(b, p), (r1 / Rational(p)) * (r1 / Rational(p)));
    return {c1, c2};
}

// The twisted cylinders of the sphere family: boundary torus the unit square,
// foliations (1,0) and (q,1).
inline CylinderParams s3_family(Int q) {
    if (q < 1) raise(errc::invalid_parameter, "family index must be >= 1");
    Rational d(q * q + 1);
    return CylinderParams(d, Rational(q * q - q + 1, q * q + 1), Rational(1) / d);
}

}  // namespace ggm
