#pragma once

#include <string>

#include "ggm/errors.hpp"
#include "ggm/rational.hpp"

namespace ggm {

// Flat metric on the torus R^2/Z^2 in the fixed oriented basis e1, e2:
// entries are <e1,e1>, <e1,e2>, <e2,e2>.
struct GramMatrix {
    Rational g11, g12, g22;

    GramMatrix(Rational a11, Rational a12, Rational a22)
        : g11(std::move(a11)), g12(std::move(a12)), g22(std::move(a22)) {
        if (!(g11 > 0) || !(det() > 0))
            raise(errc::not_positive_definite,
                  "gram [[" + g11.str() + "," + g12.str() + "],[" + g12.str() + "," + g22.str() +
                      "]] is not positive definite");
    }

    Rational det() const { return g11 * g22 - g12 * g12; }

    static GramMatrix unit_square() { return GramMatrix(1, 0, 1); }
    static GramMatrix rectangular(const Rational& r1_sq, const Rational& r2_sq) {
        return GramMatrix(r1_sq, 0, r2_sq);
    }

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
        return a.g11 == b.g11 && a.g12 == b.g12 && a.g22 == b.g22;
    }
};

struct FlatTorus {
    GramMatrix gram;
    int orientation = +1;  // +1 or -1

    explicit FlatTorus(GramMatrix g, int orient = +1) : gram(std::move(g)), orientation(orient) {
        if (orientation != 1 && orientation != -1)
            raise(errc::invalid_parameter, "orientation must be +1 or -1");
    }

    static FlatTorus unit_square(int orient = +1) {
        return FlatTorus(GramMatrix::unit_square(), orient);
    }

    FlatTorus reversed() const { return FlatTorus(gram, -orientation); }

    friend bool operator==(const FlatTorus& a, const FlatTorus& b) {
        return a.gram == b.gram && a.orientation == b.orientation;
    }
};

// Integer vector in the basis e1, e2.
struct LatticeVector {
    Int x, y;

    LatticeVector() : x(0), y(0) {}
    LatticeVector(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}
    LatticeVector(long long px, long long py) : x(px), y(py) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_primitive() const { return !is_zero() && gcd(abs(x), abs(y)) == 1; }

    LatticeVector operator-() const { return LatticeVector(-x, -y); }
    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        return LatticeVector(a.x + b.x, a.y + b.y);
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        return LatticeVector(a.x - b.x, a.y - b.y);
    }
    friend LatticeVector operator*(const Int& k, const LatticeVector& v) {
        return LatticeVector(k * v.x, k * v.y);
    }
    friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
        return a.x == b.x && a.y == b.y;
    }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Int det2(const LatticeVector& u, const LatticeVector& w) { return u.x * w.y - u.y * w.x; }

// Integer 2x2 matrix [[a,b],[c,d]]; columns are the images of e1, e2.
struct Mat2 {
    Int a, b, c, d;

    Mat2(Int pa, Int pb, Int pc, Int pd)
        : a(std::move(pa)), b(std::move(pb)), c(std::move(pc)), d(std::move(pd)) {}
    Mat2(long long pa, long long pb, long long pc, long long pd) : a(pa), b(pb), c(pc), d(pd) {}

    Int det() const { return a * d - b * c; }

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    LatticeVector apply(const LatticeVector& v) const {
        return LatticeVector(a * v.x + b * v.y, c * v.x + d * v.y);
    }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
    }

    // Inverse of a det = +1 matrix.
    Mat2 inverse_unimodular() const {
        if (det() != 1) raise(errc::not_unimodular, "matrix determinant is not +1");
        return Mat2(d, -b, -c, a);
    }
};

// Oriented basis of the lattice together with its normalized twist.
struct Marking {
    LatticeVector v;
    LatticeVector vhat;
    Rational theta;  // <v,vhat>/|v|^2, in [0,1) when normalized
};

struct MarkingParams {
    Rational r_sq;   // |v|^2
    Rational theta;  // twist
    Rational t_sq;   // |vhat - theta v|^2
};

inline Rational inner(const FlatTorus& T, const LatticeVector& u, const LatticeVector& w) {
    const GramMatrix& g = T.gram;
    return g.g11 * Rational(u.x * w.x) + g.g12 * Rational(u.x * w.y + u.y * w.x) +
           g.g22 * Rational(u.y * w.y);
}

inline Rational covolume_sq(const FlatTorus& T) { return T.gram.det(); }

// Determinant read against the torus orientation.
inline Int oriented_det(const FlatTorus& T, const LatticeVector& u, const LatticeVector& w) {
    Int d = det2(u, w);
    return T.orientation == 1 ? d : Int(-d);
}

// The unique oriented basis completion {v, vhat} with det = +1 (w.r.t. the
// torus orientation) and twist theta in [0,1). Bezout gives some completion;
// shifting by floor(theta) multiples of v normalizes it.
inline Marking normalized_marking(const FlatTorus& T, const LatticeVector& v) {
    if (!v.is_primitive()) raise(errc::non_primitive, "vector " + v.str() + " is not primitive");
    Int s, t;
    ext_gcd(v.x, v.y, s, t);  // s*x + t*y = 1
    LatticeVector w = T.orientation == 1 ? LatticeVector(-t, s) : LatticeVector(t, -s);
    Rational r_sq = inner(T, v, v);
    Rational theta0 = inner(T, v, w) / r_sq;
    Int n = theta0.floor();
    LatticeVector vhat = w - n * v;
    return Marking{v, vhat, theta0 - Rational(n)};
}

inline MarkingParams marking_params(const FlatTorus& T, const Marking& m) {
    if (oriented_det(T, m.v, m.vhat) != 1)
        raise(errc::not_normalized, "marking basis is not oriented");
    Rational r_sq = inner(T, m.v, m.v);
    Rational theta = inner(T, m.v, m.vhat) / r_sq;
    if (theta < 0 || theta >= 1)
        raise(errc::not_normalized, "twist " + theta.str() + " outside [0,1)");
    // |vhat - theta v|^2 = |vhat|^2 - theta^2 |v|^2 since <v,vhat> = theta |v|^2.
    Rational t_sq = inner(T, m.vhat, m.vhat) - theta * theta * r_sq;
    return MarkingParams{r_sq, theta, t_sq};
}

// Re-coordinatization by U with det U = +1: Gram becomes U^T G U and lattice
// vectors transform by U^{-1}, leaving all inner products unchanged.
inline FlatTorus change_of_basis(const FlatTorus& T, const Mat2& U) {
    if (U.det() != 1) raise(errc::not_unimodular, "change of basis requires det = +1");
    const GramMatrix& g = T.gram;
    Rational a(U.a), b(U.b), c(U.c), d(U.d);
    Rational h11 = a * a * g.g11 + Rational(2) * a * c * g.g12 + c * c * g.g22;
    Rational h12 = a * b * g.g11 + (a * d + b * c) * g.g12 + c * d * g.g22;
    Rational h22 = b * b * g.g11 + Rational(2) * b * d * g.g12 + d * d * g.g22;
    return FlatTorus(GramMatrix(h11, h12, h22), T.orientation);
}

inline LatticeVector transform_vector(const Mat2& U, const LatticeVector& v) {
    return U.inverse_unimodular().apply(v);
}

}  // namespace ggm
