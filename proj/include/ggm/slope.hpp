#pragma once

#include <string>
#include <utility>

#include "ggm/lattice.hpp"

namespace ggm {

// Integer data of one foliation against another: v2 = q v1 + p vhat1 and
// vhat2 = a v1 + b vhat1 in the normalized markings, with bq - ap = 1.
struct SlopeData {
    Int q, p, a, b;

    Rational first_slope() const { return Rational(q, p); }    // slope of F2 w.r.t. F1
    Rational second_slope() const { return Rational(-b, p); }  // slope of F1 w.r.t. F2
};

inline SlopeData slope_of(const FlatTorus& T, const LatticeVector& F1, const LatticeVector& F2) {
    if (!F1.is_primitive()) raise(errc::non_primitive, "F1 " + F1.str() + " is not primitive");
    if (!F2.is_primitive()) raise(errc::non_primitive, "F2 " + F2.str() + " is not primitive");
    if (det2(F1, F2) == 0)
        raise(errc::equal_foliations, "foliations " + F1.str() + " and " + F2.str() + " coincide");
    Marking m1 = normalized_marking(T, F1);
    Marking m2 = normalized_marking(T, F2);
    // Coordinates in the basis (v1, vhat1); the basis matrix has oriented
    // determinant +1, so its inverse is the signed adjugate.
    Int o = T.orientation;
    Int q = o * (m1.vhat.y * m2.v.x - m1.vhat.x * m2.v.y);
    Int p = o * det2(m1.v, m2.v);
    Int a = o * (m1.vhat.y * m2.vhat.x - m1.vhat.x * m2.vhat.y);
    Int b = o * det2(m1.v, m2.vhat);
    return SlopeData{q, p, a, b};
}

// Slope data of the reversed pair (F2, F1): from v1 = b v2 - p vhat2,
// vhat1 = -a v2 + q vhat2. An involution on slope data.
inline SlopeData reverse(const SlopeData& s) { return SlopeData{s.b, -s.p, -s.a, s.q}; }

// Effect of reversing the torus orientation on the data, with the markings
// replaced by their negatives: slopes become -q/p and b/p.
inline SlopeData orientation_flip(const SlopeData& s) { return SlopeData{s.q, -s.p, -s.a, s.b}; }

// Canonical representative of {(q/p, -b/p), (-q/p, b/p)}.
struct SlopeClass {
    Rational s1, s2;

    friend bool operator==(const SlopeClass& a, const SlopeClass& b) {
        return a.s1 == b.s1 && a.s2 == b.s2;
    }
    friend bool operator!=(const SlopeClass& a, const SlopeClass& b) { return !(a == b); }
    friend bool operator<(const SlopeClass& a, const SlopeClass& b) {
        if (a.s1 != b.s1) return a.s1 < b.s1;
        return a.s2 < b.s2;
    }

    std::string str() const { return "{" + s1.str() + ", " + s2.str() + "}"; }
};

// Sign canonicalization: make p > 0 by flipping all of (q,p,a,b), which leaves
// both slopes unchanged; then pick the global class sign so that s1 > 0, or
// s2 >= 0 when q = 0 (there p = 1).
inline SlopeClass slope_class(const SlopeData& s) {
    Int q = s.q, p = s.p, b = s.b;
    if (p < 0) { q = -q; p = -p; b = -b; }
    Rational s1(q, p), s2(-b, p);
    if (s1.sign() < 0 || (s1.sign() == 0 && s2.sign() < 0)) { s1 = -s1; s2 = -s2; }
    return SlopeClass{s1, s2};
}

// Equality of relative slopes, admitting the reversed pair as well as the
// global sign absorbed by slope_class.
inline bool same_relative_slope(const SlopeData& s, const SlopeData& t) {
    SlopeClass ct = slope_class(t);
    return slope_class(s) == ct || slope_class(reverse(s)) == ct;
}

}  // namespace ggm
