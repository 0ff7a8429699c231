#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ggm/assembly.hpp"

namespace ggm {

enum class Family { lens, prism };

inline const char* family_name(Family f) { return f == Family::lens ? "lens" : "prism"; }

// Label of a connected component of the space of such metrics: the metric
// family together with the slope class at the unit-square normal form.
struct ComponentId {
    Family family;
    SlopeClass slope;

    friend bool operator==(const ComponentId& a, const ComponentId& b) {
        return a.family == b.family && a.slope == b.slope;
    }
    friend bool operator!=(const ComponentId& a, const ComponentId& b) { return !(a == b); }
    friend bool operator<(const ComponentId& a, const ComponentId& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.slope < b.slope;
    }
};

// Slope data at the unit-square normal form: the torus is deformed to the
// unit square carrying the first marking to (1,0),(0,1), so v2 = (q,p) keeps
// its integer coordinates and the second marking is re-normalized there,
// pinning (a,b) by theta2 = (qa+pb)/(q^2+p^2) in [0,1).
inline SlopeData pin_unit_square(const Int& q, const Int& p) {
    Int a0, b0;
    Int g = ext_gcd(q, p, b0, a0);  // b0*q + a0*p = 1
    if (g != 1) raise(errc::not_coprime, "slope coordinates must be coprime");
    Int a = -a0, b = b0;  // b q - a p = 1
    Rational theta2 = (Rational(q) * Rational(a) + Rational(p) * Rational(b)) /
                      Rational(q * q + p * p);
    Int shift = theta2.floor();  // (a,b) -> (a,b) + k (q,p) shifts theta2 by k
    a -= shift * q;
    b -= shift * p;
    return SlopeData{q, p, a, b};
}

// Components are labelled by the pinned slope class; for two-sided metrics
// the two cylinders can be attached to either side of the core, so the class
// and the class of the reversal (-b, p, ...) name the same component and the
// smaller of the two is the canonical label.
inline ComponentId component_id(const GGMDescription& g) {
    require_valid(g);
    if (std::holds_alternative<TwoSided>(g)) {
        const auto& t = std::get<TwoSided>(g);
        SlopeData s = slope_of(t.torus, t.f1, t.f2);
        SlopeData pinned = pin_unit_square(s.q, s.p);
        SlopeClass direct = slope_class(pinned);
        SlopeClass swapped = slope_class(reverse(pinned));
        return ComponentId{Family::lens, std::min(direct, swapped)};
    }
    const auto& o = std::get<OneSided>(g);
    SlopeData pinned = pin_unit_square(abs(o.f.x), abs(o.f.y));
    return ComponentId{Family::prism, slope_class(pinned)};
}

inline bool same_component(const GGMDescription& g1, const GGMDescription& g2) {
    return component_id(g1) == component_id(g2);
}

struct LensComponent {
    ComponentId id;
    TwoSided witness;  // unit-square normal form realizing the component
};

// All components of two-sided metrics on manifolds diffeomorphic to L, with
// normal-form numerator at most `bound`: candidates (q',p) on the unit square
// with gcd(q',p) = 1 whose lens type is equivalent to L, deduplicated by
// component id.
inline std::vector<LensComponent> enumerate_lens_components(const LensType& L, const Int& bound) {
    if (bound < 1) raise(errc::invalid_parameter, "bound must be >= 1");
    std::vector<LensComponent> out;
    for (Int q = 0; q <= bound; ++q) {
        if (gcd(q, L.p) != 1) continue;
        if (q == 0 && L.p != 1) continue;
        if (!lens_equivalent(lens_normalize(L.p, q), L)) continue;
        TwoSided witness{FlatTorus::unit_square(), LatticeVector(1, 0), LatticeVector(q, L.p),
                         0.0};
        ComponentId id = component_id(GGMDescription(witness));
        bool seen = false;
        for (const auto& c : out)
            if (c.id == id) { seen = true; break; }
        if (!seen) out.push_back(LensComponent{id, witness});
    }
    std::sort(out.begin(), out.end(),
              [](const LensComponent& a, const LensComponent& b) { return a.id < b.id; });
    return out;
}

// Moduli component count on a prism manifold. For m = 1 the same manifold is
// the lens space L(4n, 2n-1), which carries its own two-sided family with
// infinitely many components; that family is reported as a marker, never as a
// number.
struct PrismModuliReport {
    int prism_type_components = 1;
    bool lens_type_infinite = false;
    std::optional<LensType> lens_form;
};

inline PrismModuliReport prism_component_count(const PrismType& P) {
    PrismModuliReport rep;
    if (P.m == 1) {
        rep.lens_type_infinite = true;
        rep.lens_form = prism_as_lens(P);
    }
    return rep;
}

}  // namespace ggm
