#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ggm/cylinder.hpp"
#include "ggm/diskmetric.hpp"
#include "ggm/lattice.hpp"
#include "ggm/slope.hpp"
#include "ggm/spaceform.hpp"

namespace ggm {

// Two nonflat twisted cylinders glued along a flat torus carrying both
// foliation directions; an optional flat slab of the given thickness sits at
// the core.
struct TwoSided {
    FlatTorus torus;
    LatticeVector f1, f2;
    double collar = 0.0;
};

// A single twisted cylinder whose rectangular boundary torus S^1_{r1} x
// S^1_{r2} is identified to a Klein bottle by the involution (z,w) ->
// (-z, conj w); the foliation is measured against the first circle family.
struct OneSided {
    Rational r1, r2;  // circle lengths
    LatticeVector f;
    double collar = 0.0;
};

using GGMDescription = std::variant<TwoSided, OneSided>;

inline FlatTorus rectangular_torus(const Rational& r1, const Rational& r2) {
    return FlatTorus(GramMatrix::rectangular(r1 * r1, r2 * r2));
}

struct Violation {
    errc code;
    std::string message;
};

inline std::vector<Violation> validate(const GGMDescription& g) {
    std::vector<Violation> out;
    if (std::holds_alternative<TwoSided>(g)) {
        const auto& t = std::get<TwoSided>(g);
        if (!t.f1.is_primitive())
            out.push_back({errc::non_primitive, "f1 " + t.f1.str() + " is not primitive"});
        if (!t.f2.is_primitive())
            out.push_back({errc::non_primitive, "f2 " + t.f2.str() + " is not primitive"});
        if (t.f1.is_primitive() && t.f2.is_primitive() && det2(t.f1, t.f2) == 0)
            out.push_back({errc::equal_foliations, "foliations coincide: universal cover splits"});
        if (t.collar < 0.0) out.push_back({errc::invalid_parameter, "collar must be >= 0"});
    } else {
        const auto& o = std::get<OneSided>(g);
        if (!(o.r1 > 0) || !(o.r2 > 0))
            out.push_back({errc::invalid_parameter, "circle lengths must be positive"});
        if (!o.f.is_primitive())
            out.push_back({errc::non_primitive, "f " + o.f.str() + " is not primitive"});
        else if (o.f.x == 0 || o.f.y == 0)
            out.push_back({errc::reducible_foliation,
                           "foliation " + o.f.str() + " is a circle factor: universal cover splits"});
        if (o.collar < 0.0) out.push_back({errc::invalid_parameter, "collar must be >= 0"});
    }
    return out;
}

enum class Sidedness { two_sided, one_sided };

struct ClassificationResult {
    SpaceForm spaceform;
    SlopeData data;
    SlopeClass slope;
    std::vector<CylinderParams> cylinders;
    std::optional<double> cos_alpha;  // two-sided only
    FlatTorus core;
    Sidedness sided;
};

inline void require_valid(const GGMDescription& g) {
    auto violations = validate(g);
    if (!violations.empty()) raise(violations.front().code, violations.front().message);
}

// Diffeomorphism type from the slope: a two-sided description with slope data
// (q,p) is the lens space L(p,q); a one-sided one with foliation (m,n) is the
// prism manifold P(m,n).
inline ClassificationResult classify(const GGMDescription& g) {
    require_valid(g);
    if (std::holds_alternative<TwoSided>(g)) {
        const auto& t = std::get<TwoSided>(g);
        SlopeData s = slope_of(t.torus, t.f1, t.f2);
        return ClassificationResult{
            SpaceForm(lens_normalize(s.p, s.q)),
            s,
            slope_class(s),
            {cylinder_from_foliation(t.torus, t.f1), cylinder_from_foliation(t.torus, t.f2)},
            angle_between(t.torus, t.f1, t.f2).cos_alpha,
            t.torus,
            Sidedness::two_sided};
    }
    const auto& o = std::get<OneSided>(g);
    // The involution identifies (m,n) with (m,-n), and -f spans the same
    // foliation, so both coordinates canonicalize to positive.
    LatticeVector f(abs(o.f.x), abs(o.f.y));
    FlatTorus T = rectangular_torus(o.r1, o.r2);
    SlopeData s = slope_of(T, {1, 0}, f);
    return ClassificationResult{SpaceForm(PrismType(f.x, f.y)),
                                s,
                                slope_class(s),
                                {cylinder_from_foliation(T, f)},
                                std::nullopt,
                                T,
                                Sidedness::one_sided};
}

// Flat slabs at the core never change the classification; this folds the slab
// away in the description. Metric realizations absorb it into the disks (half
// per side for a two-sided core).
inline GGMDescription absorb_flat_slab(const GGMDescription& g) {
    GGMDescription out = g;
    if (std::holds_alternative<TwoSided>(out))
        std::get<TwoSided>(out).collar = 0.0;
    else
        std::get<OneSided>(out).collar = 0.0;
    return out;
}

// Orientation double cover of a one-sided description: the same rectangular
// torus with the foliation and its image under the involution differential
// (m,n) -> (m,-n). Classifies to a lens space with |p| = 2mn.
inline TwoSided double_cover(const OneSided& o) {
    require_valid(GGMDescription(o));
    return TwoSided{rectangular_torus(o.r1, o.r2), o.f, LatticeVector(o.f.x, -o.f.y), o.collar};
}

// Consistent re-coordinatization of a two-sided description; the metric it
// describes is unchanged.
inline TwoSided transformed(const TwoSided& t, const Mat2& U) {
    return TwoSided{change_of_basis(t.torus, U), transform_vector(U, t.f1),
                    transform_vector(U, t.f2), t.collar};
}

// Metric realization: one standard disk per cylinder at its boundary length,
// with any flat slab absorbed into collars.
struct MetricRealization {
    ClassificationResult classification;
    std::vector<DiskProfile> disks;
};

inline MetricRealization realize(const GGMDescription& g, const ShapeFunction& shape,
                                 int grid = 2048) {
    ClassificationResult cls = classify(g);
    double collar = std::holds_alternative<TwoSided>(g) ? std::get<TwoSided>(g).collar
                                                        : std::get<OneSided>(g).collar;
    double per_disk = cls.sided == Sidedness::two_sided ? 0.5 * collar : collar;
    MetricRealization out{std::move(cls), {}};
    for (const CylinderParams& c : out.classification.cylinders) {
        DiskProfile d = synthesize_standard_disk(shape, grid, c.r());
        if (per_disk > 0.0) d = attach_flat_collar(d, per_disk);
        out.disks.push_back(std::move(d));
    }
    return out;
}

}  // namespace ggm
