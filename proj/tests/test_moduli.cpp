#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggm/moduli.hpp"
#include "support/generators.hpp"

using namespace ggm;

namespace {
FlatTorus square() { return FlatTorus::unit_square(); }

TwoSided lens_witness(long long q, long long p) {
    return TwoSided{square(), {1, 0}, {q, p}, 0.0};
}
}  // namespace

TEST_CASE("unit-square pinning of the second marking") {
    SlopeData s = pin_unit_square(2, 7);
    CHECK(s.a == 1);
    CHECK(s.b == 4);
    CHECK(s.b * s.q - s.a * s.p == 1);
    // theta2 = (qa+pb)/(q^2+p^2) = 30/53 in [0,1)
    CHECK(Rational(s.q * s.a + s.p * s.b, 53) == Rational(30, 53));

    SUBCASE("pinning matches the normalized marking on the square") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 200; ++i) {
            LatticeVector v = testgen::random_primitive(rng, 30);
            Marking m = normalized_marking(square(), v);
            SlopeData pinned = pin_unit_square(v.x, v.y);
            CHECK(pinned.a == m.vhat.x);
            CHECK(pinned.b == m.vhat.y);
        }
    }
}

TEST_CASE("component ids on worked instances") {
    ComponentId id = component_id(GGMDescription(lens_witness(2, 7)));
    CHECK(id.family == Family::lens);
    CHECK(id.slope == SlopeClass{Rational(2, 7), Rational(-4, 7)});

    id = component_id(GGMDescription(OneSided{Rational(1), Rational(2), {3, 2}, 0.0}));
    CHECK(id.family == Family::prism);
    CHECK(id.slope == SlopeClass{Rational(3, 2), Rational(-1, 2)});
}

TEST_CASE("component id is stable under base change and slab absorption") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 150; ++i) {
        FlatTorus T(testgen::random_gram(rng, 30, 30));
        LatticeVector F1 = testgen::random_primitive(rng, 15);
        LatticeVector F2 = testgen::random_primitive(rng, 15);
        if (det2(F1, F2) == 0) continue;
        TwoSided g{T, F1, F2, 0.75};
        ComponentId base = component_id(GGMDescription(g));
        CHECK(component_id(GGMDescription(transformed(g, testgen::random_unimodular(rng)))) ==
              base);
        CHECK(component_id(absorb_flat_slab(GGMDescription(g))) == base);
    }
}

TEST_CASE("same component quotients by the cylinder swap") {
    CHECK(same_component(GGMDescription(lens_witness(2, 7)), GGMDescription(lens_witness(4, 7))));
    CHECK(same_component(GGMDescription(lens_witness(3, 7)), GGMDescription(lens_witness(5, 7))));
    CHECK_FALSE(
        same_component(GGMDescription(lens_witness(2, 7)), GGMDescription(lens_witness(3, 7))));
    CHECK(same_component(GGMDescription(lens_witness(1, 2)),
                         GGMDescription(lens_witness(1, 2))));
}

TEST_CASE("lens-type and prism-type metrics on the same manifold are separated") {
    // L(4,1) carries two-sided metrics; P(1,1) is diffeomorphic to it but its
    // metrics form the one-sided family.
    GGMDescription lens_metric(lens_witness(1, 4));
    GGMDescription prism_metric(OneSided{Rational(1), Rational(1), {1, 1}, 0.0});
    CHECK(spaceform_equivalent(classify(lens_metric).spaceform,
                               classify(prism_metric).spaceform));
    CHECK_FALSE(same_component(lens_metric, prism_metric));
}

TEST_CASE("same_component is an equivalence relation refining diffeomorphism type") {
    std::mt19937_64 rng(17);
    std::vector<GGMDescription> pool;
    for (int i = 0; i < 60; ++i) {
        FlatTorus T(testgen::random_gram(rng, 20, 20));
        LatticeVector F1 = testgen::random_primitive(rng, 10);
        LatticeVector F2 = testgen::random_primitive(rng, 10);
        if (det2(F1, F2) == 0) continue;
        pool.emplace_back(TwoSided{T, F1, F2, 0.0});
        auto [m, n] = testgen::random_coprime_pair(rng, 10);
        pool.emplace_back(OneSided{Rational(1), Rational(3), LatticeVector(m, n), 0.0});
    }
    for (size_t i = 0; i < pool.size(); ++i) {
        CHECK(same_component(pool[i], pool[i]));
        for (size_t j = 0; j < pool.size(); ++j) {
            CHECK(same_component(pool[i], pool[j]) == same_component(pool[j], pool[i]));
            if (same_component(pool[i], pool[j]))
                CHECK(spaceform_equivalent(classify(pool[i]).spaceform,
                                           classify(pool[j]).spaceform));
            for (size_t k = 0; k < pool.size(); k += 7) {
                if (same_component(pool[i], pool[j]) && same_component(pool[j], pool[k]))
                    CHECK(same_component(pool[i], pool[k]));
            }
        }
    }
}

TEST_CASE("enumerating lens components") {
    auto comps = enumerate_lens_components(lens_normalize(7, 2), 5);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].id.slope == SlopeClass{Rational(2, 7), Rational(-4, 7)});
    CHECK(comps[1].id.slope == SlopeClass{Rational(3, 7), Rational(-5, 7)});

    SUBCASE("witnesses realize the manifold and are pairwise separated") {
        for (const auto& c : comps) {
            CHECK(lens_equivalent(std::get<LensType>(classify(GGMDescription(c.witness)).spaceform),
                                  lens_normalize(7, 2)));
        }
        CHECK_FALSE(
            same_component(GGMDescription(comps[0].witness), GGMDescription(comps[1].witness)));
    }

    SUBCASE("sphere components, one per slope") {
        auto s3 = enumerate_lens_components(lens_normalize(1, 0), 3);
        CHECK(s3.size() == 4);  // q' = 0, 1, 2, 3
    }

    SUBCASE("counts grow with the bound") {
        auto small = enumerate_lens_components(lens_normalize(7, 2), 10);
        auto large = enumerate_lens_components(lens_normalize(7, 2), 100);
        CHECK(large.size() > small.size());
    }

    SUBCASE("counts are nondecreasing in the bound") {
        size_t prev = 0;
        for (long long bound = 1; bound <= 40; ++bound) {
            size_t count = enumerate_lens_components(lens_normalize(5, 2), bound).size();
            CHECK(count >= prev);
            prev = count;
        }
    }

    CHECK_THROWS_AS(enumerate_lens_components(lens_normalize(7, 2), 0), error);
}

TEST_CASE("prism moduli counts") {
    auto rep = prism_component_count(PrismType(3, 2));
    CHECK(rep.prism_type_components == 1);
    CHECK_FALSE(rep.lens_type_infinite);
    CHECK_FALSE(rep.lens_form.has_value());

    rep = prism_component_count(PrismType(2, 5));
    CHECK(rep.prism_type_components == 1);
    CHECK_FALSE(rep.lens_type_infinite);

    rep = prism_component_count(PrismType(1, 2));
    CHECK(rep.prism_type_components == 1);
    CHECK(rep.lens_type_infinite);
    REQUIRE(rep.lens_form.has_value());
    CHECK(*rep.lens_form == lens_normalize(8, 3));
}
