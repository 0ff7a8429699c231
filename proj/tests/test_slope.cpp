#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggm/slope.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ggm;

namespace {
FlatTorus square() { return FlatTorus::unit_square(); }
}

TEST_CASE("slope data on worked inputs") {
    for (long long q = 1; q <= 10; ++q) {
        SlopeData s = slope_of(square(), {1, 0}, {q, 1});
        CHECK(s.q == q);
        CHECK(s.p == 1);
        CHECK(s.a == q - 1);
        CHECK(s.b == 1);
    }

    SlopeData s = slope_of(square(), {1, 0}, {1, 2});
    CHECK(s.q == 1);
    CHECK(s.p == 2);

    SUBCASE("rectangular torus, any radii: coordinates in the (1,1) completion") {
        for (auto [r1sq, r2sq] : {std::pair{1LL, 1LL}, {4LL, 9LL}, {2LL, 5LL}}) {
            FlatTorus T(GramMatrix::rectangular(Rational(r1sq), Rational(r2sq)));
            Marking m1 = normalized_marking(T, {3, 2});
            CHECK(m1.vhat == LatticeVector(1, 1));
            SlopeData d = slope_of(T, {3, 2}, {3, -2});
            CHECK(d.q == 5);
            CHECK(d.p == -12);
        }
    }

    CHECK_THROWS_AS(slope_of(square(), {1, 0}, {1, 0}), error);
    CHECK_THROWS_AS(slope_of(square(), {1, 0}, {-1, 0}), error);
    CHECK_THROWS_AS(slope_of(square(), {2, 2}, {1, 0}), error);
}

TEST_CASE("p equals the determinant of the foliation pair") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        FlatTorus T(testgen::random_gram(rng, 50, 50));
        LatticeVector F1 = testgen::random_primitive(rng, 25);
        LatticeVector F2 = testgen::random_primitive(rng, 25);
        if (det2(F1, F2) == 0) continue;
        SlopeData s = slope_of(T, F1, F2);
        CHECK(s.p == det2(F1, F2));
        CHECK(s.b * s.q - s.a * s.p == 1);
    }
}

TEST_CASE("reverse swaps the roles of the foliations") {
    SlopeData s = slope_of(square(), {1, 0}, {1, 1});
    CHECK(s.q == 1);
    CHECK(s.p == 1);
    CHECK(s.a == 0);
    CHECK(s.b == 1);
    SlopeData r = reverse(s);
    CHECK(r.first_slope() == Rational(-1));

    CHECK(reverse(SlopeData{2, 7, 1, 4}).first_slope() == Rational(-4, 7));

    SUBCASE("reverse agrees with recomputing on the swapped pair") {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 200; ++i) {
            FlatTorus T(testgen::random_gram(rng, 30, 30));
            LatticeVector F1 = testgen::random_primitive(rng, 15);
            LatticeVector F2 = testgen::random_primitive(rng, 15);
            if (det2(F1, F2) == 0) continue;
            SlopeData fwd = reverse(slope_of(T, F1, F2));
            SlopeData bwd = slope_of(T, F2, F1);
            CHECK(fwd.q == bwd.q);
            CHECK(fwd.p == bwd.p);
            CHECK(fwd.a == bwd.a);
            CHECK(fwd.b == bwd.b);
        }
    }

    SUBCASE("reverse is an involution") {
        SlopeData t{5, -12, 3, -7};
        SlopeData rr = reverse(reverse(t));
        CHECK(rr.q == t.q);
        CHECK(rr.p == t.p);
        CHECK(rr.a == t.a);
        CHECK(rr.b == t.b);
        CHECK(slope_class(rr) == slope_class(t));
    }

    SUBCASE("a slope and its reverse name the same relative slope") {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 100; ++i) {
            FlatTorus T(testgen::random_gram(rng, 20, 20));
            LatticeVector F1 = testgen::random_primitive(rng, 10);
            LatticeVector F2 = testgen::random_primitive(rng, 10);
            if (det2(F1, F2) == 0) continue;
            SlopeData s = slope_of(T, F1, F2);
            CHECK(same_relative_slope(reverse(s), s));
        }
    }
}

TEST_CASE("slope classes") {
    CHECK(slope_class(SlopeData{1, 1, 0, 1}) == SlopeClass{Rational(1), Rational(-1)});
    CHECK(slope_class(SlopeData{-5, 12, 2, -2}) == slope_class(SlopeData{5, -12, -2, 2}));
    CHECK(slope_class(SlopeData{2, 7, 1, 4}).str() == "{2/7, -4/7}");

    SUBCASE("coupled pair admits reversal at class level") {
        CHECK(same_relative_slope(SlopeData{2, 7, 1, 4}, SlopeData{4, 7, 1, 2}));
        CHECK(slope_class(reverse(SlopeData{2, 7, 1, 4})) == slope_class(SlopeData{4, 7, 1, 2}));
        CHECK_FALSE(slope_class(SlopeData{2, 7, 1, 4}) == slope_class(SlopeData{4, 7, 1, 2}));
    }

    SUBCASE("q = 0 canonical sign makes the second slope nonnegative") {
        SlopeClass c = slope_class(SlopeData{0, 1, -1, 1});
        CHECK(c.s1 == Rational(0));
        CHECK(c.s2 == Rational(1));
        c = slope_class(SlopeData{0, 1, -1, 0});
        CHECK(c.s2 == Rational(0));
    }
}

TEST_CASE("orientation flip law at the data level") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
        FlatTorus T(testgen::random_gram(rng, 30, 30));
        LatticeVector F1 = testgen::random_primitive(rng, 15);
        LatticeVector F2 = testgen::random_primitive(rng, 15);
        if (det2(F1, F2) == 0) continue;
        SlopeData s = slope_of(T, F1, F2);
        SlopeData f = orientation_flip(s);
        CHECK(f.first_slope() == -s.first_slope());
        CHECK(f.second_slope() == -s.second_slope());
        CHECK(f.b * f.q - f.a * f.p == 1);
        CHECK(slope_class(f) == slope_class(s));
    }
}

TEST_CASE("slope data on a reversed-orientation torus") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        FlatTorus T(testgen::random_gram(rng, 20, 20), -1);
        LatticeVector F1 = testgen::random_primitive(rng, 10);
        LatticeVector F2 = testgen::random_primitive(rng, 10);
        if (det2(F1, F2) == 0) continue;
        SlopeData s = slope_of(T, F1, F2);
        CHECK(s.p == oriented_det(T, F1, F2));
        CHECK(s.b * s.q - s.a * s.p == 1);
    }
}

TEST_CASE("slope class is invariant under oriented base change") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 150; ++i) {
        FlatTorus T(testgen::random_gram(rng, 30, 30));
        LatticeVector F1 = testgen::random_primitive(rng, 15);
        LatticeVector F2 = testgen::random_primitive(rng, 15);
        if (det2(F1, F2) == 0) continue;
        SlopeData s = slope_of(T, F1, F2);
        Mat2 U = testgen::random_unimodular(rng);
        SlopeData su = slope_of(change_of_basis(T, U), transform_vector(U, F1),
                                transform_vector(U, F2));
        CHECK(su.q == s.q);
        CHECK(su.p == s.p);
        CHECK(su.a == s.a);
        CHECK(su.b == s.b);
        CHECK(slope_class(su) == slope_class(s));
    }
}
