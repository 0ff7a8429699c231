#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ggm/spaceform.hpp"
#include "support/oracles.hpp"

using namespace ggm;

TEST_CASE("lens normalization") {
    LensType s3 = lens_normalize(1, 5);
    CHECK(s3.p == 1);
    CHECK(s3.q == 0);

    LensType l = lens_normalize(7, -2);
    CHECK(l.p == 7);
    CHECK(l.q == 5);

    l = lens_normalize(2, 1);
    CHECK(l.p == 2);
    CHECK(l.q == 1);

    l = lens_normalize(-12, 5);  // L(-12,5) = L(12,-5) = L(12,7)
    CHECK(l.p == 12);
    CHECK(l.q == 7);

    CHECK_THROWS_AS(lens_normalize(0, 1), error);
    CHECK_THROWS_AS(lens_normalize(4, 2), error);
}

TEST_CASE("lens equivalence on worked pairs") {
    CHECK(lens_equivalent(lens_normalize(7, 2), lens_normalize(7, 4)));
    CHECK_FALSE(lens_equivalent(lens_normalize(7, 2), lens_normalize(7, 1)));
    for (long long p = 2; p <= 20; ++p)
        for (long long q = 1; q < p; ++q) {
            if (gcd(Int(p), Int(q)) != 1) continue;
            CHECK(lens_equivalent(lens_normalize(p, q), lens_normalize(p, p - q)));
        }
}

TEST_CASE("lens equivalence matches the residue-set oracle") {
    for (long long p = 1; p <= 50; ++p)
        for (long long q = 0; q < std::max(1LL, p); ++q) {
            if (p > 1 && (q == 0 || gcd(Int(p), Int(q)) != 1)) continue;
            LensType A = lens_normalize(p, q);
            auto residues = oracle::lens_residues(Int(p), Int(q));
            for (long long r = 0; r < std::max(1LL, p); ++r) {
                if (p > 1 && (r == 0 || gcd(Int(p), Int(r)) != 1)) continue;
                LensType B = lens_normalize(p, r);
                CHECK(lens_equivalent(A, B) == (p == 1 || residues.count(Int(r)) > 0));
            }
        }
}

TEST_CASE("lens equivalence is an equivalence relation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> pd(1, 50);
    auto random_lens = [&]() {
        for (;;) {
            long long p = pd(rng);
            std::uniform_int_distribution<long long> qd(0, p - 1);
            long long q = qd(rng);
            if (p == 1) return lens_normalize(1, 0);
            if (q != 0 && gcd(Int(p), Int(q)) == 1) return lens_normalize(p, q);
        }
    };
    for (int i = 0; i < 300; ++i) {
        LensType a = random_lens(), b = random_lens(), c = random_lens();
        CHECK(lens_equivalent(a, a));
        CHECK(lens_equivalent(a, b) == lens_equivalent(b, a));
        if (lens_equivalent(a, b) && lens_equivalent(b, c)) CHECK(lens_equivalent(a, c));
    }
}

TEST_CASE("prism invariants") {
    auto inv = prism_invariants(PrismType(3, 2));
    CHECK(inv.group_order == 24);
    CHECK(inv.abelianization_order == 8);
    CHECK_FALSE(inv.is_abelian);

    inv = prism_invariants(PrismType(1, 1));
    CHECK(inv.group_order == 4);
    CHECK(inv.abelianization_order == 4);
    CHECK(inv.is_abelian);

    inv = prism_invariants(PrismType(5, 1));
    CHECK(inv.group_order == 20);
    CHECK(inv.abelianization_order == 4);
    CHECK_FALSE(inv.is_abelian);

    SUBCASE("order over abelianization is m") {
        for (long long m = 1; m <= 30; ++m)
            for (long long n = 1; n <= 30; ++n) {
                if (gcd(Int(m), Int(n)) != 1) continue;
                auto v = prism_invariants(PrismType(m, n));
                CHECK(v.group_order / v.abelianization_order == m);
            }
    }

    CHECK_THROWS_AS(PrismType(2, 4), error);
    CHECK_THROWS_AS(PrismType(0, 1), error);
}

TEST_CASE("prism presentations") {
    CHECK(prism_presentation(PrismType(3, 2)) == "<a,b | bab^-1 = a^-1, a^3 b^4 = 1>");
    CHECK(prism_presentation(PrismType(1, 1)) == "<a,b | bab^-1 = a^-1, a b^2 = 1>");
    CHECK(prism_presentation(PrismType(2, 3)) == "<a,b | bab^-1 = a^-1, a^2 b^6 = 1>");
}

TEST_CASE("space form equivalence") {
    CHECK(spaceform_equivalent(PrismType(1, 2), lens_normalize(8, 3)));
    CHECK(spaceform_equivalent(PrismType(3, 2), PrismType(3, 2)));
    CHECK_FALSE(spaceform_equivalent(PrismType(3, 2), PrismType(2, 3)));
    CHECK(spaceform_equivalent(PrismType(1, 1), lens_normalize(4, 1)));
    CHECK_FALSE(spaceform_equivalent(PrismType(3, 2), lens_normalize(24, 1)));

    SUBCASE("P(1,n) is L(4n, 2n-1)") {
        for (long long n = 1; n <= 50; ++n) {
            CHECK(spaceform_equivalent(PrismType(1, n), lens_normalize(4 * n, 2 * n - 1)));
            CHECK(spaceform_equivalent(PrismType(1, n), lens_normalize(4 * n, 1)) ==
                  lens_equivalent(lens_normalize(4 * n, 1), lens_normalize(4 * n, 2 * n - 1)));
        }
    }
}
