#pragma once

#include <string>
#include <variant>

#include "ggm/rational.hpp"

namespace ggm {

// Lens space L(p,q), stored normalized: p >= 1, 0 <= q < p, gcd(p,q) = 1,
// with L(1,0) the 3-sphere.
struct LensType {
    Int p, q;

    friend bool operator==(const LensType& a, const LensType& b) {
        return a.p == b.p && a.q == b.q;
    }
    std::string str() const { return "L(" + p.str() + "," + q.str() + ")"; }
};

// Prism manifold P(m,n), m, n coprime positive.
struct PrismType {
    Int m, n;

    PrismType(Int pm, Int pn) : m(std::move(pm)), n(std::move(pn)) {
        if (m <= 0 || n <= 0) raise(errc::invalid_parameter, "prism parameters must be positive");
        if (gcd(m, n) != 1)
            raise(errc::not_coprime, "prism parameters " + m.str() + "," + n.str());
    }
    PrismType(long long pm, long long pn) : PrismType(Int(pm), Int(pn)) {}

    friend bool operator==(const PrismType& a, const PrismType& b) {
        return a.m == b.m && a.n == b.n;
    }
    std::string str() const { return "P(" + m.str() + "," + n.str() + ")"; }
};

using SpaceForm = std::variant<LensType, PrismType>;

inline std::string spaceform_str(const SpaceForm& s) {
    return std::visit([](const auto& v) { return v.str(); }, s);
}

// L(p,q) = L(-p,-q), and q is only defined mod p; normalize to p > 0 and
// q in [0,p). p = 1 collapses q to 0 (the sphere).
inline LensType lens_normalize(Int p, Int q) {
    if (p == 0) raise(errc::invalid_parameter, "lens p must be nonzero");
    if (p < 0) { p = -p; q = -q; }
    q = mod_floor(q, p);
    if (gcd(p, q == 0 ? Int(1) : q) != 1 || (q == 0 && p != 1))
        raise(errc::not_coprime, "lens parameters " + p.str() + "," + q.str());
    return LensType{p, q};
}

// Diffeomorphism: L(p,q) ~ L(p,q') iff q' is congruent to one of
// {q, -q, q^{-1}, -q^{-1}} mod p.
inline bool lens_equivalent(const LensType& A, const LensType& B) {
    if (A.p != B.p) return false;
    if (A.p == 1) return true;
    const Int& p = A.p;
    Int qi = mod_inverse(A.q, p);
    return B.q == A.q || B.q == mod_floor(-A.q, p) || B.q == qi || B.q == mod_floor(-qi, p);
}

struct PrismInvariants {
    Int group_order;           // |G_{m,n}| = 4mn
    Int abelianization_order;  // 4n
    bool is_abelian;           // iff m = 1
};

inline PrismInvariants prism_invariants(const PrismType& P) {
    return PrismInvariants{4 * P.m * P.n, 4 * P.n, P.m == 1};
}

// Two-relator presentation of the fundamental group.
inline std::string prism_presentation(const PrismType& P) {
    auto power = [](const char* g, const Int& e) {
        std::string out(g);
        if (e != 1) out += "^" + e.str();
        return out;
    };
    return "<a,b | bab^-1 = a^-1, " + power("a", P.m) + " " + power("b", 2 * P.n) + " = 1>";
}

// P(1,n) is the lens space L(4n, 2n-1); P(m,n) with m > 1 is determined by
// the ordered pair and is never a lens space.
inline LensType prism_as_lens(const PrismType& P) {
    if (P.m != 1) raise(errc::invalid_parameter, P.str() + " is not a lens space");
    return lens_normalize(4 * P.n, 2 * P.n - 1);
}

inline bool spaceform_equivalent(const SpaceForm& A, const SpaceForm& B) {
    if (std::holds_alternative<LensType>(A) && std::holds_alternative<LensType>(B))
        return lens_equivalent(std::get<LensType>(A), std::get<LensType>(B));
    if (std::holds_alternative<PrismType>(A) && std::holds_alternative<PrismType>(B))
        return std::get<PrismType>(A) == std::get<PrismType>(B);
    const PrismType& P =
        std::holds_alternative<PrismType>(A) ? std::get<PrismType>(A) : std::get<PrismType>(B);
    const LensType& L =
        std::holds_alternative<LensType>(A) ? std::get<LensType>(A) : std::get<LensType>(B);
    if (P.m != 1) return false;
    return lens_equivalent(prism_as_lens(P), L);
}

}  // namespace ggm
