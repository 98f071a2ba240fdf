#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gfh/arith.hpp"

namespace gfh {

/// Arithmetic frame of G_f = <g,h | g^n = h^n = 1, g^-1 h g = h^q>, q = 1 + p^f.
class GroupParams {
public:
    static GroupParams make(const PrimePower& pp, unsigned f);
    static GroupParams make(u64 p, unsigned e, unsigned f) { return make(PrimePower::make(p, e), f); }

    const PrimePower& prime_power() const noexcept { return pp_; }
    u64 p() const noexcept { return pp_.p(); }
    unsigned e() const noexcept { return pp_.e(); }
    unsigned f() const noexcept { return f_; }
    u64 n() const noexcept { return pp_.n(); }
    /// 1 + p^f exactly (not reduced mod n).
    u64 q() const noexcept { return q_; }
    /// p^(e-f); the multiplicative order of q modulo n.
    u64 m() const noexcept { return m_; }
    /// p^f
    u64 pf() const noexcept { return pf_; }

    /// q^a mod n for any exponent; table-backed when m is small.
    u64 q_pow(u64 a) const;

    friend bool operator==(const GroupParams& lhs, const GroupParams& rhs) noexcept {
        return lhs.pp_ == rhs.pp_ && lhs.f_ == rhs.f_;
    }

private:
    GroupParams(PrimePower pp, unsigned f);

    PrimePower pp_;
    unsigned f_;
    u64 q_;
    u64 m_;
    u64 pf_;
    std::shared_ptr<const std::vector<u64>> q_table_;
};

/// g^a h^b with 0 <= a, b < n.
struct Elt {
    u64 a = 0;
    u64 b = 0;

    friend auto operator<=>(const Elt&, const Elt&) = default;
};

inline constexpr Elt kIdentity{0, 0};

inline Elt gen_g() { return {1, 0}; }
inline Elt gen_h() { return {0, 1}; }

/// Builds g^a h^b from arbitrary integers, reducing both exponents mod n.
Elt make_elt(const GroupParams& gp, i64 a, i64 b);

/// (a1,b1)(a2,b2) = (a1+a2, b1 q^a2 + b2), from h^b g^a = g^a h^(b q^a).
Elt mul(const GroupParams& gp, const Elt& x, const Elt& y);
Elt inv(const GroupParams& gp, const Elt& x);
/// x^k for any integer k (negative exponents go through the inverse).
Elt pow(const GroupParams& gp, const Elt& x, i64 k);
u64 order(const GroupParams& gp, const Elt& x);

/// Row-major index a*n + b; the fixed edge order of every dessin.
inline u64 elt_index(const GroupParams& gp, const Elt& x) { return x.a * gp.n() + x.b; }
inline Elt elt_at(const GroupParams& gp, u64 index) { return {index / gp.n(), index % gp.n()}; }

/// x = g^u h^s, y = g^v h^t generate G_f iff ut - vs is a unit mod p.
bool is_generating_pair(const GroupParams& gp, const Elt& x, const Elt& y);

/// g -> g^i h^j, h -> g^k h^l.
struct GroupAut {
    u64 i = 1;
    u64 j = 0;
    u64 k = 0;
    u64 l = 1;

    friend auto operator<=>(const GroupAut&, const GroupAut&) = default;
};

inline constexpr GroupAut kIdentityAut{1, 0, 0, 1};

/// Membership in the parametric family i = 1 mod m, k = 0 mod m,
/// il - jk a unit mod p (no group arithmetic involved).
bool in_aut_family(const GroupParams& gp, const GroupAut& a);

/// Brute-force test: both defining relations hold for the images and the
/// induced map is a bijection on all n^2 elements. Independent of the
/// parametric description used by enumerate_auts.
bool is_automorphism(const GroupParams& gp, u64 i, u64 j, u64 k, u64 l);
inline bool is_automorphism(const GroupParams& gp, const GroupAut& a) {
    return is_automorphism(gp, a.i, a.j, a.k, a.l);
}

/// Image of x = g^a h^b, evaluated as (g^i h^j)^a (g^k h^l)^b in the group.
Elt apply_aut(const GroupParams& gp, const GroupAut& alpha, const Elt& x);

/// alpha after beta, read off from the images of g and h.
GroupAut compose(const GroupParams& gp, const GroupAut& alpha, const GroupAut& beta);

inline constexpr u64 kDefaultEnumerationBound = 1'000'000;

/// Lazy walk over the parametric family
///   i = 1 mod m, k = 0 mod m, il - jk a unit mod p
/// in lexicographic (i, j, k, l) order.
class AutEnumerator {
public:
    explicit AutEnumerator(const GroupParams& gp, u64 bound = kDefaultEnumerationBound);

    std::optional<GroupAut> next();

    /// Size of the family, counted without materializing it.
    u64 count() const;

private:
    GroupParams gp_;
    GroupAut cur_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<GroupAut> enumerate_auts(const GroupParams& gp, u64 bound = kDefaultEnumerationBound);

/// The automorphism with alpha(x1) = x2 and alpha(y1) = y2, or nothing.
///
/// Only generating pairs are linked (nothing is returned otherwise), so the
/// answer is unique when present. It is found by extending x1 -> x2, y1 -> y2 along the Cayley graph
/// of (x1, y1), checking that every edge is respected and the map is
/// injective: O(n^2) per call, no reliance on the parametric family.
std::optional<GroupAut> linking_aut(const GroupParams& gp, const Elt& x1, const Elt& y1,
                                    const Elt& x2, const Elt& y2,
                                    u64 bound = kDefaultEnumerationBound);

/// Same contract, answered by scanning AutEnumerator (short-circuits on the
/// first hit). Kept as the cross-check for linking_aut.
std::optional<GroupAut> linking_aut_search(const GroupParams& gp, const Elt& x1, const Elt& y1,
                                           const Elt& x2, const Elt& y2,
                                           u64 bound = kDefaultEnumerationBound);

}  // namespace gfh
