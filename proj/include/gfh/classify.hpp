#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gfh/epi.hpp"

namespace gfh {

using Triple = std::array<u64, 3>;

/// Isomorphism invariant of X(f;u,v,w): the triple reduced mod m = p^(e-f)
/// and sorted ascending (the lex-least of its permutations). For m = 1 the
/// single class is (0,0,0), the Fermat curve.
struct CurveClass {
    Triple triple{};

    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;
};

/// Reduce mod m and sort. Requires u+v+w = 0 mod m; throws AllDivisible if
/// p divides all three.
CurveClass canonical_triple(const GroupParams& gp, i64 u, i64 v, i64 w);

/// One class per S3-orbit of {(u, v, -u-v) mod m} minus the all-divisible
/// triples, sorted. `workers` splits the (u, v) grid; output does not depend on it.
std::vector<CurveClass> enumerate_classes(const GroupParams& gp, unsigned workers = 1);

/// Class of (ku, kv, kw). Throws NotUnit when p | k and m > 1.
CurveClass galois_conjugate(const GroupParams& gp, const CurveClass& c, i64 k);

std::vector<CurveClass> galois_orbit(const GroupParams& gp, const CurveClass& c);

/// Units k mod m with (ku, kv, kw) a permutation of the triple. Requires m > 1.
std::vector<u64> scalar_stabilizer(const GroupParams& gp, const CurveClass& c);

enum class FieldKind { Rational, MaximalReal, IndexThree, FullCyclotomic };

std::string_view field_kind_name(FieldKind kind) noexcept;
FieldKind parse_field_kind(std::string_view name);

struct FieldOfDefinition {
    FieldKind kind = FieldKind::Rational;
    u64 degree = 1;
    std::string description;

    friend bool operator==(const FieldOfDefinition&, const FieldOfDefinition&) = default;
};

FieldOfDefinition field_of_definition(const GroupParams& gp, const CurveClass& c);

using Permutation = std::array<int, 3>;

struct CurveAutOrder {
    u64 order = 0;
    /// Permutations sigma with triple[sigma[i]] = triple[i] for all i.
    std::vector<Permutation> stabilizer;
};

/// n^2 times the size of the S3-stabilizer of the triple.
CurveAutOrder curve_aut_order(const GroupParams& gp, const CurveClass& c);

/// A representative (u, v, w) mod n of the class with p not dividing u or v.
/// The canonical triple is rotated cyclically if its first entry is
/// divisible by p. For m = 1 the lift is (1, 1, n-2).
struct Lift {
    u64 u = 0, v = 0, w = 0;
    bool rotated = false;
};

Lift class_lift(const GroupParams& gp, const CurveClass& c);

inline constexpr u64 kDefaultOracleDegree = 27;

/// Brute-force partition into isomorphism classes: every normalized epimorphism, joined
/// whenever an automorphism of G_f links them (kernel equality) or a triality
/// move followed by normalization connects them. Blocks are sorted by (u, v),
/// and the block list by first member.
std::vector<std::vector<EpiParams>> oracle_classify(const GroupParams& gp, u64 max_n = kDefaultOracleDegree,
                                                    u64 aut_bound = kDefaultEnumerationBound);

}  // namespace gfh
