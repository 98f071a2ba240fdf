#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "gfh/atlas.hpp"
#include "gfh/classify.hpp"
#include "oracles.hpp"

using namespace gfh;

namespace {

CurveClass cls(u64 a, u64 b, u64 c) { return {{a, b, c}}; }

Triple scaled_sorted(const Triple& t, u64 k, u64 m) {
    Triple s{t[0] * k % m, t[1] * k % m, t[2] * k % m};
    std::ranges::sort(s);
    return s;
}

/// Units k < m fixing the triple as a multiset, by direct search.
std::vector<u64> oracle_stabilizer(const Triple& t, u64 p, u64 m) {
    std::vector<u64> out;
    for (u64 k = 1; k < m; ++k)
        if (k % p != 0 && scaled_sorted(t, k, m) == t) out.push_back(k);
    return out;
}

const std::vector<std::tuple<u64, unsigned, unsigned>> kGrid{{3, 2, 1}, {3, 2, 2}, {3, 3, 1}, {3, 3, 2},
                                                             {5, 2, 1}, {7, 2, 1}, {13, 2, 1}, {3, 4, 1}};

}  // namespace

TEST_CASE("canonical_triple") {
    const auto gp49 = GroupParams::make(7, 2, 1);
    CHECK(canonical_triple(gp49, 3, 6, 5) == cls(3, 5, 6));
    CHECK(canonical_triple(gp49, 1, 2, 46) == cls(1, 2, 4));
    const auto gp9 = GroupParams::make(3, 2, 1);
    CHECK(canonical_triple(gp9, 1, 4, 4) == cls(1, 1, 1));
    CHECK(canonical_triple(gp9, 1, 1, 7) == cls(1, 1, 1));
    try {
        canonical_triple(gp9, 3, 3, 3);
        FAIL("expected AllDivisible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AllDivisible);
    }
    CHECK_THROWS_AS(canonical_triple(gp9, 1, 1, 0), Error);
    CHECK(canonical_triple(GroupParams::make(3, 2, 2), 1, 1, 7) == cls(0, 0, 0));

    for (u64 u = 0; u < 49; ++u)
        for (u64 v = 0; v < 49; ++v) {
            const u64 w = (98 - u - v) % 49;
            if (u % 7 == 0 && v % 7 == 0) continue;
            const auto c = canonical_triple(gp49, static_cast<i64>(u), static_cast<i64>(v), static_cast<i64>(w));
            CHECK(canonical_triple(gp49, c.triple[0], c.triple[1], c.triple[2]) == c);
            CHECK(canonical_triple(gp49, v, u, w) == c);
            CHECK(canonical_triple(gp49, v, w, u) == c);
        }
}

TEST_CASE("enumerate_classes matches the S3-orbit count") {
    for (const auto& [p, e, f] : kGrid) {
        const auto gp = GroupParams::make(p, e, f);
        const auto classes = enumerate_classes(gp);
        std::set<Triple> got;
        for (const auto& c : classes) got.insert(c.triple);
        CHECK(got.size() == classes.size());
        CHECK(std::ranges::is_sorted(classes));
        if (gp.m() == 1) {
            CHECK(classes == std::vector{cls(0, 0, 0)});
        } else {
            CHECK(got == oracle::s3_orbit_labels(gp.p(), gp.m()));
        }
        CHECK(enumerate_classes(gp, 4) == classes);
    }
    CHECK(enumerate_classes(GroupParams::make(3, 2, 1)) == std::vector{cls(0, 1, 2), cls(1, 1, 1), cls(2, 2, 2)});
    const auto c49 = enumerate_classes(GroupParams::make(7, 2, 1));
    CHECK(c49.size() == 11);
    CHECK(std::ranges::count(c49, cls(1, 2, 4)) == 1);
    CHECK(std::ranges::count(c49, cls(3, 5, 6)) == 1);
}

TEST_CASE("Galois action") {
    const auto gp = GroupParams::make(7, 2, 1);
    CHECK(galois_conjugate(gp, cls(1, 2, 4), 1) == cls(1, 2, 4));
    CHECK(galois_conjugate(gp, cls(1, 2, 4), 3) == cls(3, 5, 6));
    CHECK(galois_conjugate(gp, galois_conjugate(gp, cls(1, 1, 5), 3), 5) == cls(1, 1, 5));  // 3 * 5 = 1 mod 7
    try {
        galois_conjugate(gp, cls(1, 2, 4), 7);
        FAIL("expected NotUnit");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotUnit);
    }
    CHECK(galois_orbit(gp, cls(1, 2, 4)) == std::vector{cls(1, 2, 4), cls(3, 5, 6)});
    const auto gp9 = GroupParams::make(3, 2, 1);
    CHECK(galois_orbit(gp9, cls(1, 1, 1)) == std::vector{cls(1, 1, 1), cls(2, 2, 2)});
    CHECK(galois_orbit(GroupParams::make(3, 2, 2), cls(0, 0, 0)).size() == 1);

    CHECK(scalar_stabilizer(gp, cls(1, 2, 4)) == std::vector<u64>{1, 2, 4});
    CHECK(scalar_stabilizer(gp, cls(0, 1, 6)) == std::vector<u64>{1, 6});
    CHECK(scalar_stabilizer(gp, cls(1, 1, 5)) == std::vector<u64>{1});
}

TEST_CASE("orbit-stabilizer and stabilizer shape") {
    for (const auto& [p, e, f] : kGrid) {
        const auto gp = GroupParams::make(p, e, f);
        if (gp.m() == 1) continue;
        const u64 phi = unit_group_order(gp.p(), gp.e() - gp.f());
        for (const auto& c : enumerate_classes(gp)) {
            const auto stab = scalar_stabilizer(gp, c);
            CHECK(stab == oracle_stabilizer(c.triple, gp.p(), gp.m()));
            CHECK(galois_orbit(gp, c).size() * stab.size() == phi);
            CHECK((stab.size() == 1 || stab.size() == 2 || stab.size() == 3));
            if (stab.size() == 3) CHECK(gp.p() % 3 == 1);
            std::set<Triple> orbit;
            for (u64 k = 1; k < gp.m(); ++k)
                if (k % gp.p() != 0) orbit.insert(scaled_sorted(c.triple, k, gp.m()));
            CHECK(orbit.size() == galois_orbit(gp, c).size());
        }
    }
}

TEST_CASE("field of definition") {
    const auto gp = GroupParams::make(7, 2, 1);
    const auto f124 = field_of_definition(gp, cls(1, 2, 4));
    CHECK(f124.kind == FieldKind::IndexThree);
    CHECK(f124.degree == 2);
    CHECK(f124.description == "Q(√-7)");
    CHECK(field_of_definition(gp, cls(3, 5, 6)) == f124);
    const auto f016 = field_of_definition(gp, cls(0, 1, 6));
    CHECK(f016.kind == FieldKind::MaximalReal);
    CHECK(f016.degree == 3);
    const auto f115 = field_of_definition(gp, cls(1, 1, 5));
    CHECK(f115.kind == FieldKind::FullCyclotomic);
    CHECK(f115.degree == 6);

    const auto fermat = field_of_definition(GroupParams::make(5, 2, 2), cls(0, 0, 0));
    CHECK(fermat.kind == FieldKind::Rational);
    CHECK(fermat.degree == 1);

    const auto gp9 = GroupParams::make(3, 2, 1);
    CHECK(field_of_definition(gp9, cls(0, 1, 2)).degree == 1);
    CHECK(field_of_definition(gp9, cls(1, 1, 1)).kind == FieldKind::FullCyclotomic);
    CHECK(field_of_definition(gp9, cls(1, 1, 1)).description == "Q(√-3)");

    // exactly one kind applies, decided by the stabilizer order
    for (const auto& [p, e, f] : kGrid) {
        const auto g = GroupParams::make(p, e, f);
        if (g.m() == 1) continue;
        for (const auto& c : enumerate_classes(g)) {
            const auto fd = field_of_definition(g, c);
            const auto s = scalar_stabilizer(g, c).size();
            const FieldKind expect = s == 3 ? FieldKind::IndexThree
                                     : s == 2 ? FieldKind::MaximalReal
                                              : FieldKind::FullCyclotomic;
            CHECK(fd.kind == expect);
            CHECK(fd.degree * s == unit_group_order(g.p(), g.e() - g.f()));
            CHECK(parse_field_kind(field_kind_name(fd.kind)) == fd.kind);
        }
    }
}

TEST_CASE("curve automorphism order") {
    const auto gp = GroupParams::make(7, 2, 1);
    CHECK(curve_aut_order(gp, cls(1, 2, 4)).order == 49 * 49);
    CHECK(curve_aut_order(gp, cls(1, 1, 5)).order == 2 * 49 * 49);
    CHECK(curve_aut_order(GroupParams::make(3, 2, 2), cls(0, 0, 0)).order == 6 * 81);
    for (const auto& perm : curve_aut_order(gp, cls(1, 1, 5)).stabilizer) {
        const Triple t{1, 1, 5};
        for (int i = 0; i < 3; ++i) CHECK(t[perm[i]] == t[i]);
    }
}

TEST_CASE("class lifts") {
    for (const auto& [p, e, f] : kGrid) {
        const auto gp = GroupParams::make(p, e, f);
        for (const auto& c : enumerate_classes(gp)) {
            const auto lift = class_lift(gp, c);
            CHECK(lift.u % gp.p() != 0);
            CHECK(lift.v % gp.p() != 0);
            CHECK((lift.u + lift.v + lift.w) % gp.n() == 0);
            if (gp.m() > 1)
                CHECK(canonical_triple(gp, lift.u, lift.v, lift.w) == c);
        }
    }
    const auto lift = class_lift(GroupParams::make(3, 2, 2), cls(0, 0, 0));
    CHECK(lift.u == 1);
    CHECK(lift.v == 1);
    CHECK(lift.w == 7);
    const auto rotated = class_lift(GroupParams::make(3, 2, 1), cls(0, 1, 2));
    CHECK(rotated.rotated);
    CHECK(rotated.u == 1);
    CHECK(rotated.v == 2);
}

TEST_CASE("brute-force classification agrees with canonical triples") {
    for (const auto& [p, e, f] : std::vector<std::tuple<u64, unsigned, unsigned>>{{3, 2, 1}, {3, 2, 2}, {3, 3, 1}, {3, 3, 2}}) {
        const auto gp = GroupParams::make(p, e, f);
        const auto blocks = oracle_classify(gp);
        const auto classes = enumerate_classes(gp);
        CHECK(blocks.size() == classes.size());
        std::set<CurveClass> seen;
        std::size_t members = 0;
        for (const auto& block : blocks) {
            REQUIRE_FALSE(block.empty());
            const auto c = canonical_triple(gp, block[0].u(), block[0].v(), block[0].w());
            for (const auto& epi : block) CHECK(canonical_triple(gp, epi.u(), epi.v(), epi.w()) == c);
            CHECK(seen.insert(c).second);
            members += block.size();
        }
        const u64 phi = unit_group_order(gp.p(), gp.e());
        CHECK(members == phi * phi);
    }
    CHECK(oracle_classify(GroupParams::make(3, 2, 2)).size() == 1);
    CHECK(oracle_classify(GroupParams::make(3, 2, 1)).size() == 3);
    CHECK_THROWS_AS(oracle_classify(GroupParams::make(7, 2, 1)), Error);
}

TEST_CASE("atlas") {
    const auto fermat = build_atlas(GroupParams::make(3, 2, 2));
    REQUIRE(fermat.entries.size() == 1);
    CHECK(fermat.entries[0].genus == 28);
    CHECK(fermat.entries[0].aut_order == 486);

    const auto a9 = build_atlas(GroupParams::make(3, 2, 1));
    CHECK(a9.entries.size() == 3);
    CHECK(a9.orbits.size() == 2);

    const auto gp49 = GroupParams::make(7, 2, 1);
    const auto a49 = build_atlas(gp49, {.with_equations = true, .workers = 1});
    CHECK(a49.entries.size() == 11);
    CHECK(a49.orbits.size() == 3);
    for (const auto& entry : a49.entries) {
        CHECK(entry.genus == 1128);
        CHECK(entry.orbit == galois_orbit(gp49, entry.cls).front());
    }
    CHECK(atlas_to_json(a49) == atlas_to_json(build_atlas(gp49, {.with_equations = true, .workers = 3})));
}
