#include "gfh/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "parallel.hpp"

namespace gfh {

namespace {

constexpr std::array<Permutation, 6> kS3{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

CurveClass sorted_class(Triple t) {
    std::sort(t.begin(), t.end());
    return {t};
}

bool all_divisible(const GroupParams& gp, const Triple& t) {
    return std::all_of(t.begin(), t.end(), [&](u64 x) { return x % gp.p() == 0; });
}

std::string quadratic_subfield(u64 p) {
    // the unique quadratic subfield of Q(zeta_{p^t}) is Q(sqrt(p*)), p* = (-1)^((p-1)/2) p
    return p % 4 == 1 ? "Q(√" + std::to_string(p) + ")" : "Q(√-" + std::to_string(p) + ")";
}

bool is_index_three_form(const GroupParams& gp, const Triple& t) {
    const u64 m = gp.m();
    for (u64 k = 2; k < m; ++k) {
        if (add_mod(add_mod(1, k, m), mul_mod(k, k, m), m) != 0) continue;
        for (u64 base : t) {
            if (base % gp.p() == 0) continue;
            Triple cand{base, mul_mod(base, k, m), mul_mod(base, mul_mod(k, k, m), m)};
            std::sort(cand.begin(), cand.end());
            if (cand == t) return true;
        }
    }
    return false;
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

CurveClass canonical_triple(const GroupParams& gp, i64 u, i64 v, i64 w) {
    const u64 n = gp.n();
    const Triple raw{reduce(u, n), reduce(v, n), reduce(w, n)};
    if (all_divisible(gp, raw))
        throw Error(Errc::AllDivisible, "u, v and w are all divisible by p");
    const u64 m = gp.m();
    const Triple t{raw[0] % m, raw[1] % m, raw[2] % m};
    if (add_mod(add_mod(t[0], t[1], m), t[2], m) != 0)
        throw Error(Errc::SumCongruence, "u + v + w is not 0 mod p^(e-f)");
    return sorted_class(t);
}

std::vector<CurveClass> enumerate_classes(const GroupParams& gp, unsigned workers) {
    const u64 m = gp.m();
    if (m == 1) return {CurveClass{}};
    std::vector<std::set<CurveClass>> partial(m);
    detail::parallel_for(m, workers, [&](std::size_t u) {
        for (u64 v = 0; v < m; ++v) {
            const Triple t{u, v, sub_mod(0, add_mod(u, v, m), m)};
            if (all_divisible(gp, t)) continue;
            partial[u].insert(sorted_class(t));
        }
    });
    std::set<CurveClass> merged;
    for (auto& s : partial) merged.insert(s.begin(), s.end());
    return {merged.begin(), merged.end()};
}

CurveClass galois_conjugate(const GroupParams& gp, const CurveClass& c, i64 k) {
    const u64 m = gp.m();
    if (m == 1) return c;
    if (reduce(k, gp.p()) == 0) throw Error(Errc::NotUnit, std::to_string(k) + " is not a unit mod p");
    const u64 kk = reduce(k, m);
    Triple t;
    for (int i = 0; i < 3; ++i) t[i] = mul_mod(c.triple[i], kk, m);
    return sorted_class(t);
}

std::vector<CurveClass> galois_orbit(const GroupParams& gp, const CurveClass& c) {
    const u64 m = gp.m();
    if (m == 1) return {c};
    std::set<CurveClass> orbit;
    for (u64 k = 1; k < m; ++k)
        if (k % gp.p() != 0) orbit.insert(galois_conjugate(gp, c, static_cast<i64>(k)));
    return {orbit.begin(), orbit.end()};
}

std::vector<u64> scalar_stabilizer(const GroupParams& gp, const CurveClass& c) {
    const u64 m = gp.m();
    if (m == 1) throw Error(Errc::InvalidArgument, "scalar_stabilizer needs m > 1");
    std::vector<u64> out;
    for (u64 k = 1; k < m; ++k)
        if (k % gp.p() != 0 && galois_conjugate(gp, c, static_cast<i64>(k)) == c) out.push_back(k);
    return out;
}

std::string_view field_kind_name(FieldKind kind) noexcept {
    switch (kind) {
        case FieldKind::Rational: return "Rational";
        case FieldKind::MaximalReal: return "MaximalReal";
        case FieldKind::IndexThree: return "IndexThree";
        case FieldKind::FullCyclotomic: return "FullCyclotomic";
    }
    return "Unknown";
}

FieldKind parse_field_kind(std::string_view name) {
    for (FieldKind k : {FieldKind::Rational, FieldKind::MaximalReal, FieldKind::IndexThree, FieldKind::FullCyclotomic})
        if (field_kind_name(k) == name) return k;
    throw Error(Errc::InvalidArgument, "unknown field kind '" + std::string(name) + "'");
}

FieldOfDefinition field_of_definition(const GroupParams& gp, const CurveClass& c) {
    const u64 m = gp.m();
    if (m == 1) return {FieldKind::Rational, 1, "Q"};

    const u64 phi = unit_group_order(gp.p(), gp.e() - gp.f());
    const auto stab = scalar_stabilizer(gp, c);
    const u64 degree = phi / stab.size();
    const auto& t = c.triple;
    const std::string ms = std::to_string(m);

    FieldOfDefinition fod;
    std::size_t expected_stab = 1;
    if (std::any_of(t.begin(), t.end(), [](u64 x) { return x == 0; })) {
        fod = {FieldKind::MaximalReal, degree, "Q(cos 2π/" + ms + ")"};
        expected_stab = 2;
    } else if (is_index_three_form(gp, t)) {
        fod = {FieldKind::IndexThree, degree, "index-3 subfield of Q(ζ_" + ms + ")"};
        expected_stab = 3;
    } else {
        fod = {FieldKind::FullCyclotomic, degree, "Q(ζ_" + ms + ")"};
    }
    if (stab.size() != expected_stab)
        throw Error(Errc::Internal, "scalar stabilizer of order " + std::to_string(stab.size()) +
                                        " does not match field kind " + std::string(field_kind_name(fod.kind)));
    if (degree == 1)
        fod.description = "Q";
    else if (degree == 2)
        fod.description = quadratic_subfield(gp.p());
    return fod;
}

CurveAutOrder curve_aut_order(const GroupParams& gp, const CurveClass& c) {
    const u64 n = gp.n();
    if (n > (u64{1} << 30)) throw Error(Errc::TooLarge, "n^2 * 6 does not fit in 64 bits");
    CurveAutOrder out;
    for (const auto& sigma : kS3) {
        bool fixes = true;
        for (int i = 0; i < 3; ++i) fixes = fixes && c.triple[sigma[i]] == c.triple[i];
        if (fixes) out.stabilizer.push_back(sigma);
    }
    out.order = n * n * out.stabilizer.size();
    return out;
}

Lift class_lift(const GroupParams& gp, const CurveClass& c) {
    const u64 n = gp.n();
    const u64 p = gp.p();
    if (gp.m() == 1) return {1, 1, n - 2, false};
    const auto& t = c.triple;
    for (int r = 0; r < 3; ++r) {
        const u64 u = t[r], v = t[(r + 1) % 3];
        if (u % p != 0 && v % p != 0) return {u, v, sub_mod(0, add_mod(u, v, n), n), r != 0};
    }
    throw Error(Errc::Internal, "no coprime pair in the triple");
}

std::vector<std::vector<EpiParams>> oracle_classify(const GroupParams& gp, u64 max_n, u64 aut_bound) {
    const u64 n = gp.n();
    if (n > max_n)
        throw Error(Errc::BoundExceeded, "oracle classification limited to n <= " + std::to_string(max_n) +
                                             " (got n = " + std::to_string(n) + ")");
    const auto epis = enumerate_normalized(gp);
    std::vector<std::int64_t> index_of(n * n, -1);
    for (std::size_t i = 0; i < epis.size(); ++i) index_of[epis[i].u() * n + epis[i].v()] = static_cast<std::int64_t>(i);
    auto lookup = [&](const Elt& x, const Elt& y) -> std::int64_t {
        if (x.b != 0 || y.b != 1) return -1;
        return index_of[x.a * n + y.a];
    };

    DisjointSets sets(epis.size());

    // kernel classes: Aut(G_f)-orbits of generator pairs
    const auto auts = enumerate_auts(gp, aut_bound);
    std::vector<bool> covered(epis.size(), false);
    for (std::size_t i = 0; i < epis.size(); ++i) {
        if (covered[i]) continue;
        for (const auto& alpha : auts) {
            const auto j = lookup(apply_aut(gp, alpha, epis[i].x()), apply_aut(gp, alpha, epis[i].y()));
            if (j < 0) continue;
            sets.unite(i, static_cast<std::size_t>(j));
            covered[static_cast<std::size_t>(j)] = true;
        }
    }

    // triality moves
    for (std::size_t i = 0; i < epis.size(); ++i) {
        const EpiParams r1 = triality_rotate(gp, epis[i]);
        const EpiParams r2 = triality_rotate(gp, r1);
        for (const EpiParams& moved : {r1, r2, triality_transpose(gp, epis[i]), triality_transpose(gp, r1),
                                       triality_transpose(gp, r2)}) {
            if (moved.u() % gp.p() == 0 || moved.v() % gp.p() == 0) continue;
            const EpiParams target = normalize(gp, moved);
            const auto j = lookup(target.x(), target.y());
            if (j < 0) throw Error(Errc::Internal, "normalized epimorphism missing from the enumeration");
            sets.unite(i, static_cast<std::size_t>(j));
        }
    }

    std::vector<std::vector<EpiParams>> blocks;
    std::vector<std::int64_t> block_of(epis.size(), -1);
    for (std::size_t i = 0; i < epis.size(); ++i) {
        const std::size_t root = sets.find(i);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<std::int64_t>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(block_of[root])].push_back(epis[i]);
    }
    return blocks;
}

}  // namespace gfh
