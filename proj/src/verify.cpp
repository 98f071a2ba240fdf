#include "gfh/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gfh/equations.hpp"
#include "gfh/hypermap.hpp"

namespace gfh {

namespace {

SuiteResult timed(std::string name, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = true;
        body(r);
    } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void fail(SuiteResult& r, const std::string& why) {
    if (r.passed) r.detail = why;
    r.passed = false;
}

void skip(SuiteResult& r, const std::string& why) {
    r.skipped = true;
    r.detail = why;
}

std::vector<std::pair<u64, u64>> unit_pairs(const GroupParams& gp, bool all_pairs) {
    std::vector<std::pair<u64, u64>> out;
    if (all_pairs) {
        for (u64 u = 1; u < gp.n(); ++u)
            for (u64 v = 1; v < gp.n(); ++v)
                if (u % gp.p() != 0 && v % gp.p() != 0) out.emplace_back(u, v);
    } else {
        for (const auto& c : enumerate_classes(gp)) {
            const Lift l = class_lift(gp, c);
            out.emplace_back(l.u, l.v);
        }
    }
    return out;
}

}  // namespace

std::vector<GroupAut> brute_force_auts(const GroupParams& gp) {
    const u64 n = gp.n();
    std::vector<GroupAut> out;
    for (u64 i = 0; i < n; ++i)
        for (u64 j = 0; j < n; ++j)
            for (u64 k = 0; k < n; ++k)
                for (u64 l = 0; l < n; ++l)
                    if (is_automorphism(gp, i, j, k, l)) out.push_back({i, j, k, l});
    return out;
}

std::vector<SuiteResult> run_verify(const GroupParams& gp, const VerifyOptions& options) {
    const u64 n = gp.n();
    const bool exhaustive = n <= options.oracle_max_n;
    const std::string bound_note = "n = " + std::to_string(n) + " above oracle bound " + std::to_string(options.oracle_max_n);
    std::vector<SuiteResult> results;

    results.push_back(timed("group-aut", [&](SuiteResult& r) {
        if (!exhaustive) return skip(r, bound_note);
        const auto family = enumerate_auts(gp);
        const auto brute = brute_force_auts(gp);
        if (family != brute)
            return fail(r, "parametric family has " + std::to_string(family.size()) + " maps, brute force " +
                               std::to_string(brute.size()));
        r.detail = std::to_string(family.size()) + " automorphisms";
    }));

    results.push_back(timed("classification", [&](SuiteResult& r) {
        if (!exhaustive) return skip(r, bound_note);
        const auto blocks = oracle_classify(gp, options.oracle_max_n);
        std::set<CurveClass> seen;
        for (const auto& block : blocks) {
            std::set<CurveClass> labels;
            for (const auto& e : block)
                labels.insert(canonical_triple(gp, static_cast<i64>(e.u()), static_cast<i64>(e.v()), static_cast<i64>(e.w())));
            if (labels.size() != 1) return fail(r, "a kernel block spans several canonical triples");
            if (!seen.insert(*labels.begin()).second) return fail(r, "a canonical triple is split across blocks");
        }
        const auto classes = enumerate_classes(gp, options.workers);
        if (std::vector<CurveClass>(seen.begin(), seen.end()) != classes)
            return fail(r, "oracle blocks do not cover exactly the enumerated classes");
        r.detail = std::to_string(blocks.size()) + " blocks";
    }));

    results.push_back(timed("genus", [&](SuiteResult& r) {
        const u64 expected = (n - 1) * (n - 2) / 2;
        for (const auto& c : enumerate_classes(gp, options.workers)) {
            const Lift l = class_lift(gp, c);
            const Dessin d = Dessin::build(gp, normalized_epi(gp, static_cast<i64>(l.u), static_cast<i64>(l.v)));
            if (genus(d) != expected) return fail(r, "genus differs from (n-1)(n-2)/2");
            if (!is_complete_bipartite(d)) return fail(r, "underlying graph is not K_{n,n}");
            if (!is_edge_transitive(d)) return fail(r, "translations are not edge-transitive");
        }
        r.detail = "genus " + std::to_string(expected);
    }));

    results.push_back(timed("fixed-points", [&](SuiteResult& r) {
        const Elt g = gen_g();
        const Elt gh{1, 1};
        std::size_t checked = 0;
        for (const auto& [u, v] : unit_pairs(gp, exhaustive)) {
            const Dessin d = Dessin::build(gp, fixed_point_epi(gp, static_cast<i64>(u), static_cast<i64>(v)));
            if (count_fixed_vertices(d, g, Color::Black) != gp.pf() || count_fixed_vertices(d, gh, Color::White) != gp.pf())
                return fail(r, "fixed-vertex count differs from p^f");
            const u64 u_inv = mod_inv(static_cast<i64>(u), n);
            const u64 v_inv = mod_inv(static_cast<i64>(v), n);
            for (Color color : {Color::Black, Color::White}) {
                const Elt z = color == Color::Black ? g : gh;
                const u64 want = color == Color::Black ? u_inv : v_inv;
                for (std::uint32_t vx = 0; vx < d.vertex_count(color); ++vx) {
                    const Elt c = elt_at(gp, d.reps(color)[vx]);
                    if (d.rotation_log(color, mul(gp, inv(gp, c), mul(gp, z, c))) < 0) continue;
                    if (rotation_exponent(d, z, color, vx) != want) return fail(r, "rotation exponent differs from the inverse");
                }
            }
            ++checked;
        }
        r.detail = std::to_string(checked) + " dessins";
    }));

    results.push_back(timed("color-reversal", [&](SuiteResult& r) {
        std::size_t checked = 0;
        for (const auto& [u, v] : unit_pairs(gp, exhaustive)) {
            const Dessin d = Dessin::build(gp, normalized_epi(gp, static_cast<i64>(u), static_cast<i64>(v)));
            if (has_color_reversing_aut(d) != (u % gp.m() == v % gp.m()))
                return fail(r, "colour reversal does not match u = v mod m");
            ++checked;
        }
        r.detail = std::to_string(checked) + " dessins";
    }));

    results.push_back(timed("r-integrality", [&](SuiteResult& r) {
        const BigInt rr = compute_r(gp);
        if (rr % gp.p() == 0) return fail(r, "r is divisible by p");
        const Lift l = class_lift(gp, enumerate_classes(gp).front());
        bool threw = false;
        try {
            (void)full_model(gp, l);
        } catch (const Error& ex) {
            if (ex.code() != Errc::HypothesisFailed) throw;
            threw = true;
        }
        if (threw != (2 * gp.f() < gp.e())) return fail(r, "full_model availability does not match 2f >= e");
        r.detail = "r = " + rr.str();
    }));

    return results;
}

SuiteResult verify_r_grid() {
    return timed("r-grid", [](SuiteResult& r) {
        std::size_t checked = 0;
        for (u64 p : {3, 5, 7})
            for (unsigned e = 1; e <= 4; ++e) {
                if (p == 3 && e == 1) continue;
                for (unsigned f = 1; f <= e; ++f) {
                    const auto gp = GroupParams::make(p, e, f);
                    const BigInt rr = compute_r(gp);
                    if (rr % p == 0) return fail(r, "r divisible by p");
                    ++checked;
                }
            }
        r.detail = std::to_string(checked) + " parameter sets";
    });
}

std::vector<GroupParams> default_verify_grid() {
    return {GroupParams::make(3, 2, 1), GroupParams::make(3, 2, 2), GroupParams::make(3, 3, 1),
            GroupParams::make(3, 3, 2), GroupParams::make(3, 3, 3), GroupParams::make(5, 2, 1),
            GroupParams::make(5, 2, 2)};
}

}  // namespace gfh
