#include "gfh/hypermap.hpp"

#include <limits>
#include <ostream>
#include <string>

namespace gfh {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Label every edge with its coset c<r>, walking c, cr, cr^2, ... from the
// smallest unlabelled edge.
void label_cosets(const GroupParams& gp, const Elt& r, std::vector<std::uint32_t>& of,
                  std::vector<std::uint32_t>& reps) {
    const u64 edges = gp.n() * gp.n();
    of.assign(edges, kUnassigned);
    reps.clear();
    for (u64 e = 0; e < edges; ++e) {
        if (of[e] != kUnassigned) continue;
        const auto id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(static_cast<std::uint32_t>(e));
        Elt cur = elt_at(gp, e);
        u64 idx = e;
        do {
            of[idx] = id;
            cur = mul(gp, cur, r);
            idx = elt_index(gp, cur);
        } while (idx != e);
    }
}

std::vector<std::int32_t> power_logs(const GroupParams& gp, const Elt& r) {
    std::vector<std::int32_t> logs(gp.n() * gp.n(), -1);
    Elt cur = kIdentity;
    for (u64 d = 0; d < gp.n(); ++d) {
        auto& slot = logs[elt_index(gp, cur)];
        if (slot >= 0) break;
        slot = static_cast<std::int32_t>(d);
        cur = mul(gp, cur, r);
    }
    return logs;
}

}  // namespace

Dessin Dessin::build(const GroupParams& gp, const EpiParams& epi) {
    const u64 n = gp.n();
    if (n > kMaxDessinDegree)
        throw Error(Errc::BoundExceeded, "dessin with n = " + std::to_string(n) + " exceeds the edge bound " +
                                             std::to_string(kMaxDessinDegree) + "^2");
    Dessin d(gp);
    d.x_ = epi.x();
    d.y_ = epi.y();
    label_cosets(gp, d.x_, d.black_of_, d.black_reps_);
    label_cosets(gp, d.y_, d.white_of_, d.white_reps_);
    d.x_log_ = power_logs(gp, d.x_);
    d.y_log_ = power_logs(gp, d.y_);
    return d;
}

std::vector<u64> Dessin::incidence(Color c, std::uint32_t vertex) const {
    const auto& rs = reps(c);
    if (vertex >= rs.size()) throw Error(Errc::InvalidArgument, "vertex id out of range");
    const Elt r = c == Color::Black ? x_ : y_;
    std::vector<u64> out;
    Elt cur = elt_at(gp_, rs[vertex]);
    const u64 start = rs[vertex];
    u64 idx = start;
    do {
        out.push_back(idx);
        cur = mul(gp_, cur, r);
        idx = elt_index(gp_, cur);
    } while (idx != start);
    return out;
}

u64 face_count(const Dessin& d) {
    const auto& gp = d.params();
    const Elt step = mul(gp, d.x(), d.y());
    std::vector<bool> seen(d.edge_count(), false);
    u64 faces = 0;
    for (u64 e = 0; e < d.edge_count(); ++e) {
        if (seen[e]) continue;
        ++faces;
        Elt cur = elt_at(gp, e);
        u64 idx = e;
        do {
            seen[idx] = true;
            cur = mul(gp, cur, step);
            idx = elt_index(gp, cur);
        } while (idx != e);
    }
    return faces;
}

u64 genus(const Dessin& d) {
    const auto v = static_cast<i64>(d.vertex_count(Color::Black) + d.vertex_count(Color::White));
    const auto e = static_cast<i64>(d.edge_count());
    const auto f = static_cast<i64>(face_count(d));
    const i64 chi = v - e + f;
    if (chi > 2 || (2 - chi) % 2 != 0)
        throw Error(Errc::Internal, "Euler characteristic " + std::to_string(chi) + " is not that of a closed orientable surface");
    return static_cast<u64>((2 - chi) / 2);
}

u64 count_fixed_vertices(const Dessin& d, const Elt& z, Color color) {
    const auto& gp = d.params();
    u64 fixed = 0;
    for (const auto rep : d.reps(color)) {
        const Elt c = elt_at(gp, rep);
        const Elt conj = mul(gp, inv(gp, c), mul(gp, z, c));
        if (d.rotation_log(color, conj) >= 0) ++fixed;
    }
    return fixed;
}

u64 rotation_exponent(const Dessin& d, const Elt& z, Color color, std::uint32_t vertex) {
    const auto& gp = d.params();
    const auto& rs = d.reps(color);
    if (vertex >= rs.size()) throw Error(Errc::InvalidArgument, "vertex id out of range");
    const Elt c = elt_at(gp, rs[vertex]);
    const Elt conj = mul(gp, inv(gp, c), mul(gp, z, c));
    const i64 log = d.rotation_log(color, conj);
    if (log < 0) throw Error(Errc::NotFixed, "vertex " + std::to_string(vertex) + " is not fixed");
    return static_cast<u64>(log);
}

bool is_edge_transitive(const Dessin& d) {
    const auto& gp = d.params();
    std::vector<bool> reached(d.edge_count(), false);
    u64 orbit = 0;
    // orbit of the edge x under e -> z e for every z
    for (u64 zi = 0; zi < d.edge_count(); ++zi) {
        const u64 idx = elt_index(gp, mul(gp, elt_at(gp, zi), d.x()));
        if (!reached[idx]) {
            reached[idx] = true;
            ++orbit;
        }
    }
    return orbit == d.edge_count();
}

bool has_color_reversing_aut(const Dessin& d, u64 bound) {
    return linking_aut(d.params(), d.x(), d.y(), d.y(), d.x(), bound).has_value();
}

bool is_complete_bipartite(const Dessin& d) {
    const std::size_t nb = d.vertex_count(Color::Black);
    const std::size_t nw = d.vertex_count(Color::White);
    if (nb * nw != d.edge_count()) return false;
    std::vector<bool> met(nb * nw, false);
    for (u64 e = 0; e < d.edge_count(); ++e) {
        const std::size_t slot = std::size_t{d.vertex_of(Color::Black, e)} * nw + d.vertex_of(Color::White, e);
        if (met[slot]) return false;
        met[slot] = true;
    }
    return true;
}

void dump_rotation_system(const Dessin& d, std::ostream& os) {
    for (Color c : {Color::Black, Color::White}) {
        const char* name = c == Color::Black ? "black" : "white";
        for (std::uint32_t v = 0; v < d.vertex_count(c); ++v) {
            os << name << ' ' << v;
            for (u64 e : d.incidence(c, v)) os << ' ' << e;
            os << '\n';
        }
    }
}

}  // namespace gfh
