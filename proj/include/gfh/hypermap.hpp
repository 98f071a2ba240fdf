#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gfh/epi.hpp"

namespace gfh {

enum class Color { Black, White };

/// Dessins are materialized edge by edge; n is capped so n^2 stays near 16M.
inline constexpr u64 kMaxDessinDegree = 4096;

/// Walsh map of the regular hypermap (G_f, x, y).
///
/// Conventions: edges are the n^2 group elements in row-major (a, b) order.
/// The automorphism group acts by left translation e -> z e. Rotation about a
/// black vertex is e -> e x, so black vertices are the left cosets c<x> and
/// each incidence list reads c, cx, cx^2, ...; white vertices use y the same
/// way. Faces are the cycles of e -> e x y. A vertex is identified by the
/// smallest edge index in its coset.
class Dessin {
public:
    static Dessin build(const GroupParams& gp, const EpiParams& epi);

    const GroupParams& params() const noexcept { return gp_; }
    Elt x() const noexcept { return x_; }
    Elt y() const noexcept { return y_; }
    u64 edge_count() const noexcept { return gp_.n() * gp_.n(); }

    std::size_t vertex_count(Color c) const noexcept { return reps(c).size(); }
    /// Canonical representative (an edge index) of each vertex, ascending.
    const std::vector<std::uint32_t>& reps(Color c) const noexcept {
        return c == Color::Black ? black_reps_ : white_reps_;
    }
    /// Vertex id (position in reps) of the vertex incident to `edge`.
    std::uint32_t vertex_of(Color c, u64 edge) const {
        return c == Color::Black ? black_of_[edge] : white_of_[edge];
    }
    /// Cyclically ordered incident edges of a vertex.
    std::vector<u64> incidence(Color c, std::uint32_t vertex) const;

    /// Exponent d with r^d = t for the rotation r of colour c, or -1.
    i64 rotation_log(Color c, const Elt& t) const {
        const auto& logs = c == Color::Black ? x_log_ : y_log_;
        return logs[elt_index(gp_, t)];
    }

private:
    Dessin(const GroupParams& gp) : gp_(gp) {}

    GroupParams gp_;
    Elt x_, y_;
    std::vector<std::uint32_t> black_of_, white_of_;
    std::vector<std::uint32_t> black_reps_, white_reps_;
    std::vector<std::int32_t> x_log_, y_log_;
};

/// Number of face cycles of e -> e x y.
u64 face_count(const Dessin& d);

/// From V - E + F = 2 - 2g with all three counted on the rotation system.
u64 genus(const Dessin& d);

/// Vertices of the given colour fixed by left translation by z.
u64 count_fixed_vertices(const Dessin& d, const Elt& z, Color color);

/// The unique d mod n with c^-1 z c = x^d (black) or y^d (white) at the
/// vertex with representative c. Throws NotFixed if z moves that vertex.
u64 rotation_exponent(const Dessin& d, const Elt& z, Color color, std::uint32_t vertex);

/// Orbit of the identity edge under all left translations covers every edge.
bool is_edge_transitive(const Dessin& d);

/// Some automorphism of G_f swaps x and y.
bool has_color_reversing_aut(const Dessin& d, u64 bound = kDefaultEnumerationBound);

/// Every black coset meets every white coset in exactly one edge.
bool is_complete_bipartite(const Dessin& d);

/// Plain-text rotation system: one vertex per line,
///   <black|white> <id> <edge> <edge> ...
/// edges in cyclic order, identified by their row-major index.
void dump_rotation_system(const Dessin& d, std::ostream& os);

}  // namespace gfh
