#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "gfh/group.hpp"

namespace gfh::oracle {

/// g^a1 h^b1 g^a2 h^b2 rewritten to normal form one letter at a time with
/// h g -> g h^q (h-count kept mod n since h^n = 1).
inline Elt rewrite_product(u64 n, u64 q, Elt x, Elt y) {
    u64 h_left = x.b % n;
    u64 g_count = x.a;
    for (u64 t = 0; t < y.a; ++t) {
        // move one g across h^h_left
        u64 moved = 0;
        for (u64 s = 0; s < h_left; ++s) moved = (moved + q) % n;
        h_left = moved;
        ++g_count;
    }
    return {g_count % n, (h_left + y.b) % n};
}

/// Orbit of a triple under coordinate permutations, by explicit BFS.
inline std::set<std::array<u64, 3>> s3_orbit(std::array<u64, 3> t) {
    std::set<std::array<u64, 3>> seen{t};
    std::vector<std::array<u64, 3>> todo{t};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        const std::array<std::array<u64, 3>, 2> moves{{{cur[1], cur[2], cur[0]}, {cur[1], cur[0], cur[2]}}};
        for (const auto& nx : moves)
            if (seen.insert(nx).second) todo.push_back(nx);
    }
    return seen;
}

/// Partition of {(u, v, -u-v) mod m : not all divisible by p} into S3-orbits,
/// each orbit labelled by its smallest member.
inline std::set<std::array<u64, 3>> s3_orbit_labels(u64 p, u64 m) {
    std::set<std::array<u64, 3>> labels;
    for (u64 u = 0; u < m; ++u)
        for (u64 v = 0; v < m; ++v) {
            const std::array<u64, 3> t{u, v, (2 * m - u - v) % m};
            if (m > 1 && t[0] % p == 0 && t[1] % p == 0 && t[2] % p == 0) continue;
            labels.insert(*s3_orbit(t).begin());
        }
    return labels;
}

}  // namespace gfh::oracle
