#include "gfh/group.hpp"

#include <array>
#include <string>
#include <utility>

namespace gfh {

namespace {

// Small enough to tabulate q^a for every a mod m.
constexpr u64 kQTableLimit = u64{1} << 20;

}  // namespace

GroupParams::GroupParams(PrimePower pp, unsigned f)
    : pp_(pp), f_(f), q_(0), m_(0), pf_(0) {}

GroupParams GroupParams::make(const PrimePower& pp, unsigned f) {
    if (f < 1 || f > pp.e())
        throw Error(Errc::BadExponent,
                    "f must satisfy 1 <= f <= e (got f = " + std::to_string(f) + ", e = " +
                        std::to_string(pp.e()) + ")");
    GroupParams gp(pp, f);
    gp.pf_ = checked_pow(pp.p(), f);
    gp.m_ = checked_pow(pp.p(), pp.e() - f);
    gp.q_ = 1 + gp.pf_;
    if (gp.m_ * gp.pf_ != pp.n() || gp.q_ % pp.p() != 1)
        throw Error(Errc::Internal, "inconsistent group parameters");
    if (mod_pow(static_cast<i64>(gp.q_), gp.m_, pp.n()) != 1)
        throw Error(Errc::Internal, "q^m is not 1 modulo n");
    if (gp.m_ <= kQTableLimit) {
        auto table = std::make_shared<std::vector<u64>>(gp.m_);
        u64 acc = 1 % pp.n();
        for (u64 a = 0; a < gp.m_; ++a) {
            (*table)[a] = acc;
            acc = mul_mod(acc, gp.q_, pp.n());
        }
        gp.q_table_ = std::move(table);
    }
    return gp;
}

u64 GroupParams::q_pow(u64 a) const {
    if (q_table_) return (*q_table_)[a % m_];
    return mod_pow(static_cast<i64>(q_), a % m_, n());
}

Elt make_elt(const GroupParams& gp, i64 a, i64 b) { return {reduce(a, gp.n()), reduce(b, gp.n())}; }

Elt mul(const GroupParams& gp, const Elt& x, const Elt& y) {
    const u64 n = gp.n();
    return {add_mod(x.a, y.a, n), add_mod(mul_mod(x.b, gp.q_pow(y.a), n), y.b, n)};
}

Elt inv(const GroupParams& gp, const Elt& x) {
    const u64 n = gp.n();
    const u64 a = sub_mod(0, x.a, n);
    // (a, b)(-a, c) = (0, b q^-a + c)
    return {a, sub_mod(0, mul_mod(x.b, gp.q_pow(a), n), n)};
}

Elt pow(const GroupParams& gp, const Elt& x, i64 k) {
    // G_f has exponent n, so k only matters mod n
    u64 e = reduce(k, gp.n());
    Elt base = x;
    Elt result = kIdentity;
    while (e != 0) {
        if (e & 1) result = mul(gp, result, base);
        base = mul(gp, base, base);
        e >>= 1;
    }
    return result;
}

u64 order(const GroupParams& gp, const Elt& x) {
    u64 ord = 1;
    Elt y = x;
    while (y != kIdentity) {
        y = pow(gp, y, static_cast<i64>(gp.p()));
        ord *= gp.p();
        if (ord > gp.n()) throw Error(Errc::Internal, "element order exceeds the group exponent");
    }
    return ord;
}

bool is_generating_pair(const GroupParams& gp, const Elt& x, const Elt& y) {
    const u64 p = gp.p();
    const u64 lhs = mul_mod(x.a % p, y.b % p, p);
    const u64 rhs = mul_mod(y.a % p, x.b % p, p);
    return lhs != rhs;
}

bool is_automorphism(const GroupParams& gp, u64 i, u64 j, u64 k, u64 l) {
    const u64 n = gp.n();
    const Elt G{i % n, j % n};
    const Elt H{k % n, l % n};
    const auto ni = static_cast<i64>(n);
    if (pow(gp, G, ni) != kIdentity || pow(gp, H, ni) != kIdentity) return false;
    // g^-1 h g = h^q
    if (mul(gp, inv(gp, G), mul(gp, H, G)) != pow(gp, H, static_cast<i64>(gp.q()))) return false;

    std::vector<Elt> g_pows(n), h_pows(n);
    g_pows[0] = h_pows[0] = kIdentity;
    for (u64 t = 1; t < n; ++t) {
        g_pows[t] = mul(gp, g_pows[t - 1], G);
        h_pows[t] = mul(gp, h_pows[t - 1], H);
    }
    std::vector<bool> seen(n * n, false);
    for (u64 a = 0; a < n; ++a) {
        for (u64 b = 0; b < n; ++b) {
            const u64 idx = elt_index(gp, mul(gp, g_pows[a], h_pows[b]));
            if (seen[idx]) return false;
            seen[idx] = true;
        }
    }
    return true;
}

bool in_aut_family(const GroupParams& gp, const GroupAut& a) {
    const u64 m = gp.m();
    const u64 p = gp.p();
    if (a.i % m != 1 % m || a.k % m != 0) return false;
    return mul_mod(a.i % p, a.l % p, p) != mul_mod(a.j % p, a.k % p, p);
}

Elt apply_aut(const GroupParams& gp, const GroupAut& alpha, const Elt& x) {
    const Elt G{alpha.i % gp.n(), alpha.j % gp.n()};
    const Elt H{alpha.k % gp.n(), alpha.l % gp.n()};
    return mul(gp, pow(gp, G, static_cast<i64>(x.a)), pow(gp, H, static_cast<i64>(x.b)));
}

GroupAut compose(const GroupParams& gp, const GroupAut& alpha, const GroupAut& beta) {
    const Elt g_img = apply_aut(gp, alpha, apply_aut(gp, beta, gen_g()));
    const Elt h_img = apply_aut(gp, alpha, apply_aut(gp, beta, gen_h()));
    return {g_img.a, g_img.b, h_img.a, h_img.b};
}

AutEnumerator::AutEnumerator(const GroupParams& gp, u64 bound) : gp_(gp) {
    const u64 n = gp.n();
    if (n > bound / n)
        throw Error(Errc::BoundExceeded, "automorphism enumeration needs n^2 = " +
                                             std::to_string(n) + "^2 elements, above the bound " +
                                             std::to_string(bound));
    cur_ = {1 % gp.m(), 0, 0, 0};
}

std::optional<GroupAut> AutEnumerator::next() {
    const u64 n = gp_.n();
    const u64 m = gp_.m();
    const u64 p = gp_.p();
    auto admissible = [&](const GroupAut& c) {
        const u64 det = sub_mod(mul_mod(c.i % p, c.l % p, p), mul_mod(c.j % p, c.k % p, p), p);
        return det != 0;
    };
    auto advance = [&]() {
        if (++cur_.l < n) return true;
        cur_.l = 0;
        if ((cur_.k += m) < n) return true;
        cur_.k = 0;
        if (++cur_.j < n) return true;
        cur_.j = 0;
        if ((cur_.i += m) < n) return true;
        return false;
    };
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (admissible(cur_)) return cur_;
    }
    while (advance()) {
        if (admissible(cur_)) return cur_;
    }
    done_ = true;
    return std::nullopt;
}

u64 AutEnumerator::count() const {
    const u64 n = gp_.n();
    const u64 m = gp_.m();
    const u64 p = gp_.p();
    if (m > 1) return (n / m) * n * (n / m) * unit_group_order(p, gp_.e());
    // |GL_2(Z/nZ)| = n^4 (1 - 1/p)(1 - 1/p^2)
    const u64 np = n / p;
    return np * np * np * np * (p * p - 1) * (p * p - p);
}

std::vector<GroupAut> enumerate_auts(const GroupParams& gp, u64 bound) {
    AutEnumerator it(gp, bound);
    std::vector<GroupAut> out;
    out.reserve(it.count());
    while (auto a = it.next()) out.push_back(*a);
    return out;
}

std::optional<GroupAut> linking_aut(const GroupParams& gp, const Elt& x1, const Elt& y1,
                                    const Elt& x2, const Elt& y2, u64 bound) {
    const u64 n = gp.n();
    if (n > bound / n)
        throw Error(Errc::BoundExceeded, "linking search over n^2 = " + std::to_string(n) + "^2 elements exceeds the bound");
    if (!is_generating_pair(gp, x1, y1) || !is_generating_pair(gp, x2, y2)) return std::nullopt;

    const u64 size = n * n;
    std::vector<Elt> image(size);
    std::vector<bool> mapped(size, false);
    std::vector<u64> queue;
    queue.reserve(size);
    image[0] = kIdentity;
    mapped[0] = true;
    queue.push_back(0);
    const std::array<std::pair<Elt, Elt>, 2> steps{{{x1, x2}, {y1, y2}}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Elt src = elt_at(gp, queue[head]);
        const Elt dst = image[queue[head]];
        for (const auto& [from, to] : steps) {
            const u64 next = elt_index(gp, mul(gp, src, from));
            const Elt next_image = mul(gp, dst, to);
            if (!mapped[next]) {
                mapped[next] = true;
                image[next] = next_image;
                queue.push_back(next);
            } else if (image[next] != next_image) {
                return std::nullopt;
            }
        }
    }
    if (queue.size() != size) return std::nullopt;
    std::vector<bool> hit(size, false);
    for (const Elt& e : image) {
        const u64 idx = elt_index(gp, e);
        if (hit[idx]) return std::nullopt;
        hit[idx] = true;
    }
    const Elt g_img = image[elt_index(gp, gen_g())];
    const Elt h_img = image[elt_index(gp, gen_h())];
    return GroupAut{g_img.a, g_img.b, h_img.a, h_img.b};
}

std::optional<GroupAut> linking_aut_search(const GroupParams& gp, const Elt& x1, const Elt& y1,
                                           const Elt& x2, const Elt& y2, u64 bound) {
    AutEnumerator it(gp, bound);
    if (!is_generating_pair(gp, x1, y1) || !is_generating_pair(gp, x2, y2)) return std::nullopt;
    while (auto a = it.next()) {
        if (apply_aut(gp, *a, x1) == x2 && apply_aut(gp, *a, y1) == y2) return a;
    }
    return std::nullopt;
}

}  // namespace gfh
