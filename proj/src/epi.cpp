#include "gfh/epi.hpp"

#include <string>

namespace gfh {

namespace {

std::string tuple_text(const EpiCandidate& c) {
    return "(" + std::to_string(c.u) + "," + std::to_string(c.v) + "," + std::to_string(c.w) + "; " +
           std::to_string(c.s0) + "," + std::to_string(c.s1) + "," + std::to_string(c.s_inf) + ")";
}

EpiCandidate from_images(const Elt& x, const Elt& y, const Elt& z) {
    auto s = [](u64 v) { return static_cast<i64>(v); };
    return {s(x.a), s(y.a), s(z.a), s(x.b), s(y.b), s(z.b)};
}

// 1 + q^a + ... + q^(a(c-1)) mod n, the h-exponent multiplier of (g^a h)^c
u64 geometric_sum(const GroupParams& gp, u64 a, u64 c) {
    u64 acc = 0;
    u64 term = 1 % gp.n();
    const u64 ratio = gp.q_pow(a);
    for (u64 t = 0; t < c; ++t) {
        acc = add_mod(acc, term, gp.n());
        term = mul_mod(term, ratio, gp.n());
    }
    return acc;
}

}  // namespace

EpiParams validate(const GroupParams& gp, const EpiCandidate& c) {
    const u64 n = gp.n();
    const u64 u = reduce(c.u, n), v = reduce(c.v, n), w = reduce(c.w, n);
    const u64 s0 = reduce(c.s0, n), s1 = reduce(c.s1, n), s_inf = reduce(c.s_inf, n);

    if (add_mod(add_mod(u, v, n), w, n) != 0)
        throw Error(Errc::SumCongruence, "u + v + w is not 0 mod n for " + tuple_text(c));
    const u64 s_sum = add_mod(add_mod(mul_mod(s0, gp.q_pow(v + w), n), mul_mod(s1, gp.q_pow(w), n), n),
                              s_inf, n);
    if (s_sum != 0)
        throw Error(Errc::SCongruence, "s0 q^(v+w) + s1 q^w + s_inf is not 0 mod n for " + tuple_text(c));
    if (!is_generating_pair(gp, {u, s0}, {v, s1}))
        throw Error(Errc::NotSurjective, "u s1 - v s0 is divisible by p for " + tuple_text(c));

    EpiParams e;
    e.u_ = u;
    e.v_ = v;
    e.w_ = w;
    e.s0_ = s0;
    e.s1_ = s1;
    e.s_inf_ = s_inf;
    return e;
}

EpiParams normalized_epi(const GroupParams& gp, i64 u, i64 v) {
    const u64 n = gp.n();
    const u64 w = sub_mod(0, add_mod(reduce(u, n), reduce(v, n), n), n);
    const u64 s = sub_mod(0, gp.q_pow(w), n);
    return validate(gp, {u, v, static_cast<i64>(w), 0, 1, static_cast<i64>(s)});
}

EpiParams fixed_point_epi(const GroupParams& gp, i64 u, i64 v) {
    const Elt x = pow(gp, gen_g(), u);
    const Elt y = pow(gp, Elt{1, 1}, v);
    const Elt z = inv(gp, mul(gp, x, y));
    return validate(gp, from_images(x, y, z));
}

GroupAut normalizing_aut(const GroupParams& gp, const EpiParams& epi) {
    const u64 n = gp.n();
    const u64 p = gp.p();
    if (epi.u() % p == 0 || epi.v() % p == 0)
        throw Error(Errc::NeedsRotation, "normalization needs u and v coprime to p; rotate the triple first");
    // With i = 1 and k = 0 the g-exponents are untouched and
    // alpha(g^a h^b) = g^a h^(j S_a + l b), S_a = sum_{t<a} q^t.
    // Solve  j S_u + l s0 = 0,  j S_v + l s1 = 1  (mod n).
    const u64 su = geometric_sum(gp, 1, epi.u());
    const u64 sv = geometric_sum(gp, 1, epi.v());
    const u64 det = sub_mod(mul_mod(su, epi.s1(), n), mul_mod(sv, epi.s0(), n), n);
    const u64 det_inv = mod_inv(static_cast<i64>(det), n);
    const GroupAut alpha{1 % n, mul_mod(sub_mod(0, epi.s0(), n), det_inv, n), 0, mul_mod(su, det_inv, n)};
    if (!in_aut_family(gp, alpha))
        throw Error(Errc::Internal, "normalizing map is not an automorphism");
    if (apply_aut(gp, alpha, epi.x()) != Elt{epi.u(), 0} || apply_aut(gp, alpha, epi.y()) != Elt{epi.v(), 1})
        throw Error(Errc::Internal, "normalizing automorphism does not hit (g^u, g^v h)");
    return alpha;
}

EpiParams normalize(const GroupParams& gp, const EpiParams& epi) {
    const GroupAut alpha = normalizing_aut(gp, epi);
    return validate(gp, from_images(apply_aut(gp, alpha, epi.x()), apply_aut(gp, alpha, epi.y()),
                                    apply_aut(gp, alpha, epi.z())));
}

EpiParams triality_rotate(const GroupParams& gp, const EpiParams& epi) {
    return validate(gp, from_images(epi.y(), epi.z(), epi.x()));
}

EpiParams triality_transpose(const GroupParams& gp, const EpiParams& epi) {
    const Elt twisted = mul(gp, inv(gp, epi.x()), mul(gp, epi.z(), epi.x()));
    return validate(gp, from_images(epi.y(), epi.x(), twisted));
}

std::optional<GroupAut> kernel_link(const GroupParams& gp, const EpiParams& e1, const EpiParams& e2,
                                    u64 bound) {
    return linking_aut(gp, e1.x(), e1.y(), e2.x(), e2.y(), bound);
}

std::vector<EpiParams> enumerate_normalized(const GroupParams& gp) {
    std::vector<EpiParams> out;
    const u64 n = gp.n();
    const u64 p = gp.p();
    for (u64 u = 0; u < n; ++u) {
        if (u % p == 0) continue;
        for (u64 v = 0; v < n; ++v) {
            if (v % p == 0) continue;
            out.push_back(normalized_epi(gp, static_cast<i64>(u), static_cast<i64>(v)));
        }
    }
    return out;
}

}  // namespace gfh
