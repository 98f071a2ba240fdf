#pragma once

#include <optional>
#include <vector>

#include "gfh/group.hpp"

namespace gfh {

/// Raw generator-image data for [n,n,n] -> G_f:
///   gamma_0 -> g^u h^s0, gamma_1 -> g^v h^s1, gamma_inf -> g^w h^s_inf.
struct EpiCandidate {
    i64 u = 0, v = 0, w = 0;
    i64 s0 = 0, s1 = 0, s_inf = 0;
};

/// A checked epimorphism. Only validate() creates one, so holding an
/// EpiParams means all three congruences hold.
class EpiParams {
public:
    u64 u() const noexcept { return u_; }
    u64 v() const noexcept { return v_; }
    u64 w() const noexcept { return w_; }
    u64 s0() const noexcept { return s0_; }
    u64 s1() const noexcept { return s1_; }
    u64 s_inf() const noexcept { return s_inf_; }

    /// Images of gamma_0, gamma_1, gamma_inf.
    Elt x() const noexcept { return {u_, s0_}; }
    Elt y() const noexcept { return {v_, s1_}; }
    Elt z() const noexcept { return {w_, s_inf_}; }

    friend auto operator<=>(const EpiParams&, const EpiParams&) = default;

private:
    friend EpiParams validate(const GroupParams& gp, const EpiCandidate& c);
    EpiParams() = default;

    u64 u_ = 0, v_ = 0, w_ = 0;
    u64 s0_ = 0, s1_ = 0, s_inf_ = 0;
};

/// Checks, in order: u+v+w = 0 mod n (SumCongruence),
/// s0 q^(v+w) + s1 q^w + s_inf = 0 mod n (SCongruence), u s1 - v s0 a unit
/// mod p (NotSurjective).
EpiParams validate(const GroupParams& gp, const EpiCandidate& c);

/// gamma_0 -> g^u, gamma_1 -> g^v h, gamma_inf -> g^w h^(-q^w), w = -u-v.
EpiParams normalized_epi(const GroupParams& gp, i64 u, i64 v);

/// gamma_0 -> g^u, gamma_1 -> (gh)^v, gamma_inf -> the forced third image.
/// This is the form in which g and gh have directly comparable fixed points.
EpiParams fixed_point_epi(const GroupParams& gp, i64 u, i64 v);

/// The automorphism alpha = (1, j, 0, l) carrying (x, y) to (g^u, g^v h).
/// Throws NeedsRotation if p divides u or v.
GroupAut normalizing_aut(const GroupParams& gp, const EpiParams& epi);

/// Aut-equivalent tuple with s0 = 0, s1 = 1, s_inf = -q^w mod n.
EpiParams normalize(const GroupParams& gp, const EpiParams& epi);

/// Images (theta(gamma_1), theta(gamma_inf), theta(gamma_0)).
EpiParams triality_rotate(const GroupParams& gp, const EpiParams& epi);

/// Images (theta(gamma_1), theta(gamma_0), theta(gamma_0)^-1 theta(gamma_inf) theta(gamma_0)).
EpiParams triality_transpose(const GroupParams& gp, const EpiParams& epi);

/// theta2 = alpha o theta1 for some automorphism alpha; returns it if found.
std::optional<GroupAut> kernel_link(const GroupParams& gp, const EpiParams& e1, const EpiParams& e2,
                                    u64 bound = kDefaultEnumerationBound);

inline bool kernels_equal(const GroupParams& gp, const EpiParams& e1, const EpiParams& e2,
                          u64 bound = kDefaultEnumerationBound) {
    return kernel_link(gp, e1, e2, bound).has_value();
}

/// Every normalized epimorphism: (u, v) ranging over pairs of units mod n.
std::vector<EpiParams> enumerate_normalized(const GroupParams& gp);

}  // namespace gfh
