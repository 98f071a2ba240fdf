#pragma once

#include <cstdint>

#include "gfh/error.hpp"

namespace gfh {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Largest modulus any parameter set may use; products are formed in 128 bits.
inline constexpr u64 kMaxModulus = u64{1} << 62;

/// Reduce a signed value into [0, m).
constexpr u64 reduce(i64 x, u64 m) noexcept {
    const auto r = static_cast<__int128>(x) % static_cast<__int128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
}

constexpr u64 add_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) + b) % m);
}

constexpr u64 sub_mod(u64 a, u64 b, u64 m) noexcept {
    a %= m;
    b %= m;
    return a >= b ? a - b : m - (b - a);
}

constexpr u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

/// base^exp mod modulus. `modulus` must be at least 1.
u64 mod_pow(i64 base, u64 exp, u64 modulus);

/// Inverse of a modulo m; throws Errc::NotInvertible when gcd(a, m) != 1.
u64 mod_inv(i64 a, u64 m);

/// Largest t with p^t | x. Requires x >= 1 and p >= 2.
unsigned p_adic_valuation(u64 x, u64 p);

/// Order of (Z/p^t Z)^*, with the convention that t = 0 gives the trivial group.
u64 unit_group_order(u64 p, unsigned t);

/// Exact p^t, or Errc::TooLarge when it would exceed kMaxModulus.
u64 checked_pow(u64 p, unsigned t);

bool is_prime(u64 x) noexcept;

/// An odd prime power n = p^e with n > 3.
class PrimePower {
public:
    /// Validates the pair. Distinct codes: NotPrime, EvenPrime, BadExponent,
    /// TooSmall (p^e = 3) and TooLarge (n above kMaxModulus).
    static PrimePower make(u64 p, unsigned e);

    u64 p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    u64 n() const noexcept { return n_; }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
    PrimePower(u64 p, unsigned e, u64 n) : p_(p), e_(e), n_(n) {}

    u64 p_;
    unsigned e_;
    u64 n_;
};

}  // namespace gfh
