#include "gfh/arith.hpp"

#include <string>

namespace gfh {

u64 mod_pow(i64 base, u64 exp, u64 modulus) {
    if (modulus == 0) throw Error(Errc::InvalidArgument, "mod_pow: modulus must be positive");
    u64 result = 1 % modulus;
    u64 b = reduce(base, modulus);
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    return result;
}

u64 mod_inv(i64 a, u64 m) {
    if (m == 0) throw Error(Errc::InvalidArgument, "mod_inv: modulus must be positive");
    // extended Euclid on signed 128-bit values
    __int128 r0 = static_cast<__int128>(m), r1 = reduce(a, m);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        const __int128 quot = r0 / r1;
        __int128 tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) {
        if (m == 1) return 0;
        throw Error(Errc::NotInvertible,
                    std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    t0 %= static_cast<__int128>(m);
    if (t0 < 0) t0 += m;
    return static_cast<u64>(t0);
}

unsigned p_adic_valuation(u64 x, u64 p) {
    if (x == 0) throw Error(Errc::InvalidArgument, "p_adic_valuation: x must be positive");
    if (p < 2) throw Error(Errc::InvalidArgument, "p_adic_valuation: p must be at least 2");
    unsigned t = 0;
    while (x % p == 0) {
        x /= p;
        ++t;
    }
    return t;
}

u64 checked_pow(u64 p, unsigned t) {
    u64 r = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (r > kMaxModulus / p)
            throw Error(Errc::TooLarge, std::to_string(p) + "^" + std::to_string(t) +
                                            " exceeds the supported modulus bound 2^62");
        r *= p;
    }
    return r;
}

u64 unit_group_order(u64 p, unsigned t) {
    if (t == 0) return 1;
    return checked_pow(p, t - 1) * (p - 1);
}

bool is_prime(u64 x) noexcept {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (u64 d = 3; d <= x / d; d += 2)
        if (x % d == 0) return false;
    return true;
}

PrimePower PrimePower::make(u64 p, unsigned e) {
    if (p == 2) throw Error(Errc::EvenPrime, "p must be an odd prime (got 2)");
    if (!is_prime(p)) throw Error(Errc::NotPrime, "p must be an odd prime (got " + std::to_string(p) + ")");
    if (e < 1) throw Error(Errc::BadExponent, "e must be at least 1");
    const u64 n = checked_pow(p, e);
    if (n == 3) throw Error(Errc::TooSmall, "n = p^e must exceed 3 (got 3)");
    return PrimePower(p, e, n);
}

}  // namespace gfh
