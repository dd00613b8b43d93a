#pragma once

// Integer helpers shared by every module. All inputs are bounded by 64 bits;
// products go through unsigned __int128.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "../error.hpp"

namespace gacodes::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Overflow-checked a^b; throws PreconditionError when the result leaves 64 bits.
inline u64 checked_pow(u64 a, unsigned b) {
    u64 r = 1;
    for (unsigned i = 0; i < b; ++i) {
        u128 t = static_cast<u128>(r) * a;
        if (t > UINT64_MAX) throw PreconditionError("integer power overflows 64 bits");
        r = static_cast<u64>(t);
    }
    return r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
/// Inputs with a prime factor above 2^32 beyond the cofactor are handled by the final primality check.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
        if (is_prime(n)) break;
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

/// If n = p^k for a prime p (k >= 1) returns {p, k}; otherwise {0, 0}.
inline std::pair<u64, unsigned> prime_power(u64 n) {
    auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

inline u64 mod_inverse(u64 a, u64 m) {
    // extended Euclid on signed 128-bit to stay exact for 64-bit moduli
    __int128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        __int128 q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) throw PreconditionError("element is not invertible modulo " + std::to_string(m));
    if (t < 0) t += m;
    return static_cast<u64>(t);
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gacodes::detail
