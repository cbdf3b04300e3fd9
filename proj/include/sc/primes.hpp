#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sc/rational.hpp"

namespace sc {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this witness set.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> ps;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime_u64(n)) ps.push_back(n);
    return ps;
}

// Small integer binomial; each partial product is itself a binomial, so the
// division is exact at every step.
inline u64 binom_u64(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 acc = 1;
    for (u64 j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
    return acc;
}

// Largest exponent cap: p^digits must stay below 2^62 so products fit u128
// and sums of two residues fit u64.
inline constexpr u64 kPadicLimit = u64(1) << 62;

inline u64 pw_u64(u64 p, int k) {
    u64 r = 1;
    for (int i = 0; i < k; ++i) {
        if (r >= kPadicLimit / p) throw config_error("p^N exceeds the 62-bit unit limit");
        r *= p;
    }
    return r;
}

inline int vp_u64(u64 x, u64 p) {
    if (x == 0) throw zero_input("vp_u64: zero");
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
}

inline u64 invmod_u64(u64 a, u64 m) {
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw zero_divide("invmod_u64: not invertible");
    return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

} // namespace sc
