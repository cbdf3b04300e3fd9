#pragma once

#include <mutex>
#include <vector>

#include "sc/primes.hpp"
#include "sc/rational.hpp"

namespace sc {

// Exact Bernoulli numbers (B_1 = -1/2 convention) via the defining
// recurrence sum_{j=0}^{n} binom(n+1,j) B_j = 0. Append-only, so values are
// stable once computed; the lock only guards cache growth.
class BernoulliCache {
  public:
    Rat get(u64 n) const {
        std::lock_guard<std::mutex> lk(mu_);
        if (b_.empty()) b_.push_back(rat(1));
        while (b_.size() <= n) {
            u64 m = b_.size();
            if (m >= 3 && (m & 1)) {
                b_.push_back(rat(0));
                continue;
            }
            Rat s = rat(0);
            Int c = 1;  // binom(m+1, j)
            for (u64 j = 0; j < m; ++j) {
                s += Rat(c) * b_[j];
                c = c * static_cast<long>(m + 1 - j) / static_cast<long>(j + 1);
            }
            Rat bm = -s / rat(static_cast<i64>(m + 1));
            bm.canonicalize();
            b_.push_back(bm);
        }
        return b_[n];
    }

  private:
    mutable std::mutex mu_;
    mutable std::vector<Rat> b_;
};

inline Rat bernoulli_exact(u64 n) {
    static BernoulliCache cache;
    return cache.get(n);
}

// B_n mod p^e for n <= p-2 via Worpitzky's formula
//   B_n = sum_{k=0}^{n} (-1)^k k! S(n,k) / (k+1)
// (S = Stirling numbers of the second kind). Every division is by k+1 <= p-1,
// a p-unit, so the identity survives reduction mod any p^e.
inline u64 bernoulli_mod(u64 n, u64 p, int e = 1) {
    if (n + 1 >= p) throw out_of_range("bernoulli_mod: index must be <= p-2");
    if (n >= 3 && (n & 1)) return 0;
    const u64 m = pw_u64(p, e);
    std::vector<u64> s(n + 1, 0);  // Stirling row S(row, k), grown in place
    s[0] = 1;
    for (u64 row = 1; row <= n; ++row) {
        for (u64 k = std::min(row, n); k >= 1; --k)
            s[k] = (mulmod_u64(k % m, s[k], m) + s[k - 1]) % m;
        s[0] = 0;
    }
    u64 acc = 0, fact = 1;
    for (u64 k = 0; k <= n; ++k) {
        u64 term = mulmod_u64(mulmod_u64(fact, s[k], m), invmod_u64((k + 1) % m, m), m);
        acc = (k & 1) ? (acc + m - term) % m : (acc + term) % m;
        fact = mulmod_u64(fact, (k + 1) % m, m);
    }
    return acc;
}

// B_m mod p^e for large even m with (p-1) not dividing m, through the power
// sum over a reduced residue system:
//   sum_{0 < a < p^e, p !| a} a^m  ==  B_m p^e   (mod p^{2e}).
// Faulhaber's formula gives the left side as (1/(m+1)) sum_j binom(m+1,j)
// B_j p^{e(m+1-j)}; the j = m term is exactly B_m p^e, the j = m-1 term dies
// with B_{m-1} = 0, and every earlier term carries p^{3e} against at most one
// power of p from a Bernoulli denominator. The von Staudt-Clausen guard
// (p-1) !| m keeps B_m itself p-integral.
inline u64 bernoulli_big_mod(u64 m, u64 p, int e) {
    if (m < 4 || (m & 1)) throw out_of_range("bernoulli_big_mod: index must be even and >= 4");
    if (m % (p - 1) == 0) throw not_p_integral("bernoulli_big_mod: p-1 divides the index");
    const u64 pe = pw_u64(p, e), p2e = pw_u64(p, 2 * e);
    u64 s = 0;
    for (u64 a = 1; a < pe; ++a) {
        if (a % p == 0) continue;
        s = (s + powmod_u64(a, m, p2e)) % p2e;
    }
    if (s % pe != 0) throw internal_error("bernoulli_big_mod: power sum not divisible by p^e");
    return (s / pe) % pe;
}

// E_n(x) mod p^e (e <= 2) by the recurrence
//   E_n(x) = x^n - (1/2) sum_{k=0}^{n-1} binom(n,k) E_k(x),
// with a running Pascal row so the binomials cost additions only. O(n^2).
inline u64 euler_poly_mod(u64 n, const Rat& x, u64 p, int e) {
    if (e < 1 || e > 2) throw out_of_range("euler_poly_mod: e must be 1 or 2");
    const u64 m = pw_u64(p, e);
    const u64 xr = residue_mod(x, m);
    const u64 inv2 = invmod_u64(2 % m, m);
    std::vector<u64> ev(n + 1, 0), c(n + 1, 0);  // E_k(x) and binom(row, k)
    ev[0] = 1;
    c[0] = 1;
    for (u64 row = 1; row <= n; ++row) {
        for (u64 k = row; k >= 1; --k) c[k] = (c[k] + c[k - 1]) % m;
        u64 s = 0;
        for (u64 k = 0; k < row; ++k) s = (s + mulmod_u64(c[k], ev[k], m)) % m;
        ev[row] = (powmod_u64(xr, row, m) + m - mulmod_u64(inv2, s, m)) % m;
    }
    return ev[n];
}

// Fermat quotient q_p(a) = (a^{p-1} - 1)/p, exact.
inline Rat fermat_quotient(i64 a, u64 p) {
    if (a % static_cast<i64>(p) == 0) throw not_coprime_base("fermat_quotient: p divides base");
    Int pow;
    mpz_pow_ui(pow.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(p - 1));
    return Rat(Int(pow - 1) / Int(static_cast<long>(p)));
}

// q_p(a) mod p^e without the big power: one powmod at modulus p^{e+1}.
inline u64 fermat_quotient_mod(i64 a, u64 p, int e) {
    if (a % static_cast<i64>(p) == 0) throw not_coprime_base("fermat_quotient_mod: p divides base");
    const u64 m = pw_u64(p, e + 1);
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    u64 pw = powmod_u64(static_cast<u64>(r), p - 1, m);
    return ((pw + m - 1) % m) / p % pw_u64(p, e);
}

} // namespace sc
