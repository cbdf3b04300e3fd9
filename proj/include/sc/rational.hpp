#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <gmpxx.h>

#include "sc/errors.hpp"

namespace sc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: gcd(num,den)=1, den >= 1

inline Rat rat(i64 num, i64 den = 1) {
    if (den == 0) throw zero_divide("rat: zero denominator");
    Rat q{Int(num), Int(den)};
    q.canonicalize();
    return q;
}

// Parses "n", "-n/d", "+n/d". Used by the CLI for --alphas.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw malformed_params("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw malformed_params("bad rational literal: " + s);
    std::string t = s[0] == '+' ? s.substr(1) : s;  // GMP rejects a leading '+'
    Rat q;
    if (t.empty() || q.set_str(t, 10) != 0) throw malformed_params("bad rational literal: " + s);
    if (q.get_den() == 0) throw malformed_params("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Multiplicity of p in a nonzero integer.
inline i64 vp_int(const Int& n, u64 p) {
    if (n == 0) throw zero_input("vp_int: zero");
    Int rem;
    return static_cast<i64>(mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
}

// p-adic valuation of a nonzero rational (may be negative).
inline i64 vp(const Rat& x, u64 p) {
    if (x == 0) throw zero_input("vp: zero");
    i64 v = 0;
    if (mpz_divisible_ui_p(x.get_num().get_mpz_t(), p))
        v = vp_int(x.get_num(), p);
    else if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p))
        v = -vp_int(x.get_den(), p);
    return v;
}

inline bool p_integral(const Rat& x, u64 p) {
    return !mpz_divisible_ui_p(x.get_den().get_mpz_t(), p);
}

// Lift of x into [0, m): numerator * denominator^{-1} mod m.
// Requires gcd(denominator, m) = 1.
inline u64 residue_mod(const Rat& x, u64 m) {
    Int mm(m);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), mm.get_mpz_t()) == 0)
        throw not_p_integral("residue_mod: denominator " + x.get_den().get_str() +
                             " not invertible mod " + std::to_string(m));
    Int r = (x.get_num() % mm) * inv % mm;
    if (r < 0) r += mm;
    return r.get_ui();
}

// alpha = a + p*t with a in [0, p-1] and t p-integral.
struct AlphaSplit {
    Rat alpha;
    u64 a;
    Rat t;
};

inline AlphaSplit alpha_split(const Rat& alpha, u64 p) {
    if (!p_integral(alpha, p))
        throw not_p_integral("alpha_split: p | denominator of " + rat_str(alpha));
    u64 a = residue_mod(alpha, p);
    Rat t = (alpha - rat(static_cast<i64>(a))) / rat(static_cast<i64>(p));
    t.canonicalize();
    return {alpha, a, t};
}

// Achieved valuation of a difference; `infinite` marks an exactly-zero
// difference. `capped` marks a p-adic result that was only known to be zero
// to its working precision, so the true valuation may be larger.
struct Valuation {
    i64 v = 0;
    bool infinite = false;
    bool capped = false;

    static Valuation inf() { return {0, true, false}; }
    static Valuation fin(i64 v, bool capped = false) { return {v, false, capped}; }

    bool at_least(i64 e) const { return infinite || v >= e; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
};

struct Verdict {
    bool pass = false;
    Valuation achieved;
};

// The universal "x == y mod p^e" test for exact rationals.
// Throws not_p_integral when x - y has p in its denominator (a wrong
// applicability predicate upstream, never a legitimate outcome).
inline Verdict congruent_mod(const Rat& x, const Rat& y, u64 p, int e) {
    Rat d = x - y;
    if (d == 0) return {true, Valuation::inf()};
    i64 v = vp(d, p);
    if (v < 0)
        throw not_p_integral("congruent_mod: v_p(difference) = " + std::to_string(v));
    return {v >= e, Valuation::fin(v)};
}

// binom(alpha, k) for rational alpha: prod_{j=0}^{k-1} (alpha - j) / k!.
inline Rat binom_rat(const Rat& alpha, u64 k) {
    Rat b(1);
    for (u64 j = 0; j < k; ++j) b *= (alpha - rat(static_cast<i64>(j))) / rat(static_cast<i64>(j + 1));
    return b;
}

inline Rat pow_rat(const Rat& x, unsigned e) {
    Rat r(1);
    Rat b = x;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

} // namespace sc
