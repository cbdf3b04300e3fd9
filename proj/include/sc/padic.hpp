#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "sc/primes.hpp"
#include "sc/rational.hpp"

namespace sc {

// Fixed-precision p-adic number: u * p^v with u a unit known modulo p^d.
// The absolute precision (the exponent below which the value is pinned) is
// v + d; every operation computes the exact worst case of that bound, so a
// result never pretends to more digits than it has.
//
// Zero states: u == 0, d == 0 encodes "zero to precision p^v" (true valuation
// is >= v, nothing more is known); v == kInfPrec on top of that encodes an
// exact zero.
struct PAdic {
    static constexpr i64 kInfPrec = std::numeric_limits<i64>::max() / 4;

    u64 p = 0;
    i64 v = 0;
    u64 u = 0;
    int d = 0;

    bool zeroish() const { return u == 0; }
    bool exact_zero() const { return u == 0 && v >= kInfPrec; }

    // Exponent of the modulus this value is known to: value is pinned mod p^abs_prec.
    i64 abs_prec() const { return u == 0 ? v : v + d; }

    static PAdic zero(u64 p) { return {p, kInfPrec, 0, 0}; }
    static PAdic zero_to(u64 p, i64 prec) { return {p, prec, 0, 0}; }

    static PAdic from_rat(const Rat& x, u64 p, int N) {
        if (N < 1) throw config_error("PAdic: need at least one digit");
        pw_u64(p, N);
        if (x == 0) return zero(p);
        i64 val = vp(x, p);
        Rat ppow = pow_rat(rat(static_cast<i64>(p)), static_cast<unsigned>(val >= 0 ? val : -val));
        Rat unit = val >= 0 ? Rat(x / ppow) : Rat(x * ppow);
        return {p, val, residue_mod(unit, pw_u64(p, N)), N};
    }

    static PAdic from_int(i64 n, u64 p, int N) { return from_rat(rat(n), p, N); }

    PAdic operator-() const {
        if (u == 0) return *this;
        u64 m = pw_u64(p, d);
        return {p, v, (m - u) % m, d};
    }

    friend PAdic operator+(const PAdic& a, const PAdic& b) {
        if (a.p != b.p) throw internal_error("PAdic: mixed primes");
        if (a.exact_zero()) return b;
        if (b.exact_zero()) return a;
        i64 A = std::min(a.abs_prec(), b.abs_prec());
        if (a.zeroish() && b.zeroish()) return zero_to(a.p, A);
        i64 B = std::min(a.zeroish() ? a.v : a.v, b.zeroish() ? b.v : b.v);
        int shift = static_cast<int>(A - B);
        if (shift <= 0) return zero_to(a.p, A);
        u64 M = pw_u64(a.p, shift);
        u64 r = 0;
        if (!a.zeroish()) r = mulmod_u64(a.u % M, pw_u64(a.p, static_cast<int>(a.v - B)) % M, M);
        if (!b.zeroish()) r = (r + mulmod_u64(b.u % M, pw_u64(a.p, static_cast<int>(b.v - B)) % M, M)) % M;
        if (r == 0) return zero_to(a.p, A);
        int vr = vp_u64(r, a.p);
        i64 val = B + vr;
        u64 unit = r / pw_u64(a.p, vr);
        int digits = static_cast<int>(A - val);
        return {a.p, val, unit % pw_u64(a.p, digits), digits};
    }

    friend PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

    friend PAdic operator*(const PAdic& a, const PAdic& b) {
        if (a.p != b.p) throw internal_error("PAdic: mixed primes");
        if (a.exact_zero() || b.exact_zero()) return zero(a.p);
        if (a.zeroish() || b.zeroish())
            return zero_to(a.p, std::min<i64>(a.v + b.v, kInfPrec));
        int digits = std::min(a.d, b.d);
        u64 m = pw_u64(a.p, digits);
        return {a.p, a.v + b.v, mulmod_u64(a.u % m, b.u % m, m), digits};
    }

    friend PAdic operator/(const PAdic& a, const PAdic& b) {
        if (a.p != b.p) throw internal_error("PAdic: mixed primes");
        if (b.exact_zero()) throw zero_divide("PAdic: division by exact zero");
        if (b.zeroish()) throw precision_loss("PAdic: division by zero-to-precision value");
        if (a.exact_zero()) return zero(a.p);
        if (a.zeroish()) return zero_to(a.p, a.v - b.v);
        int digits = std::min(a.d, b.d);
        u64 m = pw_u64(a.p, digits);
        return {a.p, a.v - b.v, mulmod_u64(a.u % m, invmod_u64(b.u % m, m), m), digits};
    }

    // Lift of the value into [0, p^e); requires v >= 0 and abs_prec() >= e.
    u64 residue(int e) const {
        if (abs_prec() < e) throw precision_loss("PAdic::residue: not enough digits");
        if (u == 0) return 0;
        if (v < 0) throw not_p_integral("PAdic::residue: negative valuation");
        if (v >= e) return 0;
        u64 m = pw_u64(p, e);
        return mulmod_u64(u % m, pw_u64(p, static_cast<int>(v)), m);
    }

    std::string str() const {
        if (exact_zero()) return "0";
        if (zeroish()) return "O(p^" + std::to_string(v) + ")";
        return std::to_string(u) + "*p^" + std::to_string(v) + " + O(p^" + std::to_string(abs_prec()) + ")";
    }
};

// Valuation-and-unit extraction with the strict zero contract: an exact zero
// has no valuation, so callers wanting the flagged zero state must build it
// explicitly via PAdic::zero / zero_to.
inline PAdic vp_and_unit(const Rat& x, u64 p, int N) {
    if (x == 0) throw zero_input("vp_and_unit: zero input has no valuation");
    return PAdic::from_rat(x, p, N);
}

// Congruence verdict on a p-adic difference. A difference that is only
// "zero to precision" below the target exponent is undecidable at this
// working precision; the caller retries with more guard digits.
inline Verdict congruent_mod(const PAdic& x, const PAdic& y, u64 /*p*/, int e) {
    PAdic diff = x - y;
    if (diff.exact_zero()) return {true, Valuation::inf()};
    if (diff.zeroish()) {
        if (diff.v < e)
            throw precision_loss("congruence undecidable: difference is O(p^" +
                                 std::to_string(diff.v) + "), need p^" + std::to_string(e));
        return {true, Valuation::fin(diff.v, /*capped=*/true)};
    }
    if (diff.v < 0) throw not_p_integral("congruent_mod: negative valuation difference");
    return {diff.v >= e, Valuation::fin(diff.v)};
}

} // namespace sc
