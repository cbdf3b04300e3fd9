#pragma once

#include <concepts>
#include <utility>

#include "sc/padic.hpp"
#include "sc/rational.hpp"

namespace sc {

// mpq_class arithmetic builds lazy expression templates that can reference
// temporaries; inside generic evaluators (where everything is `auto`) a
// returned expression would dangle. XRat forces eager value semantics and
// gives division the same zero contract as the p-adic side.
struct XRat {
    Rat q;

    XRat() = default;
    explicit XRat(Rat v) : q(std::move(v)) {}

    friend XRat operator-(const XRat& a) { return XRat(Rat(-a.q)); }
    friend XRat operator+(const XRat& a, const XRat& b) { return XRat(Rat(a.q + b.q)); }
    friend XRat operator-(const XRat& a, const XRat& b) { return XRat(Rat(a.q - b.q)); }
    friend XRat operator*(const XRat& a, const XRat& b) { return XRat(Rat(a.q * b.q)); }
    friend XRat operator/(const XRat& a, const XRat& b) {
        if (b.q == 0) throw zero_divide("rational division by zero");
        return XRat(Rat(a.q / b.q));
    }
    friend bool operator==(const XRat& a, const XRat& b) { return a.q == b.q; }
};

// The two evaluation backends share one interface so every check is written
// once as a generic function. The exact engine is the reference oracle; the
// p-adic engine is the fast path for sweeps.
struct ExactEngine {
    static constexpr bool is_exact = true;
    using V = XRat;

    u64 p = 0;
    int N = 0;  // unused; kept for interface parity

    V make(i64 n) const { return XRat(rat(n)); }
    V make(const Rat& q) const { return XRat(q); }
    Verdict congruent(const V& x, const V& y, int e) const { return congruent_mod(x.q, y.q, p, e); }
};

struct PadicEngine {
    static constexpr bool is_exact = false;
    using V = PAdic;

    u64 p = 0;
    int N = 0;

    V make(i64 n) const { return PAdic::from_int(n, p, N); }
    V make(const Rat& q) const { return PAdic::from_rat(q, p, N); }
    Verdict congruent(const V& x, const V& y, int e) const { return congruent_mod(x, y, p, e); }
};

template <typename E>
concept Engine = requires(const E& eng, i64 n, const Rat& q, const typename E::V& v) {
    { eng.p } -> std::convertible_to<u64>;
    { eng.make(n) } -> std::same_as<typename E::V>;
    { eng.make(q) } -> std::same_as<typename E::V>;
    { -v } -> std::same_as<typename E::V>;
    { v + v } -> std::same_as<typename E::V>;
    { v - v } -> std::same_as<typename E::V>;
    { v* v } -> std::same_as<typename E::V>;
    { v / v } -> std::same_as<typename E::V>;
};

template <Engine E>
typename E::V pow_v(const E& eng, typename E::V base, u64 e) {
    typename E::V r = eng.make(1);
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

} // namespace sc
