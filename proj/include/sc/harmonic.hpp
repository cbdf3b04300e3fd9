#pragma once

#include <array>
#include <cstdlib>
#include <vector>

#include "sc/engine.hpp"

namespace sc {

// Order vector for an alternating multiple harmonic sum. Entry r_i != 0,
// |r_i| <= 16; a negative entry alternates the sign of its index.
// Depth is capped at 4: nothing downstream needs more, and the brute-force
// cross-check in the tests stays tractable.
struct Signature {
    std::vector<int> r;

    explicit Signature(std::vector<int> orders) : r(std::move(orders)) {
        if (r.empty() || r.size() > 4) throw invalid_order("signature depth must be 1..4");
        for (int ri : r) {
            if (ri == 0) throw invalid_order("signature order must be nonzero");
            if (std::abs(ri) > 16) throw invalid_order("signature order magnitude must be <= 16");
        }
    }
    size_t depth() const { return r.size(); }
};

// H_n^{(r)} = sum_{k=1}^n sgn(r)^k / k^|r| ; r > 0 is the plain harmonic
// sum of order r, r < 0 its alternating twin.
template <Engine E>
typename E::V harmonic(const E& eng, u64 n, int r) {
    if (r == 0) throw invalid_order("harmonic: order must be nonzero");
    typename E::V acc = eng.make(0);
    for (u64 k = 1; k <= n; ++k) {
        typename E::V term = eng.make(1) / pow_v(eng, eng.make(static_cast<i64>(k)),
                                                 static_cast<u64>(std::abs(r)));
        if (r < 0 && (k & 1)) acc = acc - term;
        else acc = acc + term;
    }
    return acc;
}

// Nested sum over 1 <= k_1 < ... < k_m <= n with term
// prod_i sgn(r_i)^{k_i} / k_i^{|r_i|}, evaluated by running prefix
// accumulators (O(depth * n) divisions).
template <Engine E>
typename E::V mhs(const E& eng, u64 n, const Signature& sig) {
    const size_t m = sig.depth();
    std::vector<typename E::V> pre(m + 1, eng.make(0));
    pre[0] = eng.make(1);  // empty product
    for (u64 k = 1; k <= n; ++k) {
        // update deepest-first so each level sees the strict prefix k' < k
        for (size_t i = m; i >= 1; --i) {
            int r = sig.r[i - 1];
            typename E::V term =
                pre[i - 1] / pow_v(eng, eng.make(static_cast<i64>(k)), static_cast<u64>(std::abs(r)));
            if (r < 0 && (k & 1)) pre[i] = pre[i] - term;
            else pre[i] = pre[i] + term;
        }
    }
    return pre[m];
}

// sum_{k=1}^n (2 H_{2k} - H_k) / k^4 : the weighted tail that shows up in
// half-range expansions. H here is order 1.
template <Engine E>
typename E::V weighted_2h2k(const E& eng, u64 n) {
    typename E::V acc = eng.make(0);
    typename E::V h2k = eng.make(0);  // H_{2k}
    typename E::V hk = eng.make(0);   // H_k
    for (u64 k = 1; k <= n; ++k) {
        h2k = h2k + eng.make(rat(1, 2 * static_cast<i64>(k) - 1)) +
              eng.make(rat(1, 2 * static_cast<i64>(k)));
        hk = hk + eng.make(rat(1, static_cast<i64>(k)));
        typename E::V k4 = pow_v(eng, eng.make(static_cast<i64>(k)), 4);
        acc = acc + (h2k + h2k - hk) / k4;
    }
    return acc;
}

// sum_{k=1}^n 1/(2k-1).
template <Engine E>
typename E::V odd_reciprocal_sum(const E& eng, u64 n) {
    typename E::V acc = eng.make(0);
    for (u64 k = 1; k <= n; ++k)
        acc = acc + eng.make(rat(1, 2 * static_cast<i64>(k) - 1));
    return acc;
}

// S_n(x) = sum_{k=1}^n (H_k^{(2)} / k) * binom(x, k) * binom(-1-x, k).
// binom(x,k) and binom(-1-x,k) are built by multiplying one factor per step,
// so the whole sum is O(n) engine operations.
template <Engine E>
typename E::V s_n(const E& eng, u64 n, const typename E::V& x) {
    typename E::V acc = eng.make(0);
    typename E::V h2 = eng.make(0);        // H_k^{(2)}
    typename E::V bx = eng.make(1);        // binom(x, k)
    typename E::V by = eng.make(1);        // binom(-1-x, k)
    typename E::V neg1x = -(eng.make(1)) - x;
    for (u64 k = 1; k <= n; ++k) {
        typename E::V kk = eng.make(static_cast<i64>(k));
        h2 = h2 + eng.make(1) / (kk * kk);
        bx = bx * (x - kk + eng.make(1)) / kk;
        by = by * (neg1x - kk + eng.make(1)) / kk;
        acc = acc + h2 / kk * bx * by;
    }
    return acc;
}

// Per-prime cache of the prefix rows every congruence needs: H_k^{(r)} for
// r = 1..5 up to p-1, plus the two half-range weighted sums. Immutable after
// construction, so sharing across threads is free.
template <Engine E>
struct HarmonicTable {
    u64 p;
    std::array<std::vector<typename E::V>, 6> h;  // h[r][k] = H_k^{(r)}, r = 1..5
    std::vector<typename E::V> w4;                // weighted_2h2k prefix, k <= (p-1)/2
    std::vector<typename E::V> oddrec;            // odd_reciprocal_sum prefix, k <= (p-1)/2

    explicit HarmonicTable(const E& eng) : p(eng.p) {
        const u64 n = p - 1, half = (p - 1) / 2;
        for (int r = 1; r <= 5; ++r) {
            auto& row = h[static_cast<size_t>(r)];
            row.resize(n + 1, eng.make(0));
            for (u64 k = 1; k <= n; ++k)
                row[k] = row[k - 1] +
                         eng.make(1) / pow_v(eng, eng.make(static_cast<i64>(k)), static_cast<u64>(r));
        }
        w4.resize(half + 1, eng.make(0));
        oddrec.resize(half + 1, eng.make(0));
        typename E::V h2k = eng.make(0), hk = eng.make(0);
        for (u64 k = 1; k <= half; ++k) {
            h2k = h2k + eng.make(rat(1, 2 * static_cast<i64>(k) - 1)) +
                  eng.make(rat(1, 2 * static_cast<i64>(k)));
            hk = hk + eng.make(rat(1, static_cast<i64>(k)));
            typename E::V k4 = pow_v(eng, eng.make(static_cast<i64>(k)), 4);
            w4[k] = w4[k - 1] + (h2k + h2k - hk) / k4;
            oddrec[k] = oddrec[k - 1] + eng.make(rat(1, 2 * static_cast<i64>(k) - 1));
        }
    }

    const typename E::V& H(u64 k, int r) const { return h[static_cast<size_t>(r)].at(k); }
};

} // namespace sc
