#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sc/bernoulli.hpp"
#include "sc/engine.hpp"
#include "sc/harmonic.hpp"
#include "sc/primes.hpp"

// Registry of verifiable congruence checks. Notation used in the statement
// strings (ASCII throughout):
//   H_n^{(r)}   harmonic sum of order r (negative r alternates signs)
//   H_n(r,s)    double nested sum over k1 < k2 (see harmonic.hpp)
//   C(x,k)      binomial coefficient with rational upper argument
//   S_n(x)      sum_{k=1}^n (H_k^{(2)}/k) C(x,k) C(-1-x,k)
//   W(a)        sum_{k=1}^a (2 H_{2k} - H_k) / k^4
//   B_n, E_n(x) Bernoulli numbers / Euler polynomials
//   q_p(2)      Fermat quotient (2^{p-1} - 1)/p
//   a, t        split of a p-integral alpha: alpha = a + p t, a = <alpha>_p
// Every check is written once as an engine-generic evaluator returning a
// (lhs, rhs) pair; run_check compares them modulo p^e (or exactly).

namespace sc {

// ---------------------------------------------------------------------------
// parameter bundle

struct Params {
    std::optional<Rat> alpha, t, x;
    std::optional<int> r, s, k, n, trial;
    std::string variant;  // empty when the check has no variants

    std::string brief() const {
        std::ostringstream os;
        bool first = true;
        auto put = [&](const char* key, const std::string& val) {
            if (!first) os << ' ';
            os << key << '=' << val;
            first = false;
        };
        if (alpha) put("alpha", rat_str(*alpha));
        if (t) put("t", rat_str(*t));
        if (x) put("x", rat_str(*x));
        if (r) put("r", std::to_string(*r));
        if (s) put("s", std::to_string(*s));
        if (k) put("k", std::to_string(*k));
        if (n) put("n", std::to_string(*n));
        if (trial) put("trial", std::to_string(*trial));
        if (!variant.empty()) put("variant", variant);
        return os.str();
    }
};

enum class Status { Pass, Fail, NotApplicable };

inline const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "na";
    }
}

struct CheckResult {
    std::string id;
    u64 p = 0;  // 0 for prime-independent identity checks
    Params params;
    Status status = Status::Fail;
    bool achieved_known = false;  // false: no valuation to report (NA, failed identity)
    Valuation achieved;           // valid only when achieved_known
    int required_e = 0;           // 0: exact identity
    std::string engine;           // "exact" | "padic" | "both"
    std::string na_reason;
    std::string lhs_residue, rhs_residue;  // diagnostic residues mod p^e (or exact values)
    double millis = 0.0;
};

// Grid-shaping knobs the caller may override.
struct GridCtx {
    std::vector<Rat> alphas;  // replacement alpha grid; empty = default
    int trials = 100;         // instances for randomized identity checks
};

// ---------------------------------------------------------------------------
// default grids

inline const std::vector<Rat>& default_rational_alphas() {
    static const std::vector<Rat> v = {rat(-1, 2), rat(-1, 3), rat(-1, 4),
                                       rat(-1, 6), rat(1, 5),  rat(2, 3)};
    return v;
}

// Integers 0..p-1 (50 evenly spaced once p > 50) plus the stock rationals
// whose denominators are prime to p.
inline std::vector<Rat> default_alpha_grid(u64 p) {
    std::vector<Rat> g;
    if (p <= 50) {
        for (u64 a = 0; a < p; ++a) g.push_back(rat(static_cast<i64>(a)));
    } else {
        for (u64 i = 0; i < 50; ++i)
            g.push_back(rat(static_cast<i64>(i * (p - 1) / 49)));
    }
    for (const Rat& q : default_rational_alphas())
        if (q.get_den() % static_cast<unsigned long>(p) != 0) g.push_back(q);
    return g;
}

// t values for the pure-shift lemmas; -2/5 deliberately fails p-integrality
// at p = 5 so the NA path stays exercised.
inline const std::vector<Rat>& default_t_grid() {
    static const std::vector<Rat> v = {rat(1), rat(-1, 2), rat(1, 3), rat(-2, 5), rat(3)};
    return v;
}

inline const std::vector<std::pair<int, int>>& default_rs_grid() {
    static const std::vector<std::pair<int, int>> v = {{1, 2}, {2, 1}, {1, 4},
                                                       {4, 1}, {2, 3}, {3, 2}};
    return v;
}

// Deterministic per-instance RNG for the randomized exact identities.
inline u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::mt19937_64 trial_rng(const std::string& id, int trial) {
    return std::mt19937_64(fnv1a(id) + 0x9e3779b97f4a7c15ull * static_cast<u64>(trial + 1));
}

// ---------------------------------------------------------------------------
// engine-generic building blocks

// C(x, m) = prod_{j=0}^{m-1} (x - j)/(j + 1) as an engine value.
template <Engine E>
typename E::V binom_v(const E& eng, const Rat& x, u64 m) {
    typename E::V acc = eng.make(1);
    typename E::V xv = eng.make(x);
    for (u64 j = 0; j < m; ++j)
        acc = acc * (xv - eng.make(static_cast<i64>(j))) / eng.make(static_cast<i64>(j) + 1);
    return acc;
}

enum class CentralWeight { h2_over_k, h2_over_odd, one };

// sum over k of w_k * C(2k,k)^2 / 16^k with w_k one of H_k^{(2)}/k,
// H_k^{(2)}/(2k-1), or 1 (the last includes the k = 0 term when k0 = 0).
template <Engine E>
typename E::V central_sum(const E& eng, u64 k0, u64 n, CentralWeight w) {
    typename E::V acc = (w == CentralWeight::one && k0 == 0) ? eng.make(1) : eng.make(0);
    typename E::V d = eng.make(1);  // C(2k,k)^2 / 16^k
    typename E::V h2 = eng.make(0);
    for (u64 k = 1; k <= n; ++k) {
        typename E::V kk = eng.make(static_cast<i64>(k));
        typename E::V odd = eng.make(2 * static_cast<i64>(k) - 1);
        d = d * odd * odd / (eng.make(4) * kk * kk);
        h2 = h2 + eng.make(1) / (kk * kk);
        if (k < k0) continue;
        switch (w) {
            case CentralWeight::h2_over_k: acc = acc + h2 * d / kk; break;
            case CentralWeight::h2_over_odd: acc = acc + h2 * d / odd; break;
            case CentralWeight::one: acc = acc + d; break;
        }
    }
    return acc;
}

// sum_{k=k0}^{n} C(alpha,k) C(-1-alpha,k), optionally weighted by H_k^{(2)}
// (the weighted form starts at k = 1, the plain form at k = 0).
template <Engine E>
typename E::V binom_pair_sum(const E& eng, const Rat& alpha, u64 n, bool weight_h2) {
    typename E::V acc = weight_h2 ? eng.make(0) : eng.make(1);
    typename E::V b1 = eng.make(1), b2 = eng.make(1);
    typename E::V h2 = eng.make(0);
    typename E::V av = eng.make(alpha);
    typename E::V m1a = -(eng.make(1)) - av;
    for (u64 k = 1; k <= n; ++k) {
        typename E::V kk = eng.make(static_cast<i64>(k));
        b1 = b1 * (av - kk + eng.make(1)) / kk;
        b2 = b2 * (m1a - kk + eng.make(1)) / kk;
        if (weight_h2) {
            h2 = h2 + eng.make(1) / (kk * kk);
            acc = acc + b1 * b2 * h2;
        } else {
            acc = acc + b1 * b2;
        }
    }
    return acc;
}

// sum_{k=1}^{n} -(H_k^{(2)}/k) C(alpha,k) C(-1-alpha,k-1). The second
// binomial lags one step behind the first, which keeps every summand free of
// the alpha + k pole.
template <Engine E>
typename E::V shifted_pair_sum(const E& eng, const Rat& alpha, u64 n) {
    typename E::V acc = eng.make(0);
    typename E::V b1 = eng.make(1);   // C(alpha, k)
    typename E::V b2m = eng.make(1);  // C(-1-alpha, k-1)
    typename E::V h2 = eng.make(0);
    typename E::V av = eng.make(alpha);
    typename E::V m1a = -(eng.make(1)) - av;
    for (u64 k = 1; k <= n; ++k) {
        typename E::V kk = eng.make(static_cast<i64>(k));
        h2 = h2 + eng.make(1) / (kk * kk);
        b1 = b1 * (av - kk + eng.make(1)) / kk;
        acc = acc - h2 * b1 * b2m / kk;
        b2m = b2m * (m1a - kk + eng.make(1)) / kk;
    }
    return acc;
}

// sum_{k=1}^{a} 1/(pt + k)^3.
template <Engine E>
typename E::V cube_shift_sum(const E& eng, const Rat& t, u64 a) {
    typename E::V acc = eng.make(0);
    typename E::V pt = eng.make(static_cast<i64>(eng.p)) * eng.make(t);
    for (u64 k = 1; k <= a; ++k) {
        typename E::V den = pt + eng.make(static_cast<i64>(k));
        acc = acc + eng.make(1) / (den * den * den);
    }
    return acc;
}

// The two interior polynomials of the half/full-range expansions:
//   G(a,t) = -2 H_a^{(3)} + 6pt H_a^{(4)} + 2 p^2 t (1 - 5t) H_a^{(5)}
//   K(a,t) = -2 H_a^{(3)} + 8pt H_a^{(4)} - 20 p^2 t^2 H_a^{(5)} + 2 p^2 t W(a)
template <Engine E>
typename E::V eval_G(const E& eng, u64 a, const Rat& t) {
    typename E::V P = eng.make(static_cast<i64>(eng.p));
    typename E::V T = eng.make(t);
    return eng.make(-2) * harmonic(eng, a, 3) + eng.make(6) * P * T * harmonic(eng, a, 4) +
           eng.make(2) * P * P * T * (eng.make(1) - eng.make(5) * T) * harmonic(eng, a, 5);
}

template <Engine E>
typename E::V eval_K(const E& eng, u64 a, const Rat& t) {
    typename E::V P = eng.make(static_cast<i64>(eng.p));
    typename E::V T = eng.make(t);
    return eng.make(-2) * harmonic(eng, a, 3) + eng.make(8) * P * T * harmonic(eng, a, 4) -
           eng.make(20) * P * P * T * T * harmonic(eng, a, 5) +
           eng.make(2) * P * P * T * weighted_2h2k(eng, a);
}

inline Rat two_pow_rat(u64 n) {
    Int x(1);
    x <<= n;
    return Rat(x);
}

// ---------------------------------------------------------------------------
// shared caches: per-prime harmonic tables and memoized S_n(x) values

class TableStore {
  public:
    static TableStore& instance() {
        static TableStore s;
        return s;
    }

    std::shared_ptr<const HarmonicTable<ExactEngine>> exact_table(u64 p) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = ex_.find(p);
            if (it != ex_.end()) return it->second;
        }
        ExactEngine eng{p, 0};
        auto tb = std::make_shared<const HarmonicTable<ExactEngine>>(eng);
        std::lock_guard<std::mutex> lk(mu_);
        return ex_.emplace(p, std::move(tb)).first->second;
    }

    std::shared_ptr<const HarmonicTable<PadicEngine>> padic_table(u64 p, int N) {
        const auto key = std::make_pair(p, N);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = pa_.find(key);
            if (it != pa_.end()) return it->second;
        }
        PadicEngine eng{p, N};
        auto tb = std::make_shared<const HarmonicTable<PadicEngine>>(eng);
        std::lock_guard<std::mutex> lk(mu_);
        return pa_.emplace(key, std::move(tb)).first->second;
    }

    // S_n(x) is shared by several checks at the same (p, n, x); memoize it.
    XRat s_value(const ExactEngine& eng, u64 n, const Rat& x) {
        const auto key = std::make_tuple(eng.p, n, rat_str(x));
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = sx_.find(key);
            if (it != sx_.end()) return XRat(it->second);
        }
        XRat v = s_n(eng, n, eng.make(x));
        std::lock_guard<std::mutex> lk(mu_);
        sx_.emplace(key, v.q);
        return v;
    }

    PAdic s_value(const PadicEngine& eng, u64 n, const Rat& x) {
        const auto key = std::make_tuple(eng.p, eng.N, n, rat_str(x));
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = sp_.find(key);
            if (it != sp_.end()) return it->second;
        }
        PAdic v = s_n(eng, n, eng.make(x));
        std::lock_guard<std::mutex> lk(mu_);
        return sp_.emplace(key, v).first->second;
    }

    void clear() {
        std::lock_guard<std::mutex> lk(mu_);
        ex_.clear();
        pa_.clear();
        sx_.clear();
        sp_.clear();
    }

  private:
    TableStore() = default;
    std::mutex mu_;
    std::map<u64, std::shared_ptr<const HarmonicTable<ExactEngine>>> ex_;
    std::map<std::pair<u64, int>, std::shared_ptr<const HarmonicTable<PadicEngine>>> pa_;
    std::map<std::tuple<u64, u64, std::string>, Rat> sx_;
    std::map<std::tuple<u64, int, u64, std::string>, PAdic> sp_;
};

template <Engine E>
typename E::V s_n_cached(const E& eng, u64 n, const Rat& x) {
    return TableStore::instance().s_value(eng, n, x);
}

// ---------------------------------------------------------------------------
// check definitions

// Evaluation context handed to every check body.
template <Engine E>
struct Ctx {
    const E& eng;
    const HarmonicTable<E>* tab;  // null for prime-independent identities
    using V = typename E::V;

    u64 p() const { return eng.p; }
    V mk(i64 n) const { return eng.make(n); }
    V mk(const Rat& q) const { return eng.make(q); }
    V pv() const { return eng.make(static_cast<i64>(eng.p)); }
    V B(u64 n) const { return eng.make(bernoulli_exact(n)); }
    V qp2() const { return eng.make(fermat_quotient(2, eng.p)); }
    const V& H(u64 k, int r) const { return tab->H(k, r); }
    const V& W(u64 k) const { return tab->w4.at(k); }
    const V& oddrec(u64 k) const { return tab->oddrec.at(k); }
};

struct CheckDef {
    std::string id;
    std::string statement;     // self-contained ASCII statement
    std::string modulus_desc;  // "p^3", "exact", ...
    std::string applic_desc;   // "p > 5", ...
    bool exact_identity = false;  // equality of rationals; no prime involved
    bool exact_only = false;      // evaluator exists only on the exact engine
    bool alpha_grid = false;      // consumes the --alphas override
    bool residue_rhs = false;     // rhs only defined mod p^e; achieved is capped at e

    std::function<int(u64, const Params&)> required;            // target exponent e
    std::function<std::string(u64, const Params&)> applicable;  // "" = applicable
    std::function<std::vector<Params>(u64, const GridCtx&)> grid;
    std::function<std::pair<XRat, XRat>(const ExactEngine&, const HarmonicTable<ExactEngine>*,
                                        const Params&)>
        eval_exact;
    std::function<std::pair<PAdic, PAdic>(const PadicEngine&, const HarmonicTable<PadicEngine>*,
                                          const Params&)>
        eval_padic;
};

namespace detail {

template <typename F>
void set_eval(CheckDef& d, F f) {
    d.eval_exact = [f](const ExactEngine& eng, const HarmonicTable<ExactEngine>* tab,
                       const Params& q) { return f(Ctx<ExactEngine>{eng, tab}, q); };
    d.eval_padic = [f](const PadicEngine& eng, const HarmonicTable<PadicEngine>* tab,
                       const Params& q) { return f(Ctx<PadicEngine>{eng, tab}, q); };
}

template <typename F>
void set_eval_exact(CheckDef& d, F f) {
    d.exact_only = true;
    d.eval_exact = [f](const ExactEngine& eng, const HarmonicTable<ExactEngine>* tab,
                       const Params& q) { return f(Ctx<ExactEngine>{eng, tab}, q); };
}

inline std::string alpha_gate(u64 p, const Params& q) {
    if (!q.alpha) throw malformed_params("check requires parameter alpha");
    if (!p_integral(*q.alpha, p)) return "p divides the denominator of alpha";
    return "";
}

inline std::string t_gate(u64 p, const Params& q) {
    if (!q.t) throw malformed_params("check requires parameter t");
    if (!p_integral(*q.t, p)) return "p divides the denominator of t";
    return "";
}

inline std::vector<Params> alpha_grid_params(u64 p, const GridCtx& gc) {
    std::vector<Params> g;
    const std::vector<Rat> as = gc.alphas.empty() ? default_alpha_grid(p) : gc.alphas;
    g.reserve(as.size());
    for (const Rat& a : as) {
        Params q;
        q.alpha = a;
        g.push_back(std::move(q));
    }
    return g;
}

inline std::vector<Params> empty_params(u64, const GridCtx&) { return {Params{}}; }

// lhs-vs-rhs of the corrected half-range expansions; see the -corrected ids.
template <Engine E>
typename E::V half_cross_term(const Ctx<E>& ctx, u64 a, const Rat& t) {
    return ctx.mk(2) * ctx.pv() * ctx.mk(t) * ctx.H((ctx.p() - 1) / 2, 2) * ctx.H(a, 2);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the registry

inline std::vector<CheckDef> build_registry() {
    using detail::set_eval;
    using detail::set_eval_exact;
    std::vector<CheckDef> reg;
    reg.reserve(40);

    // -- harmonic sums H_{p-1}^{(r)} against Bernoulli numbers ---------------
    {
        CheckDef d;
        d.id = "hp1r";
        d.statement =
            "H_{p-1}^{(r)} == -(r(r+1)/(2(r+2))) p^2 B_{p-r-2} (odd r) / (r/(r+1)) p B_{p-r-1} "
            "(even r)";
        d.modulus_desc = "p^3 odd r, p^2 even r";
        d.applic_desc = "p > r+2, r in 1..6";
        d.required = [](u64, const Params& q) { return (*q.r % 2) ? 3 : 2; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || *q.r < 1 || *q.r > 6) throw malformed_params("hp1r: r must be in 1..6");
            return p > static_cast<u64>(*q.r) + 2 ? "" : "requires p > r+2";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (int r = 1; r <= 6; ++r) {
                Params q;
                q.r = r;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const int r = *q.r;
            const u64 p = ctx.p();
            auto lhs = harmonic(ctx.eng, p - 1, r);
            auto P = ctx.pv();
            auto rhs = (r % 2) ? ctx.mk(rat(-static_cast<i64>(r) * (r + 1), 2 * (r + 2))) * P * P *
                                     ctx.B(p - static_cast<u64>(r) - 2)
                               : ctx.mk(rat(r, r + 1)) * P * ctx.B(p - static_cast<u64>(r) - 1);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "hp12r";
        d.statement =
            "H_{(p-1)/2}^{(r)} == -2 q_p(2) (r = 1) / -((2^r-2)/r) B_{p-r} (odd r > 1) / "
            "(r(2^{r+1}-1)/(2(r+1))) p B_{p-r-1} (even r)";
        d.modulus_desc = "p odd r, p^2 even r";
        d.applic_desc = "p > r+2, r in 1..6";
        d.required = [](u64, const Params& q) { return (*q.r % 2) ? 1 : 2; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || *q.r < 1 || *q.r > 6) throw malformed_params("hp12r: r must be in 1..6");
            return p > static_cast<u64>(*q.r) + 2 ? "" : "requires p > r+2";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (int r = 1; r <= 6; ++r) {
                Params q;
                q.r = r;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const int r = *q.r;
            const u64 p = ctx.p();
            auto lhs = harmonic(ctx.eng, (p - 1) / 2, r);
            using V = typename decltype(ctx)::V;
            V rhs = ctx.mk(0);
            if (r == 1) {
                rhs = ctx.mk(-2) * ctx.qp2();
            } else if (r % 2) {
                rhs = ctx.mk(rat(-((1 << r) - 2), r)) * ctx.B(p - static_cast<u64>(r));
            } else {
                rhs = ctx.mk(rat(static_cast<i64>(r) * ((1 << (r + 1)) - 1), 2 * (r + 1))) *
                      ctx.pv() * ctx.B(p - static_cast<u64>(r) - 1);
            }
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- central binomial sums ------------------------------------------------
    {
        CheckDef d;
        d.id = "sun-full-1.3a";
        d.statement =
            "sum_{k=1}^{p-1} H_k^{(2)} C(2k,k)^2/(k 16^k) == -12 H_{p-1}/p^2 + (7/10) p^2 B_{p-5}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 3";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 3 ? "" : "requires p > 3";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = central_sum(ctx.eng, 1, p - 1, CentralWeight::h2_over_k);
            auto P = ctx.pv();
            auto rhs = ctx.mk(-12) * ctx.H(p - 1, 1) / (P * P) +
                       ctx.mk(rat(7, 10)) * P * P * ctx.B(p - 5);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "sun-tail-1.3";
        d.statement = "sum_{k=(p+1)/2}^{p-1} H_k^{(2)} C(2k,k)^2/(k 16^k) == (31/2) p^2 B_{p-5}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 3";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 3 ? "" : "requires p > 3";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = central_sum(ctx.eng, (p + 1) / 2, p - 1, CentralWeight::h2_over_k);
            auto P = ctx.pv();
            auto rhs = ctx.mk(rat(31, 2)) * P * P * ctx.B(p - 5);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "zhsun";
        d.statement = "sum_{k=0}^{p-1} C(alpha,k) C(-1-alpha,k) == (-1)^a, a = <alpha>_p";
        d.modulus_desc = "p^2";
        d.applic_desc = "p-integral alpha";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 2; };
        d.applicable = [](u64 p, const Params& q) { return detail::alpha_gate(p, q); };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 a = alpha_split(*q.alpha, p).a;
            auto lhs = binom_pair_sum(ctx.eng, *q.alpha, p - 1, false);
            auto rhs = ctx.mk((a & 1) ? -1 : 1);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "rv-mortenson";
        d.statement = "sum_{k=0}^{p-1} C(2k,k)^2/16^k == (-1)^{(p-1)/2}";
        d.modulus_desc = "p^2";
        d.applic_desc = "p > 3";
        d.required = [](u64, const Params&) { return 2; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 3 ? "" : "requires p > 3";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = central_sum(ctx.eng, 0, p - 1, CentralWeight::one);
            auto rhs = ctx.mk((((p - 1) / 2) & 1) ? -1 : 1);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "euler-h2";
        d.statement =
            "sum_{k=1}^{p-1} C(alpha,k) C(-1-alpha,k) H_k^{(2)} == -E_{p^2-p-2}(-alpha)";
        d.modulus_desc = "p^2";
        d.applic_desc = "p <= 31 (cost bound), p-integral alpha";
        d.alpha_grid = true;
        d.residue_rhs = true;
        d.required = [](u64, const Params&) { return 2; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p > 31) return "requires p <= 31 (Euler polynomial cost bound)";
            return detail::alpha_gate(p, q);
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            auto lhs = binom_pair_sum(ctx.eng, *q.alpha, p - 1, true);
            const u64 m = p * p;
            const u64 r = euler_poly_mod(p * p - p - 2, Rat(-*q.alpha), p, 2);
            auto rhs = ctx.mk(rat(static_cast<i64>((m - r) % m)));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- the full/half expansions of S_n(alpha) -------------------------------
    {
        CheckDef d;
        d.id = "thm11-full";
        d.statement = "S_{p-1}(alpha) == 2 p^2 t^2 B_{p-5} - (2/5) p^2 t B_{p-5} + G(a,t)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            return detail::alpha_gate(p, q);
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs = s_n_cached(ctx.eng, p - 1, *q.alpha);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = ctx.mk(2) * P * P * T * T * B5 - ctx.mk(rat(2, 5)) * P * P * T * B5 +
                       eval_G(ctx.eng, sp.a, sp.t);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "thm11-half";
        d.statement = "S_{(p-1)/2}(alpha) == 4 p^2 t^2 B_{p-5} - (31/5) p^2 t B_{p-5} + K(a,t)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs = s_n_cached(ctx.eng, (p - 1) / 2, *q.alpha);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = ctx.mk(4) * P * P * T * T * B5 - ctx.mk(rat(31, 5)) * P * P * T * B5 +
                       eval_K(ctx.eng, sp.a, sp.t);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "thm13-full";
        d.statement =
            "sum_{k=1}^{p-1} -(H_k^{(2)}/k) C(alpha,k) C(-1-alpha,k-1) == -1/alpha^3 + (p^2 "
            "t(t+1)/(alpha a^2)) (1/alpha^2 + 2p H_a/a^2 - p(2t+1)/(alpha^2 a) + (2/3) p B_{p-3})";
        d.modulus_desc = "p^4";
        d.applic_desc = "p > 5, p-integral alpha, p does not divide alpha";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 4; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (*q.alpha == 0) return "alpha = 0";
            if (alpha_split(*q.alpha, p).a == 0) return "p divides alpha";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs = shifted_pair_sum(ctx.eng, *q.alpha, p - 1);
            auto ONE = ctx.mk(1);
            auto A = ctx.mk(*q.alpha);
            auto av = ctx.mk(static_cast<i64>(sp.a));
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto inner = ONE / (A * A) + ctx.mk(2) * P * ctx.H(sp.a, 1) / (av * av) -
                         P * (ctx.mk(2) * T + ONE) / (A * A * av) +
                         ctx.mk(rat(2, 3)) * P * ctx.B(p - 3);
            auto rhs = -(ONE / (A * A * A)) + P * P * T * (T + ONE) / (A * av * av) * inner;
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "thm13-half";
        d.statement =
            "sum_{k=1}^{(p-1)/2} -(H_k^{(2)}/k) C(alpha,k) C(-1-alpha,k-1) == -1/alpha^3 + "
            "(pt/(alpha a)) (1/alpha^2 + (7/3) p B_{p-3} - pt/(alpha^2 a) + (2p/a^2) "
            "sum_{j=1}^{a} 1/(2j-1))";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, p does not divide alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (*q.alpha == 0) return "alpha = 0";
            const u64 a = alpha_split(*q.alpha, p).a;
            if (a == 0) return "p divides alpha";
            if (a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs = shifted_pair_sum(ctx.eng, *q.alpha, (p - 1) / 2);
            auto ONE = ctx.mk(1);
            auto A = ctx.mk(*q.alpha);
            auto av = ctx.mk(static_cast<i64>(sp.a));
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto inner = ONE / (A * A) + ctx.mk(rat(7, 3)) * P * ctx.B(p - 3) -
                         P * T / (A * A * av) +
                         ctx.mk(2) * P / (av * av) * ctx.oddrec(sp.a);
            auto rhs = -(ONE / (A * A * A)) + P * T / (A * av) * inner;
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "cor-full";
        d.statement =
            "sum_{k=1}^{p-1} H_k^{(2)} C(2k,k)^2/((2k-1) 16^k) == 4 + p^2 (4 + 8p - 16 p q_p(2) + "
            "(2/3) p B_{p-3})";
        d.modulus_desc = "p^4";
        d.applic_desc = "p > 5";
        d.required = [](u64, const Params&) { return 4; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 5 ? "" : "requires p > 5";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = central_sum(ctx.eng, 1, p - 1, CentralWeight::h2_over_odd);
            auto P = ctx.pv();
            auto rhs = ctx.mk(4) + P * P *
                                       (ctx.mk(4) + ctx.mk(8) * P - ctx.mk(16) * P * ctx.qp2() +
                                        ctx.mk(rat(2, 3)) * P * ctx.B(p - 3));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "cor-half";
        d.statement =
            "sum_{k=1}^{(p-1)/2} H_k^{(2)} C(2k,k)^2/((2k-1) 16^k) == 4 - p (4 + 8 p q_p(2) + "
            "(7/3) p B_{p-3})";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 5 ? "" : "requires p > 5";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = central_sum(ctx.eng, 1, (p - 1) / 2, CentralWeight::h2_over_odd);
            auto P = ctx.pv();
            auto rhs = ctx.mk(4) - P * (ctx.mk(4) + ctx.mk(8) * P * ctx.qp2() +
                                        ctx.mk(rat(7, 3)) * P * ctx.B(p - 3));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- exact identities ------------------------------------------------------
    {
        CheckDef d;
        d.id = "lem-id";
        d.statement =
            "sum_{k=1}^{n} C(x,k) C(-x,k) H_k^{(2)} == -1/x^2 + C(x-1,n) C(-x-1,n) (1/x^2 + "
            "H_n^{(2)}) exactly";
        d.modulus_desc = "exact";
        d.applic_desc = "rational x != 0, n >= 1";
        d.exact_identity = true;
        d.required = [](u64, const Params&) { return 0; };
        d.applicable = [](u64, const Params& q) -> std::string {
            if (!q.x || !q.n) throw malformed_params("lem-id: requires x and n");
            if (*q.x == 0) throw malformed_params("lem-id: x must be nonzero");
            return "";
        };
        d.grid = [](u64, const GridCtx& gc) {
            std::vector<Params> g;
            for (int i = 0; i < gc.trials; ++i) {
                auto rng = trial_rng("lem-id", i);
                std::uniform_int_distribution<i64> num(-30, 30), den(1, 17), nn(1, 40);
                i64 a = num(rng);
                if (a == 0) a = 1;
                Params q;
                q.x = rat(a, den(rng));
                q.n = static_cast<int>(nn(rng));
                q.trial = i;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval_exact(d, [](Ctx<ExactEngine> ctx, const Params& q) {
            const Rat& x = *q.x;
            const u64 n = static_cast<u64>(*q.n);
            auto ONE = ctx.mk(1);
            auto xv = ctx.mk(x);
            auto b1 = ONE, b2 = ONE, h2 = ctx.mk(0), acc = ctx.mk(0);
            for (u64 k = 1; k <= n; ++k) {
                auto kk = ctx.mk(static_cast<i64>(k));
                b1 = b1 * (xv - kk + ONE) / kk;
                b2 = b2 * (-xv - kk + ONE) / kk;
                h2 = h2 + ONE / (kk * kk);
                acc = acc + b1 * b2 * h2;
            }
            auto rhs = -(ONE / (xv * xv)) +
                       binom_v(ctx.eng, Rat(x - 1), n) * binom_v(ctx.eng, Rat(-x - 1), n) *
                           (ONE / (xv * xv) + h2);
            return std::pair(acc, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- binomial product lemmas ----------------------------------------------
    {
        CheckDef d;
        d.id = "lem23-full";
        d.statement =
            "C(pt+k-1, p-1) C(-pt-k-1, p-1) == (p^2 t(t+1)/k^2)(1 + 2p H_k - p/k - 2pt/k)";
        d.modulus_desc = "p^4";
        d.applic_desc = "p >= 5, p-integral t, 1 <= k <= p-1";
        d.required = [](u64, const Params&) { return 4; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.k) throw malformed_params("lem23-full: requires k");
            return detail::t_gate(p, q);
        };
        d.grid = [](u64 p, const GridCtx&) {
            std::vector<Params> g;
            for (const Rat& t : default_t_grid())
                for (u64 k = 1; k <= p - 1; ++k) {
                    Params q;
                    q.t = t;
                    q.k = static_cast<int>(k);
                    g.push_back(std::move(q));
                }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 k = static_cast<u64>(*q.k);
            const Rat pt = Rat(*q.t * rat(static_cast<i64>(p)));
            auto lhs = binom_v(ctx.eng, Rat(pt + rat(static_cast<i64>(k) - 1)), p - 1) *
                       binom_v(ctx.eng, Rat(-pt - rat(static_cast<i64>(k) + 1)), p - 1);
            auto ONE = ctx.mk(1);
            auto P = ctx.pv();
            auto T = ctx.mk(*q.t);
            auto kv = ctx.mk(static_cast<i64>(k));
            auto rhs = P * P * T * (T + ONE) / (kv * kv) *
                       (ONE + ctx.mk(2) * P * ctx.H(k, 1) - P / kv - ctx.mk(2) * P * T / kv);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem23-half";
        d.statement =
            "C(pt+k-1, (p-1)/2) C(-pt-k-1, (p-1)/2) == (pt/k)(1 - pt/k + 2p H_{2k} - p H_k)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p >= 5, p-integral t, 1 <= k <= (p-1)/2";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.k) throw malformed_params("lem23-half: requires k");
            return detail::t_gate(p, q);
        };
        d.grid = [](u64 p, const GridCtx&) {
            std::vector<Params> g;
            for (const Rat& t : default_t_grid())
                for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                    Params q;
                    q.t = t;
                    q.k = static_cast<int>(k);
                    g.push_back(std::move(q));
                }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 k = static_cast<u64>(*q.k);
            const u64 half = (p - 1) / 2;
            const Rat pt = Rat(*q.t * rat(static_cast<i64>(p)));
            auto lhs = binom_v(ctx.eng, Rat(pt + rat(static_cast<i64>(k) - 1)), half) *
                       binom_v(ctx.eng, Rat(-pt - rat(static_cast<i64>(k) + 1)), half);
            auto ONE = ctx.mk(1);
            auto P = ctx.pv();
            auto kv = ctx.mk(static_cast<i64>(k));
            auto PT = P * ctx.mk(*q.t);
            auto rhs = PT / kv *
                       (ONE - PT / kv + ctx.mk(2) * P * ctx.H(2 * k, 1) - P * ctx.H(k, 1));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem23-fact-a";
        d.statement = "(-1)^k C((p-1)/2+k, k) C((p-1)/2, k) == C(2k,k)^2/16^k";
        d.modulus_desc = "p^2";
        d.applic_desc = "p >= 5, 1 <= k <= (p-1)/2";
        d.required = [](u64, const Params&) { return 2; };
        d.applicable = [](u64, const Params& q) -> std::string {
            if (!q.k) throw malformed_params("lem23-fact-a: requires k");
            return "";
        };
        d.grid = [](u64 p, const GridCtx&) {
            std::vector<Params> g;
            for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                Params q;
                q.k = static_cast<int>(k);
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 k = static_cast<u64>(*q.k);
            const i64 half = static_cast<i64>((p - 1) / 2);
            auto lhs = ctx.mk((k & 1) ? -1 : 1) *
                       binom_v(ctx.eng, rat(half + static_cast<i64>(k)), k) *
                       binom_v(ctx.eng, rat(half), k);
            auto rhs = binom_v(ctx.eng, rat(2 * static_cast<i64>(k)), k) *
                       binom_v(ctx.eng, rat(2 * static_cast<i64>(k)), k) /
                       pow_v(ctx.eng, ctx.mk(16), k);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem23-fact-b";
        d.statement = "C((p-1)/2, k)^2 == (C(2k,k)^2/16^k)(1 - p(2 H_{2k} - H_k))";
        d.modulus_desc = "p^2";
        d.applic_desc = "p >= 5, 1 <= k <= (p-1)/2";
        d.required = [](u64, const Params&) { return 2; };
        d.applicable = [](u64, const Params& q) -> std::string {
            if (!q.k) throw malformed_params("lem23-fact-b: requires k");
            return "";
        };
        d.grid = [](u64 p, const GridCtx&) {
            std::vector<Params> g;
            for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                Params q;
                q.k = static_cast<int>(k);
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 k = static_cast<u64>(*q.k);
            const i64 half = static_cast<i64>((p - 1) / 2);
            auto b = binom_v(ctx.eng, rat(half), k);
            auto lhs = b * b;
            auto c = binom_v(ctx.eng, rat(2 * static_cast<i64>(k)), k);
            auto rhs = c * c / pow_v(ctx.eng, ctx.mk(16), k) *
                       (ctx.mk(1) -
                        ctx.pv() * (ctx.mk(2) * ctx.H(2 * k, 1) - ctx.H(k, 1)));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- double harmonic sums --------------------------------------------------
    {
        CheckDef d;
        d.id = "mhs-p1";
        d.statement = "H_{p-1}(r,s) == (-1)^s C(r+s,r) B_{p-r-s}/(r+s)";
        d.modulus_desc = "p";
        d.applic_desc = "p > r+s+1";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || !q.s) throw malformed_params("mhs-p1: requires r and s");
            return p > static_cast<u64>(*q.r + *q.s) + 1 ? "" : "requires p > r+s+1";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (auto [r, s] : default_rs_grid()) {
                Params q;
                q.r = r;
                q.s = s;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const int r = *q.r, s = *q.s;
            auto lhs = mhs(ctx.eng, p - 1, Signature({r, s}));
            auto rhs = ctx.mk(rat(((s & 1) ? -1 : 1) *
                                      static_cast<i64>(binom_u64(r + s, r)),
                                  r + s)) *
                       ctx.B(p - static_cast<u64>(r + s));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "mhs-p12";
        d.statement = "H_{(p-1)/2}(r,s) == (B_{p-r-s}/(2(r+s))) ((-1)^s C(r+s,r) + 2^{r+s} - 2)";
        d.modulus_desc = "p";
        d.applic_desc = "p > r+s+1";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || !q.s) throw malformed_params("mhs-p12: requires r and s");
            return p > static_cast<u64>(*q.r + *q.s) + 1 ? "" : "requires p > r+s+1";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (auto [r, s] : default_rs_grid()) {
                Params q;
                q.r = r;
                q.s = s;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const int r = *q.r, s = *q.s;
            auto lhs = mhs(ctx.eng, (p - 1) / 2, Signature({r, s}));
            const i64 inner = ((s & 1) ? -1 : 1) * static_cast<i64>(binom_u64(r + s, r)) +
                              (static_cast<i64>(1) << (r + s)) - 2;
            auto rhs = ctx.B(p - static_cast<u64>(r + s)) * ctx.mk(rat(inner, 2 * (r + s)));
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- shift lemmas for S_n --------------------------------------------------
    {
        CheckDef d;
        d.id = "lem-shift-full";
        d.statement =
            "S_{p-1}(alpha) - S_{p-1}(pt) == 2 p^2 t(t+1) H_a^{(5)} - 2 sum_{k=1}^{a} 1/(pt+k)^3";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            return detail::alpha_gate(p, q);
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            const Rat pt = Rat(*q.alpha - rat(static_cast<i64>(sp.a)));
            auto lhs = s_n_cached(ctx.eng, p - 1, *q.alpha) - s_n_cached(ctx.eng, p - 1, pt);
            auto ONE = ctx.mk(1);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto rhs = ctx.mk(2) * P * P * T * (T + ONE) * ctx.H(sp.a, 5) -
                       ctx.mk(2) * cube_shift_sum(ctx.eng, sp.t, sp.a);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-shift-half";
        d.statement =
            "S_{(p-1)/2}(alpha) - S_{(p-1)/2}(pt) == 2pt H_a^{(4)} - 8 p^2 t^2 H_a^{(5)} + 2 p^2 "
            "t W(a) - 2 sum_{k=1}^{a} 1/(pt+k)^3";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 half = (p - 1) / 2;
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            const Rat pt = Rat(*q.alpha - rat(static_cast<i64>(sp.a)));
            auto lhs = s_n_cached(ctx.eng, half, *q.alpha) - s_n_cached(ctx.eng, half, pt);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto rhs = ctx.mk(2) * P * T * ctx.H(sp.a, 4) -
                       ctx.mk(8) * P * P * T * T * ctx.H(sp.a, 5) +
                       ctx.mk(2) * P * P * T * ctx.W(sp.a) -
                       ctx.mk(2) * cube_shift_sum(ctx.eng, sp.t, sp.a);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-spt";
        d.statement =
            "S_{p-1}(pt) == 2 p^2 t^2 B_{p-5} - (2/5) p^2 t B_{p-5} (full); S_{(p-1)/2}(pt) == 4 "
            "p^2 t^2 B_{p-5} - (31/5) p^2 t B_{p-5} (half)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 7, p-integral t";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (q.variant != "full" && q.variant != "half")
                throw malformed_params("lem-spt: variant must be full or half");
            if (p <= 7) return "requires p > 7";
            return detail::t_gate(p, q);
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (const char* v : {"full", "half"})
                for (const Rat& t : default_t_grid()) {
                    Params q;
                    q.variant = v;
                    q.t = t;
                    g.push_back(std::move(q));
                }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const bool full = q.variant == "full";
            const Rat pt = Rat(*q.t * rat(static_cast<i64>(p)));
            auto lhs = s_n_cached(ctx.eng, full ? p - 1 : (p - 1) / 2, pt);
            auto P = ctx.pv();
            auto T = ctx.mk(*q.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = full ? ctx.mk(2) * P * P * T * T * B5 - ctx.mk(rat(2, 5)) * P * P * T * B5
                            : ctx.mk(4) * P * P * T * T * B5 - ctx.mk(rat(31, 5)) * P * P * T * B5;
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-spt-fact";
        d.statement = "C(pt,k) C(-1-pt,k) == -(pt/k)(1 + pt/k)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p >= 5, p-integral t, 1 <= k <= p-1";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.k) throw malformed_params("lem-spt-fact: requires k");
            return detail::t_gate(p, q);
        };
        d.grid = [](u64 p, const GridCtx&) {
            std::vector<Params> g;
            for (const Rat& t : default_t_grid())
                for (u64 k = 1; k <= p - 1; ++k) {
                    Params q;
                    q.t = t;
                    q.k = static_cast<int>(k);
                    g.push_back(std::move(q));
                }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 k = static_cast<u64>(*q.k);
            const Rat pt = Rat(*q.t * rat(static_cast<i64>(p)));
            auto lhs = binom_v(ctx.eng, pt, k) * binom_v(ctx.eng, Rat(-1 - pt), k);
            auto kv = ctx.mk(static_cast<i64>(k));
            auto PT = ctx.mk(pt);
            auto rhs = -(PT / kv) * (ctx.mk(1) + PT / kv);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- odd-order half sums and their big-index Bernoulli route ---------------
    {
        CheckDef d;
        d.id = "lemh";
        d.statement = "H_{(p-1)/2}^{(3)} == 6 H_{p-1}/p^2 - (81/10) p^2 B_{p-5}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 7";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 7 ? "" : "requires p > 7";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = ctx.H((p - 1) / 2, 3);
            auto P = ctx.pv();
            auto rhs = ctx.mk(6) * ctx.H(p - 1, 1) / (P * P) -
                       ctx.mk(rat(81, 10)) * P * P * ctx.B(p - 5);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lemh-interior-a";
        d.statement =
            "H_{(p-1)/2}^{(3)} == -(93/8) p^2 B_{w-4} + 6 B_{w-2}/(w-2), w = p^3 - p^2 "
            "(big-index Bernoulli route)";
        d.modulus_desc = "p^3";
        d.applic_desc = "7 < p <= 60, exact engine";
        d.residue_rhs = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return (p > 7 && p <= 60) ? "" : "requires 7 < p <= 60 (big-index Bernoulli route)";
        };
        d.grid = detail::empty_params;
        set_eval_exact(d, [](Ctx<ExactEngine> ctx, const Params&) {
            const u64 p = ctx.p();
            const u64 m3 = p * p * p;
            const u64 w = m3 - p * p;
            const u64 b2 = bernoulli_big_mod(w - 2, p, 3);
            const u64 b4 = bernoulli_big_mod(w - 4, p, 3);
            const u64 lhsr = residue_mod(ctx.H((p - 1) / 2, 3).q, m3);
            u64 rhs = mulmod_u64(residue_mod(rat(-93, 8), m3),
                                 mulmod_u64((p * p) % m3, b4, m3), m3);
            rhs = (rhs + mulmod_u64(6, mulmod_u64(b2, invmod_u64((w - 2) % m3, m3), m3), m3)) % m3;
            return std::pair(XRat(rat(static_cast<i64>(lhsr))), XRat(rat(static_cast<i64>(rhs))));
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lemh-interior-b";
        d.statement =
            "B_{w-2}/(w-2) == B_{3p-5}/(3p-5) - 3 B_{2p-4}/(2p-4) + 3 B_{p-3}/(p-3) (bq); "
            "H_{p-1}/p^2 == same - (1/5) p^2 B_{p-5} (hq); w = p^3 - p^2";
        d.modulus_desc = "p^3";
        d.applic_desc = "7 < p <= 60, exact engine";
        d.residue_rhs = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (q.variant != "bq" && q.variant != "hq")
                throw malformed_params("lemh-interior-b: variant must be bq or hq");
            return (p > 7 && p <= 60) ? "" : "requires 7 < p <= 60 (big-index Bernoulli route)";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (const char* v : {"bq", "hq"}) {
                Params q;
                q.variant = v;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval_exact(d, [](Ctx<ExactEngine> ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 m3 = p * p * p;
            const Rat small = Rat(bernoulli_exact(3 * p - 5) / rat(3 * static_cast<i64>(p) - 5) -
                                  rat(3) * bernoulli_exact(2 * p - 4) /
                                      rat(2 * static_cast<i64>(p) - 4) +
                                  rat(3) * bernoulli_exact(p - 3) / rat(static_cast<i64>(p) - 3));
            u64 lhsr, rhsr;
            if (q.variant == "bq") {
                const u64 w = m3 - p * p;
                const u64 b2 = bernoulli_big_mod(w - 2, p, 3);
                lhsr = mulmod_u64(b2, invmod_u64((w - 2) % m3, m3), m3);
                rhsr = residue_mod(small, m3);
            } else {
                const Rat hp1 = Rat(ctx.H(p - 1, 1).q / rat(static_cast<i64>(p * p)));
                lhsr = residue_mod(hp1, m3);
                rhsr = residue_mod(Rat(small - rat(1, 5) * rat(static_cast<i64>(p * p)) *
                                                   bernoulli_exact(p - 5)),
                                   m3);
            }
            return std::pair(XRat(rat(static_cast<i64>(lhsr))), XRat(rat(static_cast<i64>(rhsr))));
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lemh-interior-c";
        d.statement = "B_{w-4} == (4/5) B_{p-5} mod p, w = p^3 - p^2";
        d.modulus_desc = "p";
        d.applic_desc = "7 < p <= 60, exact engine";
        d.residue_rhs = true;
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return (p > 7 && p <= 60) ? "" : "requires 7 < p <= 60 (big-index Bernoulli route)";
        };
        d.grid = detail::empty_params;
        set_eval_exact(d, [](Ctx<ExactEngine> ctx, const Params&) {
            const u64 p = ctx.p();
            const u64 w = p * p * p - p * p;
            const u64 b4 = bernoulli_big_mod(w - 4, p, 3);
            const u64 rhsr = residue_mod(Rat(rat(4, 5) * bernoulli_exact(p - 5)), p);
            return std::pair(XRat(rat(static_cast<i64>(b4 % p))),
                             XRat(rat(static_cast<i64>(rhsr))));
        });
        reg.push_back(std::move(d));
    }

    // -- alternating sums -------------------------------------------------------
    {
        CheckDef d;
        d.id = "mhs-alt-r";
        d.statement =
            "H_{p-1}^{(-r)} == -(2(1-2^{p-r})/r) B_{p-r} (odd r) / -(r(1-2^{p-r-1})/(r+1)) p "
            "B_{p-r-1} (even r)";
        d.modulus_desc = "p";
        d.applic_desc = "p >= r+2, r in 1..5";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || *q.r < 1 || *q.r > 5)
                throw malformed_params("mhs-alt-r: r must be in 1..5");
            return p >= static_cast<u64>(*q.r) + 2 ? "" : "requires p >= r+2";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (int r = 1; r <= 5; ++r) {
                Params q;
                q.r = r;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const int r = *q.r;
            const u64 p = ctx.p();
            auto lhs = harmonic(ctx.eng, p - 1, -r);
            auto ONE = ctx.mk(1);
            using V = typename decltype(ctx)::V;
            V rhs = ctx.mk(0);
            if (r % 2) {
                rhs = ctx.mk(rat(-2, r)) * (ONE - ctx.mk(two_pow_rat(p - static_cast<u64>(r)))) *
                      ctx.B(p - static_cast<u64>(r));
            } else {
                rhs = ctx.mk(rat(-r, r + 1)) *
                      (ONE - ctx.mk(two_pow_rat(p - static_cast<u64>(r) - 1))) * ctx.pv() *
                      ctx.B(p - static_cast<u64>(r) - 1);
            }
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "mhs-alt-rs";
        d.statement =
            "H_{p-1}(-r,s) (neg-r) and H_{p-1}(r,-s) (neg-s) == (1-2^{p-r-s}) B_{p-r-s}/(r+s), "
            "r+s odd";
        d.modulus_desc = "p";
        d.applic_desc = "p >= r+s+2, r+s odd";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (!q.r || !q.s) throw malformed_params("mhs-alt-rs: requires r and s");
            if (q.variant != "neg-r" && q.variant != "neg-s")
                throw malformed_params("mhs-alt-rs: variant must be neg-r or neg-s");
            if ((*q.r + *q.s) % 2 == 0) throw malformed_params("mhs-alt-rs: r+s must be odd");
            return p >= static_cast<u64>(*q.r + *q.s) + 2 ? "" : "requires p >= r+s+2";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (const char* v : {"neg-r", "neg-s"})
                for (auto [r, s] : default_rs_grid()) {
                    if ((r + s) % 2 == 0) continue;
                    Params q;
                    q.variant = v;
                    q.r = r;
                    q.s = s;
                    g.push_back(std::move(q));
                }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const int r = *q.r, s = *q.s;
            const bool neg_r = q.variant == "neg-r";
            auto lhs = mhs(ctx.eng, p - 1, Signature(neg_r ? std::vector<int>{-r, s}
                                                           : std::vector<int>{r, -s}));
            auto rhs = (ctx.mk(1) - ctx.mk(two_pow_rat(p - static_cast<u64>(r + s)))) *
                       ctx.B(p - static_cast<u64>(r + s)) / ctx.mk(r + s);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- weighted half-range tails ----------------------------------------------
    {
        CheckDef d;
        d.id = "lem-2h2k";
        d.statement = "sum_{k=1}^{(p-1)/2} (2 H_{2k} - H_k)/k^4 == (31/2) B_{p-5}";
        d.modulus_desc = "p";
        d.applic_desc = "p > 7";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 7 ? "" : "requires p > 7";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = ctx.W((p - 1) / 2);
            auto rhs = ctx.mk(rat(31, 2)) * ctx.B(p - 5);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-2h2k-h2k";
        d.statement = "sum_{k=1}^{(p-1)/2} H_{2k}/k^4 == (13/2) B_{p-5}";
        d.modulus_desc = "p";
        d.applic_desc = "p > 7";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 7 ? "" : "requires p > 7";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto acc = ctx.mk(0);
            for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                auto k4 = pow_v(ctx.eng, ctx.mk(static_cast<i64>(k)), 4);
                acc = acc + ctx.H(2 * k, 1) / k4;
            }
            auto rhs = ctx.mk(rat(13, 2)) * ctx.B(p - 5);
            return std::pair(acc, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-2h2k-hk";
        d.statement = "sum_{k=1}^{(p-1)/2} H_k/k^4 == -(5/2) B_{p-5}";
        d.modulus_desc = "p";
        d.applic_desc = "p > 7";
        d.required = [](u64, const Params&) { return 1; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 7 ? "" : "requires p > 7";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto acc = ctx.mk(0);
            for (u64 k = 1; k <= (p - 1) / 2; ++k) {
                auto k4 = pow_v(ctx.eng, ctx.mk(static_cast<i64>(k)), 4);
                acc = acc + ctx.H(k, 1) / k4;
            }
            auto rhs = ctx.mk(rat(-5, 2)) * ctx.B(p - 5);
            return std::pair(acc, rhs);
        });
        reg.push_back(std::move(d));
    }

    // -- range difference and the -1/2 specialization ----------------------------
    {
        CheckDef d;
        d.id = "diff-3.3";
        d.statement =
            "S_{p-1}(alpha) - S_{(p-1)/2}(alpha) == -2 p^2 t^2 B_{p-5} + (29/5) p^2 t B_{p-5} + 2 "
            "p^2 t(t+1) H_a^{(5)} - 2pt H_a^{(4)} + 8 p^2 t^2 H_a^{(5)} - 2 p^2 t W(a)";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs =
                s_n_cached(ctx.eng, p - 1, *q.alpha) - s_n_cached(ctx.eng, (p - 1) / 2, *q.alpha);
            auto ONE = ctx.mk(1);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = ctx.mk(-2) * P * P * T * T * B5 + ctx.mk(rat(29, 5)) * P * P * T * B5 +
                       ctx.mk(2) * P * P * T * (T + ONE) * ctx.H(sp.a, 5) -
                       ctx.mk(2) * P * T * ctx.H(sp.a, 4) +
                       ctx.mk(8) * P * P * T * T * ctx.H(sp.a, 5) -
                       ctx.mk(2) * P * P * T * ctx.W(sp.a);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "eq-1.3z";
        d.statement = "S_{p-1}(-1/2) == -2 H_{(p-1)/2}^{(3)} - (31/2) p^2 B_{p-5}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 7";
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params&) -> std::string {
            return p > 7 ? "" : "requires p > 7";
        };
        d.grid = detail::empty_params;
        set_eval(d, [](auto ctx, const Params&) {
            const u64 p = ctx.p();
            auto lhs = s_n_cached(ctx.eng, p - 1, rat(-1, 2));
            auto P = ctx.pv();
            auto rhs = ctx.mk(-2) * ctx.H((p - 1) / 2, 3) -
                       ctx.mk(rat(31, 2)) * P * P * ctx.B(p - 5);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "thm14-identity";
        d.statement = "C(-alpha,k) == (alpha/(alpha+k)) C(-alpha-1,k) exactly";
        d.modulus_desc = "exact";
        d.applic_desc = "rational alpha, k >= 0, alpha + k != 0";
        d.exact_identity = true;
        d.required = [](u64, const Params&) { return 0; };
        d.applicable = [](u64, const Params& q) -> std::string {
            if (!q.alpha || !q.k) throw malformed_params("thm14-identity: requires alpha and k");
            if (*q.alpha + rat(*q.k) == 0)
                throw malformed_params("thm14-identity: alpha + k must be nonzero");
            return "";
        };
        d.grid = [](u64, const GridCtx& gc) {
            std::vector<Params> g;
            for (int i = 0; i < gc.trials; ++i) {
                auto rng = trial_rng("thm14-identity", i);
                std::uniform_int_distribution<i64> num(-40, 40), den(1, 12), kk(0, 40);
                Params q;
                while (true) {
                    Rat a = rat(num(rng), den(rng));
                    i64 k = kk(rng);
                    if (a + rat(k) != 0) {
                        q.alpha = a;
                        q.k = static_cast<int>(k);
                        break;
                    }
                }
                q.trial = i;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval_exact(d, [](Ctx<ExactEngine> ctx, const Params& q) {
            const Rat& a = *q.alpha;
            const u64 k = static_cast<u64>(*q.k);
            auto lhs = binom_v(ctx.eng, Rat(-a), k);
            auto rhs = ctx.mk(a) / (ctx.mk(a) + ctx.mk(static_cast<i64>(k))) *
                       binom_v(ctx.eng, Rat(-a - 1), k);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "wolstenholme";
        d.statement =
            "v_p(H_{p-1}) >= 2 (h-p1); v_p(H_{p-1}^{(2)}) >= 1 (h2-p1); v_p(H_{(p-1)/2}^{(2)}) >= "
            "1 (h2-p12)";
        d.modulus_desc = "p^2 / p / p";
        d.applic_desc = "p >= 5";
        d.required = [](u64, const Params& q) { return q.variant == "h-p1" ? 2 : 1; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (q.variant != "h-p1" && q.variant != "h2-p1" && q.variant != "h2-p12")
                throw malformed_params("wolstenholme: variant must be h-p1, h2-p1 or h2-p12");
            return p >= 5 ? "" : "requires p >= 5";
        };
        d.grid = [](u64, const GridCtx&) {
            std::vector<Params> g;
            for (const char* v : {"h-p1", "h2-p1", "h2-p12"}) {
                Params q;
                q.variant = v;
                g.push_back(std::move(q));
            }
            return g;
        };
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            using V = typename decltype(ctx)::V;
            V lhs = ctx.mk(0);
            if (q.variant == "h-p1") lhs = ctx.H(p - 1, 1);
            else if (q.variant == "h2-p1") lhs = ctx.H(p - 1, 2);
            else lhs = ctx.H((p - 1) / 2, 2);
            return std::pair(lhs, ctx.mk(0));
        });
        reg.push_back(std::move(d));
    }

    // -- corrected half-range variants ------------------------------------------
    // The plain half-range expansions (thm11-half, lem-shift-half, diff-3.3)
    // fail for non-integer t once p >= 13. Adding the cross term
    // 2pt H_{(p-1)/2}^{(2)} H_a^{(2)} to the right side repairs them; these
    // variants certify the repaired forms.
    {
        CheckDef d;
        d.id = "thm11-half-corrected";
        d.statement =
            "S_{(p-1)/2}(alpha) == 4 p^2 t^2 B_{p-5} - (31/5) p^2 t B_{p-5} + K(a,t) + 2pt "
            "H_{(p-1)/2}^{(2)} H_a^{(2)}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs = s_n_cached(ctx.eng, (p - 1) / 2, *q.alpha);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = ctx.mk(4) * P * P * T * T * B5 - ctx.mk(rat(31, 5)) * P * P * T * B5 +
                       eval_K(ctx.eng, sp.a, sp.t) + detail::half_cross_term(ctx, sp.a, sp.t);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "lem-shift-half-corrected";
        d.statement =
            "S_{(p-1)/2}(alpha) - S_{(p-1)/2}(pt) == 2pt H_a^{(4)} - 8 p^2 t^2 H_a^{(5)} + 2 p^2 "
            "t W(a) - 2 sum_{k=1}^{a} 1/(pt+k)^3 + 2pt H_{(p-1)/2}^{(2)} H_a^{(2)}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const u64 half = (p - 1) / 2;
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            const Rat pt = Rat(*q.alpha - rat(static_cast<i64>(sp.a)));
            auto lhs = s_n_cached(ctx.eng, half, *q.alpha) - s_n_cached(ctx.eng, half, pt);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto rhs = ctx.mk(2) * P * T * ctx.H(sp.a, 4) -
                       ctx.mk(8) * P * P * T * T * ctx.H(sp.a, 5) +
                       ctx.mk(2) * P * P * T * ctx.W(sp.a) -
                       ctx.mk(2) * cube_shift_sum(ctx.eng, sp.t, sp.a) +
                       detail::half_cross_term(ctx, sp.a, sp.t);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }
    {
        CheckDef d;
        d.id = "diff-3.3-corrected";
        d.statement =
            "S_{p-1}(alpha) - S_{(p-1)/2}(alpha) == diff-3.3 right side - 2pt H_{(p-1)/2}^{(2)} "
            "H_a^{(2)}";
        d.modulus_desc = "p^3";
        d.applic_desc = "p > 5, p-integral alpha, a <= (p-1)/2";
        d.alpha_grid = true;
        d.required = [](u64, const Params&) { return 3; };
        d.applicable = [](u64 p, const Params& q) -> std::string {
            if (p <= 5) return "requires p > 5";
            std::string why = detail::alpha_gate(p, q);
            if (!why.empty()) return why;
            if (alpha_split(*q.alpha, p).a > (p - 1) / 2) return "a > (p-1)/2";
            return "";
        };
        d.grid = detail::alpha_grid_params;
        set_eval(d, [](auto ctx, const Params& q) {
            const u64 p = ctx.p();
            const AlphaSplit sp = alpha_split(*q.alpha, p);
            auto lhs =
                s_n_cached(ctx.eng, p - 1, *q.alpha) - s_n_cached(ctx.eng, (p - 1) / 2, *q.alpha);
            auto ONE = ctx.mk(1);
            auto P = ctx.pv();
            auto T = ctx.mk(sp.t);
            auto B5 = ctx.B(p - 5);
            auto rhs = ctx.mk(-2) * P * P * T * T * B5 + ctx.mk(rat(29, 5)) * P * P * T * B5 +
                       ctx.mk(2) * P * P * T * (T + ONE) * ctx.H(sp.a, 5) -
                       ctx.mk(2) * P * T * ctx.H(sp.a, 4) +
                       ctx.mk(8) * P * P * T * T * ctx.H(sp.a, 5) -
                       ctx.mk(2) * P * P * T * ctx.W(sp.a) -
                       detail::half_cross_term(ctx, sp.a, sp.t);
            return std::pair(lhs, rhs);
        });
        reg.push_back(std::move(d));
    }

    return reg;
}

inline const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> reg = build_registry();
    return reg;
}

inline const CheckDef& find_check(const std::string& id) {
    for (const CheckDef& d : registry())
        if (d.id == id) return d;
    throw unknown_check("unknown check id: " + id);
}

// ---------------------------------------------------------------------------
// dispatch

namespace detail {

struct EngineRun {
    Verdict verdict;
    std::string lhs_res, rhs_res;
};

inline EngineRun run_exact(const CheckDef& def, u64 p, const Params& prm, int e) {
    ExactEngine eng{p, 0};
    std::shared_ptr<const HarmonicTable<ExactEngine>> tab;
    if (!def.exact_identity) tab = TableStore::instance().exact_table(p);
    auto [lhs, rhs] = def.eval_exact(eng, tab.get(), prm);
    EngineRun out;
    if (def.exact_identity) {
        const bool ok = lhs.q == rhs.q;
        out.verdict = Verdict{ok, Valuation::inf()};
        out.lhs_res = rat_str(lhs.q);
        out.rhs_res = rat_str(rhs.q);
        return out;
    }
    out.verdict = eng.congruent(lhs, rhs, e);
    const u64 m = pw_u64(p, e);
    out.lhs_res = std::to_string(residue_mod(lhs.q, m));
    out.rhs_res = std::to_string(residue_mod(rhs.q, m));
    return out;
}

// Evaluate on the p-adic engine, widening the guard (in steps of 2, up to
// +8) whenever the working precision cannot decide the congruence.
inline EngineRun run_padic(const CheckDef& def, u64 p, const Params& prm, int e, int guard) {
    for (int g = guard;; g += 2) {
        const int N = e + g;
        try {
            pw_u64(p, N);
        } catch (const config_error&) {
            throw internal_error("p-adic precision p^" + std::to_string(N) +
                                 " exceeds the 62-bit working range at p = " + std::to_string(p));
        }
        PadicEngine eng{p, N};
        auto tab = TableStore::instance().padic_table(p, N);
        try {
            auto [lhs, rhs] = def.eval_padic(eng, tab.get(), prm);
            EngineRun out;
            out.verdict = eng.congruent(lhs, rhs, e);
            out.lhs_res = std::to_string(lhs.residue(e));
            out.rhs_res = std::to_string(rhs.residue(e));
            return out;
        } catch (const precision_loss&) {
            if (g >= guard + 8) throw;
        }
    }
}

// Exact and p-adic verdicts must tell the same story: same pass/fail, and
// valuations that are consistent given that a capped p-adic valuation is
// only a lower bound.
inline bool verdicts_agree(const Verdict& ex, const Verdict& pa) {
    if (ex.pass != pa.pass) return false;
    const Valuation& a = ex.achieved;
    const Valuation& b = pa.achieved;
    if (b.infinite) return a.infinite;
    if (b.capped) return a.infinite || a.v >= b.v;
    return !a.infinite && a.v == b.v;
}

}  // namespace detail

inline CheckResult run_check(const CheckDef& def, u64 p, const Params& prm,
                             const std::string& engine = "padic", int guard = 2) {
    const auto t0 = std::chrono::steady_clock::now();
    if (engine != "exact" && engine != "padic" && engine != "both")
        throw config_error("unknown engine: " + engine);
    if (guard < 0 || guard > 4) throw config_error("guard must be in 0..4");
    if (!def.exact_identity && !is_prime_u64(p))
        throw not_prime("p = " + std::to_string(p) + " is not prime");

    CheckResult res;
    res.id = def.id;
    res.p = def.exact_identity ? 0 : p;
    res.params = prm;
    res.engine = (def.exact_only || def.exact_identity) ? "exact" : engine;

    const std::string why = def.applicable(p, prm);
    res.required_e = def.required(p, prm);
    auto finish = [&]() {
        res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
        return res;
    };
    if (!why.empty()) {
        res.status = Status::NotApplicable;
        res.na_reason = why;
        return finish();
    }

    detail::EngineRun run;
    if (res.engine == "exact") {
        run = detail::run_exact(def, p, prm, res.required_e);
    } else if (res.engine == "padic") {
        run = detail::run_padic(def, p, prm, res.required_e, guard);
    } else {
        detail::EngineRun ex = detail::run_exact(def, p, prm, res.required_e);
        detail::EngineRun pa = detail::run_padic(def, p, prm, res.required_e, guard);
        if (!detail::verdicts_agree(ex.verdict, pa.verdict) || ex.lhs_res != pa.lhs_res ||
            ex.rhs_res != pa.rhs_res)
            throw internal_error("engine disagreement on " + def.id + " at p = " +
                                 std::to_string(p) + " [" + prm.brief() + "]");
        run = ex;
    }

    if (def.exact_identity) {
        res.status = run.verdict.pass ? Status::Pass : Status::Fail;
        res.achieved_known = run.verdict.pass;
        res.achieved = Valuation::inf();
    } else {
        res.status = run.verdict.pass ? Status::Pass : Status::Fail;
        res.achieved_known = true;
        res.achieved = run.verdict.achieved;
        // A residue-defined right side carries no information past p^e.
        if (def.residue_rhs && run.verdict.pass)
            res.achieved = Valuation::fin(res.required_e, /*capped=*/true);
    }
    res.lhs_residue = run.lhs_res;
    res.rhs_residue = run.rhs_res;
    return finish();
}

inline CheckResult run_check(const std::string& id, u64 p, const Params& prm,
                             const std::string& engine = "padic", int guard = 2) {
    return run_check(find_check(id), p, prm, engine, guard);
}

}  // namespace sc
