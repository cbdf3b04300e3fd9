// Compute with both arithmetic back ends and read p-adic valuations off the
// results: exact rationals first, then the windowed engine that tracks a
// worst-case precision bound through every operation.

#include <iostream>
#include <string>

#include "sc/checks.hpp"

using namespace sc;

namespace {

std::string val_str(const Valuation& v) {
    if (v.infinite) return "inf";
    std::string s = std::to_string(v.v);
    if (v.capped) s += "+";
    return s;
}

}  // namespace

int main() {
    const u64 p = 13;

    // H_{p-1} has p-adic valuation >= 2 for every prime p >= 5.
    ExactEngine ex{p, 0};
    auto h = harmonic(ex, p - 1, 1);
    auto ve = ex.congruent(h, ex.make(0), 2);
    std::cout << "H_" << p - 1 << " = " << rat_str(h.q) << "\n";
    std::cout << "  exact engine:  achieved v_" << p << " = " << val_str(ve.achieved) << "\n";

    PadicEngine pa{p, 6};
    auto vp = pa.congruent(harmonic(pa, p - 1, 1), pa.make(0), 2);
    std::cout << "  p-adic engine: achieved v_" << p << " = " << val_str(vp.achieved)
              << "  (window O(p^6))\n\n";

    // A rational argument splits along its residue: alpha = a + p t.
    auto sp = alpha_split(rat(-1, 3), p);
    std::cout << "alpha = -1/3 at p = " << p << ":  a = " << sp.a << ",  t = " << rat_str(sp.t)
              << "\n\n";

    // One registry point, evaluated on both engines and cross-checked.
    const CheckDef& def = find_check("sun-full-1.3a");
    CheckResult r = run_check(def, p, Params{}, "both");
    std::cout << def.id << " at p = " << p << ": " << status_str(r.status) << ", achieved v_" << p
              << " = " << val_str(r.achieved) << " (required " << r.required_e << ")\n";
    return 0;
}
