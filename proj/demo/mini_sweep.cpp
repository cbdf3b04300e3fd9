// Drive the sweep API directly: a handful of checks over a short prime
// window on both engines, JSONL rows to stdout, summary table to stderr.

#include <iostream>

#include "sc/runner.hpp"

int main() {
    sc::SweepConfig cfg;
    cfg.checks = {"wolstenholme", "zhsun", "thm13-full"};
    cfg.lo = 5;
    cfg.hi = 31;
    cfg.engine = "both";

    auto results = sc::run_sweep(cfg);
    sc::write_jsonl(results, std::cout);
    sc::print_summary(results, std::cerr);
    return sc::sweep_exit_code(results);
}
