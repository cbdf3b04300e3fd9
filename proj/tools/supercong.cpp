#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sc/runner.hpp"

namespace {

bool parse_range(const std::string& s, sc::u64& lo, sc::u64& hi) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) return false;
    try {
        size_t used = 0;
        lo = std::stoull(s.substr(0, pos), &used);
        if (used != pos) return false;
        const std::string rest = s.substr(pos + 2);
        hi = std::stoull(rest, &used);
        return used == rest.size();
    } catch (...) {
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"supercong: exact and p-adic certification of harmonic-number congruences"};
    app.require_subcommand(1);

    sc::SweepConfig cfg;
    std::string primes_arg;
    std::vector<std::string> alpha_args;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--checks", cfg.checks, "comma-separated check ids (default: all)")
            ->delimiter(',');
        cmd->add_option("--primes", primes_arg, "prime range lo..hi (default 5..300)");
        cmd->add_option("--alphas", alpha_args,
                        "comma-separated rationals n/d replacing the default alpha grid")
            ->delimiter(',');
        cmd->add_option("--engine", cfg.engine, "exact | padic | both (default padic)");
        cmd->add_option("--guard", cfg.guard,
                        "extra p-adic digits beyond the target modulus (0..4, default 2)");
        cmd->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
        cmd->add_option("--trials", cfg.trials,
                        "instances per randomized exact identity (default 100)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run checks and emit JSON Lines results");
    add_common(verify);
    verify->add_option("--out", cfg.out, "write JSON Lines here instead of standard output");
    verify->add_option("--csv", cfg.csv, "also write a per-check CSV summary here");

    CLI::App* list = app.add_subcommand("list-checks", "print the registry, ordered by id");

    CLI::App* bench = app.add_subcommand("bench", "run checks and report timing aggregates");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!primes_arg.empty() && !parse_range(primes_arg, cfg.lo, cfg.hi))
            throw sc::config_error("--primes expects lo..hi, got: " + primes_arg);
        for (const std::string& s : alpha_args) {
            try {
                cfg.alphas.push_back(sc::parse_rat(s));
            } catch (const std::exception&) {
                throw sc::config_error("--alphas: cannot parse rational: " + s);
            }
        }

        if (list->parsed()) {
            sc::print_check_table(std::cout);
            return 0;
        }
        if (bench->parsed()) {
            auto results = sc::run_sweep(cfg);
            sc::print_bench(results, std::cout);
            return sc::sweep_exit_code(results);
        }
        auto results = sc::run_sweep(cfg);
        if (!cfg.out.empty()) {
            std::ofstream f(cfg.out);
            if (!f) throw sc::config_error("cannot open output file: " + cfg.out);
            sc::write_jsonl(results, f);
            sc::print_summary(results, std::cout);
        } else {
            sc::write_jsonl(results, std::cout);
            sc::print_summary(results, std::cerr);
        }
        if (!cfg.csv.empty()) {
            std::ofstream f(cfg.csv);
            if (!f) throw sc::config_error("cannot open CSV file: " + cfg.csv);
            sc::write_csv(results, f);
        }
        return sc::sweep_exit_code(results);
    } catch (const sc::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
