#pragma once

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "sc/checks.hpp"

// Sweep orchestration: expand (check, p, params) tasks deterministically, run
// them on a worker pool with an ordered result sink, and emit JSON Lines plus
// a per-check summary. Reports from runs with identical configuration are
// byte-identical apart from the millis field, regardless of --jobs.

namespace sc {

struct SweepConfig {
    std::vector<std::string> checks;  // empty = every registry entry
    u64 lo = 5, hi = 300;
    std::vector<Rat> alphas;  // empty = default alpha grid
    std::string engine = "padic";
    int guard = 2;
    std::string out;  // JSONL path; empty = stdout
    std::string csv;  // optional CSV summary path
    int jobs = 1;
    int trials = 100;
};

inline void validate_config(const SweepConfig& cfg) {
    if (cfg.lo < 5) throw config_error("prime range must start at 5 or above");
    if (cfg.hi < cfg.lo) throw config_error("prime range upper bound below lower bound");
    if (cfg.guard < 0 || cfg.guard > 4) throw config_error("guard must be in 0..4");
    if (cfg.engine != "exact" && cfg.engine != "padic" && cfg.engine != "both")
        throw config_error("engine must be exact, padic or both");
    if (cfg.jobs < 1) throw config_error("jobs must be at least 1");
    if (cfg.trials < 1) throw config_error("trials must be at least 1");
    for (const std::string& id : cfg.checks) {
        try {
            find_check(id);
        } catch (const unknown_check& e) {
            throw config_error(e.what());
        }
    }
}

namespace detail {

struct Task {
    const CheckDef* def;
    u64 p;
    Params prm;
};

inline std::vector<const CheckDef*> selected_checks(const SweepConfig& cfg) {
    std::vector<const CheckDef*> defs;
    for (const CheckDef& d : registry()) {
        if (cfg.checks.empty() ||
            std::find(cfg.checks.begin(), cfg.checks.end(), d.id) != cfg.checks.end())
            defs.push_back(&d);
    }
    return defs;
}

inline std::vector<Task> expand_tasks(const SweepConfig& cfg) {
    GridCtx gc;
    gc.alphas = cfg.alphas;
    gc.trials = cfg.trials;
    std::vector<Task> tasks;
    const auto defs = selected_checks(cfg);
    // Prime-independent identities run once, ahead of the prime sweep.
    for (const CheckDef* d : defs) {
        if (!d->exact_identity) continue;
        for (Params& q : d->grid(0, gc)) tasks.push_back({d, 0, std::move(q)});
    }
    for (u64 p : primes_in(cfg.lo, cfg.hi)) {
        for (const CheckDef* d : defs) {
            if (d->exact_identity) continue;
            for (Params& q : d->grid(p, gc)) tasks.push_back({d, p, std::move(q)});
        }
    }
    return tasks;
}

}  // namespace detail

inline std::vector<CheckResult> run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    const std::vector<detail::Task> tasks = detail::expand_tasks(cfg);
    std::vector<CheckResult> results(tasks.size());
    std::atomic<size_t> next{0};
    std::mutex emu;
    std::exception_ptr eptr;

    auto work = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const detail::Task& t = tasks[i];
            try {
                results[i] = run_check(*t.def, t.p, t.prm, cfg.engine, cfg.guard);
            } catch (...) {
                std::lock_guard<std::mutex> lk(emu);
                if (!eptr) eptr = std::current_exception();
                next.store(tasks.size());
                return;
            }
        }
    };

    if (cfg.jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(cfg.jobs));
        for (int i = 0; i < cfg.jobs; ++i) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    if (eptr) std::rethrow_exception(eptr);
    return results;
}

// ---------------------------------------------------------------------------
// report emission

inline nlohmann::ordered_json result_json(const CheckResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["p"] = r.p;
    j["params"] = r.params.brief();
    j["status"] = status_str(r.status);
    if (!r.achieved_known)
        j["achieved_valuation"] = nullptr;
    else if (r.achieved.infinite)
        j["achieved_valuation"] = "inf";
    else
        j["achieved_valuation"] = r.achieved.v;
    if (r.required_e == 0)
        j["required"] = "exact";
    else
        j["required"] = r.required_e;
    j["engine"] = r.engine;
    j["millis"] = r.millis;
    return j;
}

inline void write_jsonl(const std::vector<CheckResult>& results, std::ostream& os) {
    for (const CheckResult& r : results) os << result_json(r).dump() << '\n';
}

struct CheckSummary {
    std::string id;
    std::string modulus;
    size_t pass = 0, fail = 0, na = 0;
    bool any_achieved = false;
    bool all_infinite = true;
    i64 min_achieved = 0;

    std::string min_achieved_str() const {
        if (!any_achieved) return "-";
        if (all_infinite) return "inf";
        return std::to_string(min_achieved);
    }
};

inline std::vector<CheckSummary> summarize(const std::vector<CheckResult>& results) {
    std::vector<CheckSummary> rows;
    std::map<std::string, size_t> index;
    for (const CheckResult& r : results) {
        auto it = index.find(r.id);
        if (it == index.end()) {
            it = index.emplace(r.id, rows.size()).first;
            rows.push_back({});
            rows.back().id = r.id;
            rows.back().modulus = find_check(r.id).modulus_desc;
        }
        CheckSummary& row = rows[it->second];
        switch (r.status) {
            case Status::Pass: ++row.pass; break;
            case Status::Fail: ++row.fail; break;
            case Status::NotApplicable: ++row.na; break;
        }
        if (r.achieved_known) {
            if (!r.achieved.infinite) {
                if (!row.any_achieved || row.all_infinite || r.achieved.v < row.min_achieved)
                    row.min_achieved = r.achieved.v;
                row.all_infinite = false;
            }
            row.any_achieved = true;
        }
    }
    return rows;
}

inline void print_summary(const std::vector<CheckResult>& results, std::ostream& os) {
    const auto rows = summarize(results);
    size_t pass = 0, fail = 0, na = 0;
    os << std::left << std::setw(28) << "check" << std::right << std::setw(7) << "pass"
       << std::setw(7) << "fail" << std::setw(7) << "na" << std::setw(10) << "min-val"
       << "  modulus\n";
    for (const CheckSummary& row : rows) {
        pass += row.pass;
        fail += row.fail;
        na += row.na;
        os << std::left << std::setw(28) << row.id << std::right << std::setw(7) << row.pass
           << std::setw(7) << row.fail << std::setw(7) << row.na << std::setw(10)
           << row.min_achieved_str() << "  " << row.modulus << '\n';
    }
    os << "total: " << results.size() << " results -- " << pass << " pass, " << fail << " fail, "
       << na << " not applicable\n";
}

inline void write_csv(const std::vector<CheckResult>& results, std::ostream& os) {
    os << "id,pass,fail,na,min_achieved,modulus\n";
    for (const CheckSummary& row : summarize(results))
        os << row.id << ',' << row.pass << ',' << row.fail << ',' << row.na << ','
           << row.min_achieved_str() << ",\"" << row.modulus << "\"\n";
}

inline int sweep_exit_code(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == Status::Fail) return 1;
    return 0;
}

// Timing aggregation for the bench command.
struct BenchRow {
    std::string id;
    size_t points = 0;
    double total_ms = 0, max_ms = 0;
    std::string max_at;
};

inline std::vector<BenchRow> bench_rows(const std::vector<CheckResult>& results) {
    std::vector<BenchRow> rows;
    std::map<std::string, size_t> index;
    for (const CheckResult& r : results) {
        auto it = index.find(r.id);
        if (it == index.end()) {
            it = index.emplace(r.id, rows.size()).first;
            rows.push_back({});
            rows.back().id = r.id;
        }
        BenchRow& row = rows[it->second];
        ++row.points;
        row.total_ms += r.millis;
        if (r.millis > row.max_ms) {
            row.max_ms = r.millis;
            row.max_at = "p=" + std::to_string(r.p) +
                         (r.params.brief().empty() ? "" : " " + r.params.brief());
        }
    }
    return rows;
}

inline void print_bench(const std::vector<CheckResult>& results, std::ostream& os) {
    os << std::left << std::setw(28) << "check" << std::right << std::setw(8) << "points"
       << std::setw(12) << "total-ms" << std::setw(10) << "mean-ms" << std::setw(10) << "max-ms"
       << "  max-at\n";
    os << std::fixed << std::setprecision(2);
    for (const BenchRow& row : bench_rows(results)) {
        os << std::left << std::setw(28) << row.id << std::right << std::setw(8) << row.points
           << std::setw(12) << row.total_ms << std::setw(10)
           << (row.points ? row.total_ms / static_cast<double>(row.points) : 0.0) << std::setw(10)
           << row.max_ms << "  " << row.max_at << '\n';
    }
    os.unsetf(std::ios::fixed);
    os << std::setprecision(6);
}

// list-checks rows, ordered by id. Fields longer than their column keep at
// least two spaces before the next field instead of running into it.
inline void print_check_table(std::ostream& os) {
    std::vector<const CheckDef*> defs;
    for (const CheckDef& d : registry()) defs.push_back(&d);
    std::sort(defs.begin(), defs.end(),
              [](const CheckDef* a, const CheckDef* b) { return a->id < b->id; });
    auto cell = [&os](const std::string& s, size_t w) {
        os << s;
        for (size_t i = s.size(); i < w; ++i) os << ' ';
        if (s.size() >= w) os << "  ";
    };
    cell("id", 28);
    cell("modulus", 22);
    cell("applicability", 56);
    os << "statement\n";
    for (const CheckDef* d : defs) {
        cell(d->id, 28);
        cell(d->modulus_desc, 22);
        cell(d->applic_desc, 56);
        os << d->statement << '\n';
    }
}

}  // namespace sc
