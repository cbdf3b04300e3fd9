#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sc/runner.hpp"

using namespace sc;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> jsonl_lines(const std::vector<CheckResult>& rs) {
    std::ostringstream os;
    write_jsonl(rs, os);
    std::vector<std::string> lines;
    std::istringstream is(os.str());
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    return lines;
}

std::vector<std::string> without_millis(const std::vector<CheckResult>& rs) {
    std::vector<std::string> out;
    for (const std::string& line : jsonl_lines(rs)) {
        auto j = ordered_json::parse(line);
        j.erase("millis");
        out.push_back(j.dump());
    }
    return out;
}

}  // namespace

TEST_CASE("sun sweep over 5..7 yields two passing results") {
    SweepConfig cfg;
    cfg.checks = {"sun-full-1.3a"};
    cfg.lo = 5;
    cfg.hi = 7;
    auto rs = run_sweep(cfg);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].p == 5);
    CHECK(rs[1].p == 7);
    for (const auto& r : rs) CHECK(r.status == Status::Pass);
    CHECK(sweep_exit_code(rs) == 0);

    // Schema: exactly these fields, in this order, with these types.
    const std::vector<std::string> want = {"id",       "p",        "params", "status",
                                           "achieved_valuation", "required", "engine", "millis"};
    for (const std::string& line : jsonl_lines(rs)) {
        auto j = ordered_json::parse(line);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
        CHECK(keys == want);
        CHECK(j["id"].is_string());
        CHECK(j["p"].is_number_unsigned());
        CHECK(j["params"].is_string());
        CHECK(j["status"].is_string());
        CHECK((j["achieved_valuation"].is_number_integer() ||
               j["achieved_valuation"].is_string() || j["achieved_valuation"].is_null()));
        CHECK((j["required"].is_number_integer() || j["required"] == "exact"));
        CHECK(j["engine"].is_string());
        CHECK(j["millis"].is_number());
        CHECK(j["status"] == "pass");
        CHECK(j["required"] == 3);
    }
}

TEST_CASE("thm13-full at p = 7 with alpha = 7/3 is a single not-applicable result") {
    SweepConfig cfg;
    cfg.checks = {"thm13-full"};
    cfg.lo = 7;
    cfg.hi = 7;
    cfg.alphas = {rat(7, 3)};
    auto rs = run_sweep(cfg);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::NotApplicable);
    CHECK(sweep_exit_code(rs) == 0);
    auto j = ordered_json::parse(jsonl_lines(rs)[0]);
    CHECK(j["status"] == "na");
    CHECK(j["achieved_valuation"].is_null());
    CHECK(j["params"] == "alpha=7/3");
}

TEST_CASE("identity trials run once, independent of the prime range") {
    SweepConfig cfg;
    cfg.checks = {"lem-id"};
    cfg.lo = 5;
    cfg.hi = 40;
    cfg.trials = 100;
    auto rs = run_sweep(cfg);
    REQUIRE(rs.size() == 100);
    for (const auto& r : rs) {
        CHECK(r.status == Status::Pass);
        CHECK(r.p == 0);
        CHECK(r.required_e == 0);
        CHECK(r.engine == "exact");
    }
    auto j = ordered_json::parse(jsonl_lines(rs)[0]);
    CHECK(j["required"] == "exact");
    CHECK(j["achieved_valuation"] == "inf");
    CHECK(j["p"] == 0);
}

TEST_CASE("reruns are deterministic and parallel matches serial") {
    SweepConfig cfg;
    cfg.checks = {"lem-id", "hp1r", "zhsun", "lem23-half", "wolstenholme", "thm11-half"};
    cfg.lo = 5;
    cfg.hi = 13;
    cfg.trials = 10;
    auto a = without_millis(run_sweep(cfg));
    auto b = without_millis(run_sweep(cfg));
    REQUIRE(!a.empty());
    CHECK(a == b);
    cfg.jobs = 4;
    auto c = without_millis(run_sweep(cfg));
    CHECK(a == c);
    cfg.engine = "both";
    auto d = without_millis(run_sweep(cfg));
    CHECK(a.size() == d.size());
}

TEST_CASE("invalid sweep configurations are rejected") {
    auto bad = [](auto mutate) {
        SweepConfig cfg;
        cfg.lo = 5;
        cfg.hi = 7;
        mutate(cfg);
        CHECK_THROWS_AS(run_sweep(cfg), config_error);
    };
    bad([](SweepConfig& c) { c.lo = 3; });
    bad([](SweepConfig& c) { c.hi = 4; });
    bad([](SweepConfig& c) { c.guard = 5; });
    bad([](SweepConfig& c) { c.guard = -1; });
    bad([](SweepConfig& c) { c.engine = "banana"; });
    bad([](SweepConfig& c) { c.jobs = 0; });
    bad([](SweepConfig& c) { c.trials = 0; });
    bad([](SweepConfig& c) { c.checks = {"no-such-check"}; });
}

TEST_CASE("a failing point drives the exit code to 1") {
    SweepConfig cfg;
    cfg.checks = {"thm11-half"};
    cfg.lo = 13;
    cfg.hi = 13;
    cfg.alphas = {rat(-1, 3)};
    auto rs = run_sweep(cfg);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Fail);
    CHECK(sweep_exit_code(rs) == 1);
    auto j = ordered_json::parse(jsonl_lines(rs)[0]);
    CHECK(j["status"] == "fail");
    CHECK(j["achieved_valuation"] == 2);
}

TEST_CASE("alpha overrides are screened per prime, not at parse time") {
    SweepConfig cfg;
    cfg.checks = {"zhsun"};
    cfg.lo = 5;
    cfg.hi = 7;
    cfg.alphas = {rat(1, 5), rat(-1, 2)};
    auto rs = run_sweep(cfg);
    REQUIRE(rs.size() == 4);
    int na = 0, pass = 0;
    for (const auto& r : rs) {
        if (r.status == Status::NotApplicable) {
            ++na;
            CHECK(r.p == 5);
            CHECK(rat_str(*r.params.alpha) == "1/5");
        } else {
            REQUIRE(r.status == Status::Pass);
            ++pass;
        }
    }
    CHECK(na == 1);
    CHECK(pass == 3);
    CHECK(sweep_exit_code(rs) == 0);
}

TEST_CASE("summary and CSV aggregate per check") {
    SweepConfig cfg;
    cfg.checks = {"sun-full-1.3a", "sun-tail-1.3"};
    cfg.lo = 5;
    cfg.hi = 11;
    auto rs = run_sweep(cfg);
    auto rows = summarize(rs);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].id == "sun-full-1.3a");
    CHECK(rows[0].pass == 3);
    CHECK(rows[0].fail == 0);
    CHECK(rows[0].min_achieved_str() != "-");

    std::ostringstream sum;
    print_summary(rs, sum);
    CHECK(sum.str().find("sun-tail-1.3") != std::string::npos);
    CHECK(sum.str().find("6 results -- 6 pass, 0 fail, 0 not applicable") != std::string::npos);

    std::ostringstream csv;
    write_csv(rs, csv);
    CHECK(csv.str().rfind("id,pass,fail,na,min_achieved,modulus\n", 0) == 0);
    CHECK(csv.str().find("sun-full-1.3a,3,0,0,") != std::string::npos);

    std::ostringstream bench;
    print_bench(rs, bench);
    CHECK(bench.str().find("sun-full-1.3a") != std::string::npos);
}

TEST_CASE("check table lists every registry entry ordered by id") {
    std::ostringstream os;
    print_check_table(os);
    std::vector<std::string> lines;
    std::istringstream is(os.str());
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    REQUIRE(lines.size() == registry().size() + 1);  // header + one row per check
    CHECK(registry().size() >= 34);
    std::vector<std::string> ids;
    for (size_t i = 1; i < lines.size(); ++i) ids.push_back(lines[i].substr(0, lines[i].find(' ')));
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(os.str().find("sun-full-1.3a") != std::string::npos);
    CHECK(os.str().find("lem-id") != std::string::npos);
    CHECK(os.str().find("exact") != std::string::npos);
}
