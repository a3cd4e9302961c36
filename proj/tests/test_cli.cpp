// CLI surface tests: run the built binary, parse its output, check exit codes
// and the determinism contract.

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PLOGP_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// the timing field is excluded from the determinism contract; the echoed
// thread count is configuration, not a result record
std::string strip_timing(std::string s) {
    s = std::regex_replace(s, std::regex("\"timing\": \"[^\"]*\""), "\"timing\": \"-\"");
    s = std::regex_replace(s, std::regex("# timing [^\n]*\n"), "# timing -\n");
    s = std::regex_replace(s, std::regex("\"threads\": [0-9]+"), "\"threads\": 0");
    return s;
}

} // namespace

TEST_CASE("cli solve emits a certified witness record") {
    auto r = run_cli("solve --N 1e6 --out-format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["manifest"]["version"].get<std::string>().find("plogp") == 0);
    CHECK(j["manifest"]["params"].contains("eps"));
    CHECK(j["report"]["satisfied"].get<bool>());
    CHECK(j["report"]["p1"].get<std::uint64_t>() >= 2);
    CHECK(j["report"]["sum_phase"].get<std::string>().size() >= 30);
    CHECK(j["report"]["deviation"].get<std::string>().size() >= 5);
}

TEST_CASE("cli vaughan residual at alpha 0, X 100") {
    auto r = run_cli("vaughan --X 100 --alpha 0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::stod(j["report"]["residual_rel"].get<std::string>()) <= 1e-8);
    CHECK(std::stod(j["report"]["s1_direct"]["re"].get<std::string>()) ==
          doctest::Approx(44.559930436939022).epsilon(1e-10));
}

TEST_CASE("cli kernel sweep reports all rows ok") {
    auto r = run_cli("kernel --eps-override 1 --k 3 --grid 1000 --out-format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["all_ok"].get<bool>());
    CHECK(j["report"]["checked"].get<int>() == 1001); // grid plus the x = 0 row
}

TEST_CASE("cli scan emits csv rows") {
    auto r = run_cli("scan --X 2000 --grid 16");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("alpha,re,im,abs,err") != std::string::npos);
    int rows = 0;
    for (char c : r.out)
        if (c == '\n') ++rows;
    CHECK(rows >= 16 + 3); // manifest comments + header + data
}

TEST_CASE("cli determinism: identical records for thread counts 1 and 4") {
    const std::string args = "scan --X 3000 --grid 24 --seed 9";
    auto a = run_cli(args + " --threads 1");
    auto b = run_cli(args + " --threads 1");
    auto c = run_cli(args + " --threads 4");
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    CHECK(strip_timing(a.out) == strip_timing(c.out));

    auto s1 = run_cli("solve --N 31622 --threads 1");
    auto s4 = run_cli("solve --N 31622 --threads 4");
    CHECK(strip_timing(s1.out) == strip_timing(s4.out));
}

TEST_CASE("cli exit codes per error family") {
    CHECK(run_cli("solve --N -5").exit_code == 2);           // domain
    CHECK(run_cli("solve --N 1e6 --X 1e5").exit_code == 2);  // exactly-one rule
    CHECK(run_cli("solve").exit_code == 2);                  // neither given
    CHECK(run_cli("solve --N 1e8 --exact --budget 1000").exit_code == 3); // capacity
    CHECK(run_cli("lemmas --which nosuch").exit_code == 2);
}

TEST_CASE("cli prime cache round trip changes nothing") {
    const std::string cache = "/tmp/plogp_cli_cache.bin";
    std::remove(cache.c_str());
    auto a = run_cli("pair --N 31622 --prime-cache " + cache);
    auto b = run_cli("pair --N 31622 --prime-cache " + cache); // hits the cache
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
    std::remove(cache.c_str());
}
