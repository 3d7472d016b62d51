#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(RECSUM_TOOL_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("eval emits the exact value and counters as JSON") {
    const auto r = run("eval --m 2 --q 1 --n 2 --seq pow:1 --method reduced --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.stdout_text);
    CHECK(doc["value"] == "7/1");
    CHECK(doc["method"] == "reduced");
    CHECK(doc["terms_touched"] == 2);  // p(2)
    CHECK(doc["power_sum_updates"] == 4);
}

TEST_CASE("eval methods agree and the plain output is the rational text") {
    for (const std::string method : {"naive", "incremental", "reduced"}) {
        const auto r = run("eval --m 3 --q 1 --n 4 --seq pow:1 --method " + method);
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text == "350\n");  // 4^2 5^2 6 7 / 48
    }
}

TEST_CASE("eval accepts distinct sequences innermost-first") {
    const auto r = run("eval --m 2 --q 1 --n 3 --seq const:2,pow:1 --method naive");
    // sum over N1<=N2 of 2 * N2 = 2*(1+2+2+3+3+3) = 28
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "28\n");
}

TEST_CASE("tabulated sequences load from JSON files") {
    const std::string path = "recsum_cli_tab_test.json";
    {
        std::ofstream out(path);
        out << R"({"first_index": 1, "values": ["1", "1/2", "-3"]})";
    }
    const auto r = run("eval --m 1 --q 1 --n 3 --seq tab:" + path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "-3/2\n");
    std::remove(path.c_str());
}

TEST_CASE("exit code 2 on invalid input") {
    CHECK(run("eval --m 2 --q 3 --n 1 --seq pow:1").exit_code == 2);  // n < q
    CHECK(run("eval --m 2 --q 1 --n 2 --seq pow:1 --method warp").exit_code == 2);
    CHECK(run("stirling 3 5").exit_code == 2);
    CHECK(run("nonsense").exit_code != 0);
}

TEST_CASE("exit code 4 when the tuple guard trips, and the flag overrides it") {
    CHECK(run("eval --m 6 --q 1 --n 30 --seq pow:1 --method naive --naive-guard 100").exit_code ==
          4);
    CHECK(run("eval --m 2 --q 1 --n 3 --seq pow:1 --method naive --naive-guard 100").exit_code ==
          0);
}

TEST_CASE("RECSUM_NAIVE_GUARD environment variable overrides the default guard") {
    setenv("RECSUM_NAIVE_GUARD", "100", 1);
    CHECK(run("eval --m 6 --q 1 --n 30 --seq pow:1 --method naive").exit_code == 4);
    CHECK(run("eval --m 6 --q 1 --n 30 --seq pow:1 --method naive --naive-guard 2000000")
              .exit_code == 0);
    unsetenv("RECSUM_NAIVE_GUARD");
}

TEST_CASE("partitions command") {
    const auto r = run("partitions 4");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "4\n3+1\n2+2\n2+1+1\n1+1+1+1\n");

    const auto rj = run("partitions 4 --length 2 --json");
    const json doc = json::parse(rj.stdout_text);
    CHECK(doc["count"] == 2);
    CHECK(doc["partitions"][0] == json::array({1, 0, 1, 0}));
    CHECK(doc["partitions"][1] == json::array({0, 2, 0, 0}));

    const auto rs = run("partitions 3 --sets --json");
    const json sets = json::parse(rs.stdout_text);
    CHECK(sets["count"] == 5);
    // blocks sorted by (size, smallest element), 1-based indices
    CHECK(sets["set_partitions"][0] == json::array({json::array({1, 2, 3})}));
}

TEST_CASE("scalar commands") {
    CHECK(run("pfunc 100").stdout_text == "190569292\n");
    CHECK(run("stirling 5 2").stdout_text == "50\n");
    CHECK(run("bernoulli 12").stdout_text == "-691/2730\n");
    CHECK(run("bell 3 2 --x 1,1").stdout_text == "3\n");
    CHECK(run("faulhaber --m 2 --p 1 --n 4").stdout_text == "65\n");  // 4*5*6*13/24
}

TEST_CASE("reduce prints the expansion over power sums") {
    const auto r = run("reduce 3");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1/3 * S3\n1/2 * S1 S2\n1/6 * S1^3\n");
}

TEST_CASE("zeta-star value, numeric rendering, truncation report") {
    const auto r = run("zeta-star --m 4 --p 1 --numeric --digits 10 --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.stdout_text);
    CHECK(doc["value"] == "127/604800 * pi^8");
    CHECK(doc["terms"] == json::parse(R"({"8": "127/604800"})"));
    CHECK(doc["numeric"] == "1.992466004");

    const auto single = run("zeta-star --m 1 --p 1 --json");
    CHECK(json::parse(single.stdout_text)["terms"] == json::parse(R"({"2": "1/6"})"));

    const auto rt = run("zeta-star --m 1 --p 1 --truncate 100 --json");
    const json t = json::parse(rt.stdout_text);
    CHECK(t["truncation"]["n"] == 100);
    const double err = std::strtod(
        t["truncation"]["abs_error"].get<std::string>().c_str(), nullptr);
    CHECK(err < 1.0 / 100);
    CHECK(err > 0);
}

TEST_CASE("basel table") {
    const auto r = run("basel --max-m 4 --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.stdout_text);
    REQUIRE(doc.size() == 4);
    CHECK(doc[0]["value"] == "1/6 * pi^2");
    CHECK(doc[3]["value"] == "127/604800 * pi^8");
}

TEST_CASE("check command asserts identities, exit 3 only when asserted and false") {
    CHECK(run("check --identity lemma4.2 --m 4 --r 2").exit_code == 0);
    CHECK(run("check --identity lemma4.3 --m 6").exit_code == 0);
    CHECK(run("check --identity lemma4.4 --m 5 --r 3 --phi 1").exit_code == 0);
    CHECK(run("check --identity lemma4.5 --m 6 --phi 1,1").exit_code == 0);
    CHECK(run("check --identity corollary4.2 --m 5 --n 3").exit_code == 0);
    CHECK(run("check --identity bernoulli-partition --m 3 --p 1").exit_code == 0);
    // p > 1 is experimental: reported, never asserted
    const auto exp = run("check --identity bernoulli-partition --m 3 --p 2 --json");
    CHECK(exp.exit_code == 0);
    const json doc = json::parse(exp.stdout_text);
    CHECK(doc["asserted"] == false);
    CHECK(run("check --identity lemma4.4 --m 2 --r 1 --phi 0,0,1").exit_code == 2);
}

TEST_CASE("verify is deterministic and poison forces exit 3") {
    const auto a = run("verify --suite reduction --max-m 2 --max-n 3 --seed 42 --json");
    const auto b = run("verify --suite reduction --max-m 2 --max-n 3 --seed 42 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);  // byte-identical
    const json doc = json::parse(a.stdout_text);
    CHECK(doc["failures"].empty());
    CHECK(doc["cases"].get<int>() > 0);

    const auto poisoned = run("verify --suite reduction --max-m 2 --max-n 3 --seed 42 --poison");
    CHECK(poisoned.exit_code == 3);

    CHECK(run("verify --suite unknown").exit_code == 2);
}

TEST_CASE("bench reports the exponential-to-polynomial gap") {
    const auto r = run("bench --m 6 --q 1 --n 30 --seq pow:1 --methods naive,reduced --json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.stdout_text);
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["terms_touched"] == 1623160);
    CHECK(doc[1]["terms_touched"] == 11);
    CHECK(doc[0]["value"] == doc[1]["value"]);
}

TEST_SUITE_END();
