#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "charlab/characters.hpp"
#include "charlab/io_json.hpp"

using namespace charlab;

namespace {

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(CHARLAB_BIN) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

}  // namespace

TEST_CASE("partition json round trip") {
    SignedPartition p = *SignedPartition::parse("5/2,3/2");
    CHECK(partition_from_json(partition_to_json(p)) == p);
    SignedPartition neg = *SignedPartition::parse("3,-1");
    json j = partition_to_json(neg);
    CHECK(j["sign"] == "-");
    CHECK(partition_from_json(j) == neg);
    CHECK_THROWS(partition_from_json(json{{"parts", {"2.5"}}}));
}

TEST_CASE("polynomial json round trip") {
    LaurentPoly p = char_poly(CharFamily::CBInterp, *SignedPartition::parse("3/2,1/2"), 2);
    json j = poly_to_json(p, {"x1", "x2", "beta"});
    CHECK(j["vars"][2] == "beta");
    CHECK(poly_from_json(j) == p);
    // Exponents serialize as true-value strings on the half grid.
    bool saw_half = false;
    for (const auto& t : j["terms"])
        for (const auto& e : t["exp"])
            if (e.get<std::string>().find("/2") != std::string::npos) saw_half = true;
    CHECK(saw_half);
}

TEST_CASE("pattern json round trip") {
    Pattern z;
    z.family = PatternFamily::SplitOrthogonal;
    z.rows = {{*HalfInt::parse("1/2")}, {*HalfInt::parse("1")}};
    json j = pattern_to_json(z);
    CHECK(j["family"] == "split_orthogonal");
    CHECK(j["rows"][0][0] == "1/2");
    CHECK(pattern_from_json(j) == z);
}

TEST_CASE("array json round trip") {
    std::vector<std::vector<HalfInt>> rows = {{HalfInt(1), HalfInt::from_doubled(3)}, {HalfInt(0)}};
    MonoidTaggedArray a = make_array({2, 1}, rows, OuterMonoid::Half);
    json j = array_to_json(a);
    CHECK(j["outer"] == "half");
    CHECK(array_from_json(j) == a);
}

TEST_CASE("cli char matches the library") {
    auto [rc, out] = run_cli("char --family sp_even --shape 1 --vars 1 --out json");
    CHECK(rc == 0);
    LaurentPoly parsed = poly_from_json(json::parse(out));
    CHECK(parsed == char_poly(CharFamily::SpEven, *SignedPartition::parse("1"), 1));
}

TEST_CASE("cli validation failures exit with 2") {
    CHECK(run_cli("char --family nope --shape 1 --vars 1").first == 2);
    CHECK(run_cli("lpp cdf --model antidiag --N 1 --p 2 --beta 0 --u 1").first == 2);
    CHECK(run_cli("lpp cdf --model antidiag --N 1 --p 1/2 --beta 0 --u 1 --formula C").first == 2);
}

TEST_CASE("cli lpp cdf emits num/den csv") {
    auto [rc, out] = run_cli(
        "lpp cdf --model antidiag --N 1 --p 1/4 --beta 0 --u 1 --formula B --out csv");
    CHECK(rc == 0);
    CHECK(out.find("u,formula,value_num,value_den") != std::string::npos);
    CHECK(out.find("1,B,255,256") != std::string::npos);
}

TEST_CASE("cli simulate is seed-reproducible bit for bit") {
    std::string args =
        "lpp simulate --model doublesym --N 2 --p 1/4,1/4 --alpha 1/4 --beta 1 --u 1 "
        "--trials 20000 --seed 42 --workers 3 --out json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.first == 0);
    CHECK(a.second == b.second);
}

TEST_CASE("cli pattern stream re-parses to the enumerated list") {
    auto [rc, out] = run_cli("patterns enum --family symplectic --shape 1 --height 2");
    CHECK(rc == 0);
    std::vector<Pattern> parsed;
    std::stringstream ss(out);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) parsed.push_back(pattern_from_json(json::parse(line)));
    auto expect = enumerate_patterns_list(PatternFamily::Symplectic, 2, *SignedPartition::parse("1"));
    CHECK(parsed.size() == expect.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == expect[i]);
}

TEST_CASE("cli bijection round trip through files") {
    Pattern z;
    z.family = PatternFamily::SplitOrthogonal;
    z.rows = {{*HalfInt::parse("1/2")}, {*HalfInt::parse("1")}};
    {
        std::ofstream f("/tmp/charlab_test_pattern.json");
        f << pattern_to_json(z).dump();
    }
    auto [rc, out] = run_cli("bijection thm31 --dir fwd --pattern /tmp/charlab_test_pattern.json");
    CHECK(rc == 0);
    json j = json::parse(out);
    CHECK(j["epsilon"][0] == 1);
    {
        std::ofstream f("/tmp/charlab_test_zprime.json");
        f << j["zprime"].dump();
    }
    auto [rc2, out2] = run_cli(
        "bijection thm31 --dir inv --pattern /tmp/charlab_test_zprime.json --epsilon 1 --grid int");
    CHECK(rc2 == 0);
    CHECK(pattern_from_json(json::parse(out2)) == z);
}

TEST_CASE("cli rsk round trip through files") {
    std::vector<std::vector<HalfInt>> rows = {{HalfInt(1), HalfInt::from_doubled(5)}, {HalfInt(2)}};
    MonoidTaggedArray w = make_array({2, 1}, rows, OuterMonoid::Half);
    {
        std::ofstream f("/tmp/charlab_test_array.json");
        f << array_to_json(w).dump();
    }
    auto [rc, out] = run_cli("rsk --dir fwd --array /tmp/charlab_test_array.json");
    CHECK(rc == 0);
    {
        std::ofstream f("/tmp/charlab_test_t.json");
        f << out;
    }
    auto [rc2, out2] = run_cli("rsk --dir inv --array /tmp/charlab_test_t.json");
    CHECK(rc2 == 0);
    CHECK(array_from_json(json::parse(out2)) == w);
}

TEST_CASE("cli verify exit codes") {
    auto [rc, out] = run_cli("verify --suite default --out /tmp/charlab_report.json");
    CHECK(rc == 0);
    std::ifstream f("/tmp/charlab_report.json");
    json report;
    f >> report;
    CHECK(report["cases"].size() > 0);
    for (const auto& entry : report["cases"]) CHECK(entry["holds"] == true);
}

TEST_CASE("budget cap is honored via the environment") {
    std::string cmd = std::string("CHARLAB_BUDGET=5 ") + CHARLAB_BIN +
                      " patterns enum --family gt --shape 4,2,1 --count 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int rc = WEXITSTATUS(pclose(pipe));
    CHECK(rc == 2);
    CHECK(out.find("budget") != std::string::npos);
}

TEST_CASE("cli duality trend flag") {
    auto [rc, out] = run_cli("duality --n 2 --rho 0.7,1.1,1.6,2.2 --v 1 --trend 1.0,0.5");
    CHECK(rc == 0);
    double v = std::stod(out);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-9);
}
