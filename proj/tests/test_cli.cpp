// Integration tests driving the installed CLI binary end to end.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string output;  // stdout and stderr, merged
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HELBERG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string current;
    while (std::getline(in, current)) {
        if (current == line) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("weights subcommand prints the published tables") {
    const CliResult ternary = run_cli("weights --q 3 --d 2 --count 10");
    CHECK(ternary.code == 0);
    CHECK(ternary.output == "1\n3\n9\n25\n69\n189\n517\n1413\n3861\n10549\n");

    const CliResult binary = run_cli("weights --q 2 --d 2 --count 13");
    CHECK(binary.code == 0);
    CHECK(binary.output ==
          "1\n2\n4\n7\n12\n20\n33\n54\n88\n143\n232\n376\n609\n");

    const CliResult empty = run_cli("weights --q 2 --d 2 --count 0");
    CHECK(empty.code == 0);
    CHECK(empty.output.empty());

    const CliResult as_json = run_cli("weights --q 3 --d 2 --count 4 --format json");
    CHECK(as_json.code == 0);
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j["q"] == 3);
    CHECK(j["d"] == 2);
    CHECK(j["weights"] == nlohmann::json({"1", "3", "9", "25"}));
}

TEST_CASE("weights subcommand rejects bad usage") {
    CHECK(run_cli("weights --q 3 --count 10").code == 2);   // missing --d
    CHECK(run_cli("weights --q 1 --d 2 --count 3").code == 2);
    CHECK(run_cli("weights --q 3 --d 2 --count 3 --format yaml").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("check subcommand reports membership") {
    const CliResult member =
        run_cli("check --q 3 --d 2 --n 8 --r 23 12202212");
    CHECK(member.code == 0);
    CHECK(contains_line(member.output, "moment: 3884"));
    CHECK(contains_line(member.output, "residue: 23"));
    CHECK(contains_line(member.output, "member: yes"));

    const CliResult outsider =
        run_cli("check --q 3 --d 2 --n 8 --r 23 00000000");
    CHECK(outsider.code == 1);
    CHECK(contains_line(outsider.output, "member: no"));

    const CliResult as_json =
        run_cli("check --q 3 --d 2 --n 8 --r 23 12202212 --format json");
    CHECK(as_json.code == 0);
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j["moment"] == "3884");
    CHECK(j["residue"] == "23");
    CHECK(j["member"] == true);
    CHECK(j["m"] == "3861");

    CHECK(run_cli("check --q 3 --d 2 --n 8 --r 23 122022").code == 2);
    CHECK(run_cli("check --q 3 --d 2 --n 8 --r 23 12203212").code == 2);
    CHECK(run_cli("check --q 3 --d 2 --n 8 12202212").code == 2);  // no --r
}

TEST_CASE("sizes subcommand emits stable tables in all formats") {
    const CliResult csv = run_cli("sizes --q 2 --d 2 --n 7 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.output == "n,N_n,R_n\n7,4,12;13\n");

    const CliResult range = run_cli("sizes --q 2 --d 2 --n 1..8 --format csv");
    CHECK(range.code == 0);
    CHECK(range.output == run_cli("sizes --q 2 --d 2 --n 1..8 --format csv").output);
    std::istringstream lines(range.output);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        ++count;
    }
    CHECK(count == 9);  // header + one row per length

    const CliResult text = run_cli("sizes --q 2 --d 2 --n 7");
    CHECK(text.code == 0);
    CHECK(text.output == "n=7 N=4 R=12,13\n");

    const CliResult as_json =
        run_cli("sizes --q 4 --d 2 --n 5 --format json --histogram");
    CHECK(as_json.code == 0);
    const auto j = nlohmann::json::parse(as_json.output);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["max_size"] == 3);
    CHECK(j["rows"][0]["argmax_residues"] ==
          nlohmann::json({"0", "1", "61", "62"}));
    CHECK(j["rows"][0]["m"] == "880");
    std::uint64_t total = 0;
    for (const auto& row : j["rows"][0]["per_residue_sizes"]) {
        total += row["size"].get<std::uint64_t>();
    }
    CHECK(total == 1024);  // 4^5

    CHECK(run_cli("sizes --q 2 --d 2 --n 0..3").code == 2);
    CHECK(run_cli("sizes --q 2 --d 2 --n 5..3").code == 2);
    CHECK(run_cli("sizes --q 2 --d 2 --n 30 --budget 1000").code == 2);
}

TEST_CASE("corrupt subcommand deletes chosen or random positions") {
    const CliResult chosen =
        run_cli("corrupt --q 3 --d 2 --n 8 12202212 --pattern 6");
    CHECK(chosen.code == 0);
    CHECK(contains_line(chosen.output, "received: 1220212"));
    CHECK(contains_line(chosen.output, "pattern: 6"));
    CHECK(contains_line(chosen.output, "index: 2498"));

    const CliResult both =
        run_cli("corrupt --q 3 --d 2 --n 8 12202212 --pattern 3,6 --format json");
    CHECK(both.code == 0);
    const auto j = nlohmann::json::parse(both.output);
    CHECK(j["received"] == "120212");
    CHECK(j["pattern"] == nlohmann::json({3, 6}));
    CHECK(j["index"] == "3380");

    const CliResult random_a =
        run_cli("corrupt --q 3 --d 2 --n 8 12202212 --random 2 --seed 9");
    const CliResult random_b =
        run_cli("corrupt --q 3 --d 2 --n 8 12202212 --random 2 --seed 9");
    CHECK(random_a.code == 0);
    CHECK(random_a.output == random_b.output);

    // --r turns on membership checking so typos surface before the channel
    CHECK(run_cli("corrupt --q 3 --d 2 --n 8 --r 23 12202212 --pattern 6")
              .code == 0);
    const CliResult non_member =
        run_cli("corrupt --q 3 --d 2 --n 8 --r 23 12202211 --pattern 6");
    CHECK(non_member.code == 2);
    CHECK(non_member.output.find("not a member") != std::string::npos);

    CHECK(run_cli("corrupt --q 3 --d 2 --n 8 12202212").code == 2);
    CHECK(run_cli("corrupt --q 3 --d 2 --n 8 12202212 --pattern 6 --random 1")
              .code == 2);
    CHECK(run_cli("corrupt --q 3 --d 2 --n 8 12202212 --pattern 9").code == 2);
    CHECK(run_cli("corrupt --q 3 --d 2 --n 8 1220221 --pattern 1").code == 2);
}

TEST_CASE("decode subcommand recovers the worked examples") {
    const CliResult one = run_cli("decode --q 3 --d 2 --n 8 --r 23 1220212");
    CHECK(one.code == 0);
    CHECK(one.output == "decoded: 12202212\nindex: 2498\nalgorithm: d1\n");

    const CliResult traced =
        run_cli("decode --q 3 --d 2 --n 8 --r 23 1220212 --trace");
    CHECK(traced.code == 0);
    CHECK(traced.output ==
          "decoded: 12202212\nindex: 2498\nalgorithm: d1\n"
          "shift P=8 sym=2 I=706\n"
          "shift P=7 sym=1 I=378\n"
          "resolve k=1 val=2 P=6 I=0\n");

    const CliResult two =
        run_cli("decode --q 2 --d 2 --n 10 --r 62 11010101 --algorithm d2 --trace");
    CHECK(two.code == 0);
    CHECK(two.output ==
          "decoded: 1101011011\nindex: 210\nalgorithm: d2\n"
          "shift P=10 sym=1 I=121\n"
          "resolve k=2 val=1 P=9 I=33\n"
          "shift P=8 sym=0 I=33\n"
          "resolve k=1 val=1 P=7 I=0\n");

    const CliResult multi =
        run_cli("decode --q 3 --d 2 --n 8 --r 23 120212 --algorithm dm");
    CHECK(multi.code == 0);
    CHECK(contains_line(multi.output, "decoded: 12202212"));
    CHECK(contains_line(multi.output, "index: 3380"));

    const CliResult auto_multi = run_cli("decode --q 3 --d 2 --n 8 --r 23 120212");
    CHECK(auto_multi.code == 0);
    CHECK(contains_line(auto_multi.output, "algorithm: dm"));

    const CliResult oracle =
        run_cli("decode --q 3 --d 2 --n 8 --r 23 120212 --algorithm oracle");
    CHECK(oracle.code == 0);
    CHECK(contains_line(oracle.output, "decoded: 12202212"));
    CHECK(contains_line(oracle.output, "algorithm: oracle"));

    const CliResult identity = run_cli("decode --q 3 --d 2 --n 8 --r 23 12202212");
    CHECK(identity.code == 0);
    CHECK(contains_line(identity.output, "decoded: 12202212"));
    CHECK(contains_line(identity.output, "algorithm: identity"));

    const CliResult as_json =
        run_cli("decode --q 3 --d 2 --n 8 --r 23 1220212 --format json --trace");
    CHECK(as_json.code == 0);
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j["decoded"] == "12202212");
    CHECK(j["index"] == "2498");
    CHECK(j["trace"]["initial_index"] == "2498");
    CHECK(j["trace"]["steps"].size() == 3);
}

TEST_CASE("decode subcommand distinguishes failure from misuse") {
    // no codeword can produce this received word
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 2222222").code == 1);
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 2222222 --algorithm oracle")
              .code == 1);
    // full-length non-member
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 00000000").code == 1);
    // three deletions against d = 2
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 12022").code == 1);
    // wrong algorithm for the deletion count: usage error
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 120212 --algorithm d1").code == 2);
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 120212 --algorithm d2").code == 2);
    CHECK(run_cli("decode --q 3 --d 2 --n 8 --r 23 1220212 --algorithm bogus")
              .code == 2);
    // d = 1 codebooks are outside this decoder family
    const CliResult vt = run_cli("decode --q 2 --d 1 --n 8 --r 0 0000000");
    CHECK(vt.code == 2);
    CHECK(vt.output.find("Levenshtein") != std::string::npos);
}

TEST_CASE("verify subcommand checks whole codebooks") {
    const CliResult pass = run_cli("verify --q 2 --d 2 --n 8 --r 12");
    CHECK(pass.code == 0);
    CHECK(contains_line(pass.output, "codebook: q=2 d=2 n=8 m=88 r=12"));
    CHECK(contains_line(pass.output, "members: 5"));
    CHECK(contains_line(pass.output, "deleted words: 180"));
    CHECK(contains_line(pass.output, "counterexamples: 0"));
    CHECK(contains_line(pass.output, "roundtrip: 180/180"));
    CHECK(contains_line(pass.output, "verdict: pass"));

    const CliResult sweep =
        run_cli("verify --q 2 --d 2 --n 3..5 --format json");
    CHECK(sweep.code == 0);
    const auto j = nlohmann::json::parse(sweep.output);
    CHECK(j["pass"] == true);
    REQUIRE(j["codebooks"].size() == 3);
    for (const auto& block : j["codebooks"]) {
        CHECK(block["pass"] == true);
        CHECK(block["roundtrip_failures"] == 0);
    }

    CHECK(run_cli("verify --q 2 --d 2 --n 3..5 --r 0").code == 2);
    CHECK(run_cli("verify --q 2 --d 2 --n 26 --budget 1000").code == 2);
}

TEST_CASE("output files receive exactly the stdout text") {
    const std::string path = "cli_test_sizes.csv";
    std::remove(path.c_str());
    const CliResult direct = run_cli("sizes --q 2 --d 2 --n 1..4 --format csv");
    const CliResult redirected =
        run_cli("sizes --q 2 --d 2 --n 1..4 --format csv --out " + path);
    CHECK(redirected.code == 0);
    CHECK(redirected.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.output);
    std::remove(path.c_str());
}
