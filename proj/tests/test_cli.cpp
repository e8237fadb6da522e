#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "gcdsum/cli.hpp"
#include "oracles.hpp"

using namespace gcdsum;
using namespace gcdsum::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(s);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    return out;
}

} // namespace

TEST_CASE("characters: modulus 1 is a single trivial row")
{
    const Run r = run({"characters", "--modulus", "1", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    CHECK(lines(r.out) == std::vector<std::string>{"index,digits,order,conductor", "0,,1,1"});
}

TEST_CASE("characters: modulus 8")
{
    const Run r = run({"characters", "--modulus", "8", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    std::multiset<std::uint64_t> conductors;
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        CHECK(j.size() == 4);
        conductors.insert(j["conductor"].get<std::uint64_t>());
    }
    CHECK(conductors == std::multiset<std::uint64_t>{1, 4, 8, 8});
    // exponent on 5 nonzero, on -1 zero: chi(5) = -1, chi(-1) = 1
    CHECK(nlohmann::json::parse(rows[1])["digits"] == nlohmann::json::array({0, 1}));
    CHECK(nlohmann::json::parse(rows[1])["conductor"] == 8);
}

TEST_CASE("characters: modulus 9 conductors lie in {1, 3, 9}")
{
    std::ostringstream out;
    cmd_characters(factorize(9), Format::csv, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 7);
    std::multiset<std::string> conductors;
    for (std::size_t i = 1; i < rows.size(); ++i) conductors.insert(split(rows[i], ',')[3]);
    CHECK(conductors == std::multiset<std::string>{"1", "3", "9", "9", "9", "9"});
}

TEST_CASE("characters: table format has a header and one row per character")
{
    const Run r = run({"characters", "--modulus", "12"});
    REQUIRE(r.code == kExitOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rfind("index", 0) == 0);
}

TEST_CASE("eval examples")
{
    Run r = run({"eval", "--modulus", "5", "--char-index", "0", "--k", "0", "--mode", "closed"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == "{\"n\":5,\"char_index\":0,\"conductor\":1,\"k\":0,\"mode\":\"closed\",\"value\":\"8\"}\n");

    r = run({"eval", "--modulus", "9", "--char-index", "3", "--k", "1", "--mode", "closed"});
    REQUIRE(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["conductor"] == 3);
    CHECK(nlohmann::json::parse(r.out)["value"] == "24");

    r = run({"eval", "--modulus", "3", "--char-index", "1", "--k", "1", "--mode", "naive"});
    REQUIRE(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["value"] == "2");
}

TEST_CASE("eval output is byte-identical across runs and parses back to the library value")
{
    const std::vector<std::string> args{"eval", "--modulus", "360", "--char-index", "17", "--k", "3", "--mode",
                                        "grouped"};
    const Run a = run(args), b = run(args);
    REQUIRE(a.code == kExitOk);
    CHECK(a.out == b.out);

    const auto chi = CharacterGroup(factorize(360)).at(17);
    const mpz_class value(nlohmann::json::parse(a.out)["value"].get<std::string>());
    CHECK(value == menon_grouped(chi, 3).value);
}

TEST_CASE("eval error paths map to exit codes")
{
    CHECK(run({"eval", "--modulus", "9", "--char-index", "6", "--k", "1"}).code == kExitUsage);
    CHECK(run({"eval", "--modulus", "12a", "--char-index", "0", "--k", "1"}).code == kExitUsage);
    CHECK(run({"eval", "--modulus", "0", "--char-index", "0", "--k", "1"}).code == kExitUsage);
    CHECK(run({"eval", "--modulus", "9", "--char-index", "0", "--k", "1", "--mode", "fast"}).code == kExitUsage);
    CHECK(run({"eval", "--modulus", "9", "--k", "1"}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);

    const Run big = run({"eval", "--modulus", "97", "--char-index", "0", "--k", "4", "--mode", "naive"});
    CHECK(big.code == kExitResource);
    CHECK(big.err.find("cap") != std::string::npos);
    CHECK(run({"eval", "--modulus", "97", "--char-index", "0", "--k", "2", "--mode", "naive", "--work-cap", "100"})
              .code == kExitResource);
}

TEST_CASE("help exits cleanly and documents the index encoding")
{
    const Run r = run({"eval", "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("mixed radix") != std::string::npos);
}

TEST_CASE("verify: n <= 24, all pairs, no mismatches")
{
    VerifyOptions options;
    options.max_n = 24;
    std::ostringstream out, err;
    const VerificationReport report = cmd_verify(options, Format::table, out, err);
    CHECK(report.ok());
    CHECK(report.cases_run == predicted_cases(options));
    CHECK(report.cases_run == 180 * 3 * 6); // sum_{n <= 24} phi(n) = 180
    CHECK(out.str().find("mismatches: 0") != std::string::npos);
    CHECK(err.str().empty());
}

TEST_CASE("verify: max_n = 1 gives one case per k and pair")
{
    const Run r = run({"verify", "--max-n", "1", "--k-list", "0,1,5", "--pairs", "naive:closed", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["cases_run"] == 3);
    CHECK(j["mismatches"].empty());
    CHECK(j["pairs"] == nlohmann::json::array({"naive:closed"}));
}

TEST_CASE("verify: parallel and serial reports are identical")
{
    VerifyOptions options;
    options.max_n = 60;
    options.k_list = {0, 1, 2};
    options.pairs = {{Mode::grouped, Mode::closed}, {Mode::local, Mode::closed}};
    const auto serial = run_verification(options);
    options.parallel = true;
    options.threads = 4;
    const auto parallel = run_verification(options);
    CHECK(serial.cases_run == parallel.cases_run);
    CHECK(serial.mismatches == parallel.mismatches);
    CHECK(serial.max_n == parallel.max_n);
    CHECK(serial.k_list == parallel.k_list);
    CHECK(serial.pairs == parallel.pairs);
    CHECK(serial.ok());
}

TEST_CASE("verify: usage and resource errors")
{
    CHECK(run({"verify", "--max-n", "0"}).code == kExitUsage);
    CHECK(run({"verify", "--max-n", "5", "--pairs", "naive:naive"}).code == kExitUsage);
    CHECK(run({"verify", "--max-n", "5", "--pairs", "naive"}).code == kExitUsage);
    CHECK(run({"verify", "--max-n", "5", "--format", "csv"}).code == kExitUsage);
    CHECK(run({"verify", "--max-n", "50", "--k-list", "3", "--pairs", "naive:closed", "--work-cap", "1000"}).code ==
          kExitResource);
}

TEST_CASE("mode pair parsing")
{
    CHECK(parse_mode_pair("grouped:closed") == ModePair{Mode::grouped, Mode::closed});
    CHECK_FALSE(parse_mode_pair("grouped").has_value());
    CHECK_FALSE(parse_mode_pair("grouped:grouped").has_value());
    CHECK_FALSE(parse_mode_pair("grouped:fast").has_value());
    CHECK(all_mode_pairs().size() == 6);
}

TEST_CASE("table examples")
{
    Run r = run({"table", "--n-list", "4", "--k", "0", "--mode", "closed", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    CHECK(lines(r.out) == std::vector<std::string>{"n,char_index,conductor,value", "4,0,1,6", "4,1,4,2"});

    r = run({"table", "--n-list", "1", "--k", "7", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == "{\"n\":1,\"char_index\":0,\"conductor\":1,\"value\":\"1\"}\n");

    std::ostringstream out;
    const std::vector<std::uint64_t> nine{9};
    cmd_table(nine, 1, Mode::closed, Format::csv, kDefaultWorkCap, out);
    const auto rows = lines(out.str());
    REQUIRE(rows.size() == 7);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        const std::string expected = cells[2] == "1" ? "78" : cells[2] == "3" ? "24" : "6";
        CHECK(cells[3] == expected);
    }
}

TEST_CASE("table rows are ordered by n then index, every mode agreeing")
{
    std::ostringstream closed, naive;
    const std::vector<std::uint64_t> ns{12, 5, 1};
    cmd_table(ns, 2, Mode::closed, Format::csv, kDefaultWorkCap, closed);
    cmd_table(ns, 2, Mode::naive, Format::csv, kDefaultWorkCap, naive);
    CHECK(closed.str() == naive.str());
    const auto rows = lines(closed.str());
    REQUIRE(rows.size() == 1 + 4 + 4 + 1);
    CHECK(rows[1].rfind("1,0,", 0) == 0);
    CHECK(rows[2].rfind("5,0,", 0) == 0);
    CHECK(rows[6].rfind("12,0,", 0) == 0);
    CHECK(rows[9].rfind("12,3,", 0) == 0);
    CHECK(run({"table", "--n-list", "0", "--k", "1"}).code == kExitUsage);
}
