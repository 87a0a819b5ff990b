#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "bkit/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = bkit::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

bool all_leaves_are_strings(const json& j) {
    if (j.is_object() || j.is_array()) {
        for (const auto& item : j) {
            if (!all_leaves_are_strings(item)) return false;
        }
        return true;
    }
    return j.is_string();
}

}  // namespace

TEST_CASE("fermat subcommand") {
    const Run r = cli({"fermat", "--a", "2", "--n", "4"});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 24") != std::string::npos);
    CHECK(r.out.find("residue: 0") != std::string::npos);
    CHECK(r.out.find("check: pass") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("wilson subcommand") {
    const Run r = cli({"wilson", "--n", "12"});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 39921456") != std::string::npos);
    CHECK(r.out.find("residue: 0") != std::string::npos);
    CHECK(r.out.find("check: pass") != std::string::npos);
}

TEST_CASE("lucas subcommand") {
    const Run r = cli({"lucas", "--n", "2", "--m", "5", "--r", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 12") != std::string::npos);
    CHECK(r.out.find("check: pass") != std::string::npos);
}

TEST_CASE("lucas-prime subcommand in JSON") {
    const Run r = cli({"lucas-prime", "--p", "3", "--m", "10", "--r", "4", "--format", "json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "lucas-prime");
    CHECK(j["residue"] == "0");
    CHECK(j["value"] == "210");
    CHECK(j["modulus"] == "3");
    CHECK(j["check"] == "pass");
    CHECK(j["inputs"]["p"] == "3");
}

TEST_CASE("phi subcommand") {
    const Run r = cli({"phi", "--n", "12"});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 4") != std::string::npos);
}

TEST_CASE("necklaces subcommand") {
    const Run r = cli({"necklaces", "--a", "2", "--n", "4"});
    CHECK(r.status == 0);
    CHECK(r.out.find("value: 6") != std::string::npos);
}

TEST_CASE("JSON reports use decimal strings throughout") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"fermat", "--a", "10", "--n", "60", "--format", "json"},
             {"wilson", "--n", "14", "--format", "json"},
             {"lucas", "--n", "4", "--m", "9", "--r", "3", "--format", "json"},
             {"orbits", "--action", "words", "--a", "2", "--n", "4", "--format", "json"},
         }) {
        const Run r = cli(args);
        CHECK(r.status == 0);
        const json j = json::parse(r.out);
        CHECK(all_leaves_are_strings(j));
        CHECK(j.contains("command"));
        CHECK(j.contains("inputs"));
        CHECK(j.contains("value"));
        CHECK(j.contains("modulus"));
        CHECK(j.contains("details"));
        if (j.contains("residue")) {
            // residue = value mod modulus, recomputed here from the strings
            using boost_int = bkit::Natural;
            const boost_int value(j["value"].get<std::string>());
            const boost_int modulus(j["modulus"].get<std::string>());
            const boost_int residue(j["residue"].get<std::string>());
            CHECK(value % modulus == residue);
            CHECK((j["check"] == "pass") == (residue == 0 || j["command"] == "orbits"));
        }
    }
}

TEST_CASE("orbits subcommand reports the per-divisor fixed counts") {
    const Run r = cli({"orbits", "--action", "words", "--a", "2", "--n", "4",
                       "--format", "json"});
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == "6");
    CHECK(j["check"] == "pass");
    const json& details = j["details"];
    REQUIRE(details.size() == 3);
    CHECK(details[0] == json({{"divisor", "1"}, {"term", "2"}}));
    CHECK(details[1] == json({{"divisor", "2"}, {"term", "4"}}));
    CHECK(details[2] == json({{"divisor", "4"}, {"term", "16"}}));
}

TEST_CASE("orbits subcommand for cycles and subsets") {
    const Run cycles = cli({"orbits", "--action", "cycles", "--n", "6"});
    CHECK(cycles.status == 0);
    CHECK(cycles.out.find("value: 24") != std::string::npos);  // wilson_sum(6)/6 = 144/6

    const Run subsets = cli({"orbits", "--action", "subsets", "--n", "2", "--m", "5",
                             "--r", "2"});
    CHECK(subsets.status == 0);
    CHECK(subsets.out.find("value: 6") != std::string::npos);
}

TEST_CASE("dump-action emits the differential-test table") {
    const Run r = cli({"dump-action", "--action", "words", "--a", "2", "--n", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "n=2 size=4\n0 -> 0\n1 -> 2\n2 -> 1\n3 -> 3\n");
}

TEST_CASE("verify subcommands pass on theorem ranges") {
    const Run fermat = cli({"verify", "--theorem", "fermat", "--max-n", "12", "--max-a", "4"});
    CHECK(fermat.status == 0);
    CHECK(fermat.out.find("check: pass") != std::string::npos);

    const Run wilson = cli({"verify", "--theorem", "wilson", "--max-n", "9"});
    CHECK(wilson.status == 0);

    const Run lucas = cli({"verify", "--theorem", "lucas", "--max-n", "4", "--max-m", "8",
                           "--format", "json"});
    CHECK(lucas.status == 0);
    const json j = json::parse(lucas.out);
    CHECK(j["check"] == "pass");
    CHECK(j["failures"].empty());
    CHECK(j["checked"] == "180");  // 4 * C(10,2) pairs

    const Run burnside = cli({"verify", "--theorem", "burnside", "--max-n", "16",
                              "--count", "40", "--seed", "7"});
    CHECK(burnside.status == 0);
}

TEST_CASE("verify is deterministic in the seed") {
    const std::vector<std::string> args{"verify", "--theorem", "burnside", "--max-n", "10",
                                        "--count", "10", "--seed", "3", "--format", "json"};
    CHECK(cli(args).out == cli(args).out);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(cli({}).status == 2);
    CHECK(cli({"frobnicate"}).status == 2);
    CHECK(cli({"fermat", "--a", "2"}).status == 2);           // missing --n
    CHECK(cli({"fermat", "--a", "2", "--n", "0"}).status == 2);
    CHECK(cli({"wilson", "--n", "12", "--format", "yaml"}).status == 2);
    CHECK(cli({"orbits", "--action", "words", "--n", "4"}).status == 2);  // missing --a
    CHECK(cli({"lucas-prime", "--p", "6", "--m", "3", "--r", "1"}).status == 2);  // composite
    CHECK(cli({"orbits", "--action", "words", "--a", "2", "--n", "40"}).status == 2);  // budget
    const Run bad = cli({"fermat", "--bogus"});
    CHECK(bad.status == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("help exits cleanly") {
    const Run top = cli({"--help"});
    CHECK(top.status == 0);
    CHECK(top.out.find("verify") != std::string::npos);
    const Run sub = cli({"fermat", "--help"});
    CHECK(sub.status == 0);
}
