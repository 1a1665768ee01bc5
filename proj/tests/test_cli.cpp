#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "howe/cli.hpp"
#include "howe/json_io.hpp"

using namespace howe;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", "--rank", "1", "--defect", "1"}).out == "[1|]\n[1,0|1]\n");
    CHECK(run({"enumerate", "--special", "--rank", "1", "--defect", "0"}).out == "[1|0]\n");
    CHECK(run({"enumerate", "--rank", "0", "--defect", "1"}).out == "[0|]\n");
    const auto j = json::parse(run({"enumerate", "--rank", "2", "--defect", "0", "--special", "--json"}).out);
    CHECK(j == json({"[1|1]", "[2|0]", "[2,1|1,0]"}));
    CHECK(run({"enumerate", "--rank", "x", "--defect", "1"}).code == kExitParse);
    CHECK(run({"enumerate", "--rank", "1"}).code == kExitParse);
    CHECK(run({"enumerate", "--special", "--rank", "1", "--defect", "2"}).code == kExitDomain);
}

TEST_CASE("relation") {
    auto r = run({"relation", "[1|]", "[1|0]", "D"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["pairs"].size() == 2);
    r = run({"relation", "[1|]", "[1|0]", "B", "-"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["pairs"].empty());
    CHECK(json::parse(r.out)["kind"] == "B-");
    r = run({"relation", "[1|]", "[2,1|1,0]", "D"});
    CHECK(json::parse(r.out)["pairs"].empty());
    r = run({"relation", "[2,0|1]", "[1|0]", "bar", "+", "--cross-check"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["cross_check"]["mismatches"].empty());
    CHECK(run({"relation", "[1|", "[1|0]", "D"}).code == kExitParse);
    CHECK(run({"relation", "[1|0]", "[1|0]", "D"}).code == kExitDomain);
    CHECK(run({"relation", "[0|1]", "[1|0]", "D"}).code == kExitDomain);
    CHECK(run({"relation", "[1|]", "[1|0]", "B"}).code == kExitParse);
    CHECK(run({"relation", "[1|]", "[1|0]", "B+", "-"}).code == kExitParse);
}

TEST_CASE("cores") {
    auto j = json::parse(run({"cores", "[1|]", "[1|0]"}).out);
    CHECK(j["psi0_prime"] == json({"[1|0]"}));
    CHECK(j["one_to_one"] == false);
    j = json::parse(run({"cores", "[1,0|1]", "[1|0]"}).out);
    CHECK(j["psi0"].empty());
    CHECK(j["psi0_prime"].empty());
    CHECK(j["one_to_one"] == true);
    const auto r = run({"cores", "[1|]", "[1|1]"});
    CHECK(r.code == kExitOk);
    j = json::parse(r.out);
    CHECK(j["D_nonempty"] == true);
    CHECK(j["psi0_prime"].empty());
}

TEST_CASE("verify") {
    auto r = run({"verify", "--nmax", "1", "--npmax", "1"});
    CHECK(r.code == kExitOk);
    auto j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["pairs_checked"] == 2 * 3 * 2);

    r = run({"verify", "--nmax", "3", "--npmax", "3", "--amr"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["amr_checks"].size() == 4 * 4 * 2);

    r = run({"verify", "--nmax", "0", "--npmax", "0"});
    CHECK(r.code == kExitOk);
    CHECK(json::parse(r.out)["pairs_checked"] == 2);

    r = run({"verify", "--nmax", "1", "--npmax", "1", "--literal-half", "--signs", "+"});
    CHECK(r.code == kExitFailure);
    j = json::parse(r.out);
    CHECK_FALSE(j["failures"].empty());
    // the failure carries the full diff, which round-trips through the literal grammar
    const auto diff = uniform_from_json(j["failures"][0]["diff"]);
    CHECK_FALSE(diff.is_zero());
    CHECK(to_json(diff) == j["failures"][0]["diff"]);

    CHECK(run({"verify", "--nmax", "6"}).code == kExitDomain);
    CHECK(run({"verify", "--signs", "*"}).code == kExitParse);
}

TEST_CASE("proptest") {
    const auto r = run({"proptest", "relations", "--seed", "1", "--max-rank", "3"});
    CHECK(r.code == kExitOk);
    const auto j = json::parse(r.out);
    bool has_flip = false;
    for (const auto& p : j["properties"]) has_flip = has_flip || p["name"].get<std::string>().find("flip") != std::string::npos;
    CHECK(has_flip);
    CHECK(run({"proptest", "nonsense"}).code == kExitParse);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "--nmax", "2", "--npmax", "2", "--amr"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> p{"proptest", "special", "--seed", "9", "--max-rank", "3"};
    CHECK(run(p).out == run(p).out);
}

}
