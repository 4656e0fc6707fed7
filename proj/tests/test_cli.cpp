#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <mlucas/cli/commands.hpp>

using namespace mlucas::cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("term examples")
{
    CHECK(cli({"term", "--family", "gm", "--n", "3", "--method", "binet"}).out == "9+5i\n");
    CHECK(cli({"term", "--family", "m", "--n", "-3", "--method", "auto"}).out == "9/2^3\n");
    CHECK(cli({"term", "--family", "gmpoly", "--n", "2", "--method", "recurrence"}).out == "-4 + 3ix + 9x^2\n");
    CHECK(cli({"term", "--family", "gm", "--n", "0"}).out == "2+3/2^1i\n");
    CHECK(cli({"term", "--family", "mpoly", "--n", "-2", "--method", "binet"}).out == "-1 + 9/2^2*x^2\n");
}

TEST_CASE("term methods each agree with auto")
{
    for (const char *m : {"recurrence", "binet", "explicit", "symmetric", "genfun", "relation"}) {
        const auto r = cli({"term", "--family", "gm", "--n", "7", "--method", m});
        CHECK(r.code == 0);
        CHECK(r.out == "129+65i\n");
    }
    for (const char *m : {"recurrence", "explicit", "symmetric", "genfun", "relation"}) {
        const auto r = cli({"term", "--family", "gmpoly", "--n", "3", "--method", m});
        CHECK(r.code == 0);
        CHECK(r.out == "-4i - 18x + 9ix^2 + 27x^3\n");
    }
}

TEST_CASE("term rejects invalid method and index pairs")
{
    auto bad = [](std::vector<std::string> a) {
        const auto r = cli(std::move(a));
        CHECK(r.code == exit_usage);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    };
    bad({"term", "--family", "gm", "--n", "0", "--method", "explicit"});
    bad({"term", "--family", "gm", "--n", "0", "--method", "relation"});
    bad({"term", "--family", "gmpoly", "--n", "0", "--method", "explicit"});
    bad({"term", "--family", "m", "--n", "4", "--method", "relation"});
    bad({"term", "--family", "m", "--n", "-1", "--method", "recurrence"});
    bad({"term", "--family", "mpoly", "--n", "3", "--method", "binet"});
    bad({"term", "--family", "x", "--n", "3"});
    bad({"term", "--family", "m", "--n", "3", "--method", "magic"});
    bad({"term", "--family", "m"});
    bad({"nosuch"});
    bad({});
}

TEST_CASE("term json and csv")
{
    const auto r = cli({"--format", "json", "term", "--family", "gm", "--n", "0", "--method", "binet"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["re"]["num"] == "2");
    CHECK(j["value"]["re"]["exp2"] == 0);
    CHECK(j["value"]["im"]["num"] == "3");
    CHECK(j["value"]["im"]["exp2"] == 1);

    // format is global and may follow the subcommand
    const auto big = cli({"term", "--family", "m", "--n", "100", "--format", "json"});
    CHECK(nlohmann::json::parse(big.out)["value"]["re"]["num"] == "1267650600228229401496703205377");

    const auto poly = nlohmann::json::parse(cli({"--format", "json", "term", "--family", "mpoly", "--n", "2"}).out);
    REQUIRE(poly["value"]["coeffs"].size() == 3);
    CHECK(poly["value"]["coeffs"][0]["re"]["num"] == "-4");
    CHECK(poly["value"]["coeffs"][2]["re"]["num"] == "9");

    CHECK(cli({"--format", "csv", "term", "--family", "gm", "--n", "3", "--method", "binet"}).out
          == "family,n,method,re_num,re_exp2,im_num,im_exp2\ngm,3,binet,9,0,5,0\n");
}

TEST_CASE("table output")
{
    CHECK(cli({"table", "1"}).out == "n\tGm_n\n0\t2+3/2^1i\n1\t3+2i\n2\t5+3i\n3\t9+5i\n4\t17+9i\n5\t33+17i\n");
    const auto t2 = cli({"table", "2", "--rows", "3"}).out;
    CHECK(t2 == "n\tm_n(x)\tGm_n(x)\n0\t2\t2 + 3/2^1i*x\n1\t3x\t2i + 3x\n2\t-4 + 9x^2\t-4 + 3ix + 9x^2\n");

    const auto j = nlohmann::json::parse(cli({"--format", "json", "table", "1", "--rows", "1"}).out);
    REQUIRE(j["rows"].size() == 1);
    CHECK(j["rows"][0]["gm"]["im"]["num"] == "3");
    CHECK(j["rows"][0]["gm"]["im"]["exp2"] == 1);

    CHECK(cli({"table", "3"}).code == exit_usage);
    CHECK(cli({"table", "1", "--rows", "0"}).code == exit_usage);
}

TEST_CASE("series output")
{
    CHECK(cli({"series", "--which", "gm", "--order", "3"}).out == "[2+3/2^1i, 3+2i, 5+3i, 9+5i]\n");
    CHECK(cli({"series", "--which", "kernel", "--order", "3", "--d", "3", "--p", "-2"}).out == "[1, 3, 7, 15]\n");
    CHECK(cli({"series", "--which", "gm-odd", "--order", "2"}).out == "[3+2i, 9+5i, 33+17i]\n");
    CHECK(cli({"series", "--which", "gm-even", "--order", "2"}).out == "[2+3/2^1i, 5+3i, 17+9i]\n");
    CHECK(cli({"series", "--which", "mpoly", "--order", "2"}).out == "[2, 3x, -4 + 9x^2]\n");

    const auto j = nlohmann::json::parse(cli({"--format", "json", "series", "--which", "gm", "--order", "1"}).out);
    CHECK(j["order"] == 1);
    CHECK(j["coeffs"].size() == 2);

    CHECK(cli({"series", "--which", "kernel", "--order", "3", "--d", "3"}).code == exit_usage);
    CHECK(cli({"series", "--which", "kernel", "--order", "3", "--d", "3", "--p", "zz"}).code == exit_usage);
    CHECK(cli({"series", "--which", "nope"}).code == exit_usage);
}

TEST_CASE("verify small range passes")
{
    const auto r = cli({"verify", "--max-n", "6", "--max-poly-n", "6", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    CHECK(cli({"verify", "--max-n", "5"}).code == exit_usage);
    CHECK(cli({"verify", "--max-n", "6", "--max-poly-n", "0"}).code == exit_usage);
}

TEST_CASE("verify reports the first counterexample under a perturbed seed")
{
    const auto r = cli({"--format", "json", "verify", "--max-n", "20", "--max-poly-n", "6", "--perturb", "gm1"});
    CHECK(r.code == exit_failure);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["overall"] == false);
    bool found = false;
    for (const auto &c : j["checks"]) {
        if (c["name"] == "route-agreement-gm") {
            CHECK(c["status"] == "fail");
            CHECK(c["detail"].get<std::string>().rfind("n=1:", 0) == 0);
            found = true;
        }
    }
    CHECK(found);
    CHECK(cli({"verify", "--perturb", "x"}).code == exit_usage);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args = {"--format", "csv", "verify", "--max-n", "30", "--max-poly-n", "8"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("help exits cleanly")
{
    const auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("term") != std::string::npos);
}
