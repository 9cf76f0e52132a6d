#include <cstdlib>
#include <filesystem>

#include "cli_cases.hpp"
#include "doctest.h"

TEST_CASE("golden outputs are stable and match the checked-in files") {
    bool regen = std::getenv("CONJ_REGEN_GOLDEN") != nullptr;
    for (const auto& g : cli_cases::goldens()) {
        CAPTURE(g.name);
        auto first = cli_cases::run(g.args);
        auto second = cli_cases::run(g.args);
        CHECK(first.out == second.out);
        CHECK(first.code == second.code);
        std::string text = cli_cases::golden_text(first);
        if (regen) {
            std::filesystem::create_directories(cli_cases::kSource + "/tests/golden");
            std::ofstream(cli_cases::golden_path(g.name), std::ios::binary) << text;
            continue;
        }
        std::string expected;
        REQUIRE(cli_cases::read_file(cli_cases::golden_path(g.name), expected));
        CHECK(text == expected);
    }
}

TEST_CASE("exit codes on malformed input") {
    for (const auto& m : cli_cases::malformed()) {
        CAPTURE(m.what);
        auto o = cli_cases::run(m.args);
        CHECK(o.code == m.exit_code);
        CHECK_FALSE(o.err.empty());
    }
}

TEST_CASE("worked examples through the command line") {
    auto tt = cli_cases::sample("two_trefoil.yaml");
    auto a = cli_cases::run({"decide", tt, "-u", "v1.c1 v1.c2", "-v", "v2.h^-1"});
    CHECK(a.code == 0);
    CHECK(a.out.find("verdict: true\n") != std::string::npos);
    CHECK(a.out.find("certificate.case: ii\n") != std::string::npos);
    CHECK(a.out.find("certificate.path_length: 1\n") != std::string::npos);
    auto b = cli_cases::run({"decide", tt, "-u", "v1.h", "-v", "v2.h"});
    CHECK(b.out.find("verdict: false\n") != std::string::npos);
    CHECK(b.out.find("witness") == std::string::npos);
    auto c = cli_cases::run({"decide", tt, "-u", "v1.c1", "-v", "v1.c1"});
    CHECK(c.out.find("witness: \n") != std::string::npos);
    auto p = cli_cases::run({"sub", tt, "parallel", "v1", "T1", "v1.c1 v1.c2"});
    CHECK(p.out.find("\"element\":\"v1.d1^-1\"") != std::string::npos);
    auto s = cli_cases::run({"sub", tt, "cosets", "v1", "T1", "T1", "v1.c1", "v1.c1"});
    CHECK(s.out.find("kind: h-line") != std::string::npos);
    auto w = cli_cases::run({"sub", tt, "word", ""});
    CHECK(w.out == "result: true\n");
    auto v = cli_cases::run({"validate", cli_cases::sample("invalid/identity_gluing.yaml")});
    CHECK(v.code == 1);
    CHECK(v.out.find("fiber") != std::string::npos);
}

TEST_CASE("json output carries the same data") {
    auto tt = cli_cases::sample("two_trefoil.yaml");
    auto t = cli_cases::run({"decide", tt, "-u", "v1.c1 v1.c2", "-v", "v2.h^-1"});
    auto j = cli_cases::run({"decide", tt, "-u", "v1.c1 v1.c2", "-v", "v2.h^-1", "--json"});
    CHECK(j.out.find("\"verdict\": \"true\"") != std::string::npos);
    CHECK(j.out.find("\"case\": \"ii\"") != std::string::npos);
    CHECK(t.out.find("witness: e1") != std::string::npos);
    CHECK(j.out.find("\"witness\": \"e1\"") != std::string::npos);
}
