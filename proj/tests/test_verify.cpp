#include <doctest.h>

#include "asmdpp/serialize.hpp"
#include "asmdpp/verify.hpp"

using namespace asmdpp;

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 13);
    for (const auto& s : suite_names()) CHECK(is_suite(s));
    CHECK_FALSE(is_suite("all"));
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
}

TEST_CASE("small suites pass and respect max_n") {
    VerifyOptions o;
    o.max_n = 3;
    for (const auto& s : suite_names()) {
        VerifyReport r = run_suite(s, o);
        CHECK_MESSAGE(r.passed(), s);
        CHECK(r.suite == s);
        for (const auto& c : r.checks) {
            CHECK(c.params.find("n=4") == std::string::npos);
            CHECK(c.params.find("n=5") == std::string::npos);
        }
    }
}

TEST_CASE("reports are deterministic") {
    VerifyOptions o;
    o.max_n = 3;
    o.seed = 42;
    auto a = run_suites({"ik", "omega"}, o), b = run_suites({"ik", "omega"}, o);
    CHECK(format_text(a) == format_text(b));
    CHECK(format_json(a) == format_json(b));
    CHECK(a[0].suite == "ik");
    CHECK(a[1].suite == "omega");
}

TEST_CASE("report formats") {
    VerifyReport r{"demo", {{"good", "n=1", true, "", 1.5}, {"bad", "n=2", false, "broken", 2.0}}};
    CHECK_FALSE(r.passed());
    std::string t = format_text({r});
    CHECK(t == "PASS demo: good [n=1]\nFAIL demo: bad [n=2] -- broken\nFAILED 1/2 checks passed\n");
    CHECK(format_text({r}, true).find("(1 ms)") != std::string::npos);
    json j = json::parse(format_json({r}));
    CHECK(j[0]["status"] == "fail");
    CHECK(j[0]["checks"][1]["detail"] == "broken");
    CHECK_FALSE(j[0]["checks"][0].contains("elapsed_ms"));
    CHECK(json::parse(format_json({r}, true))[0]["checks"][0].contains("elapsed_ms"));
}
