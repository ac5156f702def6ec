#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "lct");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = lct::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json payload(std::vector<std::string> args) {
    auto o = run(std::move(args));
    REQUIRE(o.code == 0);
    auto j = o.report();
    CHECK(j["status"] == "ok");
    return j["payload"];
}

}  // namespace

TEST_CASE("documented examples") {
    auto a2 = payload({"lct", "x^2+y^3"});
    CHECK(a2["lct"] == "5/6");
    CHECK(a2["method"] == "classifier");
    auto w12 = payload({"lct", "y^4+x^5", "--point", "0,0"});
    CHECK(w12["lct"] == "9/20");
    CHECK(w12["method"] == "highmult");
    CHECK(payload({"lambda-set", "4"})["values"] == json::array({"5/9", "7/12", "3/5", "5/8", "2/3"}));
}

TEST_CASE("lct dispatch") {
    CHECK(payload({"lct", "x^2+y^3", "--point", "7,5"})["method"] == "off-curve");
    CHECK(payload({"lct", "x^2+y^3", "--point", "7,5"})["lct"] == "inf");
    CHECK(payload({"lct", "y - x^2"})["method"] == "smooth");
    CHECK(payload({"lct", "y^3 + x^3*y"})["lct"] == "5/9");
    auto moved = payload({"lct", "(x-1/2)^2 + (y+3)^3", "--point", "1/2,-3"});
    CHECK(moved["lct"] == "5/6");
    auto deg7 = payload({"lct", "y^2 + x^7"});
    CHECK(deg7["method"] == "resolution");
    CHECK(deg7["lct"] == "9/14");
    auto d4 = payload({"lct", "x^2*y + y^4"});
    CHECK(d4["method"] == "highmult");
    // replaying a request gives the same method
    CHECK(payload({"lct", "x^2*y + y^4"}) == d4);
}

TEST_CASE("other subcommands") {
    auto c = payload({"classify", "x^3*y + y^5 + x*y^4"});
    CHECK(c["symbol"] == "Z11");
    CHECK(c["mu"] == 11);
    CHECK(c["lct"] == "7/15");
    CHECK(payload({"milnor", "x^3 + y^4"})["mu"] == 6);
    CHECK(payload({"milnor", "x^2"})["mu"] == "inf");
    CHECK(payload({"imult", "y - x^2", "y"})["imult"] == 2);
    CHECK(payload({"imult", "x", "x*y"})["imult"] == "inf");
    auto w = payload({"witness", "4", "5/9"});
    CHECK(w["polynomial"] == "x*y^3 + x^3");
    CHECK(w["line_is_component"] == true);
    auto b = payload({"wbound", "x^2 + y^3", "--weights", "3,2"});
    CHECK(b["bound"] == "5/6");
    auto t = payload({"resolve", "x^2+y^3"});
    CHECK(t["divisors"].size() == 3);
    CHECK(t["lct"] == "5/6");
    CHECK(payload({"lct", "x*y*z + x^3 + y^3", "--projective", "z"})["lct"] == "1");
}

TEST_CASE("text format and DOT export") {
    auto o = run({"lct", "x^2+y^3", "--format", "text"});
    CHECK(o.code == 0);
    CHECK(o.out.find("lct: 5/6") != std::string::npos);
    const std::string path = "test_cli_cusp.dot";
    auto r = run({"resolve", "x^2+y^3", "--dot", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::stringstream dot;
    dot << in.rdbuf();
    CHECK(dot.str().find("E2 -> E3;") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    auto parse = run({"lct", "x^2+"});
    CHECK(parse.code == lct::cli::exit_parse_error);
    CHECK(parse.report()["error"]["code"] == "SyntaxError");
    CHECK(run({"lct", "x^-1"}).code == lct::cli::exit_parse_error);
    CHECK(run({"lct", "x^2", "--point", "1"}).code == lct::cli::exit_parse_error);
    CHECK(run({"nosuch"}).code == lct::cli::exit_parse_error);
    CHECK(run({}).code == lct::cli::exit_parse_error);
    CHECK(run({"--help"}).code == 0);

    auto reduced = run({"lct", "x^2*(x+y)"});
    CHECK(reduced.code == lct::cli::exit_precondition);
    CHECK(reduced.report()["error"]["code"] == "NotSquareFree");
    CHECK(run({"lambda-set", "2"}).code == lct::cli::exit_precondition);
    CHECK(run({"witness", "4", "1/2"}).code == lct::cli::exit_precondition);
    CHECK(run({"classify", "x + y^2"}).code == lct::cli::exit_precondition);
    CHECK(run({"wbound", "x^2+y^3", "--weights", "0,1"}).code == lct::cli::exit_precondition);

    auto irr = run({"resolve", "(x^2 - 2*y^2)^2 + y^5"});
    CHECK(irr.code == lct::cli::exit_irrational_center);
    CHECK(irr.report()["payload"]["minimal_polynomial"] == "2*t^2 - 1");

    CHECK(run({"resolve", "x^2+y^3", "--cap", "2"}).code == lct::cli::exit_internal);
    CHECK(run({"classify", "y^2 + x^14"}).code == lct::cli::exit_internal);
}

TEST_CASE("selftest") {
    auto one = run({"selftest", "--scope", "fast", "--seed", "1"});
    REQUIRE(one.code == 0);
    auto p1 = one.report()["payload"];
    CHECK(p1["passed"] == true);
    CHECK(p1["instances"].get<long>() >= 400);
    CHECK(p1["criteria"].size() == 8);
    auto two = run({"selftest", "--seed", "2"});
    REQUIRE(two.code == 0);
    CHECK(two.report()["payload"]["passed"] == true);
    auto again = run({"selftest", "--seed", "1"}).report()["payload"];
    for (size_t i = 0; i < 8; ++i) {
        CHECK(again["criteria"][i]["checked"] == p1["criteria"][i]["checked"]);
        CHECK(again["criteria"][i]["passed"] == p1["criteria"][i]["passed"]);
    }
}
