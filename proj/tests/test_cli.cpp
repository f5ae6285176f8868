#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ulink/cli.hpp"
#include "ulink/oracle.hpp"
#include "ulink/ring.hpp"

using namespace ulink;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

const char* kTrefoil = "C(1,5,2,4) C(3,1,4,6) C(5,3,6,2)";

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, ComputeB2Kink) {
    auto r = run({"compute", "--invariant", "b2", "--code", "C(1,2,2,1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "v_1");
    EXPECT_NE(r.out.find("c=1 d=0 mu=1"), std::string::npos);
}

TEST(Cli, ComputeJonesMatchesOracle) {
    auto r = run({"compute", "--invariant", "jones", "--code", kTrefoil});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), jones_from_bracket(parse_diagram(kTrefoil)).to_string_quarters());
}

TEST(Cli, ComputeWithSpecialization) {
    auto r = run({"compute", "--invariant", "b1", "--code", kTrefoil, "--spec", "q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("specialized: 2*x^2 + 2*x - 3"), std::string::npos);
    auto w = run({"compute", "--invariant", "b2w", "--code", kTrefoil, "--spec", "jones"});
    EXPECT_EQ(w.code, 0);
    EXPECT_EQ(first_line(w.out), "q^-4 + q^-12 - q^-16");
}

TEST(Cli, FileInput) {
    auto path = temp_file("ulink_cli_input.txt", "C(1,3,2,4)\nC(3,1,4,2)\n");
    auto r = run({"compute", "--invariant", "b1", "--file", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_line(r.out), "- e'*v_2 - a*v_1 - e*a*v_1");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"compute", "--bogus"}).code, 2);
    EXPECT_EQ(run({"compute", "--invariant", "b9", "--code", "O 1"}).code, 2);
    EXPECT_EQ(run({"compute", "--code", "C(1,2,2)"}).code, 2);
    EXPECT_EQ(run({"compute", "--file", "/nonexistent/diagram.txt"}).code, 2);
    EXPECT_EQ(run({"compute", "--invariant", "b2w", "--code", "O 1"}).code, 2);
    EXPECT_EQ(run({"compute", "--code", kTrefoil, "--max-crossings", "2"}).code, 3);
    EXPECT_EQ(run({"table", "--census", "/nonexistent.csv"}).code, 2);
    EXPECT_EQ(run({"compute", "--help"}).code, 0);
}

TEST(Cli, JsonRoundTrip) {
    auto r = run({"compute", "--invariant", "b1", "--code", "C(1,3,2,4) C(3,1,4,2)", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    auto x = element_from_json(j["value"].dump(), Presentation::B1);
    EXPECT_EQ(x.to_string(), j["text"].get<std::string>());
    EXPECT_EQ(j["mu"], 2);
}

TEST(Cli, Deterministic) {
    std::vector<std::string> args{"verify", "--code", kTrefoil, "--trials", "5", "--seed", "3"};
    auto a = run(args);
    auto b = run(args);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("failures: 0"), std::string::npos);
}

TEST(Cli, Table) {
    auto path = temp_file("ulink_cli_census.csv", "name,code\nunknot,O 1\nhopf,\"C(1,3,2,4) C(3,1,4,2)\"\n");
    auto r = run({"table", "--census", path, "--invariant", "b2,jones"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "name,invariant,c,mu,value\n"
              "unknot,b2,0,1,v_1\n"
              "unknot,jones,0,1,1\n"
              "hopf,b2,2,2,a*v_1 + b*v_1\n"
              "hopf,jones,2,2,-t^(5/2) - t^(1/2)\n");
    auto j = run({"table", "--census", path, "--invariant", "q", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out).size(), 2u);
}

TEST(Cli, BundledCensusByName) {
    auto r = run({"table", "--census", "knots7.csv", "--invariant", "jones", "--max-crossings", "3"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("3_1,jones,3,1,-t^4 + t^3 + t"), std::string::npos);
    EXPECT_NE(r.out.find("cap exceeded"), std::string::npos);
}
