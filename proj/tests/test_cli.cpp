#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ratwitt/cli.hpp"
#include "ratwitt/ratwitt.hpp"

using namespace ratwitt;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"witt", "mul", "--ring", "ZZ", "1-2*T", "1-3*T"});
  CHECK(r.code == 0);
  CHECK(r.out == "1-6*T\n");
  r = run({"reconstruct", "--ring", "QQ", "--series", "1,1,2,4", "--bound", "2"});
  CHECK(r.out == "(1-T)/(1-2*T)\n");
  r = run({"omega", "--ring", "Dual(GF/2)", "2*(e)"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1\n", 0) == 0);
  CHECK(r.out.find("Witt zero") != std::string::npos);
}

TEST_CASE("subcommands") {
  CHECK(run({"witt", "frob", "--ring", "ZZ", "--N", "2", "1-5*T+6*T^2"}).out == "1-13*T+36*T^2\n");
  CHECK(run({"witt", "versch", "--ring", "ZZ", "--N", "2", "(1-T)/(1-2*T)"}).out == "(1-T^2)/(1-2*T^2)\n");
  CHECK(run({"witt", "neg", "--ring", "QQ", "1-T"}).out == "1/(1-T)\n");
  CHECK(run({"witt", "add", "--ring", "ZZ", "1-T", "1-T", "--prec", "3"}).out == "1-2*T+T^2; prec=3\n");
  CHECK(run({"witt", "mul", "--ring", "Zmod/6", "1-2*T", "1-3*T"}).out == "1; prec=16\n");
  CHECK(run({"ghost", "--ring", "QQ", "1/(1-T-T^2)", "--upto", "4"}).out == "-1,-3,-4,-7\n");
  CHECK(run({"hankel", "rank", "--ring", "QQ", "--input", "1/(1-T-T^2)"}).out == "2\n");
  CHECK(run({"hankel", "rank", "--ring", "ZZ", "--input", "1,1,2,3,5,8,13"}).out == "2\n");
  CHECK(run({"wj", "member", "--ring", "Dual(GF/2)", "--bound", "2", "--series", "1+e*T+e*T^5; prec=12"}).out ==
        "true\n");
  CHECK(run({"fatou", "check", "--ring", "MonSub(GF/2)", "--input", "(1-y*T+x*T^2)/(1-y*T)"}).out ==
        "in_W_A_only\n");
  CHECK(run({"almkvist", "char", "--ring", "ZZ", "--matrix", "[[1,2],[3,4]]"}).out == "1-5*T-2*T^2\n");
  CHECK(run({"almkvist", "check", "--ring", "GF/5", "--matrix", "[[1,2],[3,4]]", "--N", "3"}).code == 0);
  CHECK(run({"descent", "check", "--p", "2", "--n", "2", "--input", "1+x*T"}).out == "does not descend\n");
  CHECK(run({"descent", "check", "--p", "2", "--n", "2", "--input", "1+T+T^2", "--over", "base"}).out ==
        "descends\n");
  auto list = run({"demo", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("13 omega-criteria") != std::string::npos);
  auto demo = run({"demo", "kronecker-roundtrip"});
  CHECK(demo.code == 0);
  CHECK(demo.out.rfind("[PASS] 4 kronecker-roundtrip", 0) == 0);
}

TEST_CASE("structured output") {
  auto r = run({"--format", "structured", "witt", "mul", "--ring", "ZZ", "1-2*T", "1-3*T"});
  CHECK(r.out.find("result=1-6*T\n") != std::string::npos);
  CHECK(r.out.find("bound=2\n") != std::string::npos);
  r = run({"--format", "structured", "fatou", "check", "--ring", "ZZ", "--input", "1/(1-1/2*T)"});
  CHECK(r.out.find("verdict=not_in_W_A") != std::string::npos);
}

TEST_CASE("exit codes and messages") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"witt", "mul", "--ring", "ZQ", "1", "1"}).code == 1);
  auto r = run({"witt", "add", "--ring", "QQ", "1-2*T+", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position") != std::string::npos);
  r = run({"reconstruct", "--ring", "QQ", "--series", "1,1,2", "--bound", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("requires precision >= 5") != std::string::npos);
  r = run({"reconstruct", "--ring", "QQ", "--series", "1,1,2,6,24,120", "--bound", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no rational representative within bound 2") != std::string::npos);
  CHECK(run({"demo", "no-such-fixture"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("printed results re-parse to equal values") {
  for (const char* lit : {"(1-T)/(1-2*T)", "1-5*T-2*T^2", "1/(1+T^3)"})
    for (const char* op : {"neg", "versch"}) {
      std::vector<std::string> args{"witt", op, "--ring", "QQ", lit};
      if (std::string(op) == "versch") args.insert(args.end(), {"--N", "2"});
      auto r = run(args);
      REQUIRE(r.code == 0);
      std::string text = r.out.substr(0, r.out.size() - 1);
      auto again = run({"witt", "add", "--ring", "QQ", text, "1"});
      CHECK(again.out == r.out);
    }
}

TEST_CASE("default precision from the environment") {
  setenv("RATWITT_PREC_DEFAULT", "5", 1);
  CHECK(run({"witt", "mul", "--ring", "Zmod/6", "1-2*T", "1-T"}).out == "1+4*T; prec=5\n");
  setenv("RATWITT_PREC_DEFAULT", "zero", 1);
  CHECK(run({"witt", "mul", "--ring", "Zmod/6", "1-2*T", "1-T"}).code == 1);
  unsetenv("RATWITT_PREC_DEFAULT");
}
