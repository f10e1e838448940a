#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = simperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    const Result r = run({"check", "6,5,4,1,3,2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"MixedSimple s=1 q=3", "sigma: 2,1",
                                                   "block 1 {1..3} -> {4..6} restriction 2,3,1 beta",
                                                   "block 2 {4..6} -> {1..3} restriction 3,1,2 alpha"});
    CHECK(run({"check", "1"}).out == "Pow2Simple\n");
    CHECK(run({"check", "(1,3,2)"}).out == "OddSimple alpha\n");
    CHECK(run({"check", "3,4,1,2"}).out == "NotFullCycle\n");
    const Result bad = run({"check", "2,2,3"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
  }

  TEST_CASE("enumerate") {
    const Result six = run({"enumerate", "--order", "6"});
    CHECK(six.code == 0);
    CHECK(lines(six.out).size() == 12);
    CHECK(lines(six.out).front() == "4,5,6,3,1,2");
    const Result ten = run({"enumerate", "--order", "10", "--oracle"});
    CHECK(ten.code == 0);
    const auto ten_lines = lines(ten.out);
    CHECK(ten_lines.size() == 21);
    CHECK(ten_lines.back() == "MATCH");
    CHECK(run({"enumerate", "--order", "8"}).code == 2);
    CHECK(run({"enumerate", "--order", "2"}).code == 2);
    CHECK(run({"enumerate", "--order", "14", "--oracle"}).code == 2);
    const auto doc = nlohmann::json::parse(run({"enumerate", "--order", "6", "--json", "--oracle"}).out);
    CHECK(doc["count"] == 12);
    CHECK(doc["oracle"] == "MATCH");
  }

  TEST_CASE("markov") {
    const Result r = run({"markov", "2,3,4,1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"vertices 3", "edges 5", "J1 -> J2", "J2 -> J3", "J3 -> J1",
                                                   "J3 -> J2", "J3 -> J3"});
    CHECK(lines(run({"markov", "2,1"}).out) == std::vector<std::string>{"vertices 1", "edges 1", "J1 -> J1"});
    CHECK(nlohmann::json::parse(run({"markov", "6,4,5,1,2,3", "--json"}).out)["edges"].size() == 9);

    const auto path = std::filesystem::temp_directory_path() / "simperm_cli_test.dot";
    const Result dot = run({"markov", "6,4,5,1,2,3", "--dot", path.string()});
    CHECK(dot.code == 0);
    CHECK(dot.out == path.string() + "\n");
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(std::count(text.begin(), text.end(), '>') == 9);
    std::filesystem::remove(path);

    CHECK(run({"markov", "3,4,1,2"}).code == 2);
    CHECK(run({"markov", "1"}).code == 2);
  }

  TEST_CASE("forces") {
    const Result yes = run({"forces", "2,3,4,1", "3"});
    CHECK(yes.code == 0);
    CHECK(lines(yes.out) == std::vector<std::string>{"YES period 3 forced", "loop: J1 -> J2 -> J3",
                                                     "orbit: 7/4 -> 11/4 -> 15/4", "minimal period: 3"});
    CHECK(run({"forces", "5,4,2,1,3", "3"}).out == "NO\n");
    const Result own = run({"forces", "5,4,2,1,3", "5"});
    CHECK(lines(own.out) == std::vector<std::string>{"YES period 5 forced", "orbit: 1 -> 5 -> 3 -> 2 -> 4",
                                                     "minimal period: 5"});
    CHECK(run({"forces", "2,3,4,1", "0"}).code == 2);
    CHECK(run({"forces", "3,4,1,2", "2"}).code == 2);
    CHECK(run({"forces", "2,3,4,1"}).code == 2);
  }

  TEST_CASE("primitive") {
    CHECK(lines(run({"primitive", "2,3,4,1"}).out) ==
          std::vector<std::string>{"x < 1: f(x) = 2", "J1 [1,2]: f(x) = x + 1", "J2 [2,3]: f(x) = x + 1",
                                   "J3 [3,4]: f(x) = -3x + 13", "x >= 4: f(x) = 1"});
    CHECK(lines(run({"primitive", "2,1"}).out)[1] == "J1 [1,2]: f(x) = -x + 3");
    CHECK(run({"primitive", "1"}).code == 2);
  }

  TEST_CASE("branch") {
    CHECK(lines(run({"branch", "mixed_theta", "2"}).out) ==
          std::vector<std::string>{"(1,6,3,5,2,4)", "(1,10,5,8,3,7,2,9,4,6)"});
    CHECK(lines(run({"branch", "pow2_phi", "3", "--one-line"}).out) ==
          std::vector<std::string>{"1", "2,1", "4,3,1,2"});
    CHECK(run({"branch", "nope", "2"}).code == 2);
    CHECK(run({"branch", "mixed_theta", "0"}).code == 2);
  }

  TEST_CASE("paste and reverse") {
    CHECK(run({"paste", "left", "3,1,2", "1,2,3"}).out == "6,4,5,1,2,3\n");
    CHECK(run({"paste", "right", "3,1,2", "(1,3,2)"}).out == "3,1,2,6,4,5\n");
    CHECK(run({"paste", "cycles", "(1,3)", "(2,4)"}).out == "(1,3,2,4)\n");
    CHECK(run({"paste", "cycles", "(2,3)", "(1,4)"}).code == 2);
    CHECK(run({"paste", "middle", "1", "1"}).code == 2);
    CHECK(run({"reverse", "2,3,1"}).out == "1,3,2\n");
    CHECK(run({"reverse", "(1,5,3,2,4)", "--cycle"}).out == "(1,4,2,3,5)\n");
  }

  TEST_CASE("cmp") {
    CHECK(run({"cmp", "3", "8"}).out == "3 ⊲ 8\n");
    CHECK(run({"cmp", "1", "2"}).out == "2 ⊲ 1\n");
    CHECK(run({"cmp", "6", "6"}).out == "6 = 6\n");
    CHECK(run({"cmp", "0", "6"}).code == 2);
    CHECK(run({"cmp", "x", "6"}).code == 2);
  }

  TEST_CASE("genealogy") {
    CHECK(lines(run({"genealogy", "(1,8,3,9,4,7,2,10,5,6)"}).out) ==
          std::vector<std::string>{"class: MixedSimple s=1 q=5", "families: mixed_phi",
                                   "predecessors: (1,5,2,6,3,4)", "square: beta-beta n=2", "theta(1): 8"});
    CHECK(lines(run({"genealogy", "3,4,2,1"}).out) ==
          std::vector<std::string>{"class: Pow2Simple", "families: pow2_theta", "predecessors: (1,2) (1)"});
    CHECK(run({"genealogy", "2,3,4,1"}).out == "class: NotSimple\n");
  }

  TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
  }
}
