#include "doctest.h"
#include "simperm/error.hpp"
#include "simperm/format.hpp"
#include "test_util.hpp"

using namespace simperm;
using testutil::C;
using testutil::P;

TEST_SUITE("format") {
  TEST_CASE("one-line and cycle parsing agree") {
    CHECK(parse_permutation("6,4,5,1,2,3") == P(std::vector{6, 4, 5, 1, 2, 3}));
    CHECK(parse_permutation(" 6, 4,5 ,1,2,3 ") == P("6,4,5,1,2,3"));
    CHECK(parse_permutation("(1,6,3,5,2,4)") == P("6,4,5,1,2,3"));
    CHECK(parse_permutation("(1,3)(2,4)") == P("3,4,1,2"));
    CHECK(parse_permutation("(1)") == P("1"));
    CHECK(parse_permutation("(1,2)(5)") == P("2,1,3,4,5"));
  }

  TEST_CASE("bad input") {
    CHECK_ERROR_CODE(parse_permutation(""), kParse);
    CHECK_ERROR_CODE(parse_permutation("1,,2"), kParse);
    CHECK_ERROR_CODE(parse_permutation("a,b"), kParse);
    CHECK_ERROR_CODE(parse_permutation("(1,2"), kParse);
    CHECK_ERROR_CODE(parse_permutation("2,2,3"), kNotABijection);
    CHECK_ERROR_CODE(parse_permutation("(1,2)(2,3)"), kParse);
    CHECK_ERROR_CODE(parse_cycle("(1,2)(3,4)"), kParse);
  }

  TEST_CASE("cycle parsing canonicalizes rotation") {
    CHECK(parse_cycle("(3,5,4)") == C({3, 5, 4}));
    CHECK(parse_cycle("(5,4,3)") == C({3, 5, 4}));
  }

  TEST_CASE("printing") {
    CHECK(to_string(P("6,4,5,1,2,3")) == "6,4,5,1,2,3");
    CHECK(to_string(C({1, 3, 2, 4})) == "(1,3,2,4)");
    CHECK(to_cycle_string(P("3,4,1,2")) == "(1,3)(2,4)");
    CHECK(to_cycle_string(P("1,3,2")) == "(1)(2,3)");
  }

  TEST_CASE("round trip") {
    for (const char* text : {"1", "2,1", "6,5,4,1,3,2", "10,9,8,7,6,1,2,4,5,3"}) {
      const Permutation p = P(text);
      CHECK(to_string(p) == text);
      CHECK(parse_permutation(to_cycle_string(p)) == p);
    }
  }
}
