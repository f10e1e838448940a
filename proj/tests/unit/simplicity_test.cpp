#include "doctest.h"
#include "oracles.hpp"
#include "simperm/error.hpp"
#include "simperm/genealogy.hpp"
#include "simperm/simplicity.hpp"
#include "test_util.hpp"

using namespace simperm;
using testutil::images_of;
using testutil::P;
using Tag = SimplicityClass::Tag;

TEST_SUITE("simplicity") {
  TEST_CASE("partition_block") {
    CHECK(partition_block(6, 2, 1) == Block(1, 3));
    CHECK(partition_block(6, 2, 2) == Block(4, 6));
    CHECK(partition_block(10, 2, 2) == Block(6, 10));
    CHECK_ERROR_CODE(partition_block(6, 4, 1), kNotDivisible);
    CHECK_ERROR_CODE(partition_block(6, 2, 3), kBadIndex);
    CHECK_ERROR_CODE(partition_block(6, 2, 0), kBadIndex);
  }

  TEST_CASE("partition blocks tile the range") {
    for (int total = 1; total <= 24; ++total) {
      for (int m = 1; m <= total; ++m) {
        if (total % m != 0) continue;
        int next = 1;
        for (int i = 1; i <= m; ++i) {
          const Block b = partition_block(total, m, i);
          CHECK(b.lo() == next);
          next = b.hi() + 1;
        }
        CHECK(next == total + 1);
      }
    }
  }

  TEST_CASE("odd order") {
    CHECK(is_simple_odd(P("5,4,2,1,3")));
    CHECK(is_simple_odd(P("3,5,4,2,1")));
    CHECK_FALSE(is_simple_odd(P("1,3,2")));
    CHECK_FALSE(is_simple_odd(P("2,3,4,5,1")));
    CHECK_FALSE(is_simple_odd(P("2,1")));
  }

  TEST_CASE("power of two order") {
    CHECK(is_simple_pow2(P("3,4,2,1")));
    CHECK_FALSE(is_simple_pow2(P("2,3,4,1")));
    CHECK(is_simple_pow2(P("2,1")));
    CHECK(is_simple_pow2(P("1")));
    CHECK_FALSE(is_simple_pow2(P("3,4,1,2")));
    CHECK_FALSE(is_simple_pow2(P("2,3,1")));
  }

  TEST_CASE("mixed order") {
    CHECK(is_simple_mixed(P("6,5,4,1,3,2")));
    CHECK(is_simple_mixed(P("6,4,5,1,2,3")));
    CHECK_FALSE(is_simple_mixed(P("2,3,4,5,6,1")));
    CHECK_FALSE(is_simple_mixed(P("3,4,2,1")));
    CHECK_FALSE(is_simple_mixed(P("5,4,2,1,3")));
  }

  TEST_CASE("mixed structure exposes sigma and the restricted squares") {
    const auto s = mixed_structure(P("6,5,4,1,3,2"));
    REQUIRE(s.has_value());
    CHECK(s->s == 1);
    CHECK(s->q == 3);
    CHECK(s->sigma == P("2,1"));
    REQUIRE(s->restrictions.size() == 2);
    CHECK(s->restrictions[0] == stefan_beta(3));
    CHECK(s->restrictions[1] == stefan_alpha(3));
    CHECK_FALSE(mixed_structure(P("2,3,4,5,6,1")).has_value());
    CHECK_FALSE(mixed_structure(P("3,4,2,1")).has_value());
  }

  TEST_CASE("classify") {
    CHECK(classify(P("3,1,2")) == SimplicityClass{Tag::kOddSimple, StefanVariant::kAlpha, 0, 0});
    CHECK(classify(P("2,3,1")) == SimplicityClass{Tag::kOddSimple, StefanVariant::kBeta, 0, 0});
    CHECK(classify(P("3,4,2,1")).tag == Tag::kPow2Simple);
    CHECK(classify(P("2,3,4,1")).tag == Tag::kNotSimple);
    CHECK(classify(P("1")).tag == Tag::kPow2Simple);
    CHECK(classify(P("2,1")).tag == Tag::kPow2Simple);
    CHECK(classify(P("1,2")).tag == Tag::kNotFullCycle);
    const SimplicityClass mixed = classify(P("6,5,4,1,3,2"));
    CHECK(mixed.tag == Tag::kMixedSimple);
    CHECK(mixed.s == 1);
    CHECK(mixed.q == 3);
    CHECK(to_string(mixed) == "MixedSimple s=1 q=3");
    CHECK(to_string(classify(P("5,4,2,1,3"))) == "OddSimple alpha");
    CHECK(to_string(classify(P("1"))) == "Pow2Simple");
    CHECK(to_string(classify(P("2,3,4,1"))) == "NotSimple");
    CHECK(to_string(classify(P("3,4,1,2"))) == "NotFullCycle");
  }

  TEST_CASE("odd simplicity has exactly the two Stefan cycles") {
    for (const int m : {3, 5, 7}) {
      int count = 0;
      for_each_full_cycle(m, [&](const Permutation& p) {
        const bool simple = is_simple_odd(p);
        const auto im = images_of(p);
        CHECK(simple == (im == oracle::stefan_alpha(m) || im == oracle::stefan_beta(m)));
        count += simple ? 1 : 0;
      });
      CHECK(count == 2);
    }
  }

  TEST_CASE("power-of-two simplicity agrees with the level-by-level block test") {
    for (const int n : {2, 4, 8}) {
      int count = 0;
      for_each_full_cycle(n, [&](const Permutation& p) {
        const bool simple = is_simple_pow2(p);
        CHECK(simple == oracle::pow2_simple_levelwise(images_of(p)));
        count += simple ? 1 : 0;
      });
      CHECK(count == (n == 2 ? 1 : n == 4 ? 2 : 16));
    }
  }

  TEST_CASE("mixed simplicity agrees with the two-block oracle at order 6") {
    for_each_full_cycle(6, [&](const Permutation& p) {
      CHECK(is_simple_mixed(p) == oracle::mixed_simple_6_or_10(images_of(p)));
    });
  }

  TEST_CASE("mixed simplicity beyond two blocks") {
    // blocks of size 3 cycled as theta_4 = (1,3,2,4), alpha_3 applied on the way back
    const SimplicityClass c = classify(P("7,8,9,10,11,12,4,5,6,3,1,2"));
    CHECK(c.tag == Tag::kMixedSimple);
    CHECK(c.s == 2);
    CHECK(c.q == 3);
    // same shape but blocks cycled as (1,2,3,4), which is not simple
    CHECK(classify(P("4,5,6,7,8,9,10,11,12,3,1,2")).tag == Tag::kNotSimple);
    // two blocks of size 5 whose square restricts to (1,2,3,4,5)
    CHECK(classify(P("6,7,8,9,10,2,3,4,5,1")).tag == Tag::kNotSimple);
  }

  TEST_CASE("classify is total on every permutation of degree at most 6") {
    for (int n = 1; n <= 6; ++n) {
      oracle::Images im = oracle::identity(n);
      do {
        const SimplicityClass c = classify(P(im));
        CHECK((c.tag == Tag::kNotFullCycle) == !oracle::is_full_cycle(im));
      } while (std::next_permutation(im.begin(), im.end()));
    }
  }
}
