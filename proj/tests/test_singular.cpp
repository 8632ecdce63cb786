#include "doctest.h"

#include "coble/singular.hpp"

using namespace coble;

namespace {

HJChain chain(std::initializer_list<int> xs) {
  HJChain c;
  for (int x : xs) c.push_back(Int(x));
  return c;
}

HJChain reversed(HJChain c) {
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_CASE("hjExpand: known expansions and input validation") {
  CHECK(hjExpand(40, 19) == chain({3, 2, 2, 2, 2, 2, 2, 2, 2, 3}));
  CHECK(hjExpand(4, 1) == chain({4}));
  CHECK(hjExpand(16, 11) == chain({2, 2, 6}));
  CHECK(hjExpand(2, 1) == chain({2}));

  CHECK_THROWS_AS(hjExpand(4, 2), std::invalid_argument);   // not coprime
  CHECK_THROWS_AS(hjExpand(3, 5), std::invalid_argument);   // a >= n
  CHECK_THROWS_AS(hjExpand(5, 0), std::invalid_argument);   // a <= 0
  CHECK_THROWS_AS(hjExpand(5, -2), std::invalid_argument);
}

TEST_CASE("hjEvaluate: known values and validation") {
  CHECK(hjEvaluate(chain({3, 3})) == Rat(8, 3));
  CHECK(hjEvaluate(chain({4})) == Rat(4));
  CHECK(hjEvaluate(chain({8, 2, 2, 2, 2})) == Rat(36, 5));
  CHECK(hjEvaluate(chain({2, 2, 6})) == Rat(16, 11));

  CHECK_THROWS_AS(hjEvaluate(HJChain{}), std::invalid_argument);
  CHECK_THROWS_AS(hjEvaluate(chain({3, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(hjEvaluate(chain({0})), std::invalid_argument);
}

TEST_CASE("hj round trips: fractions up to n = 200") {
  for (int n = 2; n <= 200; ++n)
    for (int a = 1; a < n; ++a) {
      if (gcd(Int(n), Int(a)) != 1) continue;
      HJChain c = hjExpand(n, a);
      for (const Int& b : c) CHECK(b >= 2);
      CHECK(hjEvaluate(c) == Rat(n, a));
    }
}

TEST_CASE("hj round trips: all chains with entries <= 6, length <= 5") {
  // Lengths beyond 5 are covered by the acceptance run.
  std::vector<HJChain> stack{{}};
  for (int len = 1; len <= 5; ++len) {
    std::vector<HJChain> next;
    for (const HJChain& c : stack)
      for (int b = 2; b <= 6; ++b) {
        HJChain d = c;
        d.push_back(Int(b));
        next.push_back(d);
      }
    for (const HJChain& c : next) {
      Rat v = hjEvaluate(c);
      CHECK(hjExpand(numerator(v), denominator(v)) == c);
    }
    stack = std::move(next);
  }
}

TEST_CASE("chain reversal inverts the denominator mod the numerator") {
  for (int n = 2; n <= 60; ++n)
    for (int a = 1; a < n; ++a) {
      if (gcd(Int(n), Int(a)) != 1) continue;
      Rat v = hjEvaluate(reversed(hjExpand(n, a)));
      CHECK(numerator(v) == n);
      CHECK((Int(a) * denominator(v)) % n == 1);
    }
}

TEST_CASE("isWahl: recognitions and rejections") {
  auto w = isWahl(chain({4}));
  REQUIRE(w.has_value());
  CHECK(*w == CyclicQuotient{2, 1});

  CHECK(*isWahl(chain({6, 2, 2})) == CyclicQuotient{4, 1});
  CHECK(*isWahl(chain({2, 2, 6})) == CyclicQuotient{4, 3});
  CHECK(*isWahl(chain({8, 2, 2, 2, 2})) == CyclicQuotient{6, 1});

  CHECK_FALSE(isWahl(chain({3, 3})).has_value());  // 8 is not a square
  CHECK_FALSE(isWahl(chain({2, 2})).has_value());
  CHECK_FALSE(isWahl(chain({2})).has_value());
  CHECK_FALSE(isWahl(chain({3, 2, 3})).has_value());  // 12/5 is T but not Wahl

  // (16,7): [3,2,2,3] evaluates to 16/7, not of the form n^2/(na-1).
  CHECK(hjEvaluate(chain({3, 2, 2, 3})) == Rat(16, 7));
  CHECK_FALSE(isWahl(chain({3, 2, 2, 3})).has_value());
}

TEST_CASE("isTChain: parameter recovery") {
  CHECK(*isTChain(chain({3, 3})) == TParams{2, 2, 1});
  CHECK(*isTChain(tChainFromS(10)) == TParams{10, 2, 1});
  CHECK(*isTChain(chain({4})) == TParams{1, 2, 1});
  CHECK(*isTChain(chain({2, 2, 6})) == TParams{1, 4, 3});
  CHECK(*isTChain(chain({3, 2, 2, 3})) == TParams{4, 2, 1});  // 16/7 = 4*4/(4*2-1)
  CHECK_FALSE(isTChain(chain({2, 2})).has_value());
  CHECK_FALSE(isTChain(chain({2})).has_value());
  CHECK_FALSE(isTChain(chain({5})).has_value());
}

TEST_CASE("tChainFromS: family members and their fractions") {
  CHECK(tChainFromS(1) == chain({4}));
  CHECK(tChainFromS(2) == chain({3, 3}));
  CHECK(tChainFromS(10) == chain({3, 2, 2, 2, 2, 2, 2, 2, 2, 3}));
  for (int s = 1; s <= 12; ++s) {
    HJChain c = tChainFromS(s);
    CHECK(hjEvaluate(c) == Rat(4 * s, 2 * s - 1));
    auto t = isTChain(c);
    REQUIRE(t.has_value());
    CHECK(*t == TParams{s, 2, 1});
    CHECK(static_cast<int>(c.size()) == s);
  }
  CHECK_THROWS_AS(tChainFromS(0), std::invalid_argument);
}

TEST_CASE("wahlFamilyChain: pattern and Wahl parameters") {
  CHECK(wahlFamilyChain(1) == chain({4}));
  CHECK(wahlFamilyChain(2) == chain({2, 2, 6}));
  CHECK(wahlFamilyChain(4) == chain({2, 2, 2, 2, 2, 2, 10}));
  for (int k = 1; k <= 10; ++k) {
    auto w = isWahl(wahlFamilyChain(k));
    REQUIRE(w.has_value());
    CHECK(*w == CyclicQuotient{2 * k, 2 * k - 1});
  }
  CHECK_THROWS_AS(wahlFamilyChain(0), std::invalid_argument);
}

TEST_CASE("milnorRank") {
  CHECK(milnorRank(1) == 0);
  CHECK(milnorRank(2) == 1);
  CHECK(milnorRank(10) == 9);
  CHECK_THROWS_AS(milnorRank(0), std::invalid_argument);
}

TEST_CASE("partitionsOf: counts and order") {
  std::vector<int> expected{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int s = 1; s <= 10; ++s)
    CHECK(partitionsOf(s).size() == static_cast<std::size_t>(expected[s - 1]));
  auto p4 = partitionsOf(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == std::vector<int>{4});
  CHECK(p4[1] == std::vector<int>{3, 1});
  CHECK(p4[2] == std::vector<int>{2, 2});
  CHECK(p4[3] == std::vector<int>{2, 1, 1});
  CHECK(p4[4] == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("admissibleDegenerations: small cases verbatim") {
  auto d1 = admissibleDegenerations(1);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].parts.empty());
  CHECK(d1[0].droppedSmooth == 1);
  CHECK(d1[1].str() == "{1/4(1,1)}");

  auto d2 = admissibleDegenerations(2);
  REQUIRE(d2.size() == 4);
  CHECK(d2[0].str() == "{A1}");
  CHECK(d2[1].str() == "{1/8(1,3)}");
  CHECK(d2[2].str() == "{}");
  CHECK(d2[3].str() == "{1/4(1,1)}");

  CHECK_THROWS_AS(admissibleDegenerations(0), std::invalid_argument);
  CHECK_THROWS_AS(admissibleDegenerations(11), std::invalid_argument);
}

TEST_CASE("admissibleDegenerations: counts match 2 p(s) and s=10 contains A9") {
  std::vector<int> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int s = 1; s <= 10; ++s)
    CHECK(admissibleDegenerations(s).size() == static_cast<std::size_t>(2 * p[s - 1]));

  bool sawA9 = false;
  for (const SingConfiguration& c : admissibleDegenerations(10))
    if (c.str() == "{A9}") sawA9 = true;
  CHECK(sawA9);
}

TEST_CASE("rootConfigurationRank: the named rank-9 configurations") {
  for (const char* name : {"A9", "D8+A1", "D5+A4", "E8+A1", "A7+2A1", "3A3"})
    CHECK(rootConfigurationRank(parseAdeConfiguration(name)) == 9);

  CHECK(parseAdeConfiguration("3A3") ==
        std::vector<std::string>{"A3", "A3", "A3"});
  CHECK(parseAdeConfiguration("A7+2A1") ==
        std::vector<std::string>{"A7", "A1", "A1"});

  CHECK_THROWS_AS(rootConfigurationRank({"F4"}), std::invalid_argument);
  CHECK_THROWS_AS(rootConfigurationRank({"A0"}), std::invalid_argument);
  CHECK_THROWS_AS(rootConfigurationRank({"E5"}), std::invalid_argument);
  CHECK_THROWS_AS(rootConfigurationRank({"A"}), std::invalid_argument);
  CHECK_THROWS_AS(rootConfigurationRank({"A3x"}), std::invalid_argument);
  CHECK_THROWS_AS(parseAdeConfiguration("A1+"), std::invalid_argument);
  CHECK_THROWS_AS(parseAdeConfiguration(""), std::invalid_argument);
}
