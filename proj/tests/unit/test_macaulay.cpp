#include <doctest.h>

#include <vector>

#include "../oracles.hpp"
#include "oseq/macaulay.hpp"

using namespace oseq;
using oseq::testing::all_expansions;
using oseq::testing::bound_by_monomials;
using oseq::testing::pascal;

TEST_CASE("binomial conventions") {
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(1, 2) == 0);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(-3, 2) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(66, 33) == 7219428434016265740ULL);
  CHECK_THROWS_AS(binomial(68, 34), OverflowError);
}

TEST_CASE("saturating binomial reports 'more than the ceiling'") {
  CHECK(binomial(100, 50, 10) == 11);
  CHECK(binomial(10, 3, 200) == 120);
  CHECK(binomial(10, 3, 119) == 120);
  CHECK(binomial(10, 3, 120) == 120);
  // far beyond 64 bits, still no overflow
  CHECK(binomial(1000, 500, 60) == 61);
}

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (int n = -2; n <= 40; ++n) {
    for (int m = -2; m <= 42; ++m) {
      CHECK(binomial(n, m) == (n < 0 ? 0 : pascal(n, m)));
    }
  }
}

TEST_CASE("expand examples") {
  CHECK(expand(4, 2).tops == std::vector<std::uint32_t>{3, 1});
  for (std::uint32_t t = 1; t <= 9; ++t) CHECK(expand(1, t).tops == std::vector<std::uint32_t>{t});
  CHECK(expand(5, 1).tops == std::vector<std::uint32_t>{5});
  const auto e = expand(4, 2);
  CHECK(e.base == 2);
  CHECK(e.value == 4);
  CHECK(e.last_lower() == 1);
}

TEST_CASE("expand rejects non-positive input") {
  CHECK_THROWS_AS(expand(0, 3), InvalidArgument);
  CHECK_THROWS_AS(expand(3, 0), InvalidArgument);
}

TEST_CASE("expand is the unique decreasing representation (exhaustive oracle)") {
  for (std::uint32_t t = 1; t <= 12; ++t) {
    for (Count a = 1; a <= 500; ++a) {
      const auto reps = all_expansions(a, t);
      REQUIRE(reps.size() == 1);
      const BinomialExpansion e = expand(a, t);
      CHECK(e.tops == reps.front());
      Count sum = 0;
      for (std::size_t i = 0; i < e.tops.size(); ++i) {
        CHECK(e.tops[i] >= e.lower(i));
        if (i) CHECK(e.tops[i] < e.tops[i - 1]);
        sum += binomial(e.tops[i], e.lower(i));
      }
      CHECK(sum == a);
      CHECK(e.last_lower() >= 1);
    }
  }
}

TEST_CASE("growth_bound examples") {
  CHECK(growth_bound(4, 2) == 5);
  for (std::uint32_t t = 1; t <= 20; ++t) CHECK(growth_bound(1, t) == 1);
  CHECK(growth_bound(2, 1) == 3);
  CHECK(growth_bound(3, 1) == 6);
  CHECK(growth_bound(3, 2) == 4);
}

TEST_CASE("growth_bound never forces a drop") {
  for (std::uint32_t t = 1; t <= 12; ++t) {
    for (Count a = 1; a <= 500; ++a) {
      const Count b = growth_bound(a, t);
      CHECK(b >= a);
    }
  }
  // constant continuation (1, a, a, ..., a) is always admissible
  for (std::int64_t a = 1; a <= 40; ++a) {
    std::vector<std::int64_t> seq{1};
    seq.insert(seq.end(), 8, a);
    CHECK(is_o_sequence(std::span<const std::int64_t>(seq)));
  }
}

TEST_CASE("growth_bound matches lex-segment extension counts") {
  for (std::uint32_t p = 1; p <= 3; ++p) {
    for (std::uint32_t t = 1; t <= 5; ++t) {
      const Count terms = pascal(p - 1 + t, t);
      for (Count a = 1; a <= terms; ++a) {
        CAPTURE(p);
        CAPTURE(t);
        CAPTURE(a);
        CHECK(growth_bound(a, t) == bound_by_monomials(a, t, p));
      }
    }
  }
}

TEST_CASE("is_o_sequence examples") {
  CHECK(is_o_sequence({1, 2, 1, 1}));
  CHECK_FALSE(is_o_sequence({1, 1, 2}));
  CHECK_FALSE(is_o_sequence({2, 1}));
  CHECK_FALSE(is_o_sequence({}));
  CHECK(is_o_sequence({1}));
  CHECK(is_o_sequence({1, 17}));  // no bound from degree 0 to 1
  CHECK_FALSE(is_o_sequence({1, 2, 0, 1}));
  CHECK_FALSE(is_o_sequence({1, -1}));
  CHECK(is_o_sequence({1, 2, 3}));
  CHECK_FALSE(is_o_sequence({1, 2, 4}));
  CHECK(is_o_sequence({1, 3, 6, 10}));
  CHECK_FALSE(is_o_sequence({1, 3, 6, 11}));
}

TEST_CASE("OSequence validates and derives socle degree and multiplicity") {
  const OSequence h{1, 2, 2, 1};
  CHECK(h.socle_degree() == 3);
  CHECK(h.multiplicity() == 6);
  CHECK(h.to_string() == "1,2,2,1");
  CHECK_THROWS_AS(OSequence({1, 1, 2}), InvalidArgument);
  CHECK_FALSE(OSequence::try_make({2}).has_value());
  CHECK(OSequence{1, 2} < OSequence{1, 3});
}

TEST_CASE("parse_o_sequence") {
  CHECK(parse_o_sequence("1,2,2,1") == OSequence{1, 2, 2, 1});
  CHECK(parse_o_sequence("(1, 3, 2)") == OSequence{1, 3, 2});
  CHECK_THROWS_AS(parse_o_sequence("1,,2"), InvalidArgument);
  CHECK_THROWS_AS(parse_o_sequence("1,2,"), InvalidArgument);
  CHECK_THROWS_AS(parse_o_sequence("1,a"), InvalidArgument);
  CHECK_THROWS_AS(parse_o_sequence(""), InvalidArgument);
  CHECK_THROWS_AS(parse_o_sequence("1,1,2"), InvalidArgument);
}
