#include <doctest.h>

#include <map>
#include <random>

#include "oseq/enumerator.hpp"
#include "oseq/lexseg.hpp"

using namespace oseq;

namespace {
Term t(std::initializer_list<std::uint32_t> e) { return Term(std::vector<std::uint32_t>(e)); }

OrderIdeal ideal(std::uint32_t p, std::initializer_list<std::initializer_list<std::uint32_t>> terms) {
  std::vector<Term> v;
  for (auto e : terms) v.push_back(t(e));
  return OrderIdeal(p, std::move(v));
}
}  // namespace

TEST_CASE("lex_compare: the highest variable dominates") {
  CHECK(lex_compare(t({2, 0}), t({1, 1})) < 0);  // x1^2 < x1x2
  CHECK(lex_compare(t({0, 2}), t({1, 1})) > 0);  // x2^2 > x1x2
  CHECK(lex_compare(t({1, 1}), t({1, 1})) == 0);
  CHECK(lex_compare(t({0, 0, 1}), t({5, 5, 0})) > 0);
  CHECK_THROWS_AS(lex_compare(t({1, 0}), t({1, 0, 0})), InvalidArgument);
}

TEST_CASE("lex_compare is a total order on equal-degree terms") {
  std::mt19937 rng(20240611);
  auto random_term = [&](std::uint32_t p, std::uint32_t deg) {
    std::vector<std::uint32_t> e(p, 0);
    for (std::uint32_t i = 0; i < deg; ++i) ++e[rng() % p];
    return Term(e);
  };
  for (int trial = 0; trial < 3000; ++trial) {
    const std::uint32_t p = 1 + rng() % 4;
    const std::uint32_t deg = rng() % 7;
    const Term a = random_term(p, deg), b = random_term(p, deg), c = random_term(p, deg);
    const auto ab = lex_compare(a, b);
    const auto ba = lex_compare(b, a);
    CHECK((ab < 0) == (ba > 0));
    CHECK((ab == 0) == (a == b));
    if (ab <= 0 && lex_compare(b, c) <= 0) CHECK(lex_compare(a, c) <= 0);
  }
}

TEST_CASE("terms_of_degree lists terms in ascending lex order") {
  const auto deg2 = terms_of_degree(2, 2);
  REQUIRE(deg2.size() == 3);
  CHECK(deg2[0] == t({2, 0}));
  CHECK(deg2[1] == t({1, 1}));
  CHECK(deg2[2] == t({0, 2}));
  for (std::uint32_t p = 1; p <= 4; ++p) {
    for (std::uint32_t d = 0; d <= 6; ++d) {
      const auto terms = terms_of_degree(p, d);
      CHECK(terms.size() == binomial(p - 1 + d, d));
      for (std::size_t i = 1; i < terms.size(); ++i) CHECK(lex_compare(terms[i - 1], terms[i]) < 0);
      for (const auto& x : terms) CHECK(x.degree() == d);
    }
  }
  CHECK(terms_of_degree(3, 4, 2).size() == 2);
}

TEST_CASE("min_var") {
  CHECK(min_var(t({1, 0, 1})) == 1);
  CHECK(min_var(t({0, 0, 2})) == 3);
  CHECK_THROWS_AS(min_var(t({0, 0, 0})), InvalidArgument);
}

TEST_CASE("sous_escalier examples") {
  CHECK(sous_escalier(OSequence{1, 2}, 2) == ideal(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(sous_escalier(OSequence{1, 2, 1}, 2) == ideal(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}));
  CHECK(sous_escalier(OSequence{1, 1, 1}, 1) == ideal(1, {{0}, {1}, {2}}));
  CHECK_THROWS_AS(sous_escalier(OSequence{1, 3}, 2), CapacityError);
  CHECK(sous_escalier(OSequence{1}, 3).size() == 1);
}

TEST_CASE("sous_escalier is a closed lex segment reproducing h") {
  for (std::uint32_t d = 1; d <= 10; ++d) {
    for (const OSequence& h : collect_all(d)) {
      const std::uint32_t a1 = h.size() > 1 ? h[1] : 1;
      for (std::uint32_t p = a1; p <= a1 + 2; ++p) {
        CAPTURE(h.to_string());
        CAPTURE(p);
        const OrderIdeal m = sous_escalier(h, p);
        CHECK(m.is_closed_under_division());
        CHECK(m.is_lex_segment());
        CHECK(m.degree_counts() == h.values());
      }
    }
  }
}

TEST_CASE("order ideal predicates reject non-ideals") {
  CHECK_FALSE(ideal(2, {{0, 1}}).is_closed_under_division());
  // closed but not a lex segment: keeps x2 without x1
  const OrderIdeal m = ideal(2, {{0, 0}, {0, 1}});
  CHECK(m.is_closed_under_division());
  CHECK_FALSE(m.is_lex_segment());
  CHECK(m.contains(t({0, 1})));
  CHECK_FALSE(m.contains(t({1, 0})));
  CHECK_THROWS_AS(OrderIdeal(2, {t({1, 0, 0})}), InvalidArgument);
}

TEST_CASE("decompose examples") {
  auto parts = decompose(sous_escalier(OSequence{1, 2}, 2), 2);
  CHECK(parts.without_last == ideal(1, {{0}, {1}}));
  CHECK(parts.quotient == ideal(2, {{0, 0}}));

  parts = decompose(sous_escalier(OSequence{1, 2, 2}, 2), 2);
  CHECK(parts.without_last == ideal(1, {{0}, {1}, {2}}));
  CHECK(parts.quotient == ideal(2, {{0, 0}, {1, 0}}));

  parts = decompose(ideal(2, {{0, 0}}), 2);
  CHECK(parts.without_last == ideal(1, {{0}}));
  CHECK(parts.quotient.empty());

  CHECK_THROWS_AS(decompose(ideal(1, {{0}}), 1), InvalidArgument);
  CHECK_THROWS_AS(decompose(ideal(2, {{0, 0}}), 3), InvalidArgument);
}

TEST_CASE("recompose inverts decompose") {
  for (std::uint32_t d = 1; d <= 9; ++d) {
    for (const OSequence& h : collect_all(d)) {
      const std::uint32_t p = std::max<std::uint32_t>(2, h.size() > 1 ? h[1] : 1);
      const OrderIdeal m = sous_escalier(h, p);
      const auto parts = decompose(m, p);
      CHECK(parts.without_last.size() + parts.quotient.size() == m.size());
      CHECK(recompose(parts) == m);
    }
  }
}

TEST_CASE("classify examples") {
  CHECK(classify(sous_escalier(OSequence{1, 2, 2}, 2), 2) == Classification{2, 1, 5});
  CHECK(classify(sous_escalier(OSequence{1, 1, 1}, 1), 1) == Classification{2, 2, 3});
  CHECK(classify(sous_escalier(OSequence{1, 2, 1}, 2), 2) == Classification{2, 1, 4});
  CHECK(classify(sous_escalier(OSequence{1, 2, 3}, 3), 3) == Classification{2, 0, 6});
  CHECK(classify(sous_escalier(OSequence{1, 3, 6, 1}, 3), 3) == Classification{3, 2, 11});
  CHECK_THROWS_AS(classify(OrderIdeal(2), 2), InvalidArgument);
}

TEST_CASE("oracle_count_M examples and limits") {
  CHECK(oracle_count_M(3, 2, 0, 3) == 2);
  CHECK(oracle_count_M(1, 5, 2, 3) == 1);
  CHECK(oracle_count_M(2, 1, 1, 4) == 0);  // s <= 1 forces (1,3), but a_1 = 3 != C(2,1)
  CHECK(oracle_count_M(2, 2, 1, 3) == 1);
  CHECK(oracle_count_M(4, 0, 0, 1) == 1);
  CHECK_THROWS_AS(oracle_count_M(5, 2, 0, 3), TooLargeError);
  CHECK_THROWS_AS(oracle_count_M(2, 9, 0, 3), TooLargeError);
  CHECK_THROWS_AS(oracle_count_M(2, 2, 0, 13), TooLargeError);
  CHECK_THROWS_AS(oracle_count_M(0, 2, 0, 3), InvalidArgument);
}

TEST_CASE("oracle agrees with classify on realized sous-escaliers") {
  // Tally classify() over all lex sous-escaliers and compare with the oracle.
  for (std::uint32_t p = 1; p <= 3; ++p) {
    for (std::uint32_t d = 1; d <= 9; ++d) {
      std::map<std::pair<std::uint32_t, std::uint32_t>, Count> by_sk;  // (socle, k) -> count
      for (const OSequence& h : collect_all(d)) {
        if (h.size() > 1 && h[1] > p) continue;
        const auto c = classify(sous_escalier(h, p), p);
        ++by_sk[{c.socle_degree, c.max_growth}];
      }
      for (std::uint32_t n = 0; n < d; ++n) {
        for (std::uint32_t k = 0; k <= 4; ++k) {
          Count expected = 0;
          for (const auto& [sk, cnt] : by_sk) expected += (sk.first <= n && sk.second == k) ? cnt : 0;
          CHECK(oracle_count_M(p, n, k, d) == expected);
        }
      }
    }
  }
}
