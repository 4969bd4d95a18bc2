#include <doctest.h>

#include <sstream>
#include <thread>

#include "oseq/enumerator.hpp"
#include "oseq/lexseg.hpp"
#include "oseq/linusson.hpp"

using namespace oseq;

TEST_CASE("count_M examples") {
  CountCache cache;
  LinussonCounter c(cache);
  CHECK(c.count_M(1, 5, 2, 3) == 1);
  CHECK(c.count_M(1, 1, 2, 3) == 0);
  CHECK(c.count_M(3, 2, 0, 3) == 2);
  CHECK(c.count_M(2, 2, 1, 3) == 1);
  CHECK(c.count_M(2, 1, 1, 4) == 0);
}

TEST_CASE("o_via_formula examples") {
  CountCache cache;
  LinussonCounter c(cache);
  CHECK(c.o_via_formula(1) == 1);
  CHECK(c.o_via_formula(4) == 3);
  CHECK(c.o_via_formula(21) == 1416);
  CHECK_THROWS_AS(c.o_via_formula(0), InvalidArgument);
}

TEST_CASE("two_variable_lex_count examples and enumeration cross-check") {
  CountCache cache;
  LinussonCounter c(cache);
  CHECK(c.two_variable_lex_count(1) == 1);
  CHECK(c.two_variable_lex_count(3) == 2);
  CHECK(c.two_variable_lex_count(4) == 2);
  for (std::uint32_t d = 1; d <= 14; ++d) {
    Count direct = 0;
    enumerate_all(d, [&](std::span<const Entry> s) { direct += (s.size() < 2 || s[1] <= 2) ? 1 : 0; });
    CHECK(c.two_variable_lex_count(d) == direct);
  }
}

TEST_CASE("formula agrees with enumeration for d <= 25") {
  CountCache cache;
  LinussonCounter c(cache);
  const auto t = o_table(25);
  for (std::uint32_t d = 1; d <= 25; ++d) CHECK(c.o_via_formula(d) == t.o(d));
}

TEST_CASE("formula agrees with the brute-force oracle on the full grid") {
  CountCache cache;
  LinussonCounter c(cache);
  for (std::uint32_t p = 1; p <= 4; ++p) {
    for (std::uint32_t n = 0; n <= 8; ++n) {
      for (std::uint32_t k = 0; k <= 4; ++k) {
        for (std::uint32_t d = 1; d <= 10; ++d) {
          CAPTURE(p);
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(d);
          CHECK(c.count_M(p, n, k, d) == oracle_count_M(p, n, k, d));
        }
      }
    }
  }
}

TEST_CASE("emptiness guards") {
  CHECK(trivially_empty({2, 1, 2, 5}));    // k > n
  CHECK(trivially_empty({3, 5, 1, 3}));    // prefix 1 + 3 > 3
  CHECK_FALSE(trivially_empty({3, 5, 1, 4}));
  CHECK(trivially_empty({60, 59, 1, 60}));  // prefix 1 + 60 > 60
  CHECK_FALSE(trivially_empty({60, 59, 0, 60}));
  CHECK(trivially_empty({5000, 5000, 4000, 10}));  // saturation keeps this finite
}

TEST_CASE("structural properties of count_M") {
  CountCache cache;
  LinussonCounter c(cache);
  for (std::uint32_t p = 1; p <= 5; ++p) {
    for (std::uint32_t k = 0; k <= 5; ++k) {
      for (std::uint32_t d = 1; d <= 12; ++d) {
        for (std::uint32_t n = 0; n <= 14; ++n) {
          // monotone in the socle cap
          CHECK(c.count_M(p, n, k, d) <= c.count_M(p, n + 1, k, d));
          // caps at or beyond d - 1 are all equivalent
          if (n >= d - 1) CHECK(c.count_M(p, n, k, d) == c.count_M(p, d - 1, k, d));
        }
        if (p >= 2) {
          for (std::uint32_t n = 0; n <= 8; ++n) {
            Count sum = 0;
            for (std::uint32_t k2 = 0; k2 < d; ++k2) sum += c.count_M(p - 1, n, k2, d);
            CHECK(c.count_M(p, n, 0, d) == sum);
          }
        }
      }
    }
  }
}

TEST_CASE("count_M rejects invalid keys") {
  CHECK_THROWS_AS(count_M(0, 1, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(count_M(1, 1, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(count_M(70000, 1, 0, 1), InvalidArgument);
}

TEST_CASE("second evaluation is served from the cache") {
  CountCache cache;
  LinussonCounter c(cache);
  const Count first = c.o_via_formula(30);
  CHECK(c.stats().expansions > 0);
  c.reset_stats();
  CHECK(c.o_via_formula(30) == first);
  CHECK(c.stats().expansions == 0);
  CHECK(c.stats().hits == 1);
}

TEST_CASE("concurrent counters on one cache match the sequential run") {
  CountCache sequential_cache;
  LinussonCounter sequential(sequential_cache);
  std::vector<Count> expected;
  for (std::uint32_t d = 1; d <= 32; ++d) expected.push_back(sequential.o_via_formula(d));

  CountCache shared;
  std::vector<std::vector<Count>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      LinussonCounter c(shared);
      for (std::uint32_t d = 32; d >= 1; --d) results[t].insert(results[t].begin(), c.o_via_formula(d));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == expected);
  LinussonCounter reference(sequential_cache);
  for (const auto& [key, count] : shared.sorted_entries()) CHECK(reference.count_M(key) == count);
}

TEST_CASE("cache insert is idempotent and bounded") {
  CountCache cache;
  cache.insert({1, 5, 2, 3}, 1);
  cache.insert({1, 5, 2, 3}, 1);
  CHECK(cache.size() == 1);
  CHECK_THROWS_AS(cache.insert({1, 5, 2, 3}, 2), CorruptionError);
  CHECK_THROWS_AS(cache.insert({1, 5, 2, 3}, 8), CorruptionError);  // not below 2^3
  CHECK_THROWS_AS(cache.insert({0, 5, 2, 3}, 1), InvalidArgument);
}

TEST_CASE("cache persistence") {
  SUBCASE("empty round trip") {
    std::stringstream ss;
    cache_save(CountCache{}, ss);
    CHECK(ss.str() == "# oseq-memo v1\n");
    CHECK(cache_load(ss).empty());
  }
  SUBCASE("single entry round trip") {
    CountCache c;
    c.insert({1, 5, 2, 3}, 1);
    std::stringstream ss;
    cache_save(c, ss);
    CHECK(ss.str() == "# oseq-memo v1\n1,5,2,3,1\n");
    CHECK(cache_load(ss) == c);
  }
  SUBCASE("computed cache round trips and is sorted") {
    CountCache c;
    LinussonCounter(c).o_via_formula(18);
    std::stringstream ss;
    cache_save(c, ss);
    const std::string text = ss.str();
    CountCache back = cache_load(ss);
    CHECK(back == c);
    std::stringstream again;
    cache_save(back, again);
    CHECK(again.str() == text);
  }
  SUBCASE("conflicting entry is corruption") {
    CountCache c;
    c.insert({1, 5, 2, 3}, 1);
    std::stringstream ss("# oseq-memo v1\n1,5,2,3,2\n");
    CHECK_THROWS_AS(cache_load(c, ss), CorruptionError);
  }
  SUBCASE("loading merges") {
    CountCache c;
    c.insert({2, 2, 1, 3}, 1);
    std::stringstream ss("# oseq-memo v1\n1,5,2,3,1\n2,2,1,3,1\n");
    cache_load(c, ss);
    CHECK(c.size() == 2);
  }
  SUBCASE("format violations") {
    for (const char* bad : {"", "# oseq-memo v2\n", "# oseq-memo v1\n1,5,2,3\n", "# oseq-memo v1\n1, 5,2,3,1\n",
                            "# oseq-memo v1\n1,5,2,3,1,\n", "# oseq-memo v1\n2,2,1,3,1\n1,5,2,3,1\n",
                            "# oseq-memo v1\n0,5,2,3,1\n", "# oseq-memo v1\n1,5,2,3,x\n"}) {
      CAPTURE(bad);
      std::stringstream ss(bad);
      CHECK_THROWS_AS(cache_load(ss), ParseError);
    }
  }
}
