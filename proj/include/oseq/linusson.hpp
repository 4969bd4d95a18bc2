#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oseq/count.hpp"

namespace oseq {

/// Parameters of O(p, n, k, d): at most p variables, socle degree <= n,
/// maximal growth exactly through degree k, multiplicity d.
struct MemoKey {
  std::uint32_t p = 1;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t d = 1;

  friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

/// Throws InvalidArgument unless p >= 1, d >= 1 and all fields fit 16 bits.
void validate(const MemoKey& key);

/// Thread-safe map MemoKey -> count. Inserting a key twice with different
/// counts raises CorruptionError; every count must be below 2^d.
class CountCache {
 public:
  CountCache() = default;
  CountCache(const CountCache& other);
  CountCache& operator=(const CountCache& other);

  std::optional<Count> find(const MemoKey& key) const;
  void insert(const MemoKey& key, Count count);
  /// Inserts every entry of `other` under the same idempotency rule.
  void merge(const CountCache& other);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  void clear();

  /// Entries sorted ascending by (p, n, k, d).
  std::vector<std::pair<MemoKey, Count>> sorted_entries() const;

  friend bool operator==(const CountCache& a, const CountCache& b);

 private:
  static std::uint64_t pack(const MemoKey& key);
  static MemoKey unpack(std::uint64_t packed);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Count> entries_;
};

/// Text persistence: a "# oseq-memo v1" header line, then one
/// "p,n,k,d,count" line per entry sorted by key, LF endings.
void cache_save(const CountCache& cache, std::ostream& out);
void cache_save(const CountCache& cache, const std::filesystem::path& destination);

/// Parses a cache file and merges it into `cache`. Throws ParseError on a
/// format violation and CorruptionError on a conflicting entry.
void cache_load(CountCache& cache, std::istream& in);
void cache_load(CountCache& cache, const std::filesystem::path& source);
CountCache cache_load(std::istream& in);

struct CountStats {
  std::uint64_t hits = 0;        // cache lookups answered from the cache
  std::uint64_t expansions = 0;  // keys evaluated and inserted
};

/// Evaluates O(p, n, k, d) through the one-variable base cases and the
/// double sum over (j, i), memoizing in a CountCache.
///
/// Evaluation uses an explicit work stack, so recursion depth is bounded
/// only by memory. Socle caps n >= d - 1 are clamped to d - 1 before lookup
/// since no O-sequence of multiplicity d has larger socle degree.
class LinussonCounter {
 public:
  /// Uses the process-wide shared cache.
  LinussonCounter();
  explicit LinussonCounter(CountCache& cache);

  Count count_M(const MemoKey& key);
  Count count_M(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    return count_M(MemoKey{p, n, k, d});
  }

  /// O_d = O(d, d - 1, 0, d).
  Count o_via_formula(std::uint32_t d);

  /// Lex-segment ideals of multiplicity d in two variables: O(3, d - 1, 0, d).
  Count two_variable_lex_count(std::uint32_t d);

  const CountStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }
  CountCache& cache() noexcept { return *cache_; }

 private:
  // Value of `key` when all its dependencies are cached; otherwise pushes
  // the missing ones onto `pending` and returns nullopt.
  std::optional<Count> try_evaluate(const MemoKey& key, std::vector<MemoKey>& pending);
  // Value of a dependency without touching the stack: guard result, p = 1
  // closed form, or cache lookup.
  std::optional<Count> lookup(const MemoKey& key);

  CountCache* cache_;
  CountStats stats_;
};

/// The cache shared by the free functions below and default-constructed counters.
CountCache& shared_cache();

/// Emptiness guards: true when M(p, n, k, d) is empty by definition
/// (k > n, or the forced prefix C(p + k, k) already exceeds d).
bool trivially_empty(const MemoKey& key);

Count count_M(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d);
Count o_via_formula(std::uint32_t d);
Count two_variable_lex_count(std::uint32_t d);

}  // namespace oseq
