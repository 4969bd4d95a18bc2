#include "oseq/linusson.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>

#include "oseq/errors.hpp"
#include "oseq/macaulay.hpp"

namespace oseq {
namespace {

constexpr std::uint32_t kFieldLimit = 0xFFFF;
constexpr const char* kCacheHeader = "# oseq-memo v1";

std::string key_string(const MemoKey& key) {
  return "(" + std::to_string(key.p) + "," + std::to_string(key.n) + "," + std::to_string(key.k) +
         "," + std::to_string(key.d) + ")";
}

MemoKey normalized(MemoKey key) {
  key.n = std::min(key.n, key.d - 1);
  return key;
}

// O(1, n, k, d): the single all-ones sequence when k = d - 1 and n >= d - 1.
Count one_variable(const MemoKey& key) { return key.k + 1 == key.d && key.n + 1 >= key.d ? 1 : 0; }

}  // namespace

void validate(const MemoKey& key) {
  if (key.p < 1) throw InvalidArgument("memo key " + key_string(key) + ": p must be >= 1");
  if (key.d < 1) throw InvalidArgument("memo key " + key_string(key) + ": d must be >= 1");
  if (key.p > kFieldLimit || key.n > kFieldLimit || key.k > kFieldLimit || key.d > kFieldLimit) {
    throw InvalidArgument("memo key " + key_string(key) + ": fields must be <= 65535");
  }
}

bool trivially_empty(const MemoKey& key) {
  if (key.k > key.n) return true;
  // a_i = C(p - 1 + i, i) for i <= k forces a prefix of mass C(p + k, k)
  return binomial(std::int64_t{key.p} + key.k, key.k, key.d) > key.d;
}

// CountCache

CountCache::CountCache(const CountCache& other) {
  std::shared_lock lock(other.mutex_);
  entries_ = other.entries_;
}

CountCache& CountCache::operator=(const CountCache& other) {
  if (this == &other) return *this;
  std::unordered_map<std::uint64_t, Count> copy;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.entries_;
  }
  std::unique_lock lock(mutex_);
  entries_ = std::move(copy);
  return *this;
}

std::uint64_t CountCache::pack(const MemoKey& key) {
  return (std::uint64_t{key.p} << 48) | (std::uint64_t{key.n} << 32) | (std::uint64_t{key.k} << 16) |
         std::uint64_t{key.d};
}

MemoKey CountCache::unpack(std::uint64_t packed) {
  return MemoKey{static_cast<std::uint32_t>(packed >> 48), static_cast<std::uint32_t>((packed >> 32) & 0xFFFF),
                 static_cast<std::uint32_t>((packed >> 16) & 0xFFFF), static_cast<std::uint32_t>(packed & 0xFFFF)};
}

std::optional<Count> CountCache::find(const MemoKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = entries_.find(pack(key));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::insert(const MemoKey& key, Count count) {
  validate(key);
  if (key.d < 64 && count >= (Count{1} << key.d)) {
    throw CorruptionError("cache entry " + key_string(key) + " -> " + std::to_string(count) +
                          " violates count < 2^d");
  }
  std::unique_lock lock(mutex_);
  const auto [it, inserted] = entries_.emplace(pack(key), count);
  if (!inserted && it->second != count) {
    throw CorruptionError("cache entry " + key_string(key) + " already holds " + std::to_string(it->second) +
                          ", refusing " + std::to_string(count));
  }
}

void CountCache::merge(const CountCache& other) {
  if (this == &other) return;
  for (const auto& [key, count] : other.sorted_entries()) insert(key, count);
}

std::size_t CountCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void CountCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::vector<std::pair<MemoKey, Count>> CountCache::sorted_entries() const {
  std::vector<std::pair<std::uint64_t, Count>> raw;
  {
    std::shared_lock lock(mutex_);
    raw.assign(entries_.begin(), entries_.end());
  }
  // the packing is monotone in (p, n, k, d)
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<MemoKey, Count>> out;
  out.reserve(raw.size());
  for (const auto& [packed, count] : raw) out.emplace_back(unpack(packed), count);
  return out;
}

bool operator==(const CountCache& a, const CountCache& b) { return a.sorted_entries() == b.sorted_entries(); }

// Persistence

void cache_save(const CountCache& cache, std::ostream& out) {
  out << kCacheHeader << '\n';
  for (const auto& [key, count] : cache.sorted_entries()) {
    out << key.p << ',' << key.n << ',' << key.k << ',' << key.d << ',' << count << '\n';
  }
  if (!out) throw IoError("failed writing memo cache");
}

void cache_save(const CountCache& cache, const std::filesystem::path& destination) {
  // write then rename so an interrupted save never truncates a good cache
  const auto tmp = destination.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open memo cache for writing: " + tmp);
    cache_save(cache, out);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, destination, ec);
  if (ec) throw IoError("cannot write memo cache " + destination.string() + ": " + ec.message());
}

void cache_load(CountCache& cache, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("memo cache is empty, expected header", 1);
  ++line_no;
  if (line != kCacheHeader) throw ParseError("bad memo cache header '" + line + "'", line_no);
  std::optional<MemoKey> previous;
  while (std::getline(in, line)) {
    ++line_no;
    std::uint64_t fields[5];
    const char* pos = line.data();
    const char* end = line.data() + line.size();
    for (int f = 0; f < 5; ++f) {
      if (pos == end || *pos < '0' || *pos > '9') throw ParseError("malformed memo cache line '" + line + "'", line_no);
      const auto [next, ec] = std::from_chars(pos, end, fields[f]);
      if (ec != std::errc{}) throw ParseError("malformed memo cache line '" + line + "'", line_no);
      pos = next;
      if (f < 4) {
        if (pos == end || *pos != ',') throw ParseError("malformed memo cache line '" + line + "'", line_no);
        ++pos;
      }
    }
    if (pos != end) throw ParseError("trailing characters in memo cache line '" + line + "'", line_no);
    for (int f = 0; f < 4; ++f) {
      if (fields[f] > kFieldLimit) throw ParseError("memo key field out of range", line_no);
    }
    const MemoKey key{static_cast<std::uint32_t>(fields[0]), static_cast<std::uint32_t>(fields[1]),
                      static_cast<std::uint32_t>(fields[2]), static_cast<std::uint32_t>(fields[3])};
    try {
      validate(key);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
    if (previous && !(*previous < key)) throw ParseError("memo cache keys not strictly ascending", line_no);
    previous = key;
    cache.insert(key, fields[4]);
  }
}

void cache_load(CountCache& cache, const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IoError("cannot open memo cache " + source.string());
  cache_load(cache, in);
}

CountCache cache_load(std::istream& in) {
  CountCache cache;
  cache_load(cache, in);
  return cache;
}

// Counter

CountCache& shared_cache() {
  static CountCache cache;
  return cache;
}

LinussonCounter::LinussonCounter() : cache_(&shared_cache()) {}
LinussonCounter::LinussonCounter(CountCache& cache) : cache_(&cache) {}

std::optional<Count> LinussonCounter::lookup(const MemoKey& raw) {
  const MemoKey key = normalized(raw);
  if (trivially_empty(key)) return Count{0};
  if (key.p == 1) return one_variable(key);
  auto hit = cache_->find(key);
  if (hit) ++stats_.hits;
  return hit;
}

std::optional<Count> LinussonCounter::try_evaluate(const MemoKey& key, std::vector<MemoKey>& pending) {
  bool complete = true;
  Count total = 0;
  if (key.k == 0) {
    for (std::uint32_t k2 = 0; k2 < key.d; ++k2) {
      const MemoKey dep{key.p - 1, key.n, k2, key.d};
      if (const auto v = lookup(dep)) {
        total = checked_add(total, *v, "count_M");
      } else {
        pending.push_back(normalized(dep));
        complete = false;
      }
    }
    return complete ? std::optional<Count>(total) : std::nullopt;
  }
  // j outer, i inner, both ascending
  for (std::uint32_t j = 1; j < key.d; ++j) {
    for (std::uint32_t i = key.k; i <= key.n; ++i) {
      const MemoKey upper{key.p, i - 1, key.k - 1, j};
      const auto second = lookup(upper);
      if (second && *second == 0) continue;
      const MemoKey lower{key.p - 1, key.n, i, key.d - j};
      const auto first = lookup(lower);
      if (first && *first == 0) continue;
      if (!second) pending.push_back(normalized(upper));
      if (!first) pending.push_back(normalized(lower));
      if (!first || !second) {
        complete = false;
        continue;
      }
      total = checked_add(total, checked_mul(*first, *second, "count_M"), "count_M");
    }
  }
  return complete ? std::optional<Count>(total) : std::nullopt;
}

Count LinussonCounter::count_M(const MemoKey& raw) {
  validate(raw);
  if (const auto direct = lookup(raw)) return *direct;

  std::vector<MemoKey> stack{normalized(raw)};
  std::vector<MemoKey> pending;
  while (!stack.empty()) {
    const MemoKey key = stack.back();
    if (cache_->find(key)) {
      stack.pop_back();
      continue;
    }
    pending.clear();
    if (const auto value = try_evaluate(key, pending)) {
      cache_->insert(key, *value);
      ++stats_.expansions;
      stack.pop_back();
    } else {
      stack.insert(stack.end(), pending.begin(), pending.end());
    }
  }
  return *cache_->find(normalized(raw));
}

Count LinussonCounter::o_via_formula(std::uint32_t d) {
  if (d < 1) throw InvalidArgument("o_via_formula: d must be >= 1");
  return count_M(d, d - 1, 0, d);
}

Count LinussonCounter::two_variable_lex_count(std::uint32_t d) {
  if (d < 1) throw InvalidArgument("two_variable_lex_count: d must be >= 1");
  return count_M(3, d - 1, 0, d);
}

Count count_M(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
  return LinussonCounter().count_M(p, n, k, d);
}

Count o_via_formula(std::uint32_t d) { return LinussonCounter().o_via_formula(d); }

Count two_variable_lex_count(std::uint32_t d) { return LinussonCounter().two_variable_lex_count(d); }

}  // namespace oseq
