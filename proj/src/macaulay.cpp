#include "oseq/macaulay.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace oseq {
namespace {

constexpr Count kNoCeiling = std::numeric_limits<Count>::max();

// Multiplicative evaluation C(n, m) = prod_{i=1..m} (n - m + i) / i. Each
// partial product is itself a binomial coefficient C(n - m + i, i), and these
// grow with i, so saturation can stop as soon as the ceiling is passed.
Count binomial_impl(std::int64_t n, std::int64_t m, Count ceiling) {
  if (m < 0 || n < m) return 0;
  if (m == 0) return 1;
  m = std::min(m, n - m);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - m + i) / static_cast<unsigned __int128>(i);
    if (ceiling != kNoCeiling && acc > ceiling) return ceiling + 1;
    if (acc > std::numeric_limits<Count>::max()) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(m) +
                          ") exceeds 64-bit count range");
    }
  }
  return static_cast<Count>(acc);
}

// Largest k >= lower with C(k, lower) <= a (a >= 1, so k = lower qualifies).
std::uint32_t largest_top(Count a, std::uint32_t lower) {
  std::uint64_t lo = lower;
  std::uint64_t step = 1;
  std::uint64_t hi = lower + step;
  while (binomial_impl(static_cast<std::int64_t>(hi), lower, a) <= a) {
    lo = hi;
    step *= 2;
    hi = lower + step;
  }
  // invariant: C(lo) <= a < C(hi)
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (binomial_impl(static_cast<std::int64_t>(mid), lower, a) <= a) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo > std::numeric_limits<std::uint32_t>::max()) {
    throw OverflowError("binomial expansion top exceeds 32-bit range");
  }
  return static_cast<std::uint32_t>(lo);
}

}  // namespace

Count binomial(std::int64_t n, std::int64_t m) { return binomial_impl(n, m, kNoCeiling); }

Count binomial(std::int64_t n, std::int64_t m, Count ceiling) {
  if (ceiling == kNoCeiling) return binomial_impl(n, m, kNoCeiling);
  return binomial_impl(n, m, ceiling);
}

BinomialExpansion expand(Count a, std::uint32_t t) {
  if (a < 1) throw InvalidArgument("expand: a must be >= 1, got " + std::to_string(a));
  if (t < 1) throw InvalidArgument("expand: base t must be >= 1");
  BinomialExpansion e;
  e.base = t;
  e.value = a;
  Count rest = a;
  for (std::uint32_t lower = t; lower >= 1 && rest > 0; --lower) {
    const std::uint32_t top = largest_top(rest, lower);
    e.tops.push_back(top);
    rest -= binomial(top, lower);
  }
  return e;
}

Count growth_bound(Count a, std::uint32_t t) {
  const BinomialExpansion e = expand(a, t);
  Count sum = 0;
  for (std::size_t i = 0; i < e.tops.size(); ++i) {
    sum = checked_add(sum, binomial(std::int64_t{e.tops[i]} + 1, std::int64_t{e.lower(i)} + 1),
                      "growth_bound");
  }
  return sum;
}

OSequence::OSequence(std::vector<value_type> values) : values_(std::move(values)) {
  if (!is_o_sequence(std::span<const value_type>(values_))) {
    throw InvalidArgument("not an O-sequence: (" + to_string() + ")");
  }
  for (const value_type v : values_) multiplicity_ += v;
}

OSequence::OSequence(std::vector<value_type> values, Unchecked) : values_(std::move(values)) {
  for (const value_type v : values_) multiplicity_ += v;
}

std::optional<OSequence> OSequence::try_make(std::vector<value_type> values) {
  if (!is_o_sequence(std::span<const value_type>(values))) return std::nullopt;
  return OSequence(std::move(values), Unchecked{});
}

std::string OSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

OSequence parse_o_sequence(const std::string& text) {
  std::string cleaned;
  for (const char c : text) {
    if (c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    cleaned += c;
  }
  if (cleaned.empty()) throw InvalidArgument("empty sequence text");
  std::vector<OSequence::value_type> values;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw InvalidArgument("malformed sequence entry '" + item + "' in \"" + text + "\"");
    }
    const unsigned long long v = std::stoull(item);
    if (v > std::numeric_limits<OSequence::value_type>::max()) {
      throw InvalidArgument("sequence entry out of range: " + item);
    }
    values.push_back(static_cast<OSequence::value_type>(v));
  }
  if (cleaned.back() == ',') throw InvalidArgument("trailing comma in \"" + text + "\"");
  return OSequence(std::move(values));
}

}  // namespace oseq
