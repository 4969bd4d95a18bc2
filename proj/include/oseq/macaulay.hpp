#pragma once

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oseq/count.hpp"

namespace oseq {

/// Binomial coefficient with the conventions C(n, m) = 0 when n < m or
/// m < 0, and C(n, 0) = 1 for n >= 0. Throws OverflowError when the exact
/// value does not fit a Count.
Count binomial(std::int64_t n, std::int64_t m);

/// Saturating variant for callers that only compare against `ceiling`:
/// returns the exact value when it is <= ceiling, otherwise ceiling + 1.
Count binomial(std::int64_t n, std::int64_t m, Count ceiling);

/// The representation a = C(tops[0], base) + C(tops[1], base - 1) + ...
/// with strictly decreasing tops and every top >= its lower index >= 1.
struct BinomialExpansion {
  std::uint32_t base = 0;
  std::vector<std::uint32_t> tops;
  Count value = 0;

  /// Lower index of the i-th term.
  std::uint32_t lower(std::size_t i) const { return base - static_cast<std::uint32_t>(i); }
  /// Lower index of the last term (the j of the expansion).
  std::uint32_t last_lower() const { return lower(tops.size() - 1); }

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;
};

/// Greedy expansion of a in base t. Throws InvalidArgument for a < 1 or t < 1.
BinomialExpansion expand(Count a, std::uint32_t t);

/// Macaulay's bound a^<t>: every binomial of expand(a, t) shifted up by one
/// in both indices. This is the largest value a Hilbert function with value
/// a in degree t may take in degree t + 1.
Count growth_bound(Count a, std::uint32_t t);

/// True iff `values` is a finite O-sequence: nonempty, a_0 = 1, all entries
/// >= 1, and a_{t+1} <= a_t^<t> for every t >= 1. Degree 0 to 1 is
/// unconstrained. Never throws on malformed input.
template <std::integral T>
bool is_o_sequence(std::span<const T> values) {
  if (values.empty() || values[0] != 1) return false;
  for (const T v : values) {
    if (v < 1) return false;
  }
  for (std::size_t t = 1; t + 1 < values.size(); ++t) {
    const Count bound = growth_bound(static_cast<Count>(values[t]), static_cast<std::uint32_t>(t));
    if (static_cast<Count>(values[t + 1]) > bound) return false;
  }
  return true;
}

inline bool is_o_sequence(std::initializer_list<std::int64_t> values) {
  return is_o_sequence(std::span<const std::int64_t>(values.begin(), values.size()));
}

/// A validated finite O-sequence (a_0, ..., a_s).
class OSequence {
 public:
  using value_type = std::uint32_t;

  /// Throws InvalidArgument unless `values` is an O-sequence.
  explicit OSequence(std::vector<value_type> values);
  OSequence(std::initializer_list<value_type> values)
      : OSequence(std::vector<value_type>(values)) {}

  static std::optional<OSequence> try_make(std::vector<value_type> values);

  const std::vector<value_type>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  value_type operator[](std::size_t i) const { return values_[i]; }
  value_type back() const { return values_.back(); }

  std::size_t socle_degree() const noexcept { return values_.size() - 1; }
  Count multiplicity() const noexcept { return multiplicity_; }

  /// Comma-separated form without spaces, e.g. "1,2,2,1".
  std::string to_string() const;

  friend bool operator==(const OSequence& a, const OSequence& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const OSequence& a, const OSequence& b) { return a.values_ <=> b.values_; }

 private:
  struct Unchecked {};
  OSequence(std::vector<value_type> values, Unchecked);

  std::vector<value_type> values_;
  Count multiplicity_ = 0;
};

/// Parses "1,2,2,1" (optionally wrapped in parentheses, spaces allowed).
/// Throws InvalidArgument on malformed text or a non-O-sequence.
OSequence parse_o_sequence(const std::string& text);

}  // namespace oseq
