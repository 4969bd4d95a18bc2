#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "oseq/count.hpp"
#include "oseq/macaulay.hpp"

namespace oseq {

/// A power product x_1^e_1 ... x_p^e_p, variables ordered x_1 < ... < x_p.
class Term {
 public:
  explicit Term(std::uint32_t vars) : exponents_(vars, 0) {}
  explicit Term(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::uint32_t vars() const noexcept { return static_cast<std::uint32_t>(exponents_.size()); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  /// Exponent of x_i, 1-based.
  std::uint32_t exponent(std::uint32_t i) const { return exponents_.at(i - 1); }
  std::uint32_t degree() const;
  bool is_one() const { return degree() == 0; }

  /// "1", "x1", "x1^2*x3", ...
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Lexicographic order with x_p dominant: the larger term is the one with
/// the larger exponent at the highest index where the two differ. Throws
/// InvalidArgument when the variable counts differ.
std::strong_ordering lex_compare(const Term& a, const Term& b);

/// Degree first, then lex_compare. The storage order of OrderIdeal.
bool degree_lex_less(const Term& a, const Term& b);

/// Index of the smallest variable with positive exponent. Throws
/// InvalidArgument for the constant term, whose minimum is undefined.
std::uint32_t min_var(const Term& t);

/// The first `limit` degree-t terms in p variables, ascending in lex order.
std::vector<Term> terms_of_degree(std::uint32_t p, std::uint32_t t, std::size_t limit = SIZE_MAX);

/// A finite set of terms over a common number of variables, kept sorted by
/// degree_lex_less. Closure under division is checked, not enforced.
class OrderIdeal {
 public:
  explicit OrderIdeal(std::uint32_t vars) : vars_(vars) {}
  OrderIdeal(std::uint32_t vars, std::vector<Term> terms);

  std::uint32_t vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  bool contains(const Term& t) const;
  /// Entry t is the number of terms of degree t, up to the top degree.
  std::vector<std::uint32_t> degree_counts() const;
  bool is_closed_under_division() const;
  /// Closed under division and, in every degree, an initial lex segment.
  bool is_lex_segment() const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;

 private:
  std::uint32_t vars_;
  std::vector<Term> terms_;
};

/// The terms outside the lex-segment ideal with Hilbert function h in p
/// variables: the a_t lex-smallest terms of each degree t. Throws
/// CapacityError when p < a_1.
OrderIdeal sous_escalier(const OSequence& h, std::uint32_t p);

/// Split of an order ideal by divisibility by the last variable.
struct Decomposition {
  OrderIdeal without_last;  // terms not divisible by x_p, over p - 1 variables
  OrderIdeal quotient;      // terms divisible by x_p, divided once by x_p
};

/// Throws InvalidArgument when p < 2 or p differs from m.vars().
Decomposition decompose(const OrderIdeal& m, std::uint32_t p);

/// Inverse of decompose: without_last (lifted to p variables) union x_p * quotient.
OrderIdeal recompose(const Decomposition& parts);

struct Classification {
  std::uint32_t socle_degree = 0;
  /// Largest k with a_i = C(p - 1 + i, i) for every i <= k.
  std::uint32_t max_growth = 0;
  Count multiplicity = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Throws InvalidArgument for an empty ideal or a variable-count mismatch.
Classification classify(const OrderIdeal& m, std::uint32_t p);

/// Limits above which oracle_count_M refuses to run.
struct OracleLimits {
  static constexpr std::uint32_t max_p = 4;
  static constexpr std::uint32_t max_n = 8;
  static constexpr std::uint32_t max_d = 12;
};

/// |M(p, n, k, d)| by exhaustive enumeration of compositions of d, filtered
/// by Macaulay's condition and the maximal-growth conditions. Shares no code
/// with the recursive counter. Throws TooLargeError beyond OracleLimits and
/// InvalidArgument for p < 1 or d < 1.
Count oracle_count_M(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d);

/// Whether (a_0, ..., a_s) satisfies the maximal-growth conditions of
/// M(p, n, k, d) for the given p and k (multiplicity and socle cap are the
/// caller's concern).
bool has_growth_profile(std::span<const std::uint32_t> values, std::uint32_t p, std::uint32_t k);

}  // namespace oseq
