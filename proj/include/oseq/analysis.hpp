#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oseq/enumerator.hpp"
#include "oseq/linusson.hpp"

namespace oseq {

/// Exact rational numbers, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& r);

/// True iff r^2 > r + 1, i.e. r exceeds the golden ratio, decided exactly.
bool exceeds_golden_ratio(const Rational& r);

enum class Severity {
  theorem,      // a proved statement; any violation is a failure
  observation,  // an empirical claim; violations inside the observed range fail, beyond it warn
};

struct CheckEntry {
  std::uint32_t d = 0;
  std::string claim;
  std::string left;
  std::string right;
  bool pass = true;
  Severity severity = Severity::theorem;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct Anomaly {
  std::uint32_t d = 0;
  std::string description;

  friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

struct VerificationReport {
  std::string suite;
  std::uint32_t range_lo = 0;
  std::uint32_t range_hi = 0;
  std::vector<CheckEntry> checks;
  std::vector<Anomaly> anomalies;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  /// No failed checks and no anomalies.
  bool ok() const { return failures() == 0 && anomalies.empty(); }
  /// Failed checks, in report order.
  std::vector<CheckEntry> failed() const;

  void add(std::uint32_t d, std::string claim, std::string left, std::string right, bool pass,
           Severity severity = Severity::theorem);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Merges `other` into `into`, widening the range.
void append(VerificationReport& into, const VerificationReport& other);

/// O_d = O_{d-1} + A_d and O_d < 2^d; A_{d-2} <= A_d <= A_{d-1} + A_{d-2}
/// and A_{d-1} + A_{d-2} = O_{d-1} - O_{d-3} for d >= 4.
/// Requires max_d >= 4.
VerificationReport check_lemma_bounds(const CountTable& t);

/// O_1 = O_2 = 1, O nondecreasing, O_d <= O_{d-1} + O_{d-2} for d >= 3,
/// and the derived consequence O_d <= Fib_d. Requires max_d >= 3.
VerificationReport check_sub_fibonacci(const CountTable& t);

/// Last multiplicity of the range over which ratio monotonicity was observed.
inline constexpr std::uint32_t kObservedRatioRange = 60;

/// With exact rationals: 1 < O_d/O_{d-1} < 2 for d >= 3; both quotient
/// inequalities for d >= 4; strict decrease and non-increase of O_d/O_{d-1}
/// from d = 6 on (observations); no two consecutive ratios above the golden
/// ratio. Requires max_d >= 6.
VerificationReport check_ratios(const CountTable& t);

struct ReferenceEntry {
  std::uint32_t d = 0;
  Count value = 0;
  /// Known misprint: a mismatch here is an anomaly, not a failure.
  bool flagged = false;
  std::string note;
};

/// The published O_d for 21 <= d <= 60, verbatim, with the d = 35 entry
/// (printed as 5255, below O_34) flagged.
const std::vector<ReferenceEntry>& published_table();

/// Compares computed O_d with the reference entries inside the table's
/// range. Mismatches at flagged entries become anomalies together with a
/// check that the computed value lies in [O_{d-1}, O_{d-1} + O_{d-2}].
VerificationReport compare_reference(const CountTable& t, const std::vector<ReferenceEntry>& reference);

/// count_M against oracle_count_M on p <= max_p, n <= max_n, k <= max_k,
/// d <= max_d, plus the one-variable closed form (n, k, d <= 10) and the
/// k = 0 summation identity for 2 <= p <= max_p.
struct OracleGrid {
  std::uint32_t max_p = 4;
  std::uint32_t max_n = 8;
  std::uint32_t max_k = 4;
  std::uint32_t max_d = 10;
};
VerificationReport check_oracle_grid(LinussonCounter& counter, const OracleGrid& grid = {});

/// For every O-sequence of multiplicity <= max_d and every p in
/// [a_1, a_1 + extra_vars], the lex sous-escalier is closed under division
/// and has the sequence as its degree counts.
VerificationReport check_lex_structure(std::uint32_t max_d = 10, std::uint32_t extra_vars = 1);

/// Decomposition bijection for p in `vars`, d <= max_d: each M in
/// M(p, n, k, d) with k > 0 splits into M1 in M(p-1, n, i, d-j) and M2 in
/// M(p, i-1, k-1, j), recomposes to M, and the tallies per (i, j) equal the
/// corresponding products of counts.
VerificationReport check_bijection(LinussonCounter& counter, std::vector<std::uint32_t> vars = {2, 3},
                                   std::uint32_t max_d = 8);

}  // namespace oseq
