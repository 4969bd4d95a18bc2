#include "oseq/analysis.hpp"

#include <map>
#include <tuple>

#include "oseq/lexseg.hpp"

namespace oseq {
namespace {

std::string str(const BigInt& v) { return v.str(); }
std::string str(Count v) { return std::to_string(v); }

BigInt big(Count v) { return BigInt(v); }

Rational ratio(Count num, Count den) { return Rational(big(num), big(den)); }

void require_range(const CountTable& t, std::uint32_t min_d, const char* suite) {
  if (t.max_d < min_d || t.O.size() != t.max_d || t.A.size() != t.max_d) {
    throw InvalidArgument(std::string(suite) + ": needs a count table covering 1.." + std::to_string(min_d) +
                          ", got max_d = " + std::to_string(t.max_d));
  }
}

}  // namespace

std::string to_string(const Rational& r) {
  return str(boost::multiprecision::numerator(r)) + "/" + str(boost::multiprecision::denominator(r));
}

bool exceeds_golden_ratio(const Rational& r) { return r * r > r + 1; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

std::vector<CheckEntry> VerificationReport::failed() const {
  std::vector<CheckEntry> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c);
  }
  return out;
}

void VerificationReport::add(std::uint32_t d, std::string claim, std::string left, std::string right, bool pass,
                             Severity severity) {
  checks.push_back({d, std::move(claim), std::move(left), std::move(right), pass, severity});
}

void append(VerificationReport& into, const VerificationReport& other) {
  if (into.checks.empty() && into.anomalies.empty()) {
    into.range_lo = other.range_lo;
    into.range_hi = other.range_hi;
  } else {
    into.range_lo = std::min(into.range_lo, other.range_lo);
    into.range_hi = std::max(into.range_hi, other.range_hi);
  }
  into.checks.insert(into.checks.end(), other.checks.begin(), other.checks.end());
  into.anomalies.insert(into.anomalies.end(), other.anomalies.begin(), other.anomalies.end());
  into.warnings.insert(into.warnings.end(), other.warnings.begin(), other.warnings.end());
}

VerificationReport check_lemma_bounds(const CountTable& t) {
  require_range(t, 4, "check_lemma_bounds");
  VerificationReport r{"lemmas", 1, t.max_d, {}, {}, {}};
  for (std::uint32_t d = 1; d <= t.max_d; ++d) {
    const BigInt o = big(t.o(d));
    if (d >= 2) {
      const BigInt rhs = big(t.o(d - 1)) + big(t.a(d));
      r.add(d, "O_d = O_{d-1} + A_d", str(o), str(rhs), o == rhs);
    }
    const BigInt pow2 = BigInt(1) << d;
    r.add(d, "O_d < 2^d", str(o), str(pow2), o < pow2);
    if (d >= 4) {
      const BigInt a = big(t.a(d));
      const BigInt a1 = big(t.a(d - 1));
      const BigInt a2 = big(t.a(d - 2));
      r.add(d, "A_{d-2} <= A_d", str(a2), str(a), a2 <= a);
      r.add(d, "A_d <= A_{d-1} + A_{d-2}", str(a), str(a1 + a2), a <= a1 + a2);
      const BigInt diff = big(t.o(d - 1)) - big(t.o(d - 3));
      r.add(d, "A_{d-1} + A_{d-2} = O_{d-1} - O_{d-3}", str(a1 + a2), str(diff), a1 + a2 == diff);
    }
  }
  return r;
}

VerificationReport check_sub_fibonacci(const CountTable& t) {
  require_range(t, 3, "check_sub_fibonacci");
  VerificationReport r{"fibonacci", 1, t.max_d, {}, {}, {}};
  r.add(1, "O_1 = 1", str(t.o(1)), "1", t.o(1) == 1);
  r.add(2, "O_2 = 1", str(t.o(2)), "1", t.o(2) == 1);
  BigInt fib_prev = 0;  // Fib_0
  BigInt fib = 1;       // Fib_1
  for (std::uint32_t d = 1; d <= t.max_d; ++d) {
    const BigInt o = big(t.o(d));
    if (d >= 2) {
      r.add(d, "O_{d-1} <= O_d", str(t.o(d - 1)), str(o), big(t.o(d - 1)) <= o);
      const BigInt next = fib + fib_prev;
      fib_prev = fib;
      fib = next;
    }
    if (d >= 3) {
      const BigInt sum = big(t.o(d - 1)) + big(t.o(d - 2));
      r.add(d, "O_d <= O_{d-1} + O_{d-2}", str(o), str(sum), o <= sum);
    }
    r.add(d, "O_d <= Fib_d (derived consequence)", str(o), str(fib), o <= fib);
  }
  return r;
}

VerificationReport check_ratios(const CountTable& t) {
  require_range(t, 6, "check_ratios");
  VerificationReport r{"ratios", 3, t.max_d, {}, {}, {}};
  auto o_ratio = [&](std::uint32_t d) { return ratio(t.o(d), t.o(d - 1)); };
  auto a_ratio = [&](std::uint32_t d) { return ratio(t.a(d), t.o(d - 1)); };
  for (std::uint32_t d = 3; d <= t.max_d; ++d) {
    const Rational q = o_ratio(d);
    r.add(d, "1 < O_d/O_{d-1}", "1", to_string(q), q > 1);
    r.add(d, "O_d/O_{d-1} < 2", to_string(q), "2", q < 2);
    if (d >= 4) {
      const Rational lhs_a = a_ratio(d);
      const Rational rhs_a = a_ratio(d - 1) + a_ratio(d - 2);
      r.add(d, "A_d/O_{d-1} <= A_{d-1}/O_{d-2} + A_{d-2}/O_{d-3}", to_string(lhs_a), to_string(rhs_a),
            lhs_a <= rhs_a);
      const Rational rhs_o = o_ratio(d - 1) + o_ratio(d - 2);
      r.add(d, "O_d/O_{d-1} <= O_{d-1}/O_{d-2} + O_{d-2}/O_{d-3}", to_string(q), to_string(rhs_o), q <= rhs_o);
      const bool both_above = exceeds_golden_ratio(o_ratio(d - 1)) && exceeds_golden_ratio(q);
      r.add(d, "not both O_{d-1}/O_{d-2} and O_d/O_{d-1} exceed the golden ratio", to_string(o_ratio(d - 1)),
            to_string(q), !both_above);
    }
    if (d >= 7) {
      const Rational prev = o_ratio(d - 1);
      const bool strict = q < prev;
      const bool weak = q <= prev;
      r.add(d, "O_d/O_{d-1} < O_{d-1}/O_{d-2} (strict decrease from d = 6)", to_string(q), to_string(prev),
            strict || d > kObservedRatioRange, Severity::observation);
      r.add(d, "O_d/O_{d-1} <= O_{d-1}/O_{d-2} (non-increase from d = 6)", to_string(q), to_string(prev),
            weak || d > kObservedRatioRange, Severity::observation);
      if (d > kObservedRatioRange && !strict) {
        r.warnings.push_back("d = " + std::to_string(d) + ": ratio " + to_string(q) +
                             " does not strictly decrease beyond the observed range");
      }
    }
  }
  return r;
}

const std::vector<ReferenceEntry>& published_table() {
  static const std::vector<ReferenceEntry> table = [] {
    const Count values[] = {1416,    1882,    2490,    3279,    4299,    5612,    7297,    9451,
                            12195,   15683,   20099,   25674,   32696,   41514,   5255,    66361,
                            83561,   104951,  131491,  164347,  204936,  254979,  316552,  392166,
                            484853,  598255,  736759,  905635,  1111194, 1360997, 1664090, 2031266,
                            2475404, 3011853, 3658861, 4438118, 5375378, 6501163, 7851624, 9469536};
    std::vector<ReferenceEntry> out;
    for (std::uint32_t i = 0; i < std::size(values); ++i) {
      ReferenceEntry e{21 + i, values[i], false, {}};
      if (e.d == 35) {
        e.flagged = true;
        e.note = "printed 5255 is below O_34 = 41514, contradicting O_d = O_{d-1} + A_d; presumed misprint";
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return table;
}

VerificationReport compare_reference(const CountTable& t, const std::vector<ReferenceEntry>& reference) {
  VerificationReport r{"table", 0, 0, {}, {}, {}};
  bool first = true;
  for (const auto& ref : reference) {
    if (ref.d < 1 || ref.d > t.max_d) continue;
    if (first) {
      r.range_lo = r.range_hi = ref.d;
      first = false;
    }
    r.range_lo = std::min(r.range_lo, ref.d);
    r.range_hi = std::max(r.range_hi, ref.d);
    const Count computed = t.o(ref.d);
    if (computed == ref.value) {
      r.add(ref.d, "computed O_d = reference", str(computed), str(ref.value), true);
    } else if (ref.flagged) {
      r.anomalies.push_back({ref.d, "reference value " + str(ref.value) + " differs from computed " + str(computed) +
                                        (ref.note.empty() ? "" : "; " + ref.note)});
      if (ref.d >= 3) {
        const Count lo = t.o(ref.d - 1);
        const BigInt hi = big(t.o(ref.d - 1)) + big(t.o(ref.d - 2));
        r.add(ref.d, "O_{d-1} <= computed O_d <= O_{d-1} + O_{d-2}", str(computed),
              "[" + str(lo) + ", " + str(hi) + "]", computed >= lo && big(computed) <= hi);
      }
    } else {
      r.add(ref.d, "computed O_d = reference", str(computed), str(ref.value), false);
    }
  }
  return r;
}

VerificationReport check_oracle_grid(LinussonCounter& counter, const OracleGrid& grid) {
  VerificationReport r{"oracle", 1, grid.max_d, {}, {}, {}};
  for (std::uint32_t p = 1; p <= grid.max_p; ++p) {
    for (std::uint32_t n = 0; n <= grid.max_n; ++n) {
      for (std::uint32_t k = 0; k <= grid.max_k; ++k) {
        for (std::uint32_t d = 1; d <= grid.max_d; ++d) {
          const Count formula = counter.count_M(p, n, k, d);
          const Count oracle = oracle_count_M(p, n, k, d);
          const std::string key =
              "(" + str(p) + "," + str(n) + "," + str(k) + "," + str(d) + ")";
          r.add(d, "count_M" + key + " = oracle", str(formula), str(oracle), formula == oracle);
        }
      }
    }
  }
  // one-variable closed form
  for (std::uint32_t n = 0; n <= 10; ++n) {
    for (std::uint32_t k = 0; k <= 10; ++k) {
      for (std::uint32_t d = 1; d <= 10; ++d) {
        const Count v = counter.count_M(1, n, k, d);
        const Count expected = (k == d - 1 && n >= d - 1) ? 1 : 0;
        r.add(d, "O(1," + str(n) + "," + str(k) + "," + str(d) + ") closed form", str(v), str(expected),
              v == expected);
      }
    }
  }
  // k = 0 summation identity
  for (std::uint32_t p = 2; p <= grid.max_p; ++p) {
    for (std::uint32_t n = 0; n <= grid.max_n; ++n) {
      for (std::uint32_t d = 1; d <= grid.max_d; ++d) {
        Count sum = 0;
        for (std::uint32_t k = 0; k < d; ++k) sum = checked_add(sum, counter.count_M(p - 1, n, k, d));
        const Count v = counter.count_M(p, n, 0, d);
        r.add(d, "O(" + str(p) + "," + str(n) + ",0," + str(d) + ") = sum_k O(p-1,n,k,d)", str(v), str(sum),
              v == sum);
      }
    }
  }
  return r;
}

VerificationReport check_lex_structure(std::uint32_t max_d, std::uint32_t extra_vars) {
  VerificationReport r{"lexseg", 1, max_d, {}, {}, {}};
  for (std::uint32_t d = 1; d <= max_d; ++d) {
    for (const OSequence& h : collect_all(d)) {
      const std::uint32_t a1 = h.size() > 1 ? h[1] : 1;
      for (std::uint32_t p = a1; p <= a1 + extra_vars; ++p) {
        const OrderIdeal m = sous_escalier(h, p);
        const auto counts = m.degree_counts();
        const std::string tag = "(" + h.to_string() + ") in " + str(p) + " vars";
        r.add(d, "sous_escalier" + tag + " closed under division", str(m.size()), "closed",
              m.is_closed_under_division());
        r.add(d, "degree counts of sous_escalier" + tag + " reproduce h",
              OSequence::try_make(counts) ? OSequence::try_make(counts)->to_string() : "invalid", h.to_string(),
              counts == h.values());
      }
    }
  }
  return r;
}

VerificationReport check_bijection(LinussonCounter& counter, std::vector<std::uint32_t> vars, std::uint32_t max_d) {
  VerificationReport r{"bijection", 1, max_d, {}, {}, {}};
  // (p, n, k, d, i, j) -> number of M observed with that split
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, Count>
      tally;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, Count> members;

  for (const std::uint32_t p : vars) {
    if (p < 2) throw InvalidArgument("check_bijection: p must be >= 2");
    for (std::uint32_t d = 1; d <= max_d; ++d) {
      for (const OSequence& h : collect_all(d)) {
        if (h.size() > 1 && h[1] > p) continue;
        const OrderIdeal m = sous_escalier(h, p);
        const Classification c = classify(m, p);
        const std::string tag = "(" + h.to_string() + ") p=" + str(p);
        for (std::uint32_t n = c.socle_degree; n < d; ++n) {
          ++members[{p, n, c.max_growth, d}];
        }
        if (c.max_growth == 0) continue;
        const std::uint32_t k = c.max_growth;

        const Decomposition parts = decompose(m, p);
        const OrderIdeal& m1 = parts.without_last;
        const OrderIdeal& m2 = parts.quotient;
        const auto j = static_cast<std::uint32_t>(m2.size());
        r.add(d, "M1 of " + tag + " is a lex sous-escalier", str(m1.size()), "lex", m1.is_lex_segment());
        r.add(d, "M2 of " + tag + " is a lex sous-escalier", str(m2.size()), "lex", m2.is_lex_segment());
        r.add(d, "0 < |M2| < d for " + tag, str(j), str(d), j > 0 && j < d);
        r.add(d, "recompose(decompose(M)) = M for " + tag, str(recompose(parts).size()), str(m.size()),
              recompose(parts) == m);
        if (j == 0 || j >= d) continue;
        const Classification c1 = classify(m1, p - 1);
        const Classification c2 = classify(m2, p);
        const std::uint32_t i = c1.max_growth;
        r.add(d, "k <= i for M1 of " + tag, str(k), str(i), k <= i);
        r.add(d, "M2 of " + tag + " has maximal growth through k-1", str(c2.max_growth), str(k - 1),
              c2.max_growth == k - 1);
        r.add(d, "socle(M2) <= i-1 for " + tag, str(c2.socle_degree), str(i) + "-1", c2.socle_degree + 1 <= i);
        for (std::uint32_t n = c.socle_degree; n < d; ++n) {
          r.add(d, "i <= n and socle(M1) <= n for " + tag + " n=" + str(n), str(i) + "," + str(c1.socle_degree),
                str(n), i <= n && c1.socle_degree <= n);
          ++tally[{p, n, k, d, i, j}];
        }
      }
    }
  }

  // every summand of the double sum equals the number of M splitting as (i, j)
  for (const std::uint32_t p : vars) {
    for (std::uint32_t d = 1; d <= max_d; ++d) {
      for (std::uint32_t n = 0; n < d; ++n) {
        for (std::uint32_t k = 1; k <= n; ++k) {
          Count total = 0;
          for (std::uint32_t j = 1; j < d; ++j) {
            for (std::uint32_t i = k; i <= n; ++i) {
              const Count product = checked_mul(counter.count_M(p - 1, n, i, d - j), counter.count_M(p, i - 1, k - 1, j));
              const auto it = tally.find({p, n, k, d, i, j});
              const Count seen = it == tally.end() ? 0 : it->second;
              if (product != 0 || seen != 0) {
                r.add(d,
                      "splits of M(" + str(p) + "," + str(n) + "," + str(k) + "," + str(d) + ") at i=" + str(i) +
                          ", j=" + str(j) + " = O(p-1,n,i,d-j) O(p,i-1,k-1,j)",
                      str(seen), str(product), seen == product);
              }
              total += product;
            }
          }
          const auto it = members.find({p, n, k, d});
          const Count seen = it == members.end() ? 0 : it->second;
          r.add(d, "|M(" + str(p) + "," + str(n) + "," + str(k) + "," + str(d) + ")| = formula sum", str(seen),
                str(total), seen == total && total == counter.count_M(p, n, k, d));
        }
      }
    }
  }
  return r;
}

}  // namespace oseq
