#include "oseq/lexseg.hpp"

#include <algorithm>
#include <numeric>

namespace oseq {
namespace {

void require_same_vars(const Term& a, const Term& b) {
  if (a.vars() != b.vars()) {
    throw InvalidArgument("lex_compare: terms over " + std::to_string(a.vars()) + " and " +
                          std::to_string(b.vars()) + " variables");
  }
}

// Emits degree-`remaining` completions of exponents[0..var] in ascending lex
// order: the highest variable's exponent is the outermost ascending loop.
void fill_ascending(std::vector<std::uint32_t>& exps, std::uint32_t var, std::uint32_t remaining,
                    std::size_t limit, std::vector<Term>& out) {
  if (out.size() >= limit) return;
  if (var == 0) {
    exps[0] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (std::uint32_t e = 0; e <= remaining && out.size() < limit; ++e) {
    exps[var] = e;
    fill_ascending(exps, var - 1, remaining - e, limit, out);
  }
  exps[var] = 0;
}

}  // namespace

std::uint32_t Term::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0u); }

std::string Term::to_string() const {
  std::string out;
  for (std::uint32_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const Term& a, const Term& b) {
  require_same_vars(a, b);
  for (std::uint32_t i = a.vars(); i-- > 0;) {
    if (a.exponents()[i] != b.exponents()[i]) return a.exponents()[i] <=> b.exponents()[i];
  }
  return std::strong_ordering::equal;
}

bool degree_lex_less(const Term& a, const Term& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return lex_compare(a, b) < 0;
}

std::uint32_t min_var(const Term& t) {
  for (std::uint32_t i = 0; i < t.vars(); ++i) {
    if (t.exponents()[i] > 0) return i + 1;
  }
  throw InvalidArgument("min_var: the constant term has no minimal variable");
}

std::vector<Term> terms_of_degree(std::uint32_t p, std::uint32_t t, std::size_t limit) {
  if (p < 1) throw InvalidArgument("terms_of_degree: need at least one variable");
  std::vector<Term> out;
  std::vector<std::uint32_t> exps(p, 0);
  fill_ascending(exps, p - 1, t, limit, out);
  return out;
}

// OrderIdeal

OrderIdeal::OrderIdeal(std::uint32_t vars, std::vector<Term> terms) : vars_(vars), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.vars() != vars_) {
      throw InvalidArgument("order ideal over " + std::to_string(vars_) + " variables given term " +
                            t.to_string() + " over " + std::to_string(t.vars()));
    }
  }
  std::sort(terms_.begin(), terms_.end(), degree_lex_less);
  terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
}

bool OrderIdeal::contains(const Term& t) const {
  if (t.vars() != vars_) return false;
  return std::binary_search(terms_.begin(), terms_.end(), t, degree_lex_less);
}

std::vector<std::uint32_t> OrderIdeal::degree_counts() const {
  std::vector<std::uint32_t> counts;
  for (const Term& t : terms_) {
    const auto deg = t.degree();
    if (counts.size() <= deg) counts.resize(deg + 1, 0);
    ++counts[deg];
  }
  return counts;
}

bool OrderIdeal::is_closed_under_division() const {
  for (const Term& t : terms_) {
    for (std::uint32_t i = 0; i < vars_; ++i) {
      if (t.exponents()[i] == 0) continue;
      auto exps = t.exponents();
      --exps[i];
      if (!contains(Term(std::move(exps)))) return false;
    }
  }
  return true;
}

bool OrderIdeal::is_lex_segment() const {
  if (!is_closed_under_division()) return false;
  const auto counts = degree_counts();
  for (std::uint32_t deg = 0; deg < counts.size(); ++deg) {
    const auto expected = terms_of_degree(vars_, deg, counts[deg]);
    if (expected.size() != counts[deg]) return false;
    for (const Term& t : expected) {
      if (!contains(t)) return false;
    }
  }
  return true;
}

OrderIdeal sous_escalier(const OSequence& h, std::uint32_t p) {
  if (h.size() > 1 && h[1] > p) {
    throw CapacityError("sous_escalier: (" + h.to_string() + ") needs at least " + std::to_string(h[1]) +
                        " variables, got " + std::to_string(p));
  }
  if (p < 1) throw CapacityError("sous_escalier: need at least one variable");
  std::vector<Term> terms;
  for (std::uint32_t deg = 0; deg < h.size(); ++deg) {
    auto segment = terms_of_degree(p, deg, h[deg]);
    if (segment.size() < h[deg]) {
      throw CapacityError("sous_escalier: only " + std::to_string(segment.size()) + " terms of degree " +
                          std::to_string(deg) + " in " + std::to_string(p) + " variables");
    }
    terms.insert(terms.end(), std::make_move_iterator(segment.begin()), std::make_move_iterator(segment.end()));
  }
  return OrderIdeal(p, std::move(terms));
}

Decomposition decompose(const OrderIdeal& m, std::uint32_t p) {
  if (p < 2) throw InvalidArgument("decompose: needs p >= 2, got " + std::to_string(p));
  if (m.vars() != p) {
    throw InvalidArgument("decompose: order ideal has " + std::to_string(m.vars()) + " variables, p = " +
                          std::to_string(p));
  }
  std::vector<Term> without_last;
  std::vector<Term> quotient;
  for (const Term& t : m.terms()) {
    auto exps = t.exponents();
    if (exps[p - 1] == 0) {
      exps.pop_back();
      without_last.emplace_back(std::move(exps));
    } else {
      --exps[p - 1];
      quotient.emplace_back(std::move(exps));
    }
  }
  return {OrderIdeal(p - 1, std::move(without_last)), OrderIdeal(p, std::move(quotient))};
}

OrderIdeal recompose(const Decomposition& parts) {
  const std::uint32_t p = parts.quotient.vars();
  if (parts.without_last.vars() + 1 != p) throw InvalidArgument("recompose: variable counts do not line up");
  std::vector<Term> terms;
  for (const Term& t : parts.without_last.terms()) {
    auto exps = t.exponents();
    exps.push_back(0);
    terms.emplace_back(std::move(exps));
  }
  for (const Term& t : parts.quotient.terms()) {
    auto exps = t.exponents();
    ++exps[p - 1];
    terms.emplace_back(std::move(exps));
  }
  return OrderIdeal(p, std::move(terms));
}

bool has_growth_profile(std::span<const std::uint32_t> values, std::uint32_t p, std::uint32_t k) {
  // Saturating at the largest value present is enough for equality tests.
  const Count ceiling = values.empty() ? 1 : *std::max_element(values.begin(), values.end());
  const std::size_t horizon = std::max<std::size_t>(values.size(), std::size_t{k} + 1);
  for (std::size_t i = 0; i < horizon; ++i) {
    const Count a = i < values.size() ? values[i] : 0;
    const Count full = binomial(std::int64_t{p} - 1 + static_cast<std::int64_t>(i), static_cast<std::int64_t>(i), ceiling);
    if (i <= k ? a != full : a >= full) return false;
  }
  return true;
}

Classification classify(const OrderIdeal& m, std::uint32_t p) {
  if (m.empty()) throw InvalidArgument("classify: empty order ideal");
  if (m.vars() != p) {
    throw InvalidArgument("classify: order ideal has " + std::to_string(m.vars()) + " variables, p = " +
                          std::to_string(p));
  }
  const auto counts = m.degree_counts();
  Classification c;
  c.multiplicity = m.size();
  c.socle_degree = static_cast<std::uint32_t>(counts.size() - 1);
  const Count ceiling = *std::max_element(counts.begin(), counts.end());
  std::uint32_t k = 0;
  while (k + 1 < counts.size() &&
         counts[k + 1] == binomial(std::int64_t{p} + k, std::int64_t{k} + 1, ceiling)) {
    ++k;
  }
  c.max_growth = k;
  return c;
}

Count oracle_count_M(std::uint32_t p, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
  if (p < 1 || d < 1) throw InvalidArgument("oracle_count_M: p and d must be >= 1");
  if (p > OracleLimits::max_p || n > OracleLimits::max_n || d > OracleLimits::max_d) {
    throw TooLargeError("oracle_count_M(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(k) +
                        "," + std::to_string(d) + ") exceeds oracle limits p<=4, n<=8, d<=12");
  }
  // Compositions of d - 1 into s parts (s <= n), prefixed by a_0 = 1,
  // enumerated by the bitmask of cut points.
  Count count = 0;
  const std::uint32_t rest = d - 1;
  std::vector<std::uint32_t> values;
  if (rest == 0) {
    values = {1};
    return has_growth_profile(values, p, k) ? 1 : 0;
  }
  for (std::uint32_t mask = 0; mask < (1u << (rest - 1)); ++mask) {
    values.assign(1, 1);
    std::uint32_t part = 1;
    for (std::uint32_t bit = 0; bit + 1 < rest; ++bit) {
      if (mask & (1u << bit)) {
        values.push_back(part);
        part = 1;
      } else {
        ++part;
      }
    }
    values.push_back(part);
    if (values.size() - 1 > n) continue;
    if (!is_o_sequence(std::span<const std::uint32_t>(values))) continue;
    if (has_growth_profile(values, p, k)) ++count;
  }
  return count;
}

}  // namespace oseq
