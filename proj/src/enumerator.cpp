#include "oseq/enumerator.hpp"

#include <algorithm>
#include <queue>

namespace oseq {
namespace {

// Whether the last entry of `seq` (length >= 2) can be raised by one.
// Position 1 is unconstrained; beyond that Macaulay's bound applies.
bool can_increment(std::span<const Entry> seq) {
  const std::size_t s = seq.size() - 1;
  if (s == 1) return true;
  return Count{seq[s]} + 1 <= growth_bound(seq[s - 1], static_cast<std::uint32_t>(s - 1));
}

// A child described by its parent, without materializing it.
struct ChildView {
  std::span<const Entry> parent;
  Growth kind;

  std::size_t size() const { return kind == Growth::append_two ? parent.size() + 1 : parent.size(); }
  Entry operator[](std::size_t i) const {
    if (kind == Growth::append_two) return i < parent.size() ? parent[i] : Entry{2};
    return i + 1 < parent.size() ? parent[i] : static_cast<Entry>(parent[i] + 1);
  }
  void write_to(std::vector<Entry>& out) const {
    out.assign(parent.begin(), parent.end());
    if (kind == Growth::append_two) {
      out.push_back(2);
    } else {
      ++out.back();
    }
  }
};

bool lex_less(const ChildView& a, const ChildView& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

void check_multiplicity(std::uint32_t d, const char* op) {
  if (d < 1) throw InvalidArgument(std::string(op) + ": multiplicity must be >= 1");
  if (d > kMaxEnumerableMultiplicity) {
    throw InvalidArgument(std::string(op) + ": multiplicity " + std::to_string(d) +
                          " exceeds enumerable limit " + std::to_string(kMaxEnumerableMultiplicity));
  }
}

}  // namespace

void SequenceBucket::push_back(std::span<const Entry> seq) {
  data_.insert(data_.end(), seq.begin(), seq.end());
  offsets_.push_back(data_.size());
}

void SequenceBucket::clear() {
  data_.clear();
  offsets_.assign(1, 0);
}

void SequenceBucket::swap(SequenceBucket& other) noexcept {
  data_.swap(other.data_);
  offsets_.swap(other.offsets_);
}

std::vector<OSequence> SequenceBucket::to_sequences() const {
  std::vector<OSequence> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto seq = (*this)[i];
    out.emplace_back(std::vector<OSequence::value_type>(seq.begin(), seq.end()));
  }
  return out;
}

std::vector<Successor> successors(const OSequence& seq) {
  if (seq.back() < 2) {
    throw InvalidArgument("successors: last value of (" + seq.to_string() + ") must be >= 2");
  }
  std::vector<Successor> out;
  auto appended = seq.values();
  appended.push_back(2);
  out.push_back({OSequence(std::move(appended)), Growth::append_two});
  auto raised = seq.values();
  ++raised.back();
  if (auto child = OSequence::try_make(std::move(raised))) {
    out.push_back({std::move(*child), Growth::increment});
  }
  return out;
}

SlidingWindow::SlidingWindow() : d_(4) {
  const Entry one_two[] = {1, 2};
  const Entry one_three[] = {1, 3};
  dm1_.push_back(one_two);
  cur_.push_back(one_three);
}

void SlidingWindow::advance() {
  SequenceBucket dropped;
  advance(dropped);
}

void SlidingWindow::advance(SequenceBucket& evicted) {
  if (d_ + 1 > kMaxEnumerableMultiplicity) {
    throw InvalidArgument("sliding window cannot pass multiplicity " +
                          std::to_string(kMaxEnumerableMultiplicity));
  }
  // Both sources are already sorted and each child map preserves order, so
  // a two-way merge yields the new bucket in lexicographic order.
  scratch_.clear();
  std::vector<Entry> buf;
  std::size_t i = 0;
  std::size_t j = 0;
  auto next_increment = [&]() {
    while (j < cur_.size() && !can_increment(cur_[j])) ++j;
  };
  next_increment();
  while (i < dm1_.size() || j < cur_.size()) {
    const bool take_append =
        j >= cur_.size() ||
        (i < dm1_.size() &&
         lex_less(ChildView{dm1_[i], Growth::append_two}, ChildView{cur_[j], Growth::increment}));
    if (take_append) {
      ChildView{dm1_[i++], Growth::append_two}.write_to(buf);
    } else {
      ChildView{cur_[j++], Growth::increment}.write_to(buf);
      next_increment();
    }
    scratch_.push_back(buf);
  }
  // rotate: (dm2, dm1, cur) <- (dm1, cur, new); old dm2 is evicted
  evicted.clear();
  evicted.swap(dm2_);
  dm2_.swap(dm1_);
  dm1_.swap(cur_);
  cur_.swap(scratch_);
  ++d_;
}

void enumerate_last_gt1(std::uint32_t d, const SequenceVisitor& visit) {
  check_multiplicity(d, "enumerate_last_gt1");
  if (d < 3) return;
  SlidingWindow w;
  if (d == 3) {
    for (std::size_t i = 0; i < w.one_back().size(); ++i) visit(w.one_back()[i]);
    return;
  }
  while (w.multiplicity() < d) w.advance();
  for (std::size_t i = 0; i < w.current().size(); ++i) visit(w.current()[i]);
}

void enumerate_all(std::uint32_t d, const SequenceVisitor& visit) {
  check_multiplicity(d, "enumerate_all");
  // buckets[m] holds the last-value > 1 sequences of multiplicity m
  std::vector<SequenceBucket> buckets(d + 1);
  if (d == 3) {
    buckets[3] = SlidingWindow().one_back();
  } else if (d >= 4) {
    SlidingWindow w;
    while (w.multiplicity() < d) {
      SequenceBucket evicted;
      w.advance(evicted);
      const std::uint32_t m = w.multiplicity() - 3;
      if (m >= 3) buckets[m].swap(evicted);
    }
    // the window still holds the three most recent multiplicities
    const std::uint32_t top = w.multiplicity();
    if (top - 2 >= 3) buckets[top - 2] = w.two_back();
    buckets[top - 1] = w.one_back();
    buckets[top] = w.current();
  }

  // Stream m contributes bucket[m] padded with d - m trailing ones. Every
  // stream is sorted, so a k-way merge gives the global lexicographic order.
  struct Cursor {
    std::uint32_t m;
    std::size_t index;
  };
  auto at = [&](const Cursor& c, std::size_t i) -> Entry {
    const auto seq = buckets[c.m][c.index];
    return i < seq.size() ? seq[i] : Entry{1};
  };
  auto greater = [&](const Cursor& a, const Cursor& b) {
    const std::size_t len_a = buckets[a.m][a.index].size() + (d - a.m);
    const std::size_t len_b = buckets[b.m][b.index].size() + (d - b.m);
    const std::size_t n = std::min(len_a, len_b);
    for (std::size_t i = 0; i < n; ++i) {
      const Entry x = at(a, i);
      const Entry y = at(b, i);
      if (x != y) return x > y;
    }
    return len_a > len_b;
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(greater)> heap(greater);
  for (std::uint32_t m = 3; m <= d; ++m) {
    if (!buckets[m].empty()) heap.push({m, 0});
  }

  // The all-ones sequence is the lexicographic minimum.
  std::vector<Entry> buf(d, 1);
  visit(buf);
  while (!heap.empty()) {
    const Cursor c = heap.top();
    heap.pop();
    const auto seq = buckets[c.m][c.index];
    buf.assign(seq.begin(), seq.end());
    buf.resize(seq.size() + (d - c.m), 1);
    visit(buf);
    if (c.index + 1 < buckets[c.m].size()) heap.push({c.m, c.index + 1});
  }
}

namespace {
std::vector<OSequence> collect(void (*run)(std::uint32_t, const SequenceVisitor&), std::uint32_t d) {
  std::vector<OSequence> out;
  run(d, [&](std::span<const Entry> seq) {
    out.emplace_back(std::vector<OSequence::value_type>(seq.begin(), seq.end()));
  });
  return out;
}
}  // namespace

std::vector<OSequence> collect_last_gt1(std::uint32_t d) { return collect(&enumerate_last_gt1, d); }
std::vector<OSequence> collect_all(std::uint32_t d) { return collect(&enumerate_all, d); }

CountTable o_table(std::uint32_t max_d) {
  if (max_d < 1) throw InvalidArgument("o_table: max_d must be >= 1");
  if (max_d > kMaxEnumerableMultiplicity) {
    throw InvalidArgument("o_table: max_d " + std::to_string(max_d) + " exceeds enumerable limit " +
                          std::to_string(kMaxEnumerableMultiplicity));
  }
  CountTable t;
  t.max_d = max_d;
  t.O = {1, 1, 2, 3};
  t.A = {0, 0, 1, 1};
  t.O.resize(std::min<std::size_t>(max_d, 4));
  t.A.resize(std::min<std::size_t>(max_d, 4));
  SlidingWindow w;
  for (std::uint32_t d = 5; d <= max_d; ++d) {
    w.advance();
    const Count a = w.current().size();
    t.A.push_back(a);
    t.O.push_back(checked_add(t.O.back(), a, "o_table"));
  }
  return t;
}

}  // namespace oseq
