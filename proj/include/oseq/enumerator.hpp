#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oseq/count.hpp"
#include "oseq/macaulay.hpp"

namespace oseq {

// Compact storage for enumerated sequences. Entries of an O-sequence of
// multiplicity d are at most d - 1, so a byte suffices for d <= 255.
using Entry = std::uint8_t;
inline constexpr std::uint32_t kMaxEnumerableMultiplicity = 255;

using SequenceVisitor = std::function<void(std::span<const Entry>)>;

/// Flat arena of variable-length sequences.
class SequenceBucket {
 public:
  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  std::span<const Entry> operator[](std::size_t i) const {
    return {data_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  void push_back(std::span<const Entry> seq);
  void clear();
  void swap(SequenceBucket& other) noexcept;

  std::vector<OSequence> to_sequences() const;

 private:
  std::vector<Entry> data_;
  std::vector<std::size_t> offsets_{0};
};

/// O_d and A_d for d = 1..max_d. Indices are 1-based through o(d) and a(d).
struct CountTable {
  std::uint32_t max_d = 0;
  std::vector<Count> O;  // O[d - 1] = O_d
  std::vector<Count> A;  // A[d - 1] = A_d

  Count o(std::uint32_t d) const { return O.at(d - 1); }
  Count a(std::uint32_t d) const { return A.at(d - 1); }
};

enum class Growth { append_two, increment };

struct Successor {
  OSequence sequence;
  Growth kind;
  /// Multiplicity added to the parent: 2 for append_two, 1 for increment.
  std::uint32_t delta() const { return kind == Growth::append_two ? 2 : 1; }
};

/// Children of an O-sequence whose last value is >= 2: the parent with a 2
/// appended, and the parent with its last entry raised by one when that
/// still satisfies Macaulay's bound. Throws InvalidArgument when the last
/// value is 1.
std::vector<Successor> successors(const OSequence& seq);

/// Three rotating buckets holding the O-sequences with last value > 1 of
/// multiplicities d - 2, d - 1 and d. Each bucket is kept in lexicographic
/// order. The initial state has d = 4 with buckets {}, {(1,2)}, {(1,3)}.
class SlidingWindow {
 public:
  SlidingWindow();

  std::uint32_t multiplicity() const noexcept { return d_; }
  const SequenceBucket& two_back() const noexcept { return dm2_; }
  const SequenceBucket& one_back() const noexcept { return dm1_; }
  const SequenceBucket& current() const noexcept { return cur_; }

  /// Moves to multiplicity d + 1, building the new current bucket from
  /// two_back (append 2) and one_back (increment last).
  void advance();

  /// Like advance(), but hands the bucket that falls out of the window to
  /// `evicted` instead of discarding it.
  void advance(SequenceBucket& evicted);

 private:
  std::uint32_t d_;
  SequenceBucket dm2_, dm1_, cur_;
  SequenceBucket scratch_;
};

/// Streams the A_d O-sequences of multiplicity d whose last value is > 1,
/// in lexicographic order.
void enumerate_last_gt1(std::uint32_t d, const SequenceVisitor& visit);

/// Streams all O_d O-sequences of multiplicity d in lexicographic order.
void enumerate_all(std::uint32_t d, const SequenceVisitor& visit);

std::vector<OSequence> collect_last_gt1(std::uint32_t d);
std::vector<OSequence> collect_all(std::uint32_t d);

/// O_d and A_d for 1 <= d <= max_d via the sliding window.
CountTable o_table(std::uint32_t max_d);

}  // namespace oseq
