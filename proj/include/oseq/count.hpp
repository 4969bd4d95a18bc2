#pragma once

#include <cstdint>
#include <string>

#include "oseq/errors.hpp"

namespace oseq {

// Exact counts. Every count this library produces for multiplicity d is
// below 2^d, so 64 bits cover d <= 63; any overflow is reported, never wrapped.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b, const char* where = "addition") {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError(std::string("count overflow in ") + where);
  }
  return r;
}

inline Count checked_mul(Count a, Count b, const char* where = "multiplication") {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError(std::string("count overflow in ") + where);
  }
  return r;
}

}  // namespace oseq
