#pragma once

#include "metagrowth/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace metagrowth {

enum class SequenceKind { Graded, Filtration };

/// Exact integer sequence indexed from 1: graded dimensions a_n or filtration
/// values gamma(n).
struct DimSequence {
  SequenceKind kind = SequenceKind::Graded;
  std::vector<BigInt> values;  // values[k] holds term k + 1

  std::size_t size() const { return values.size(); }
  const BigInt& at(std::size_t n) const {
    if (n == 0 || n > values.size()) throw std::out_of_range("DimSequence index out of range");
    return values[n - 1];
  }
  bool operator==(const DimSequence&) const = default;
};

}  // namespace metagrowth
