#pragma once

#include "metagrowth/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace metagrowth {

template <typename Key>
using SparseVector = std::map<Key, Rational>;

/// Incremental exact row reduction. Each stored row is keyed by its smallest
/// coordinate (the pivot) and has pivot coefficient 1; a new vector is reduced
/// on its leading coordinate until it vanishes or lands on a free pivot.
///
/// With tracking on, every row remembers its expression in terms of the
/// inserted vectors (numbered 0, 1, ... in insertion order), so a dependent
/// insertion yields an explicit vanishing combination.
template <typename Key>
class SparseEliminator {
 public:
  using Combination = std::map<std::size_t, Rational>;

  explicit SparseEliminator(bool trackCombinations = false) : track_(trackCombinations) {}

  struct Outcome {
    bool independent = false;
    /// Sum of coef * input[id] equal to zero; only set for dependent
    /// insertions when tracking.
    std::optional<Combination> dependency;
  };

  Outcome insert(SparseVector<Key> v) {
    const std::size_t id = inserted_++;
    Combination combo;
    if (track_) combo.emplace(id, 1);
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) break;
      const Rational f = lead->second;
      for (const auto& [k, c] : row->second.vec) addTerm(v, k, -f * c);
      if (track_) {
        for (const auto& [k, c] : row->second.combo) addTerm(combo, k, -f * c);
      }
    }
    if (v.empty()) {
      Outcome o;
      if (track_) o.dependency = std::move(combo);
      return o;
    }
    const Rational inv = 1 / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    if (track_) {
      for (auto& [k, c] : combo) c *= inv;
    }
    const Key pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    return {true, std::nullopt};
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVector<Key> vec;
    Combination combo;
  };
  std::map<Key, Row> rows_;
  std::size_t inserted_ = 0;
  bool track_;
};

}  // namespace metagrowth
