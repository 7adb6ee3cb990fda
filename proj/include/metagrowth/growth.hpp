#pragma once

// Growth functions gamma(n) = dim span(monomials of length <= n), computed by
// exact breadth-first closure, and the closed forms they are checked against.

#include "metagrowth/dim_sequence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace metagrowth::growth {

enum class GrowthMode { Metabelian, W, Wplus };

std::string toString(GrowthMode m);
/// Accepts "metabelian", "w", "wplus" (case-insensitive).
GrowthMode parseGrowthMode(const std::string& s);

struct GrowthReport {
  DimSequence gamma;     // filtration values gamma(1..nMax)
  DimSequence newDims;   // a_n = gamma(n) - gamma(n-1)
};

/// Generating sets: {x_i} for Metabelian, {a_i, t_i} for W, {a_i, t_i, u_i}
/// for Wplus (m = n = d). Level n+1 is level n plus brackets of the vectors
/// new at level n with every generator; rank is maintained exactly.
///
/// `generatorOrder`, if nonempty, is a permutation of the generator list
/// applied before the closure.
GrowthReport growthBFS(GrowthMode mode, std::uint32_t d, std::uint32_t nMax,
                       const std::vector<std::size_t>& generatorOrder = {});

/// Upper bound 2d + d + sum_{s=1}^{n-1} d C(s+d-1, d-1) on gamma_{W+}(n).
BigInt wplusUpperBound(std::uint32_t d, std::uint32_t n);

/// Exact graded dimensions a_1..a_N without enumeration:
///  Metabelian: |B_n|.
///  W:          2d, then d C(n-2+d, d-1) (module monomials of degree n-1).
///  Wplus:      3d, then d #{e in N^d : sum ceil(e_j/2) = n-1}.
DimSequence exactGradedDims(GrowthMode mode, std::uint32_t d, std::uint32_t N);

/// Running sums of a graded sequence.
DimSequence cumulative(const DimSequence& graded);

}  // namespace metagrowth::growth
