#pragma once

// Counting monomials of an enveloping algebra from the graded dimensions of
// the Lie algebra: sum b_n t^n = prod_n (1 - t^n)^(-a_n), and estimating the
// exponent alpha in b_n ~ exp(n^alpha).

#include "metagrowth/dim_sequence.hpp"

#include <string>
#include <vector>

namespace metagrowth::series {

/// b_0..b_N; b_0 = 1.
struct SeriesCoeffs {
  std::vector<BigInt> coeffs;

  std::size_t maxIndex() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs.at(n); }
  bool operator==(const SeriesCoeffs&) const = default;
};

/// a_n = gamma(n) - gamma(n-1) with gamma(0) = 0. Throws on a decreasing input.
DimSequence gammaToGraded(const DimSequence& gamma);

/// Coefficients b_0..b_N via n b_n = sum_{k=1}^n c_k b_{n-k}, c_k = sum_{e|k} e a_e.
/// Needs N <= a.size(). Throws std::logic_error if a division is inexact.
SeriesCoeffs eulerTransform(const DimSequence& a, std::size_t N);

/// Same coefficients by multiplying out each factor
/// (1 - t^n)^(-a_n) = sum_j C(a_n + j - 1, j) t^(nj). Meant for small N;
/// a_n past the end of `a` is taken as 0.
SeriesCoeffs directProductOracle(const DimSequence& a, std::size_t N);

/// Natural log of a positive big integer from its top bits and bit length.
double logBig(const BigInt& v);

struct FitPoint {
  std::size_t n = 0;
  double alphaHat = 0.0;
  double logBn = 0.0;
  double logB2n = 0.0;
};

struct ExponentFit {
  std::string method = "doubling-log-ratio";
  std::vector<FitPoint> points;
  double finalAlpha = 0.0;
  /// False when the estimate sits below kIntermediateFloor, i.e. the input
  /// looks polynomial rather than stretched-exponential.
  bool intermediate = false;
};

/// Estimates below this are reported as not intermediate.
inline constexpr double kIntermediateFloor = 0.25;

/// alphaHat(n) = log2(ln b_{2n} / ln b_n) for each requested n (must have
/// b_n > 1 and 2n <= N). The last point is the final estimate.
ExponentFit fitStretchedExponent(const SeriesCoeffs& b, const std::vector<std::size_t>& points);

}  // namespace metagrowth::series
