#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to check.

#include "metagrowth/numeric.hpp"
#include "metagrowth/series.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace metagrowth::testing {

/// Rank of a dense rational matrix by textbook Gauss-Jordan elimination.
inline std::size_t denseRank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// p(0..N) by the coin-change recurrence over parts 1..N.
inline std::vector<BigInt> partitionNumbers(std::size_t N) {
  std::vector<BigInt> p(N + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= N; ++part) {
    for (std::size_t j = part; j <= N; ++j) p[j] += p[j - part];
  }
  return p;
}

/// 3x3 rational matrices under the commutator: a Lie algebra that is not
/// metabelian, used to test identities valid in every Lie algebra.
struct Mat3 {
  std::array<Rational, 9> v{};

  static Mat3 random(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    Mat3 m;
    for (auto& x : m.v) x = coef(rng);
    return m;
  }
  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.v[3 * i + j] += a.v[3 * i + k] * b.v[3 * k + j];
    return r;
  }
  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.v[i] = a.v[i] - b.v[i];
    return r;
  }
  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
  }
  Mat3 scaled(const Rational& c) const {
    Mat3 r = *this;
    for (auto& x : r.v) x *= c;
    return r;
  }
  bool operator==(const Mat3& o) const { return v == o.v; }
};

inline Mat3 commutator(const Mat3& a, const Mat3& b) { return a * b - b * a; }

/// round(e^{n^alpha}) for n = 0..N, built from a binary exponent so large
/// values do not overflow a double.
inline series::SeriesCoeffs stretchedExponential(double alpha, std::size_t N) {
  series::SeriesCoeffs b;
  b.coeffs.push_back(1);
  for (std::size_t n = 1; n <= N; ++n) {
    const double bits = std::pow(static_cast<double>(n), alpha) / std::log(2.0);
    const double whole = std::floor(bits);
    if (whole < 52) {
      b.coeffs.emplace_back(std::round(std::exp2(bits)));
    } else {
      BigInt v(std::exp2(bits - whole + 52));
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(whole - 52));
      b.coeffs.push_back(v);
    }
  }
  return b;
}

}  // namespace metagrowth::testing
