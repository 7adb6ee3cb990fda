#include "metagrowth/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metagrowth::series {

DimSequence gammaToGraded(const DimSequence& gamma) {
  DimSequence a{SequenceKind::Graded, {}};
  a.values.reserve(gamma.size());
  BigInt prev = 0;
  for (std::size_t i = 0; i < gamma.values.size(); ++i) {
    const BigInt& g = gamma.values[i];
    if (g < prev) throw std::invalid_argument("gamma decreases at n = " + std::to_string(i + 1));
    a.values.push_back(g - prev);
    prev = g;
  }
  return a;
}

SeriesCoeffs eulerTransform(const DimSequence& a, std::size_t N) {
  if (N > a.size()) throw std::invalid_argument("eulerTransform: N exceeds the length of a");
  for (const BigInt& v : a.values) {
    if (v < 0) throw std::invalid_argument("eulerTransform: negative dimension");
  }
  // c_k = sum_{e | k} e a_e, by sieving over divisors.
  std::vector<BigInt> c(N + 1, 0);
  for (std::size_t e = 1; e <= N; ++e) {
    if (a.values[e - 1] == 0) continue;
    const BigInt term = BigInt(static_cast<unsigned long>(e)) * a.values[e - 1];
    for (std::size_t k = e; k <= N; k += e) c[k] += term;
  }
  SeriesCoeffs b;
  b.coeffs.assign(N + 1, 0);
  b.coeffs[0] = 1;
  BigInt acc;
  for (std::size_t n = 1; n <= N; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (c[k] != 0) mpz_addmul(acc.get_mpz_t(), c[k].get_mpz_t(), b.coeffs[n - k].get_mpz_t());
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), n)) {
      throw std::logic_error("eulerTransform: inexact division at n = " + std::to_string(n));
    }
    mpz_divexact_ui(b.coeffs[n].get_mpz_t(), acc.get_mpz_t(), n);
  }
  return b;
}

SeriesCoeffs directProductOracle(const DimSequence& a, std::size_t N) {
  std::vector<BigInt> poly(N + 1, 0);
  poly[0] = 1;
  // Entries past the end of a are zero factors, i.e. they contribute 1.
  for (std::size_t n = 1; n <= std::min(N, a.size()); ++n) {
    const BigInt& an = a.values[n - 1];
    if (an == 0) continue;
    if (!an.fits_ulong_p()) throw std::invalid_argument("directProductOracle: a_n too large");
    const unsigned long multiplicity = an.get_ui();
    // factor coefficients at t^(n j)
    std::vector<BigInt> factor;
    for (std::size_t j = 0; j * n <= N; ++j) factor.push_back(binomial(multiplicity + j - 1, j));
    std::vector<BigInt> next(N + 1, 0);
    for (std::size_t i = 0; i <= N; ++i) {
      if (poly[i] == 0) continue;
      for (std::size_t j = 0; i + j * n <= N; ++j) next[i + j * n] += poly[i] * factor[j];
    }
    poly = std::move(next);
  }
  return SeriesCoeffs{std::move(poly)};
}

double logBig(const BigInt& v) {
  if (v <= 0) throw std::domain_error("logBig of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

ExponentFit fitStretchedExponent(const SeriesCoeffs& b, const std::vector<std::size_t>& points) {
  if (points.empty()) throw std::invalid_argument("fitStretchedExponent: no evaluation points");
  ExponentFit fit;
  for (std::size_t n : points) {
    if (n == 0 || 2 * n > b.maxIndex()) {
      throw std::invalid_argument("fitStretchedExponent: need b_n and b_2n for n = " + std::to_string(n));
    }
    if (b[n] <= 1 || b[2 * n] <= 1) {
      throw std::invalid_argument("fitStretchedExponent: b_n <= 1 at n = " + std::to_string(n));
    }
    FitPoint p;
    p.n = n;
    p.logBn = logBig(b[n]);
    p.logB2n = logBig(b[2 * n]);
    p.alphaHat = std::log2(p.logB2n / p.logBn);
    fit.points.push_back(p);
  }
  fit.finalAlpha = fit.points.back().alphaHat;
  fit.intermediate = fit.finalAlpha >= kIntermediateFloor && fit.finalAlpha < 1.0;
  return fit;
}

}  // namespace metagrowth::series
