#pragma once

// The free metabelian Lie algebra M on x1 < ... < xd.
//
// Basis: left-normed monomials [h, q1, q2, ..., qk] with h > q1 <= q2 <= ... <= qk
// (plus the generators themselves). Elements are sparse rational combinations
// of these monomials.

#include "metagrowth/dim_sequence.hpp"
#include "metagrowth/lie_core.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace metagrowth::metabelian {

/// Zero-based generator indices: head and a nondecreasing tail.
struct BasisMonomial {
  std::uint32_t head = 0;
  std::vector<std::uint32_t> tail;

  std::size_t length() const { return 1 + tail.size(); }
  bool isValid() const;
  lie::LeftNormedWord word() const;

  bool operator==(const BasisMonomial&) const = default;
};

/// Enumeration order: by length, then tail colexicographically, then head.
struct EnumerationOrder {
  bool operator()(const BasisMonomial& l, const BasisMonomial& r) const;
};

inline bool operator<(const BasisMonomial& l, const BasisMonomial& r) { return EnumerationOrder{}(l, r); }

std::string toString(const BasisMonomial& m);

class MetabelianElement {
 public:
  using Terms = std::map<BasisMonomial, Rational, EnumerationOrder>;

  MetabelianElement() = default;
  static MetabelianElement monomial(BasisMonomial m, Rational c = 1);
  static MetabelianElement generator(std::uint32_t i) { return monomial({i, {}}); }

  void add(const BasisMonomial& m, const Rational& c);
  MetabelianElement& operator+=(const MetabelianElement& o);
  MetabelianElement& operator-=(const MetabelianElement& o);
  MetabelianElement scaled(const Rational& c) const;
  friend MetabelianElement operator+(MetabelianElement l, const MetabelianElement& r) { return l += r; }
  friend MetabelianElement operator-(MetabelianElement l, const MetabelianElement& r) { return l -= r; }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(const BasisMonomial& m) const;
  /// True when every monomial has length >= 2, i.e. the element lies in M'.
  bool inDerived() const;

  bool operator==(const MetabelianElement& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

std::string toString(const MetabelianElement& e);

/// Expansion of a left-normed word over class x in the basis.
MetabelianElement normalizeWord(const lie::LeftNormedWord& w);

/// leftNormalize followed by normalizeWord on each word.
MetabelianElement normalizeExpr(const lie::LieExpr& e);

MetabelianElement bracket(const MetabelianElement& p, const MetabelianElement& q);

/// Basis monomials of length n over d generators in EnumerationOrder.
std::vector<BasisMonomial> basisOfDegree(std::uint32_t d, std::uint32_t n);

/// |B_n| from the sum over the position-1 letter:
/// sum_{j=1}^{d-1} (d-j) C(n-2+d-j, d-j) for n >= 3, with |B_1| = d, |B_2| = C(d,2).
BigInt dimOfDegree(std::uint32_t d, std::uint32_t n);

/// Independent closed form (n-1) C(n+d-2, n) for n >= 2.
BigInt dimClosedForm(std::uint32_t d, std::uint32_t n);

/// gamma(n) = sum_{k <= n} |B_k| for n = 1..nMax.
DimSequence growthOfM(std::uint32_t d, std::uint32_t nMax);

}  // namespace metagrowth::metabelian
