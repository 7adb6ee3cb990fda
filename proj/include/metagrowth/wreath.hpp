#pragma once

// Wreath products W = A wr T and W+ = A wr T+ of abelian Lie algebras,
// modelled as split extensions B ] T where B is the free k[t1..tn]-module on
// a1..am. T+ adds u_i acting on B as multiplication by t_i^2.

#include "metagrowth/lie_core.hpp"
#include "metagrowth/metabelian.hpp"
#include "metagrowth/sparse_rank.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace metagrowth::wreath {

enum class Mode { W, Wplus };

std::string toString(Mode m);

/// Exponent vector over t1..tn.
using Exponent = std::vector<std::uint32_t>;

/// Sparse polynomial in t1..tn with rational coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t vars) : vars_(vars) {}
  static MultiPoly constant(std::size_t vars, const Rational& c);
  static MultiPoly monomial(Exponent e, const Rational& c = 1);

  std::size_t vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  /// Largest total degree among the terms; 0 for the zero polynomial.
  std::uint32_t totalDegree() const;

  void add(const Exponent& e, const Rational& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly scaled(const Rational& c) const;
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  std::size_t vars_ = 0;
  Terms terms_;
};

std::string toString(const MultiPoly& p);

/// Element b + tau of B + T+. The module part holds one polynomial per a_k;
/// the torus part holds coefficients of t1..tn and u1..un.
class WreathElement {
 public:
  WreathElement() = default;
  static WreathElement zero(std::size_t m, std::size_t n);
  static WreathElement a(std::size_t k, std::size_t m, std::size_t n);
  static WreathElement t(std::size_t j, std::size_t m, std::size_t n);
  static WreathElement u(std::size_t j, std::size_t m, std::size_t n);
  /// a_k times a polynomial; lies in B.
  static WreathElement moduleTerm(std::size_t k, MultiPoly p, std::size_t m);

  std::size_t m() const { return module_.size(); }
  std::size_t n() const { return tCoef_.size(); }

  const MultiPoly& modulePart(std::size_t k) const { return module_.at(k); }
  const std::vector<MultiPoly>& moduleParts() const { return module_; }
  const std::vector<Rational>& tCoefficients() const { return tCoef_; }
  const std::vector<Rational>& uCoefficients() const { return uCoef_; }

  bool isZero() const;
  /// Torus part vanishes, i.e. the element lies in the base ideal B.
  bool inBase() const;
  bool uBlockZero() const;
  /// Highest total degree across module polynomials.
  std::uint32_t maxModuleDegree() const;

  WreathElement& operator+=(const WreathElement& o);
  WreathElement& operator-=(const WreathElement& o);
  WreathElement scaled(const Rational& c) const;
  friend WreathElement operator+(WreathElement l, const WreathElement& r) { return l += r; }
  friend WreathElement operator-(WreathElement l, const WreathElement& r) { return l -= r; }

  bool operator==(const WreathElement&) const = default;

 private:
  void requireSameShape(const WreathElement& o) const;

  std::vector<MultiPoly> module_;
  std::vector<Rational> tCoef_;
  std::vector<Rational> uCoef_;
};

std::string toString(const WreathElement& w);

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// [b1 + s1, b2 + s2] = b1 * act(s2) - b2 * act(s1), where act(t_j) = t_j
/// and act(u_j) = t_j^2. In mode W a nonzero u-block raises ModeMismatch.
WreathElement wreathBracket(const WreathElement& p, const WreathElement& q, Mode mode);

/// Image of a generator of class a, t or u; nullopt outside the alphabet or
/// for u in mode W.
std::optional<WreathElement> generatorImage(lie::Generator g, std::size_t m, std::size_t n, Mode mode);

/// Evaluates e with a_k, t_j, u_j sent to themselves.
WreathElement evaluateInModel(const lie::LieExpr& e, std::size_t m, std::size_t n, Mode mode);

/// Coordinates of B + T+ for rank computations.
struct Coordinate {
  enum Kind : std::uint8_t { Module = 0, Torus = 1, TorusSquare = 2 };
  Kind kind = Module;
  std::uint32_t index = 0;
  Exponent exponent;  // module coordinates only
  auto operator<=>(const Coordinate&) const = default;
};

SparseVector<Coordinate> coordinates(const WreathElement& w);

// Presentations -------------------------------------------------------------

/// lhs = rhs (rhs absent means lhs = 0).
struct Relator {
  std::string family;
  lie::LieExpr lhs;
  std::optional<lie::LieExpr> rhs;
};

std::string toString(const Relator& r);

struct FamilyBounds {
  std::uint32_t m = 0, n = 0;
  /// Largest number of torus letters instantiated in an infinite family.
  std::uint32_t maxTorusLetters = 0;
};

struct Presentation {
  std::string name;
  std::vector<lie::Generator> generators;
  std::vector<Relator> relators;
  FamilyBounds bounds;
};

/// Finite presentation of W+: [a_k, t_j1..t_js, a_l] = 0 for j1 < ... < js
/// (s <= sMax), torus commutation, and [a_k, u_l] = [a_k, t_l, t_l].
Presentation finitePresentationWplus(std::uint32_t m, std::uint32_t n, std::uint32_t sMax);

/// Infinite presentation of W, cut at r + s <= maxLetters:
/// [t_i, t_j] = 0 and [[a_k, t_i1..t_ir], [a_l, t_j1..t_js]] = 0.
Presentation infinitePresentationW(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters);

/// [a_k, y1..ys] = [a_k, sorted(y)] for torus letters y in {t, u}, s <= maxLetters.
Presentation permutationIdentities(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters, Mode mode);

/// Conclusions of the splitting lemma: [[a_l, t_i1..t_ir], [a_k, t_i(r+1)..t_is]] = 0
/// for every subscript sequence with s <= maxLetters and 1 <= r < s.
Presentation splittingConsequences(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters);

struct CheckReport {
  std::string suite;
  Mode mode = Mode::Wplus;
  FamilyBounds bounds;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Evaluates every relator in the model; failures carry a witness string.
CheckReport checkPresentation(const Presentation& pres, Mode mode);

// Splitting lemma ---------------------------------------------------------------------

struct Lemma5Instance {
  std::string label;
  WreathElement a, b, t, u;
};

/// a = a1, b = a2, t = t1, u = u1 in W+ on m = n = d (d >= 2).
Lemma5Instance lemma5Base(std::uint32_t d);
/// a = [a1, t2], b = [a2, t2], t = t1, u = u1 (d >= 2).
Lemma5Instance lemma5InductionStep(std::uint32_t d);

struct Lemma5Report {
  std::string label;
  std::vector<std::string> failedHypotheses;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failedHypotheses.empty() && failures.empty(); }
};

/// Checks [a,b] = [a,t,b] = [b,t,a] = [t,u] = 0, [a,u] = [a,t,t], [b,u] = [b,t,t];
/// only when they all hold, asserts [[a, t^i], [b, t^j]] = 0 for i <= iMax, j <= jMax.
Lemma5Report lemma5Suite(const Lemma5Instance& inst, std::uint32_t iMax, std::uint32_t jMax,
                         Mode mode = Mode::Wplus);

// Embedding of M ---------------------------------------------------------------

/// x_i -> a_i + t_i extended through the bracket; target W with m = n = d.
WreathElement magnusImageOfGenerator(std::uint32_t i, std::uint32_t d);
WreathElement magnusEmbed(const metabelian::MetabelianElement& e, std::uint32_t d);

struct DegreeRank {
  std::uint32_t n = 0;
  std::size_t rank = 0;
  BigInt dim;
};

struct EmbeddingReport {
  std::uint32_t d = 0, nMax = 0;
  std::vector<DegreeRank> degrees;
  std::size_t homomorphismChecked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Rank of the embedded basis per degree against dimOfDegree, plus
/// phi(normalizeExpr(e)) == evaluate(e) on `samples` random expressions of
/// length <= maxLength.
EmbeddingReport certifyEmbedding(std::uint32_t d, std::uint32_t nMax, std::uint64_t seed = 0,
                                 std::size_t samples = 200, std::size_t maxLength = 6);

// Model laws -----------------------------------------------------------------------

/// Antisymmetry, Jacobi, W' in B and [B, B] = 0 on random triples, plus the
/// spanning statement [a_l, t_j1..t_js] = a_l t_j1..t_js with full-rank slices.
CheckReport modelLawsSuite(std::uint32_t d, Mode mode, std::uint64_t seed, std::size_t samples,
                           std::uint32_t maxLetters);

}  // namespace metagrowth::wreath
