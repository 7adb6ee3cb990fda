#pragma once

// Generators, bracket expression trees and the expansion of arbitrary
// bracketings into left-normed words. Everything here is algebra-independent:
// identities used are antisymmetry and Jacobi only.

#include "metagrowth/numeric.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace metagrowth::lie {

/// Generator families: x (free metabelian generators), a (module basis of a
/// wreath product), t (torus), u (torus squares).
enum class GenClass : std::uint8_t { x, a, t, u };

char classLetter(GenClass c);

/// A named generator. `index` is zero-based; text form is one-based (`x1`).
/// Within a class, generators are totally ordered by index.
struct Generator {
  GenClass cls = GenClass::x;
  std::uint32_t index = 0;

  static constexpr Generator x(std::uint32_t i) { return {GenClass::x, i}; }
  static constexpr Generator a(std::uint32_t i) { return {GenClass::a, i}; }
  static constexpr Generator t(std::uint32_t i) { return {GenClass::t, i}; }
  static constexpr Generator u(std::uint32_t i) { return {GenClass::u, i}; }

  auto operator<=>(const Generator&) const = default;
};

std::string toString(Generator g);

/// Per-class rank bounds. A generator belongs to the alphabet iff its index is
/// below the bound of its class.
struct Alphabet {
  std::uint32_t x = 0, a = 0, t = 0, u = 0;

  static Alphabet metabelian(std::uint32_t d) { return {d, 0, 0, 0}; }
  static Alphabet wreath(std::uint32_t m, std::uint32_t n) { return {0, m, n, 0}; }
  static Alphabet wreathPlus(std::uint32_t m, std::uint32_t n) { return {0, m, n, n}; }

  std::uint32_t bound(GenClass c) const;
  bool contains(Generator g) const { return g.index < bound(g.cls); }
  /// All generators, class order x, a, t, u, then by index.
  std::vector<Generator> generators() const;
};

/// Immutable binary bracket tree over generators; cheap to copy (shared nodes).
class LieExpr {
 public:
  static LieExpr leaf(Generator g);
  static LieExpr bracket(LieExpr left, LieExpr right);
  /// [g1, g2, ..., gn] = [[g1, ..., g(n-1)], gn]; a single letter gives a leaf.
  static LieExpr leftNormed(std::span<const Generator> letters);

  bool isLeaf() const { return node_->left == nullptr; }
  Generator generator() const;
  LieExpr left() const;
  LieExpr right() const;
  /// Number of leaves.
  std::size_t length() const { return node_->length; }

  bool operator==(const LieExpr& other) const;

 private:
  struct Node {
    Generator gen;
    std::shared_ptr<const Node> left, right;
    std::size_t length = 1;
  };
  explicit LieExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Letters of the left-normed monomial [a1, ..., an]; never empty.
struct LeftNormedWord {
  std::vector<Generator> letters;

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const LeftNormedWord&) const = default;
};

std::string toString(const LeftNormedWord& w);

/// Finitely supported rational combination of left-normed words.
class FormalCombination {
 public:
  using Terms = std::map<LeftNormedWord, Rational>;

  FormalCombination() = default;
  static FormalCombination single(LeftNormedWord w, Rational c = 1);

  void add(const LeftNormedWord& w, const Rational& c) { addTerm(terms_, w, c); }
  FormalCombination& operator+=(const FormalCombination& o);
  FormalCombination& operator-=(const FormalCombination& o);
  FormalCombination scaled(const Rational& c) const;

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coefficient(const LeftNormedWord& w) const;

  bool operator==(const FormalCombination&) const = default;

 private:
  Terms terms_;
};

std::string toString(const FormalCombination& c);

/// Rewrites e as a combination of left-normed words of the same length.
/// A right factor [v, w] is expanded as [[u, v], w] - [[u, w], v].
FormalCombination leftNormalize(const LieExpr& e);

class UnboundGenerator : public std::invalid_argument {
 public:
  explicit UnboundGenerator(Generator g)
      : std::invalid_argument("unbound generator: " + toString(g)), generator_(g) {}
  Generator generator() const { return generator_; }

 private:
  Generator generator_;
};

/// Structural fold of `e`. `assign` maps a generator to std::optional<V>;
/// an empty result raises UnboundGenerator.
template <typename V, typename Assign, typename Bracket>
V evaluate(const LieExpr& e, const Assign& assign, const Bracket& bracket) {
  if (e.isLeaf()) {
    std::optional<V> v = assign(e.generator());
    if (!v) throw UnboundGenerator(e.generator());
    return *std::move(v);
  }
  V l = evaluate<V>(e.left(), assign, bracket);
  V r = evaluate<V>(e.right(), assign, bracket);
  return bracket(l, r);
}

/// Evaluates a left-normed combination through the same interface as evaluate().
template <typename V, typename Assign, typename Bracket, typename Add>
V evaluateCombination(const FormalCombination& c, V zero, const Assign& assign,
                      const Bracket& bracket, const Add& addScaled) {
  V acc = std::move(zero);
  for (const auto& [word, coef] : c.terms()) {
    V v = evaluate<V>(LieExpr::leftNormed(word.letters), assign, bracket);
    acc = addScaled(acc, v, coef);
  }
  return acc;
}

// Text format ---------------------------------------------------------------

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `x1`, `[x1,[x2,x3]]`, `[a1,t2,t2,u1]` (lists with more than two
/// entries are sugar for left-nested brackets). Whitespace is ignored.
LieExpr parseExpr(std::string_view text);

/// Prints left-nested chains as flat lists, so parseExpr(toString(e)) == e.
std::string toString(const LieExpr& e);

/// Uniformly random split points; leaves drawn uniformly from `alphabet`.
LieExpr randomExpr(std::mt19937_64& rng, std::size_t length, std::span<const Generator> alphabet);

}  // namespace metagrowth::lie
