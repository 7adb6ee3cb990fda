#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metagrowth/metabelian.hpp"
#include "metagrowth/wreath.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace metagrowth;
using lie::Generator;
using lie::LieExpr;
using metabelian::BasisMonomial;
using metabelian::MetabelianElement;

namespace {

lie::LeftNormedWord xs(std::initializer_list<std::uint32_t> oneBased) {
  lie::LeftNormedWord w;
  for (std::uint32_t i : oneBased) w.letters.push_back(Generator::x(i - 1));
  return w;
}

LieExpr X(std::uint32_t oneBased) { return LieExpr::leaf(Generator::x(oneBased - 1)); }
LieExpr br(const LieExpr& l, const LieExpr& r) { return LieExpr::bracket(l, r); }

/// Brute force: every word of length n over d letters, kept when it matches
/// the basis shape head > q1 <= q2 <= ... (no reliance on the enumerator).
std::set<std::vector<std::uint32_t>> basisWordsByFilter(std::uint32_t d, std::uint32_t n) {
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> w(n, 0);
  while (true) {
    bool ok = true;
    if (n >= 2) {
      ok = w[0] > w[1];
      for (std::uint32_t i = 2; i < n && ok; ++i) ok = w[i - 1] <= w[i];
    }
    if (ok) out.insert(w);
    std::uint32_t pos = 0;
    while (pos < n && ++w[pos] == d) w[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

/// Image of x_i is a_i + t_i in W on d generators.
wreath::WreathElement viaEmbeddingOfExpr(const LieExpr& e, std::uint32_t d) {
  auto assign = [d](Generator g) -> std::optional<wreath::WreathElement> {
    if (g.cls != lie::GenClass::x || g.index >= d) return std::nullopt;
    return wreath::WreathElement::a(g.index, d, d) + wreath::WreathElement::t(g.index, d, d);
  };
  auto bracket = [](const wreath::WreathElement& l, const wreath::WreathElement& r) {
    return wreath::wreathBracket(l, r, wreath::Mode::W);
  };
  return lie::evaluate<wreath::WreathElement>(e, assign, bracket);
}

}  // namespace

TEST_CASE("normalizeWord examples") {
  CHECK(metabelian::normalizeWord(xs({1})) == MetabelianElement::generator(0));
  CHECK(metabelian::normalizeWord(xs({2, 1})) == MetabelianElement::monomial({1, {0}}));
  CHECK(metabelian::normalizeWord(xs({1, 2})) == MetabelianElement::monomial({1, {0}}, -1));
  CHECK(metabelian::normalizeWord(xs({1, 1})).isZero());
  CHECK(metabelian::normalizeWord(xs({2, 1, 1, 2})) == MetabelianElement::monomial({1, {0, 0, 1}}));
  // tail letters commute: [x3,x1,x2,x1] = [x3,x1,x1,x2]
  CHECK(metabelian::normalizeWord(xs({3, 1, 2, 1})) == MetabelianElement::monomial({2, {0, 0, 1}}));
  // [x3,x2,x1] = [x3,x1,x2] - [x2,x1,x3]
  MetabelianElement expected;
  expected.add({2, {0, 1}}, 1);
  expected.add({1, {0, 2}}, -1);
  CHECK(metabelian::normalizeWord(xs({3, 2, 1})) == expected);
  CHECK(metabelian::toString(expected) == "[x3,x1,x2] - [x2,x1,x3]");
  CHECK_THROWS(metabelian::normalizeWord(lie::LeftNormedWord{}));
}

TEST_CASE("basis words are already normal") {
  for (std::uint32_t d = 1; d <= 4; ++d) {
    for (std::uint32_t n = 1; n <= 6; ++n) {
      for (const BasisMonomial& m : metabelian::basisOfDegree(d, n)) {
        CHECK(m.isValid());
        CHECK(metabelian::normalizeWord(m.word()) == MetabelianElement::monomial(m));
      }
    }
  }
}

TEST_CASE("normalizeExpr and bracket examples") {
  // [x1,[x2,x3]] = [x1,x2,x3] - [x1,x3,x2] = [x3,x1,x2] - [x2,x1,x3]
  const auto nf = metabelian::normalizeExpr(br(X(1), br(X(2), X(3))));
  MetabelianElement expected;
  expected.add({2, {0, 1}}, 1);
  expected.add({1, {0, 2}}, -1);
  CHECK(nf == expected);
  CHECK(metabelian::normalizeExpr(br(br(X(3), X(2)), X(1))) == expected);

  const auto x1 = MetabelianElement::generator(0);
  const auto x2 = MetabelianElement::generator(1);
  const auto x3 = MetabelianElement::generator(2);
  CHECK(metabelian::bracket(x2, x1) == MetabelianElement::monomial({1, {0}}));
  CHECK(metabelian::bracket(x1, metabelian::bracket(x2, x3)) == expected);
  // [M', M'] = 0
  CHECK(metabelian::bracket(metabelian::bracket(x2, x1), metabelian::bracket(x3, x1)).isZero());
  CHECK(metabelian::bracket(x1, x1).isZero());
}

TEST_CASE("basisOfDegree") {
  SUBCASE("small cases") {
    CHECK(metabelian::basisOfDegree(2, 1).size() == 2);
    const auto b = metabelian::basisOfDegree(2, 3);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == BasisMonomial{1, {0, 0}});
    CHECK(b[1] == BasisMonomial{1, {0, 1}});
    CHECK(metabelian::basisOfDegree(1, 2).empty());
    const auto b3 = metabelian::basisOfDegree(3, 2);
    REQUIRE(b3.size() == 3);
    CHECK(metabelian::toString(b3[0]) == "[x2,x1]");
    CHECK(metabelian::toString(b3[1]) == "[x3,x1]");
    CHECK(metabelian::toString(b3[2]) == "[x3,x2]");
    CHECK_THROWS(metabelian::basisOfDegree(0, 1));
  }
  SUBCASE("matches the brute-force word filter") {
    for (std::uint32_t d = 1; d <= 4; ++d) {
      for (std::uint32_t n = 1; n <= 6; ++n) {
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& m : metabelian::basisOfDegree(d, n)) {
          std::vector<std::uint32_t> w{m.head};
          w.insert(w.end(), m.tail.begin(), m.tail.end());
          got.insert(w);
        }
        CHECK(got == basisWordsByFilter(d, n));
      }
    }
  }
  SUBCASE("enumeration order is strict") {
    const auto b = metabelian::basisOfDegree(4, 5);
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(metabelian::EnumerationOrder{}(b[i - 1], b[i]));
  }
}

TEST_CASE("dimension formulas agree with enumeration") {
  for (std::uint32_t d = 1; d <= 6; ++d) {
    for (std::uint32_t n = 1; n <= 14; ++n) {
      CAPTURE(d);
      CAPTURE(n);
      const BigInt sum = metabelian::dimOfDegree(d, n);
      CHECK(sum == metabelian::dimClosedForm(d, n));
      if (d <= 4 && n <= 10) CHECK(BigInt(metabelian::basisOfDegree(d, n).size()) == sum);
    }
  }
  CHECK(metabelian::dimOfDegree(2, 7) == 6);
  CHECK(metabelian::dimOfDegree(3, 3) == 8);
}

TEST_CASE("growthOfM") {
  const auto g = metabelian::growthOfM(2, 4);
  CHECK(g.kind == SequenceKind::Filtration);
  CHECK(g.values == std::vector<BigInt>{2, 3, 5, 8});
  CHECK(metabelian::growthOfM(1, 5).values == std::vector<BigInt>{1, 1, 1, 1, 1});
  CHECK(metabelian::growthOfM(3, 3).values == std::vector<BigInt>{3, 6, 14});
}

TEST_CASE("growth degree of M is d - 1") {
  // |B_n| ~ n^{d-1} / (d-2)!; the ratio tends to 1.
  for (std::uint32_t d = 2; d <= 4; ++d) {
    double fact = 1;
    for (std::uint32_t k = 2; k + 2 <= d; ++k) fact *= k;
    for (std::uint32_t n : {50u, 100u, 200u}) {
      const double ratio = metabelian::dimOfDegree(d, n).get_d() * fact / std::pow(n, d - 1.0);
      CHECK(ratio >= 0.5);
      CHECK(ratio <= 2.0);
    }
    // the (d-1)! normalisation also stays inside [0.5, 2] while d <= 3
    if (d <= 3) {
      double fact1 = 1;
      for (std::uint32_t k = 2; k + 1 <= d; ++k) fact1 *= k;
      const double ratio = metabelian::dimOfDegree(d, 200).get_d() * fact1 / std::pow(200.0, d - 1.0);
      CHECK(ratio >= 0.5);
      CHECK(ratio <= 2.0);
    }
  }
}

TEST_CASE("normal form commutes with the embedding into the wreath product") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint32_t> dd(1, 3), len(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t d = dd(rng);
    const auto alphabet = lie::Alphabet::metabelian(d).generators();
    const LieExpr e = lie::randomExpr(rng, len(rng), alphabet);
    CHECK(wreath::magnusEmbed(metabelian::normalizeExpr(e), d) == viaEmbeddingOfExpr(e, d));
  }
}

TEST_CASE("identities normalize to zero") {
  std::mt19937_64 rng(1);
  const auto alphabet = lie::Alphabet::metabelian(3).generators();
  for (int trial = 0; trial < 200; ++trial) {
    const LieExpr p = lie::randomExpr(rng, 1 + trial % 3, alphabet);
    const LieExpr q = lie::randomExpr(rng, 1 + (trial / 3) % 3, alphabet);
    const LieExpr r = lie::randomExpr(rng, 1 + (trial / 9) % 2, alphabet);
    // antisymmetry
    CHECK((metabelian::normalizeExpr(br(p, q)) + metabelian::normalizeExpr(br(q, p))).isZero());
    CHECK(metabelian::normalizeExpr(br(p, p)).isZero());
    // Jacobi
    CHECK((metabelian::normalizeExpr(br(p, br(q, r))) + metabelian::normalizeExpr(br(q, br(r, p))) +
           metabelian::normalizeExpr(br(r, br(p, q))))
              .isZero());
    // metabelian identity [[p,q],[r,s]] = 0
    CHECK(metabelian::normalizeExpr(br(br(p, q), br(r, p))).isZero());
  }
}

TEST_CASE("commuting elements satisfy [x,z,y] = [y,z,x]") {
  // x, y in M' commute; the identity must hold for every z.
  const LieExpr x = br(X(2), X(1));
  const LieExpr y = br(br(X(3), X(1)), X(2));
  for (std::uint32_t z = 1; z <= 3; ++z) {
    CHECK(metabelian::normalizeExpr(br(x, y)).isZero());
    CHECK(metabelian::normalizeExpr(br(br(x, X(z)), y)) == metabelian::normalizeExpr(br(br(y, X(z)), x)));
    CHECK(metabelian::normalizeExpr(br(x, br(y, X(z)))) == metabelian::normalizeExpr(br(y, br(x, X(z)))));
  }
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 rng(2);
  const auto alphabet = lie::Alphabet::metabelian(3).generators();
  for (int trial = 0; trial < 200; ++trial) {
    const LieExpr e = lie::randomExpr(rng, 1 + trial % 6, alphabet);
    const MetabelianElement nf = metabelian::normalizeExpr(e);
    MetabelianElement again;
    for (const auto& [m, c] : nf.terms()) {
      CHECK(m.isValid());
      CHECK(m.length() == e.length());
      again += metabelian::normalizeWord(m.word()).scaled(c);
    }
    CHECK(again == nf);
  }
}
