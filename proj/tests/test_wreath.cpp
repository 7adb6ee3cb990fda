#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metagrowth/wreath.hpp"
#include "test_support.hpp"

#include <set>

using namespace metagrowth;
using namespace metagrowth::wreath;
using lie::Generator;
using lie::LieExpr;

namespace {

WreathElement mod(std::size_t k, Exponent e, std::size_t m, Rational c = 1) {
  return WreathElement::moduleTerm(k, MultiPoly::monomial(std::move(e), c), m);
}

/// Dense rows over the union of coordinates of `vectors`.
std::size_t denseRankOf(const std::vector<WreathElement>& vectors) {
  std::vector<SparseVector<Coordinate>> sparse;
  std::set<Coordinate> keys;
  for (const auto& v : vectors) {
    sparse.push_back(coordinates(v));
    for (const auto& [k, c] : sparse.back()) keys.insert(k);
  }
  std::vector<Coordinate> cols(keys.begin(), keys.end());
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : sparse) {
    std::vector<Rational> row(cols.size(), 0);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      auto it = s.find(cols[i]);
      if (it != s.end()) row[i] = it->second;
    }
    rows.push_back(std::move(row));
  }
  return testing::denseRank(std::move(rows));
}

}  // namespace

TEST_CASE("bracket in the model") {
  const std::size_t m = 2, n = 2;
  const auto a1 = WreathElement::a(0, m, n);
  const auto a2 = WreathElement::a(1, m, n);
  const auto t1 = WreathElement::t(0, m, n);
  const auto t2 = WreathElement::t(1, m, n);
  const auto u1 = WreathElement::u(0, m, n);

  CHECK(wreathBracket(a1, t2, Mode::W) == mod(0, {0, 1}, m));
  CHECK(wreathBracket(t2, a1, Mode::W) == mod(0, {0, 1}, m, -1));
  CHECK(wreathBracket(a1, a2, Mode::W).isZero());
  CHECK(wreathBracket(t1, t2, Mode::W).isZero());
  CHECK(wreathBracket(a1, u1, Mode::Wplus) == mod(0, {2, 0}, m));
  CHECK(wreathBracket(u1, t1, Mode::Wplus).isZero());
  CHECK_THROWS_AS(wreathBracket(a1, u1, Mode::W), ModeMismatch);
  CHECK_THROWS(wreathBracket(a1, WreathElement::a(0, 3, 2), Mode::W));

  CHECK(evaluateInModel(lie::parseExpr("[a1,t2,t2,u1]"), m, n, Mode::Wplus) == mod(0, {2, 2}, m));
  CHECK(toString(evaluateInModel(lie::parseExpr("[a1,t2,t2,u1]"), m, n, Mode::Wplus)) == "a1*(t1^2*t2^2)");
  CHECK_THROWS_AS(evaluateInModel(lie::parseExpr("[a1,u1]"), m, n, Mode::W), lie::UnboundGenerator);
  CHECK_FALSE(generatorImage(Generator::a(2), m, n, Mode::W).has_value());
  CHECK_FALSE(generatorImage(Generator::x(0), m, n, Mode::W).has_value());
  CHECK(generatorImage(Generator::u(1), m, n, Mode::Wplus) == WreathElement::u(1, m, n));
}

TEST_CASE("multivariate polynomial arithmetic") {
  MultiPoly p = MultiPoly::monomial({1, 0});
  p += MultiPoly::monomial({0, 1});
  const MultiPoly sq = p * p;
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK(sq.coefficient({1, 1}) == 2);
  CHECK(sq.coefficient({0, 2}) == 1);
  CHECK(sq.totalDegree() == 2);
  MultiPoly diff = sq;
  diff -= sq;
  CHECK(diff.isZero());
  CHECK(p.scaled(0).isZero());
  CHECK(MultiPoly::constant(2, 3) * p == p.scaled(3));
}

TEST_CASE("model laws") {
  for (std::uint32_t d = 1; d <= 3; ++d) {
    for (Mode mode : {Mode::W, Mode::Wplus}) {
      const CheckReport r = modelLawsSuite(d, mode, 0, 100, 4);
      CAPTURE(d);
      CHECK(r.checked > 0);
      CHECK(r.failures.empty());
    }
  }
}

TEST_CASE("presentation suites evaluate to zero") {
  for (std::uint32_t d = 1; d <= 3; ++d) {
    CAPTURE(d);
    const Presentation fin = finitePresentationWplus(d, d, 5);
    const CheckReport r1 = checkPresentation(fin, Mode::Wplus);
    CHECK(r1.checked == fin.relators.size());
    CHECK(r1.passed());

    const Presentation inf = infinitePresentationW(d, d, 6);
    CHECK(checkPresentation(inf, Mode::W).passed());
    CHECK(checkPresentation(inf, Mode::Wplus).passed());

    CHECK(checkPresentation(permutationIdentities(d, d, 4, Mode::Wplus), Mode::Wplus).passed());
    CHECK(checkPresentation(permutationIdentities(d, d, 4, Mode::W), Mode::W).passed());
    CHECK(checkPresentation(splittingConsequences(d, d, 5), Mode::Wplus).passed());
  }
}

TEST_CASE("relator counts") {
  // module, torus and square relators are all present; the infinite family grows with its cut
  const Presentation p = finitePresentationWplus(2, 2, 2);
  std::set<std::string> families;
  for (const Relator& r : p.relators) families.insert(r.family);
  CHECK(families.size() >= 3);
  CHECK(p.relators.size() > 0);
  CHECK(infinitePresentationW(2, 2, 3).relators.size() < infinitePresentationW(2, 2, 4).relators.size());
}

TEST_CASE("a false relator is reported") {
  Presentation bad;
  bad.name = "broken";
  bad.bounds = {2, 2, 1};
  bad.relators.push_back({"bogus", lie::parseExpr("[a1,t1]"), std::nullopt});
  bad.relators.push_back({"bogus", lie::parseExpr("[a1,u1]"), lie::parseExpr("[a1,t1]")});
  bad.relators.push_back({"fine", lie::parseExpr("[a1,a2]"), std::nullopt});
  const CheckReport r = checkPresentation(bad, Mode::Wplus);
  CHECK(r.checked == 3);
  CHECK(r.failures.size() == 2);
  CHECK_FALSE(r.passed());
}

TEST_CASE("splitting lemma conclusion") {
  SUBCASE("base instance") {
    const auto rep = lemma5Suite(lemma5Base(2), 10, 10);
    CHECK(rep.failedHypotheses.empty());
    CHECK(rep.checked == 121);
    CHECK(rep.passed());
  }
  SUBCASE("i = j = 0 is [a, b] = 0") {
    const auto rep = lemma5Suite(lemma5Base(3), 0, 0);
    CHECK(rep.checked == 1);
    CHECK(rep.passed());
  }
  SUBCASE("induction step instance") {
    const auto rep = lemma5Suite(lemma5InductionStep(2), 6, 6);
    CHECK(rep.passed());
    CHECK(rep.checked == 49);
  }
  SUBCASE("violated hypothesis is reported and nothing is concluded") {
    Lemma5Instance inst = lemma5Base(2);
    inst.label = "u = t1";
    inst.u = WreathElement::t(0, 2, 2);
    const auto rep = lemma5Suite(inst, 3, 3);
    CHECK_FALSE(rep.failedHypotheses.empty());
    CHECK(rep.checked == 0);
    CHECK_FALSE(rep.passed());
  }
  SUBCASE("d = 1 is rejected") { CHECK_THROWS(lemma5Base(1)); }
}

TEST_CASE("Magnus images") {
  CHECK(magnusImageOfGenerator(0, 2) == WreathElement::a(0, 2, 2) + WreathElement::t(0, 2, 2));
  // [x2, x1] -> a2 t1 - a1 t2
  const auto img = magnusEmbed(metabelian::MetabelianElement::monomial({1, {0}}), 2);
  CHECK(img == mod(1, {1, 0}, 2) - mod(0, {0, 1}, 2));
  CHECK(img.inBase());
  CHECK(magnusEmbed(metabelian::MetabelianElement{}, 2).isZero());
}

TEST_CASE("embedding certification") {
  for (std::uint32_t d = 1; d <= 3; ++d) {
    CAPTURE(d);
    const EmbeddingReport r = certifyEmbedding(d, 6, 0, 50, 5);
    CHECK(r.passed());
    CHECK(r.degrees.size() == 6);
    for (const DegreeRank& dr : r.degrees) CHECK(BigInt(dr.rank) == dr.dim);
    CHECK(r.homomorphismChecked == 50);
  }
}

TEST_CASE("embedded basis rank matches a dense elimination") {
  for (std::uint32_t d = 2; d <= 3; ++d) {
    for (std::uint32_t n = 1; n <= 5; ++n) {
      std::vector<WreathElement> images;
      for (const auto& b : metabelian::basisOfDegree(d, n)) images.push_back(magnusEmbed(metabelian::MetabelianElement::monomial(b), d));
      CHECK(BigInt(denseRankOf(images)) == metabelian::dimOfDegree(d, n));
    }
  }
}

TEST_CASE("sparse eliminator") {
  using Vec = SparseVector<int>;
  const Vec v0{{0, 1}, {2, 3}};
  const Vec v1{{1, 2}, {2, -1}};
  Vec v2 = v0;
  for (const auto& [k, c] : v1) addTerm(v2, k, c * 2);

  SparseEliminator<int> elim(true);
  CHECK(elim.insert(v0).independent);
  CHECK(elim.insert(v1).independent);
  const auto out = elim.insert(v2);
  CHECK_FALSE(out.independent);
  REQUIRE(out.dependency.has_value());
  // the witness combination really vanishes
  const std::vector<Vec> inputs{v0, v1, v2};
  Vec sum;
  for (const auto& [id, c] : *out.dependency)
    for (const auto& [k, v] : inputs.at(id)) addTerm(sum, k, c * v);
  CHECK(sum.empty());
  CHECK(out.dependency->count(2) == 1);
  CHECK(elim.rank() == 2);
  CHECK_FALSE(elim.insert(Vec{}).independent);

  SparseEliminator<int> plain;
  CHECK(plain.insert(v0).independent);
  CHECK_FALSE(plain.insert(v0).dependency.has_value());
}

TEST_CASE("sparse and dense ranks agree on random matrices") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + trial % 7, cols = 1 + (trial / 7) % 6;
    std::vector<std::vector<Rational>> dense;
    SparseEliminator<int> elim;
    for (int r = 0; r < rows; ++r) {
      std::vector<Rational> row;
      SparseVector<int> sv;
      for (int c = 0; c < cols; ++c) {
        const int v = trial % 3 == 0 ? coef(rng) * (coef(rng) == 0) : coef(rng);
        row.emplace_back(v);
        addTerm(sv, c, Rational(v));
      }
      dense.push_back(row);
      elim.insert(sv);
    }
    CHECK(elim.rank() == testing::denseRank(dense));
  }
}
