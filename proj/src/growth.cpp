#include "metagrowth/growth.hpp"

#include "metagrowth/metabelian.hpp"
#include "metagrowth/sparse_rank.hpp"
#include "metagrowth/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace metagrowth::growth {

std::string toString(GrowthMode m) {
  switch (m) {
    case GrowthMode::Metabelian: return "metabelian";
    case GrowthMode::W: return "w";
    case GrowthMode::Wplus: return "wplus";
  }
  return "?";
}

GrowthMode parseGrowthMode(const std::string& s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "metabelian" || lower == "m") return GrowthMode::Metabelian;
  if (lower == "w") return GrowthMode::W;
  if (lower == "wplus" || lower == "w+") return GrowthMode::Wplus;
  throw std::invalid_argument("unknown growth mode '" + s + "' (expected metabelian, w or wplus)");
}

namespace {

std::vector<std::size_t> checkedOrder(const std::vector<std::size_t>& order, std::size_t count) {
  if (order.empty()) {
    std::vector<std::size_t> id(count);
    for (std::size_t i = 0; i < count; ++i) id[i] = i;
    return id;
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != count || sorted[i] != i) throw std::invalid_argument("generatorOrder is not a permutation");
  }
  return order;
}

// Shared closure loop. Traits supply Element, bracket() and coordinates().
template <typename Element, typename Key, typename Bracket, typename Coords, typename Check>
GrowthReport closure(std::vector<Element> generators, std::uint32_t nMax, const Bracket& bracket,
                     const Coords& coords, const Check& checkLevel) {
  GrowthReport report{{SequenceKind::Filtration, {}}, {SequenceKind::Graded, {}}};
  SparseEliminator<Key> elim;
  std::vector<Element> frontier;
  for (const Element& g : generators) {
    if (elim.insert(coords(g)).independent) frontier.push_back(g);
  }
  auto record = [&] {
    const BigInt gamma = static_cast<unsigned long>(elim.rank());
    const BigInt prev = report.gamma.values.empty() ? BigInt(0) : report.gamma.values.back();
    report.gamma.values.push_back(gamma);
    report.newDims.values.push_back(gamma - prev);
  };
  record();
  for (std::uint32_t level = 2; level <= nMax; ++level) {
    std::vector<Element> next;
    for (const Element& v : frontier) {
      for (const Element& g : generators) {
        Element c = bracket(v, g);
        checkLevel(c, level);
        if (elim.insert(coords(c)).independent) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
    record();
  }
  return report;
}

}  // namespace

GrowthReport growthBFS(GrowthMode mode, std::uint32_t d, std::uint32_t nMax,
                       const std::vector<std::size_t>& generatorOrder) {
  if (d < 1 || nMax < 1) throw std::invalid_argument("growthBFS needs d >= 1 and nMax >= 1");

  if (mode == GrowthMode::Metabelian) {
    using metabelian::MetabelianElement;
    std::vector<MetabelianElement> gens;
    for (std::uint32_t i = 0; i < d; ++i) gens.push_back(MetabelianElement::generator(i));
    const auto order = checkedOrder(generatorOrder, gens.size());
    std::vector<MetabelianElement> permuted;
    for (std::size_t i : order) permuted.push_back(gens[i]);
    auto coords = [](const MetabelianElement& e) {
      return SparseVector<metabelian::BasisMonomial>(e.terms().begin(), e.terms().end());
    };
    auto check = [](const MetabelianElement& e, std::uint32_t level) {
      for (const auto& [m, c] : e.terms()) {
        if (m.length() != level) throw std::logic_error("metabelian closure produced a non-homogeneous element");
      }
    };
    return closure<MetabelianElement, metabelian::BasisMonomial>(std::move(permuted), nMax, metabelian::bracket,
                                                               coords, check);
  }

  using wreath::WreathElement;
  const wreath::Mode wm = mode == GrowthMode::W ? wreath::Mode::W : wreath::Mode::Wplus;
  std::vector<WreathElement> gens;
  for (std::uint32_t i = 0; i < d; ++i) gens.push_back(WreathElement::a(i, d, d));
  for (std::uint32_t i = 0; i < d; ++i) gens.push_back(WreathElement::t(i, d, d));
  if (wm == wreath::Mode::Wplus) {
    for (std::uint32_t i = 0; i < d; ++i) gens.push_back(WreathElement::u(i, d, d));
  }
  const auto order = checkedOrder(generatorOrder, gens.size());
  std::vector<WreathElement> permuted;
  for (std::size_t i : order) permuted.push_back(gens[i]);
  // Each letter raises module degree by at most 2, so level n stays within 2(n-1).
  const std::uint32_t degreeCap = 2 * (nMax - 1);
  auto check = [degreeCap](const WreathElement& e, std::uint32_t level) {
    const std::uint32_t deg = e.maxModuleDegree();
    if (deg > 2 * (level - 1) || deg > degreeCap) throw std::logic_error("module degree exceeded the level cap");
  };
  return closure<WreathElement, wreath::Coordinate>(
      std::move(permuted), nMax, [wm](const WreathElement& l, const WreathElement& r) { return wreath::wreathBracket(l, r, wm); },
      wreath::coordinates, check);
}

BigInt wplusUpperBound(std::uint32_t d, std::uint32_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("wplusUpperBound needs d >= 1 and n >= 1");
  BigInt total = 3 * d;
  for (std::uint32_t s = 1; s + 1 <= n; ++s) total += BigInt(d) * binomial(s + d - 1, d - 1);
  return total;
}

namespace {

// Coefficients 0..K of ((1 + x) / (1 - x))^d: per coordinate, ceil(e/2) = 0 has
// one preimage and every c >= 1 has two (2c - 1 and 2c).
std::vector<BigInt> halfCeilCounts(std::uint32_t d, std::uint32_t K) {
  std::vector<BigInt> poly(K + 1, 0);
  poly[0] = 1;
  for (std::uint32_t coord = 0; coord < d; ++coord) {
    // next[j] = poly[j] + 2 * sum_{i<j} poly[i]
    std::vector<BigInt> next(K + 1, 0);
    BigInt prefix = 0;
    for (std::uint32_t j = 0; j <= K; ++j) {
      next[j] = poly[j] + 2 * prefix;
      prefix += poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

DimSequence exactGradedDims(GrowthMode mode, std::uint32_t d, std::uint32_t N) {
  if (d < 1) throw std::invalid_argument("exactGradedDims needs d >= 1");
  DimSequence a{SequenceKind::Graded, {}};
  a.values.reserve(N);
  switch (mode) {
    case GrowthMode::Metabelian:
      for (std::uint32_t n = 1; n <= N; ++n) a.values.push_back(metabelian::dimOfDegree(d, n));
      break;
    case GrowthMode::W:
      for (std::uint32_t n = 1; n <= N; ++n) {
        a.values.push_back(n == 1 ? BigInt(2 * d) : BigInt(d) * binomial(n - 2 + d, d - 1));
      }
      break;
    case GrowthMode::Wplus: {
      const std::vector<BigInt> counts = halfCeilCounts(d, N == 0 ? 0 : N - 1);
      for (std::uint32_t n = 1; n <= N; ++n) a.values.push_back(n == 1 ? BigInt(3 * d) : BigInt(d) * counts[n - 1]);
      break;
    }
  }
  return a;
}

DimSequence cumulative(const DimSequence& graded) {
  DimSequence g{SequenceKind::Filtration, {}};
  BigInt acc = 0;
  for (const BigInt& v : graded.values) {
    acc += v;
    g.values.push_back(acc);
  }
  return g;
}

}  // namespace metagrowth::growth
