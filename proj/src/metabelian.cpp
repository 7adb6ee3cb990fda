#include "metagrowth/metabelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace metagrowth::metabelian {

bool BasisMonomial::isValid() const {
  if (tail.empty()) return true;
  if (head <= tail.front()) return false;
  return std::is_sorted(tail.begin(), tail.end());
}

lie::LeftNormedWord BasisMonomial::word() const {
  lie::LeftNormedWord w;
  w.letters.reserve(length());
  w.letters.push_back(lie::Generator::x(head));
  for (std::uint32_t q : tail) w.letters.push_back(lie::Generator::x(q));
  return w;
}

bool EnumerationOrder::operator()(const BasisMonomial& l, const BasisMonomial& r) const {
  if (l.tail.size() != r.tail.size()) return l.tail.size() < r.tail.size();
  for (std::size_t i = l.tail.size(); i-- > 0;) {
    if (l.tail[i] != r.tail[i]) return l.tail[i] < r.tail[i];
  }
  return l.head < r.head;
}

std::string toString(const BasisMonomial& m) {
  if (m.tail.empty()) return "x" + std::to_string(m.head + 1);
  std::string s = "[x" + std::to_string(m.head + 1);
  for (std::uint32_t q : m.tail) s += ",x" + std::to_string(q + 1);
  return s + "]";
}

// MetabelianElement ----------------------------------------------------------

MetabelianElement MetabelianElement::monomial(BasisMonomial m, Rational c) {
  if (!m.isValid()) throw std::invalid_argument("not a basis monomial: " + toString(m));
  MetabelianElement e;
  e.add(m, c);
  return e;
}

void MetabelianElement::add(const BasisMonomial& m, const Rational& c) { addTerm(terms_, m, c); }

MetabelianElement& MetabelianElement::operator+=(const MetabelianElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

MetabelianElement& MetabelianElement::operator-=(const MetabelianElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

MetabelianElement MetabelianElement::scaled(const Rational& c) const {
  MetabelianElement e;
  if (c == 0) return e;
  for (const auto& [m, v] : terms_) e.terms_.emplace(m, v * c);
  return e;
}

Rational MetabelianElement::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MetabelianElement::inDerived() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.length() >= 2; });
}

std::string toString(const MetabelianElement& e) {
  if (e.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) s += mag.get_str() + "*";
    s += toString(m);
  }
  return s;
}

// Normal form ----------------------------------------------------------------

MetabelianElement normalizeWord(const lie::LeftNormedWord& w) {
  if (w.letters.empty()) throw std::invalid_argument("empty word");
  for (const lie::Generator& g : w.letters) {
    if (g.cls != lie::GenClass::x) throw std::invalid_argument("normalizeWord expects class-x letters, got " + toString(g));
  }
  if (w.length() == 1) return MetabelianElement::generator(w.letters[0].index);

  std::uint32_t p = w.letters[0].index;
  std::uint32_t q = w.letters[1].index;
  if (p == q) return {};
  Rational sign = 1;
  if (p < q) {
    std::swap(p, q);
    sign = -1;
  }
  // Past position 1 the prefix lies in M', and [c, y, z] = [c, z, y] there,
  // so the remaining letters form a multiset.
  std::vector<std::uint32_t> rest;
  rest.reserve(w.length() - 2);
  for (std::size_t i = 2; i < w.length(); ++i) rest.push_back(w.letters[i].index);
  std::sort(rest.begin(), rest.end());

  if (rest.empty() || q <= rest.front()) {
    return MetabelianElement::monomial({p, [&] {
      std::vector<std::uint32_t> tail{q};
      tail.insert(tail.end(), rest.begin(), rest.end());
      return tail;
    }()}, sign);
  }

  // Smallest letter m < q sits in the multiset: [p, q, m] = [p, m, q] - [q, m, p].
  const std::uint32_t m = rest.front();
  auto withTail = [&](std::uint32_t extra) {
    std::vector<std::uint32_t> tail{m};
    std::vector<std::uint32_t> others(rest.begin() + 1, rest.end());
    others.insert(std::upper_bound(others.begin(), others.end(), extra), extra);
    tail.insert(tail.end(), others.begin(), others.end());
    return tail;
  };
  MetabelianElement out;
  out.add({p, withTail(q)}, sign);
  out.add({q, withTail(p)}, -sign);
  return out;
}

MetabelianElement normalizeExpr(const lie::LieExpr& e) {
  MetabelianElement out;
  const lie::FormalCombination expansion = lie::leftNormalize(e);
  for (const auto& [word, c] : expansion.terms()) out += normalizeWord(word).scaled(c);
  return out;
}

MetabelianElement bracket(const MetabelianElement& p, const MetabelianElement& q) {
  MetabelianElement out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      if (mp.length() >= 2 && mq.length() >= 2) continue;
      lie::LeftNormedWord w;
      Rational c = cp * cq;
      if (mq.length() == 1) {
        w = mp.word();
        w.letters.push_back(lie::Generator::x(mq.head));
      } else {
        w = mq.word();
        w.letters.push_back(lie::Generator::x(mp.head));
        c = -c;
      }
      out += normalizeWord(w).scaled(c);
    }
  }
  return out;
}

// Enumeration and counting ----------------------------------------------------

namespace {

void nondecreasingTails(std::uint32_t d, std::size_t len, std::vector<std::uint32_t>& cur,
                        std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t from = cur.empty() ? 0 : cur.back();
  for (std::uint32_t v = from; v < d; ++v) {
    cur.push_back(v);
    nondecreasingTails(d, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BasisMonomial> basisOfDegree(std::uint32_t d, std::uint32_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("basisOfDegree needs d >= 1 and n >= 1");
  std::vector<BasisMonomial> out;
  if (n == 1) {
    for (std::uint32_t i = 0; i < d; ++i) out.push_back({i, {}});
    return out;
  }
  std::vector<std::vector<std::uint32_t>> tails;
  std::vector<std::uint32_t> cur;
  nondecreasingTails(d, n - 1, cur, tails);
  for (auto& tail : tails) {
    for (std::uint32_t h = tail.front() + 1; h < d; ++h) out.push_back({h, tail});
  }
  std::sort(out.begin(), out.end(), EnumerationOrder{});
  return out;
}

BigInt dimOfDegree(std::uint32_t d, std::uint32_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("dimOfDegree needs d >= 1 and n >= 1");
  if (n == 1) return d;
  if (n == 2) return binomial(d, 2);
  BigInt total = 0;
  for (std::uint32_t j = 1; j + 1 <= d; ++j) total += BigInt(d - j) * binomial(n - 2 + d - j, d - j);
  return total;
}

BigInt dimClosedForm(std::uint32_t d, std::uint32_t n) {
  if (d < 1 || n < 1) throw std::invalid_argument("dimClosedForm needs d >= 1 and n >= 1");
  if (n == 1) return d;
  return BigInt(n - 1) * binomial(n + d - 2, n);
}

DimSequence growthOfM(std::uint32_t d, std::uint32_t nMax) {
  if (d < 1 || nMax < 1) throw std::invalid_argument("growthOfM needs d >= 1 and nMax >= 1");
  DimSequence g{SequenceKind::Filtration, {}};
  BigInt acc = 0;
  for (std::uint32_t n = 1; n <= nMax; ++n) {
    acc += dimOfDegree(d, n);
    g.values.push_back(acc);
  }
  return g;
}

}  // namespace metagrowth::metabelian
