#include "metagrowth/wreath.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace metagrowth::wreath {

std::string toString(Mode m) { return m == Mode::W ? "W" : "Wplus"; }

// MultiPoly ------------------------------------------------------------------

MultiPoly MultiPoly::constant(std::size_t vars, const Rational& c) {
  MultiPoly p(vars);
  p.add(Exponent(vars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponent e, const Rational& c) {
  MultiPoly p(e.size());
  p.add(e, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::totalDegree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t deg = 0;
    for (std::uint32_t v : e) deg += v;
    best = std::max(best, deg);
  }
  return best;
}

void MultiPoly::add(const Exponent& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent length does not match polynomial ring");
  addTerm(terms_, e, c);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly p(vars_);
  if (c == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  if (l.vars_ != r.vars_) throw std::invalid_argument("multiplying polynomials over different rings");
  MultiPoly out(l.vars_);
  Exponent e(l.vars_);
  for (const auto& [el, cl] : l.terms_) {
    for (const auto& [er, cr] : r.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      out.add(e, cl * cr);
    }
  }
  return out;
}

std::string toString(const MultiPoly& p) {
  if (p.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Rational mag = abs(c);
    std::string mono;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) s += mag.get_str();
    else if (mag == 1) s += mono;
    else s += mag.get_str() + "*" + mono;
  }
  return s;
}

// WreathElement ---------------------------------------------------------------

WreathElement WreathElement::zero(std::size_t m, std::size_t n) {
  WreathElement w;
  w.module_.assign(m, MultiPoly(n));
  w.tCoef_.assign(n, Rational(0));
  w.uCoef_.assign(n, Rational(0));
  return w;
}

WreathElement WreathElement::a(std::size_t k, std::size_t m, std::size_t n) {
  if (k >= m) throw std::out_of_range("module generator index out of range");
  WreathElement w = zero(m, n);
  w.module_[k] = MultiPoly::constant(n, 1);
  return w;
}

WreathElement WreathElement::t(std::size_t j, std::size_t m, std::size_t n) {
  if (j >= n) throw std::out_of_range("torus generator index out of range");
  WreathElement w = zero(m, n);
  w.tCoef_[j] = 1;
  return w;
}

WreathElement WreathElement::u(std::size_t j, std::size_t m, std::size_t n) {
  if (j >= n) throw std::out_of_range("torus generator index out of range");
  WreathElement w = zero(m, n);
  w.uCoef_[j] = 1;
  return w;
}

WreathElement WreathElement::moduleTerm(std::size_t k, MultiPoly p, std::size_t m) {
  WreathElement w = zero(m, p.vars());
  if (k >= m) throw std::out_of_range("module generator index out of range");
  w.module_[k] = std::move(p);
  return w;
}

bool WreathElement::isZero() const { return inBase() && std::all_of(module_.begin(), module_.end(), [](const MultiPoly& p) { return p.isZero(); }); }

bool WreathElement::inBase() const {
  auto zero = [](const Rational& c) { return c == 0; };
  return std::all_of(tCoef_.begin(), tCoef_.end(), zero) && std::all_of(uCoef_.begin(), uCoef_.end(), zero);
}

bool WreathElement::uBlockZero() const {
  return std::all_of(uCoef_.begin(), uCoef_.end(), [](const Rational& c) { return c == 0; });
}

std::uint32_t WreathElement::maxModuleDegree() const {
  std::uint32_t best = 0;
  for (const MultiPoly& p : module_) best = std::max(best, p.totalDegree());
  return best;
}

void WreathElement::requireSameShape(const WreathElement& o) const {
  if (m() != o.m() || n() != o.n()) throw std::invalid_argument("wreath elements of different shapes");
}

WreathElement& WreathElement::operator+=(const WreathElement& o) {
  requireSameShape(o);
  for (std::size_t k = 0; k < module_.size(); ++k) module_[k] += o.module_[k];
  for (std::size_t j = 0; j < tCoef_.size(); ++j) {
    tCoef_[j] += o.tCoef_[j];
    uCoef_[j] += o.uCoef_[j];
  }
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& o) {
  requireSameShape(o);
  for (std::size_t k = 0; k < module_.size(); ++k) module_[k] -= o.module_[k];
  for (std::size_t j = 0; j < tCoef_.size(); ++j) {
    tCoef_[j] -= o.tCoef_[j];
    uCoef_[j] -= o.uCoef_[j];
  }
  return *this;
}

WreathElement WreathElement::scaled(const Rational& c) const {
  WreathElement w = *this;
  for (MultiPoly& p : w.module_) p = p.scaled(c);
  for (Rational& v : w.tCoef_) v *= c;
  for (Rational& v : w.uCoef_) v *= c;
  return w;
}

std::string toString(const WreathElement& w) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < w.m(); ++k) {
    const MultiPoly& p = w.modulePart(k);
    if (p.isZero()) continue;
    parts.push_back("a" + std::to_string(k + 1) + "*(" + toString(p) + ")");
  }
  auto torus = [&](const std::vector<Rational>& coefs, char letter) {
    for (std::size_t j = 0; j < coefs.size(); ++j) {
      if (coefs[j] == 0) continue;
      std::string s = std::string(1, letter) + std::to_string(j + 1);
      parts.push_back(coefs[j] == 1 ? s : coefs[j].get_str() + "*" + s);
    }
  };
  torus(w.tCoefficients(), 't');
  torus(w.uCoefficients(), 'u');
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

// act(s) = sum_j s_t[j] t_j + s_u[j] t_j^2
MultiPoly torusAction(const WreathElement& w) {
  MultiPoly p(w.n());
  for (std::size_t j = 0; j < w.n(); ++j) {
    Exponent e(w.n(), 0);
    e[j] = 1;
    p.add(e, w.tCoefficients()[j]);
    e[j] = 2;
    p.add(e, w.uCoefficients()[j]);
  }
  return p;
}

}  // namespace

WreathElement wreathBracket(const WreathElement& p, const WreathElement& q, Mode mode) {
  if (p.m() != q.m() || p.n() != q.n()) throw std::invalid_argument("wreath elements of different shapes");
  if (mode == Mode::W && (!p.uBlockZero() || !q.uBlockZero())) {
    throw ModeMismatch("u-generators are not part of W");
  }
  const MultiPoly actP = torusAction(p);
  const MultiPoly actQ = torusAction(q);
  WreathElement out = WreathElement::zero(p.m(), p.n());
  for (std::size_t k = 0; k < p.m(); ++k) {
    MultiPoly v = p.modulePart(k) * actQ;
    v -= q.modulePart(k) * actP;
    if (!v.isZero()) out += WreathElement::moduleTerm(k, std::move(v), p.m());
  }
  return out;
}

std::optional<WreathElement> generatorImage(lie::Generator g, std::size_t m, std::size_t n, Mode mode) {
  switch (g.cls) {
    case lie::GenClass::a:
      if (g.index < m) return WreathElement::a(g.index, m, n);
      break;
    case lie::GenClass::t:
      if (g.index < n) return WreathElement::t(g.index, m, n);
      break;
    case lie::GenClass::u:
      if (mode == Mode::Wplus && g.index < n) return WreathElement::u(g.index, m, n);
      break;
    case lie::GenClass::x:
      break;
  }
  return std::nullopt;
}

WreathElement evaluateInModel(const lie::LieExpr& e, std::size_t m, std::size_t n, Mode mode) {
  return lie::evaluate<WreathElement>(
      e, [&](lie::Generator g) { return generatorImage(g, m, n, mode); },
      [&](const WreathElement& l, const WreathElement& r) { return wreathBracket(l, r, mode); });
}

SparseVector<Coordinate> coordinates(const WreathElement& w) {
  SparseVector<Coordinate> v;
  for (std::size_t k = 0; k < w.m(); ++k) {
    for (const auto& [e, c] : w.modulePart(k).terms()) {
      v.emplace(Coordinate{Coordinate::Module, static_cast<std::uint32_t>(k), e}, c);
    }
  }
  for (std::size_t j = 0; j < w.n(); ++j) {
    if (w.tCoefficients()[j] != 0) v.emplace(Coordinate{Coordinate::Torus, static_cast<std::uint32_t>(j), {}}, w.tCoefficients()[j]);
    if (w.uCoefficients()[j] != 0) v.emplace(Coordinate{Coordinate::TorusSquare, static_cast<std::uint32_t>(j), {}}, w.uCoefficients()[j]);
  }
  return v;
}

// Presentations -------------------------------------------------------------

using lie::Generator;
using lie::LieExpr;

std::string toString(const Relator& r) {
  std::string s = lie::toString(r.lhs) + " = ";
  s += r.rhs ? lie::toString(*r.rhs) : "0";
  return s;
}

namespace {

LieExpr word(Generator head, const std::vector<Generator>& rest) {
  std::vector<Generator> letters{head};
  letters.insert(letters.end(), rest.begin(), rest.end());
  return LieExpr::leftNormed(letters);
}

std::vector<Generator> torusLetters(const std::vector<std::uint32_t>& idx) {
  std::vector<Generator> out;
  for (std::uint32_t j : idx) out.push_back(Generator::t(j));
  return out;
}

// All sequences of length len over 0..base-1, in lexicographic order.
std::vector<std::vector<std::uint32_t>> sequences(std::uint32_t base, std::uint32_t len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(len, 0);
  if (len > 0 && base == 0) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = len;
    while (i > 0 && cur[i - 1] + 1 == base) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

void torusRelators(std::uint32_t n, bool withSquares, std::vector<Relator>& out) {
  auto pair = [](Generator l, Generator r) { return LieExpr::bracket(LieExpr::leaf(l), LieExpr::leaf(r)); };
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      out.push_back({"torus", pair(Generator::t(i), Generator::t(j)), std::nullopt});
      if (withSquares) {
        out.push_back({"torus", pair(Generator::t(i), Generator::u(j)), std::nullopt});
        out.push_back({"torus", pair(Generator::u(i), Generator::u(j)), std::nullopt});
      }
    }
  }
}

}  // namespace

Presentation finitePresentationWplus(std::uint32_t m, std::uint32_t n, std::uint32_t sMax) {
  Presentation p;
  p.name = "finite-wplus";
  p.generators = lie::Alphabet::wreathPlus(m, n).generators();
  p.bounds = {m, n, sMax};
  // strictly increasing subscript sets = subsets of {0..n-1} of size <= sMax
  std::vector<std::vector<std::uint32_t>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) s.push_back(j);
    }
    if (s.size() <= sMax) subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t l = 0; l < m; ++l) {
      for (const auto& s : subsets) {
        std::vector<Generator> rest = torusLetters(s);
        rest.push_back(Generator::a(l));
        p.relators.push_back({"module", word(Generator::a(k), rest), std::nullopt});
      }
    }
  }
  torusRelators(n, true, p.relators);
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t l = 0; l < n; ++l) {
      p.relators.push_back({"square", word(Generator::a(k), {Generator::u(l)}),
                            word(Generator::a(k), {Generator::t(l), Generator::t(l)})});
    }
  }
  return p;
}

Presentation infinitePresentationW(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters) {
  Presentation p;
  p.name = "infinite-w";
  p.generators = lie::Alphabet::wreath(m, n).generators();
  p.bounds = {m, n, maxLetters};
  torusRelators(n, false, p.relators);
  std::vector<std::vector<std::vector<std::uint32_t>>> byLength;
  for (std::uint32_t len = 0; len <= maxLetters; ++len) byLength.push_back(sequences(n, len));
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t l = 0; l < m; ++l) {
      for (std::uint32_t r = 0; r <= maxLetters; ++r) {
        for (std::uint32_t s = 0; r + s <= maxLetters; ++s) {
          for (const auto& is : byLength[r]) {
            for (const auto& js : byLength[s]) {
              LieExpr lhs = LieExpr::bracket(word(Generator::a(k), torusLetters(is)),
                                             word(Generator::a(l), torusLetters(js)));
              p.relators.push_back({"product", std::move(lhs), std::nullopt});
            }
          }
        }
      }
    }
  }
  return p;
}

Presentation permutationIdentities(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters, Mode mode) {
  Presentation p;
  p.name = "permutation";
  const lie::Alphabet alphabet = mode == Mode::Wplus ? lie::Alphabet::wreathPlus(m, n) : lie::Alphabet::wreath(m, n);
  p.generators = alphabet.generators();
  p.bounds = {m, n, maxLetters};
  std::vector<Generator> pool;
  for (const Generator& g : p.generators) {
    if (g.cls != lie::GenClass::a) pool.push_back(g);
  }
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t len = 2; len <= maxLetters; ++len) {
      for (const auto& seq : sequences(static_cast<std::uint32_t>(pool.size()), len)) {
        std::vector<Generator> letters;
        for (std::uint32_t i : seq) letters.push_back(pool[i]);
        std::vector<Generator> sorted = letters;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == letters) continue;
        p.relators.push_back({"permutation", word(Generator::a(k), letters), word(Generator::a(k), sorted)});
      }
    }
  }
  return p;
}

Presentation splittingConsequences(std::uint32_t m, std::uint32_t n, std::uint32_t maxLetters) {
  Presentation p;
  p.name = "splitting";
  p.generators = lie::Alphabet::wreath(m, n).generators();
  p.bounds = {m, n, maxLetters};
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t l = 0; l < m; ++l) {
      for (std::uint32_t s = 2; s <= maxLetters; ++s) {
        for (const auto& seq : sequences(n, s)) {
          for (std::uint32_t r = 1; r < s; ++r) {
            std::vector<std::uint32_t> front(seq.begin(), seq.begin() + r);
            std::vector<std::uint32_t> back(seq.begin() + r, seq.end());
            LieExpr lhs = LieExpr::bracket(word(Generator::a(l), torusLetters(front)),
                                           word(Generator::a(k), torusLetters(back)));
            p.relators.push_back({"splitting", std::move(lhs), std::nullopt});
          }
        }
      }
    }
  }
  return p;
}

CheckReport checkPresentation(const Presentation& pres, Mode mode) {
  CheckReport report;
  report.suite = pres.name;
  report.mode = mode;
  report.bounds = pres.bounds;
  const std::size_t m = pres.bounds.m;
  const std::size_t n = pres.bounds.n;
  for (const Relator& r : pres.relators) {
    ++report.checked;
    try {
      WreathElement v = evaluateInModel(r.lhs, m, n, mode);
      if (r.rhs) v -= evaluateInModel(*r.rhs, m, n, mode);
      if (!v.isZero()) report.failures.push_back(r.family + ": " + toString(r) + " evaluates to " + toString(v));
    } catch (const std::invalid_argument& err) {
      report.failures.push_back(r.family + ": " + toString(r) + ": " + err.what());
    }
  }
  return report;
}

// Splitting lemma ---------------------------------------------------------------------

Lemma5Instance lemma5Base(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("lemma5Base needs d >= 2");
  return {"base", WreathElement::a(0, d, d), WreathElement::a(1, d, d), WreathElement::t(0, d, d),
          WreathElement::u(0, d, d)};
}

Lemma5Instance lemma5InductionStep(std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("lemma5InductionStep needs d >= 2");
  const WreathElement t2 = WreathElement::t(1, d, d);
  return {"induction-step", wreathBracket(WreathElement::a(0, d, d), t2, Mode::Wplus),
          wreathBracket(WreathElement::a(1, d, d), t2, Mode::Wplus), WreathElement::t(0, d, d),
          WreathElement::u(0, d, d)};
}

Lemma5Report lemma5Suite(const Lemma5Instance& inst, std::uint32_t iMax, std::uint32_t jMax, Mode mode) {
  Lemma5Report report;
  report.label = inst.label;
  auto br = [mode](const WreathElement& l, const WreathElement& r) { return wreathBracket(l, r, mode); };
  const WreathElement& a = inst.a;
  const WreathElement& b = inst.b;
  const WreathElement& t = inst.t;
  const WreathElement& u = inst.u;
  struct Hypothesis {
    const char* name;
    std::function<WreathElement()> residual;
  };
  const std::vector<Hypothesis> hypotheses{
      {"[a,b]=0", [&] { return br(a, b); }},
      {"[a,t,b]=0", [&] { return br(br(a, t), b); }},
      {"[b,t,a]=0", [&] { return br(br(b, t), a); }},
      {"[t,u]=0", [&] { return br(t, u); }},
      {"[a,u]=[a,t,t]", [&] { return br(a, u) - br(br(a, t), t); }},
      {"[b,u]=[b,t,t]", [&] { return br(b, u) - br(br(b, t), t); }},
  };
  for (const Hypothesis& h : hypotheses) {
    try {
      if (!h.residual().isZero()) report.failedHypotheses.push_back(h.name);
    } catch (const std::invalid_argument& err) {
      report.failedHypotheses.push_back(std::string(h.name) + " (" + err.what() + ")");
    }
  }
  if (!report.failedHypotheses.empty()) return report;

  std::vector<WreathElement> as{a}, bs{b};
  for (std::uint32_t i = 0; i < iMax; ++i) as.push_back(br(as.back(), t));
  for (std::uint32_t j = 0; j < jMax; ++j) bs.push_back(br(bs.back(), t));
  for (std::uint32_t i = 0; i <= iMax; ++i) {
    for (std::uint32_t j = 0; j <= jMax; ++j) {
      ++report.checked;
      WreathElement v = br(as[i], bs[j]);
      if (!v.isZero()) {
        report.failures.push_back("[[a,t^" + std::to_string(i) + "],[b,t^" + std::to_string(j) + "]] = " + toString(v));
      }
    }
  }
  return report;
}

// Embedding ---------------------------------------------------------------------

WreathElement magnusImageOfGenerator(std::uint32_t i, std::uint32_t d) {
  return WreathElement::a(i, d, d) + WreathElement::t(i, d, d);
}

WreathElement magnusEmbed(const metabelian::MetabelianElement& e, std::uint32_t d) {
  WreathElement out = WreathElement::zero(d, d);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.head >= d) throw std::invalid_argument("monomial uses a generator beyond d");
    WreathElement v = magnusImageOfGenerator(mono.head, d);
    for (std::uint32_t q : mono.tail) {
      if (q >= d) throw std::invalid_argument("monomial uses a generator beyond d");
      v = wreathBracket(v, magnusImageOfGenerator(q, d), Mode::W);
    }
    out += v.scaled(c);
  }
  return out;
}

EmbeddingReport certifyEmbedding(std::uint32_t d, std::uint32_t nMax, std::uint64_t seed, std::size_t samples,
                                 std::size_t maxLength) {
  if (d < 1 || nMax < 1) throw std::invalid_argument("certifyEmbedding needs d >= 1 and nMax >= 1");
  EmbeddingReport report;
  report.d = d;
  report.nMax = nMax;
  for (std::uint32_t n = 1; n <= nMax; ++n) {
    const auto basis = metabelian::basisOfDegree(d, n);
    SparseEliminator<Coordinate> elim(true);
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
      const WreathElement img = magnusEmbed(metabelian::MetabelianElement::monomial(basis[idx]), d);
      if (n >= 2) {
        bool homogeneous = img.inBase();
        for (const MultiPoly& p : img.moduleParts()) {
          for (const auto& [e, c] : p.terms()) {
            std::uint32_t deg = 0;
            for (std::uint32_t v : e) deg += v;
            homogeneous = homogeneous && deg == n - 1;
          }
        }
        if (!homogeneous) {
          report.failures.push_back("image of " + metabelian::toString(basis[idx]) +
                                    " is not in the degree-" + std::to_string(n - 1) + " slice of B");
        }
      }
      auto outcome = elim.insert(coordinates(img));
      if (!outcome.independent && outcome.dependency) {
        std::string w;
        for (const auto& [id, c] : *outcome.dependency) {
          if (!w.empty()) w += " + ";
          w += "(" + c.get_str() + ")*" + metabelian::toString(basis[id]);
        }
        report.failures.push_back("degree " + std::to_string(n) + ": dependent image, " + w + " maps to 0");
      }
    }
    DegreeRank dr{n, elim.rank(), metabelian::dimOfDegree(d, n)};
    if (BigInt(static_cast<unsigned long>(dr.rank)) != dr.dim) {
      report.failures.push_back("degree " + std::to_string(n) + ": rank " + std::to_string(dr.rank) +
                                " != dim " + dr.dim.get_str());
    }
    report.degrees.push_back(std::move(dr));
  }

  std::mt19937_64 rng(seed);
  const std::vector<Generator> alphabet = lie::Alphabet::metabelian(d).generators();
  std::uniform_int_distribution<std::size_t> lengthDist(1, std::max<std::size_t>(1, maxLength));
  for (std::size_t s = 0; s < samples; ++s) {
    const LieExpr e = lie::randomExpr(rng, lengthDist(rng), alphabet);
    const WreathElement viaNormalForm = magnusEmbed(metabelian::normalizeExpr(e), d);
    const WreathElement direct = lie::evaluate<WreathElement>(
        e, [&](Generator g) { return std::optional<WreathElement>(magnusImageOfGenerator(g.index, d)); },
        [](const WreathElement& l, const WreathElement& r) { return wreathBracket(l, r, Mode::W); });
    ++report.homomorphismChecked;
    if (!(viaNormalForm == direct)) {
      report.failures.push_back("homomorphism fails on " + lie::toString(e) + ": " + toString(viaNormalForm) +
                                " vs " + toString(direct));
    }
  }
  return report;
}

// Model laws -------------------------------------------------------------------------

namespace {

WreathElement randomElement(std::mt19937_64& rng, std::size_t m, std::size_t n, Mode mode) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  std::uniform_int_distribution<int> count(0, 3);
  WreathElement w = WreathElement::zero(m, n);
  for (std::size_t k = 0; k < m; ++k) {
    MultiPoly p(n);
    for (int c = count(rng); c > 0; --c) {
      Exponent e(n);
      for (auto& v : e) v = expo(rng);
      p.add(e, coef(rng));
    }
    w += WreathElement::moduleTerm(k, std::move(p), m);
  }
  for (std::size_t j = 0; j < n; ++j) {
    w += WreathElement::t(j, m, n).scaled(coef(rng));
    if (mode == Mode::Wplus) w += WreathElement::u(j, m, n).scaled(coef(rng));
  }
  return w;
}

WreathElement basePart(const WreathElement& w) {
  WreathElement b = WreathElement::zero(w.m(), w.n());
  for (std::size_t k = 0; k < w.m(); ++k) b += WreathElement::moduleTerm(k, w.modulePart(k), w.m());
  return b;
}

}  // namespace

CheckReport modelLawsSuite(std::uint32_t d, Mode mode, std::uint64_t seed, std::size_t samples,
                           std::uint32_t maxLetters) {
  if (d < 1) throw std::invalid_argument("modelLawsSuite needs d >= 1");
  CheckReport report;
  report.suite = "model-laws";
  report.mode = mode;
  report.bounds = {d, d, maxLetters};
  auto br = [mode](const WreathElement& l, const WreathElement& r) { return wreathBracket(l, r, mode); };
  auto expect = [&](bool ok, const std::string& what) {
    ++report.checked;
    if (!ok) report.failures.push_back(what);
  };

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const WreathElement p = randomElement(rng, d, d, mode);
    const WreathElement q = randomElement(rng, d, d, mode);
    const WreathElement r = randomElement(rng, d, d, mode);
    const WreathElement pq = br(p, q);
    const std::string tag = " (sample " + std::to_string(s) + ")";
    expect((pq + br(q, p)).isZero(), "antisymmetry" + tag);
    expect((br(pq, r) + br(br(q, r), p) + br(br(r, p), q)).isZero(), "Jacobi" + tag);
    expect(pq.inBase(), "commutator outside B" + tag);
    expect(br(basePart(p), basePart(q)).isZero(), "[B,B] != 0" + tag);
  }

  if (mode == Mode::Wplus) {
    for (std::uint32_t k = 0; k < d; ++k) {
      for (std::uint32_t i = 0; i < d; ++i) {
        Exponent e(d, 0);
        e[i] = 2;
        expect(br(WreathElement::a(k, d, d), WreathElement::u(i, d, d)) ==
                   WreathElement::moduleTerm(k, MultiPoly::monomial(e), d),
               "[a" + std::to_string(k + 1) + ",u" + std::to_string(i + 1) + "] != a*t^2");
      }
    }
  }

  // [a_l, t_j1..t_js] = a_l t_j1..t_js, and these span each slice of B.
  for (std::uint32_t s = 0; s <= maxLetters; ++s) {
    SparseEliminator<Coordinate> elim;
    for (std::uint32_t l = 0; l < d; ++l) {
      for (const auto& seq : sequences(d, s)) {
        WreathElement v = WreathElement::a(l, d, d);
        Exponent e(d, 0);
        for (std::uint32_t j : seq) {
          v = br(v, WreathElement::t(j, d, d));
          ++e[j];
        }
        expect(v == WreathElement::moduleTerm(l, MultiPoly::monomial(e), d),
               "spanning monomial mismatch for a" + std::to_string(l + 1));
        elim.insert(coordinates(v));
      }
    }
    const BigInt sliceDim = BigInt(d) * binomial(s + d - 1, d - 1);
    expect(BigInt(static_cast<unsigned long>(elim.rank())) == sliceDim,
           "slice of degree " + std::to_string(s) + " has rank " + std::to_string(elim.rank()) + " != " +
               sliceDim.get_str());
  }
  return report;
}

}  // namespace metagrowth::wreath
