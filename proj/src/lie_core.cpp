#include "metagrowth/lie_core.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace metagrowth::lie {

char classLetter(GenClass c) {
  switch (c) {
    case GenClass::x: return 'x';
    case GenClass::a: return 'a';
    case GenClass::t: return 't';
    case GenClass::u: return 'u';
  }
  return '?';
}

std::string toString(Generator g) {
  return std::string(1, classLetter(g.cls)) + std::to_string(g.index + 1);
}

std::uint32_t Alphabet::bound(GenClass c) const {
  switch (c) {
    case GenClass::x: return x;
    case GenClass::a: return a;
    case GenClass::t: return t;
    case GenClass::u: return u;
  }
  return 0;
}

std::vector<Generator> Alphabet::generators() const {
  std::vector<Generator> out;
  for (GenClass c : {GenClass::x, GenClass::a, GenClass::t, GenClass::u}) {
    for (std::uint32_t i = 0; i < bound(c); ++i) out.push_back({c, i});
  }
  return out;
}

// LieExpr --------------------------------------------------------------------

LieExpr LieExpr::leaf(Generator g) {
  auto n = std::make_shared<Node>();
  n->gen = g;
  return LieExpr(std::move(n));
}

LieExpr LieExpr::bracket(LieExpr left, LieExpr right) {
  auto n = std::make_shared<Node>();
  n->length = left.length() + right.length();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return LieExpr(std::move(n));
}

LieExpr LieExpr::leftNormed(std::span<const Generator> letters) {
  if (letters.empty()) throw std::invalid_argument("left-normed word must be nonempty");
  LieExpr e = leaf(letters.front());
  for (std::size_t i = 1; i < letters.size(); ++i) e = bracket(std::move(e), leaf(letters[i]));
  return e;
}

Generator LieExpr::generator() const {
  if (!isLeaf()) throw std::logic_error("generator() called on a bracket");
  return node_->gen;
}

LieExpr LieExpr::left() const {
  if (isLeaf()) throw std::logic_error("left() called on a leaf");
  return LieExpr(node_->left);
}

LieExpr LieExpr::right() const {
  if (isLeaf()) throw std::logic_error("right() called on a leaf");
  return LieExpr(node_->right);
}

bool LieExpr::operator==(const LieExpr& other) const {
  if (node_ == other.node_) return true;
  if (length() != other.length() || isLeaf() != other.isLeaf()) return false;
  if (isLeaf()) return generator() == other.generator();
  return left() == other.left() && right() == other.right();
}

// Words and combinations ------------------------------------------------------

std::string toString(const LeftNormedWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ',';
    s += toString(w.letters[i]);
  }
  return s + ")";
}

FormalCombination FormalCombination::single(LeftNormedWord w, Rational c) {
  FormalCombination f;
  f.add(w, c);
  return f;
}

FormalCombination& FormalCombination::operator+=(const FormalCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FormalCombination& FormalCombination::operator-=(const FormalCombination& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FormalCombination FormalCombination::scaled(const Rational& c) const {
  FormalCombination f;
  if (c == 0) return f;
  for (const auto& [w, v] : terms_) f.terms_.emplace(w, v * c);
  return f;
}

Rational FormalCombination::coefficient(const LeftNormedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string toString(const FormalCombination& c) {
  if (c.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, coef] : c.terms()) {
    if (!first) s += coef < 0 ? " - " : " + ";
    else if (coef < 0) s += "-";
    first = false;
    Rational mag = abs(coef);
    if (mag != 1) s += mag.get_str() + "*";
    s += toString(w);
  }
  return s;
}

namespace {

// comb * R where comb is a left-normed combination and R an arbitrary tree:
// [u, [v, w]] = [[u, v], w] - [[u, w], v].
FormalCombination rightMultiply(const FormalCombination& comb, const LieExpr& r) {
  if (r.isLeaf()) {
    FormalCombination out;
    const Generator g = r.generator();
    for (const auto& [w, c] : comb.terms()) {
      LeftNormedWord ext = w;
      ext.letters.push_back(g);
      out.add(ext, c);
    }
    return out;
  }
  const LieExpr v = r.left();
  const LieExpr w = r.right();
  FormalCombination out = rightMultiply(rightMultiply(comb, v), w);
  out -= rightMultiply(rightMultiply(comb, w), v);
  return out;
}

}  // namespace

FormalCombination leftNormalize(const LieExpr& e) {
  if (e.isLeaf()) return FormalCombination::single(LeftNormedWord{{e.generator()}});
  return rightMultiply(leftNormalize(e.left()), e.right());
}

// Text format ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LieExpr parseAll() {
    LieExpr e = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) fail("trailing characters");
    return e;
  }

 private:
  LieExpr parseExpr() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '[') {
      ++pos_;
      LieExpr acc = parseExpr();
      std::size_t items = 1;
      for (;;) {
        skipSpace();
        if (pos_ >= text_.size()) fail("missing ']'");
        if (text_[pos_] == ']') {
          ++pos_;
          break;
        }
        if (text_[pos_] != ',') fail("expected ',' or ']'");
        ++pos_;
        acc = LieExpr::bracket(std::move(acc), parseExpr());
        ++items;
      }
      if (items < 2) fail("a bracket needs at least two entries");
      return acc;
    }
    return LieExpr::leaf(parseGenerator());
  }

  Generator parseGenerator() {
    GenClass cls;
    switch (text_[pos_]) {
      case 'x': cls = GenClass::x; break;
      case 'a': cls = GenClass::a; break;
      case 't': cls = GenClass::t; break;
      case 'u': cls = GenClass::u; break;
      default: fail("expected a generator (x, a, t or u followed by an index)");
    }
    ++pos_;
    std::uint32_t idx = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, idx);
    if (ec != std::errc() || ptr == begin) fail("missing generator index");
    if (idx == 0) fail("generator indices start at 1");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return {cls, idx - 1};
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LieExpr parseExpr(std::string_view text) { return Parser(text).parseAll(); }

std::string toString(const LieExpr& e) {
  if (e.isLeaf()) return toString(e.generator());
  std::vector<LieExpr> rights;
  LieExpr head = e;
  while (!head.isLeaf()) {
    rights.push_back(head.right());
    head = head.left();
  }
  std::string s = "[" + toString(head.generator());
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) s += "," + toString(*it);
  return s + "]";
}

LieExpr randomExpr(std::mt19937_64& rng, std::size_t length, std::span<const Generator> alphabet) {
  if (length == 0) throw std::invalid_argument("expression length must be positive");
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  if (length == 1) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    return LieExpr::leaf(alphabet[pick(rng)]);
  }
  std::uniform_int_distribution<std::size_t> split(1, length - 1);
  const std::size_t k = split(rng);
  LieExpr l = randomExpr(rng, k, alphabet);
  LieExpr r = randomExpr(rng, length - k, alphabet);
  return LieExpr::bracket(std::move(l), std::move(r));
}

}  // namespace metagrowth::lie
