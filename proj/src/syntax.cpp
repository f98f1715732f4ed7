#include "qlprop/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "qlprop/error.hpp"

namespace qlprop {

bool is_identifier(std::string_view name) {
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) {
    return head(c) || (c >= '0' && c <= '9') || c == '+' || c == '-';
  };
  return !name.empty() && head(name.front()) &&
         std::all_of(name.begin() + 1, name.end(), tail);
}

// ---------------------------------------------------------------------------
// Trees

struct Formula::Node {
  Kind kind;
  PropertyId property;
  std::shared_ptr<const Node> left, right;
  std::size_t depth;
};

Formula Formula::atom(PropertyId property) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(property), nullptr, nullptr, 1}));
}

Formula Formula::negation(Formula inner) {
  std::size_t d = inner.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Kind::kNot, {}, std::move(inner.node_), nullptr, d}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{
      Kind::kAnd, {}, std::move(left.node_), std::move(right.node_), d}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{
      Kind::kOr, {}, std::move(left.node_), std::move(right.node_), d}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const PropertyId& Formula::property() const {
  assert(kind() == Kind::kAtom);
  return node_->property;
}
Formula Formula::inner() const {
  assert(kind() == Kind::kNot);
  return Formula(node_->left);
}
Formula Formula::left() const {
  assert(node_->right != nullptr);
  return Formula(node_->left);
}
Formula Formula::right() const {
  assert(node_->right != nullptr);
  return Formula(node_->right);
}
std::size_t Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
  switch (a.kind()) {
    case Formula::Kind::kAtom:
      return a.property() == b.property();
    case Formula::Kind::kNot:
      return a.inner() == b.inner();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

struct TQFormula::Node {
  Kind kind;
  PropertyId property;
  std::shared_ptr<const Node> left, right;
  std::size_t depth;
};

TQFormula TQFormula::atom(PropertyId property) {
  return TQFormula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(property), nullptr, nullptr, 1}));
}

TQFormula TQFormula::conjunction(TQFormula left, TQFormula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return TQFormula(std::make_shared<const Node>(Node{
      Kind::kAnd, {}, std::move(left.node_), std::move(right.node_), d}));
}

TQFormula TQFormula::qnot(TQFormula inner) {
  std::size_t d = inner.depth() + 1;
  return TQFormula(std::make_shared<const Node>(
      Node{Kind::kQNot, {}, std::move(inner.node_), nullptr, d}));
}

TQFormula TQFormula::qor(TQFormula left, TQFormula right) {
  return qnot(conjunction(qnot(std::move(left)), qnot(std::move(right))));
}

TQFormula TQFormula::sasaki(TQFormula left, TQFormula right) {
  return qor(qnot(left), conjunction(left, std::move(right)));
}

TQFormula::Kind TQFormula::kind() const { return node_->kind; }
const PropertyId& TQFormula::property() const {
  assert(kind() == Kind::kAtom);
  return node_->property;
}
TQFormula TQFormula::inner() const {
  assert(kind() == Kind::kQNot);
  return TQFormula(node_->left);
}
TQFormula TQFormula::left() const {
  assert(kind() == Kind::kAnd);
  return TQFormula(node_->left);
}
TQFormula TQFormula::right() const {
  assert(kind() == Kind::kAnd);
  return TQFormula(node_->right);
}
std::size_t TQFormula::depth() const { return node_->depth; }

bool operator==(const TQFormula& a, const TQFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
  switch (a.kind()) {
    case TQFormula::Kind::kAtom:
      return a.property() == b.property();
    case TQFormula::Kind::kQNot:
      return a.inner() == b.inner();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

struct AssertiveFormula::Node {
  Kind kind;
  std::optional<TQFormula> content;
  std::shared_ptr<const Node> left, right;
  std::size_t depth;
};

AssertiveFormula AssertiveFormula::assertion(TQFormula content) {
  return AssertiveFormula(std::make_shared<const Node>(
      Node{Kind::kAssert, std::move(content), nullptr, nullptr, 1}));
}

AssertiveFormula AssertiveFormula::n(AssertiveFormula inner) {
  std::size_t d = inner.depth() + 1;
  return AssertiveFormula(std::make_shared<const Node>(
      Node{Kind::kN, std::nullopt, std::move(inner.node_), nullptr, d}));
}

AssertiveFormula AssertiveFormula::k(AssertiveFormula left,
                                     AssertiveFormula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return AssertiveFormula(std::make_shared<const Node>(
      Node{Kind::kK, std::nullopt, std::move(left.node_),
           std::move(right.node_), d}));
}

AssertiveFormula AssertiveFormula::a(AssertiveFormula left,
                                     AssertiveFormula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  return AssertiveFormula(std::make_shared<const Node>(
      Node{Kind::kA, std::nullopt, std::move(left.node_),
           std::move(right.node_), d}));
}

AssertiveFormula::Kind AssertiveFormula::kind() const { return node_->kind; }
const TQFormula& AssertiveFormula::content() const {
  assert(kind() == Kind::kAssert);
  return *node_->content;
}
AssertiveFormula AssertiveFormula::inner() const {
  assert(kind() == Kind::kN);
  return AssertiveFormula(node_->left);
}
AssertiveFormula AssertiveFormula::left() const {
  assert(node_->right != nullptr);
  return AssertiveFormula(node_->left);
}
AssertiveFormula AssertiveFormula::right() const {
  assert(node_->right != nullptr);
  return AssertiveFormula(node_->right);
}
std::size_t AssertiveFormula::depth() const { return node_->depth; }

bool operator==(const AssertiveFormula& a, const AssertiveFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.depth() != b.depth()) return false;
  switch (a.kind()) {
    case AssertiveFormula::Kind::kAssert:
      return a.content() == b.content();
    case AssertiveFormula::Kind::kN:
      return a.inner() == b.inner();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kNot,     // ! ~
  kAnd,     // &
  kOr,      // |
  kQNot,    // ~q
  kQOr,     // |q
  kSasaki,  // ->q
  kAssert,  // |-
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_head(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool ident_tail(char c) {
  return ident_head(c) || (c >= '0' && c <= '9') || c == '+' || c == '-';
}

// `~q` and `|q` are quantum tokens unless the `q` starts a longer identifier,
// so `~qE(x)` is classical negation of the atom qE(x).
std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto q_suffix = [&](std::size_t at) {
    return at < s.size() && s[at] == 'q' &&
           (at + 1 >= s.size() || !ident_tail(s[at + 1]));
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_head(c)) {
      while (i < s.size() && ident_tail(s[i])) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)),
                     start});
      continue;
    }
    switch (c) {
      case '(':
        out.push_back({Tok::kLParen, "(", start});
        ++i;
        break;
      case ')':
        out.push_back({Tok::kRParen, ")", start});
        ++i;
        break;
      case '&':
        out.push_back({Tok::kAnd, "&", start});
        ++i;
        break;
      case '!':
        out.push_back({Tok::kNot, "!", start});
        ++i;
        break;
      case '~':
        if (q_suffix(i + 1)) {
          out.push_back({Tok::kQNot, "~q", start});
          i += 2;
        } else {
          out.push_back({Tok::kNot, "~", start});
          ++i;
        }
        break;
      case '|':
        if (i + 1 < s.size() && s[i + 1] == '-') {
          out.push_back({Tok::kAssert, "|-", start});
          i += 2;
        } else if (q_suffix(i + 1)) {
          out.push_back({Tok::kQOr, "|q", start});
          i += 2;
        } else {
          out.push_back({Tok::kOr, "|", start});
          ++i;
        }
        break;
      case '-':
        if (s.substr(i, 3) == "->q") {
          out.push_back({Tok::kSasaki, "->q", start});
          i += 3;
          break;
        }
        throw SyntaxError(start, "'->q'");
      default:
        throw SyntaxError(start, "a token (unexpected character)");
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {
    if (toks_.size() == 1) throw SyntaxError(0, "a formula (input is empty)");
  }

  Formula lx() {
    for (const Token& t : toks_) {
      if (t.kind == Tok::kQNot || t.kind == Tok::kQOr ||
          t.kind == Tok::kSasaki || t.kind == Tok::kAssert) {
        throw UnknownConnective(t.pos, t.text);
      }
    }
    Formula f = lx_or();
    expect_end();
    return f;
  }

  TQFormula tq() {
    for (const Token& t : toks_) {
      if (t.kind == Tok::kNot || t.kind == Tok::kOr) {
        throw ClassicalConnectiveInTQ(t.pos, t.text);
      }
    }
    TQFormula f = tq_sasaki();
    expect_end();
    return f;
  }

  AssertiveFormula prag() {
    for (const Token& t : toks_) {
      if (t.kind == Tok::kNot || t.kind == Tok::kOr) {
        throw ClassicalConnectiveInTQ(t.pos, t.text);
      }
    }
    AssertiveFormula f = af_or();
    expect_end();
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  bool peek_word(std::string_view w) const {
    return peek().kind == Tok::kIdent && peek().text == w;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw SyntaxError(peek().pos, what);
  }
  void expect_end() {
    if (peek().kind != Tok::kEnd) {
      throw SyntaxError(peek().pos, "end of input");
    }
  }

  PropertyId atom_name() {
    if (peek().kind != Tok::kIdent) {
      throw SyntaxError(peek().pos, "an atom 'E(x)' or '('");
    }
    PropertyId name = peek().text;
    ++pos_;
    expect(Tok::kLParen, "'(' after property name");
    if (!peek_word("x")) throw SyntaxError(peek().pos, "the variable 'x'");
    ++pos_;
    expect(Tok::kRParen, "')'");
    return name;
  }

  Formula lx_or() {
    Formula f = lx_and();
    while (accept(Tok::kOr)) f = Formula::disjunction(f, lx_and());
    return f;
  }
  Formula lx_and() {
    Formula f = lx_unary();
    while (accept(Tok::kAnd)) f = Formula::conjunction(f, lx_unary());
    return f;
  }
  Formula lx_unary() {
    if (accept(Tok::kNot)) return Formula::negation(lx_unary());
    if (accept(Tok::kLParen)) {
      Formula f = lx_or();
      expect(Tok::kRParen, "')'");
      return f;
    }
    return Formula::atom(atom_name());
  }

  TQFormula tq_sasaki() {
    TQFormula f = tq_or();
    while (accept(Tok::kSasaki)) f = TQFormula::sasaki(f, tq_or());
    return f;
  }
  TQFormula tq_or() {
    TQFormula f = tq_and();
    while (accept(Tok::kQOr)) f = TQFormula::qor(f, tq_and());
    return f;
  }
  TQFormula tq_and() {
    TQFormula f = tq_unary();
    while (accept(Tok::kAnd)) f = TQFormula::conjunction(f, tq_unary());
    return f;
  }
  TQFormula tq_unary() {
    if (accept(Tok::kQNot)) return TQFormula::qnot(tq_unary());
    if (accept(Tok::kLParen)) {
      TQFormula f = tq_sasaki();
      expect(Tok::kRParen, "')'");
      return f;
    }
    return TQFormula::atom(atom_name());
  }

  AssertiveFormula af_or() {
    AssertiveFormula f = af_and();
    while (peek_word("A")) {
      ++pos_;
      f = AssertiveFormula::a(f, af_and());
    }
    return f;
  }
  AssertiveFormula af_and() {
    AssertiveFormula f = af_unary();
    while (peek_word("K")) {
      ++pos_;
      f = AssertiveFormula::k(f, af_unary());
    }
    return f;
  }
  AssertiveFormula af_unary() {
    if (peek_word("N")) {
      ++pos_;
      return AssertiveFormula::n(af_unary());
    }
    if (accept(Tok::kAssert)) return AssertiveFormula::assertion(tq_unary());
    if (accept(Tok::kLParen)) {
      AssertiveFormula f = af_or();
      expect(Tok::kRParen, "')'");
      return f;
    }
    throw SyntaxError(peek().pos, "'|-', 'N' or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printers; a subformula is parenthesized when
// it binds more loosely than its slot requires.
std::string wrap(std::string s, int level, int min_level) {
  return level < min_level ? "(" + s + ")" : s;
}

std::string fmt_lx(const Formula& f, int min_level) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return f.property() + "(x)";
    case Formula::Kind::kNot:
      return "!" + fmt_lx(f.inner(), 3);
    case Formula::Kind::kAnd:
      return wrap(fmt_lx(f.left(), 2) + " & " + fmt_lx(f.right(), 3), 2,
                  min_level);
    case Formula::Kind::kOr:
      return wrap(fmt_lx(f.left(), 1) + " | " + fmt_lx(f.right(), 2), 1,
                  min_level);
  }
  return {};
}

std::string fmt_tq(const TQFormula& f, int min_level) {
  if (auto ops = match_qor(f)) {
    const auto& [a, b] = *ops;
    if (a.kind() == TQFormula::Kind::kQNot &&
        b.kind() == TQFormula::Kind::kAnd && b.left() == a.inner()) {
      return wrap(fmt_tq(a.inner(), 1) + " ->q " + fmt_tq(b.right(), 2), 1,
                  min_level);
    }
    return wrap(fmt_tq(a, 2) + " |q " + fmt_tq(b, 3), 2, min_level);
  }
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      return f.property() + "(x)";
    case TQFormula::Kind::kQNot:
      return "~q " + fmt_tq(f.inner(), 4);
    case TQFormula::Kind::kAnd:
      return wrap(fmt_tq(f.left(), 3) + " & " + fmt_tq(f.right(), 4), 3,
                  min_level);
  }
  return {};
}

std::string fmt_prag(const AssertiveFormula& f, int min_level) {
  switch (f.kind()) {
    case AssertiveFormula::Kind::kAssert:
      return "|- " + fmt_tq(f.content(), 4);
    case AssertiveFormula::Kind::kN:
      return "N " + fmt_prag(f.inner(), 3);
    case AssertiveFormula::Kind::kK:
      return wrap(fmt_prag(f.left(), 2) + " K " + fmt_prag(f.right(), 3), 2,
                  min_level);
    case AssertiveFormula::Kind::kA:
      return wrap(fmt_prag(f.left(), 1) + " A " + fmt_prag(f.right(), 2), 1,
                  min_level);
  }
  return {};
}

void collect(const Formula& f, std::set<PropertyId>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out.insert(f.property());
      break;
    case Formula::Kind::kNot:
      collect(f.inner(), out);
      break;
    default:
      collect(f.left(), out);
      collect(f.right(), out);
  }
}

void collect(const TQFormula& f, std::set<PropertyId>& out) {
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      out.insert(f.property());
      break;
    case TQFormula::Kind::kQNot:
      collect(f.inner(), out);
      break;
    case TQFormula::Kind::kAnd:
      collect(f.left(), out);
      collect(f.right(), out);
  }
}

}  // namespace

Formula parse_lx(std::string_view text) { return Parser(text).lx(); }
TQFormula parse_tq(std::string_view text) { return Parser(text).tq(); }
AssertiveFormula parse_prag(std::string_view text) {
  return Parser(text).prag();
}

std::string format_lx(const Formula& f) { return fmt_lx(f, 0); }
std::string format_tq(const TQFormula& f) { return fmt_tq(f, 0); }
std::string format_prag(const AssertiveFormula& f) { return fmt_prag(f, 0); }

std::set<PropertyId> atoms_of(const Formula& f) {
  std::set<PropertyId> out;
  collect(f, out);
  return out;
}

std::set<PropertyId> atoms_of(const TQFormula& f) {
  std::set<PropertyId> out;
  collect(f, out);
  return out;
}

std::optional<std::pair<TQFormula, TQFormula>> match_qor(const TQFormula& f) {
  if (f.kind() != TQFormula::Kind::kQNot) return std::nullopt;
  TQFormula conj = f.inner();
  if (conj.kind() != TQFormula::Kind::kAnd) return std::nullopt;
  TQFormula l = conj.left();
  TQFormula r = conj.right();
  if (l.kind() != TQFormula::Kind::kQNot || r.kind() != TQFormula::Kind::kQNot)
    return std::nullopt;
  return std::make_pair(l.inner(), r.inner());
}

}  // namespace qlprop
