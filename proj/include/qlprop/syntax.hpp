#pragma once

// Abstract syntax, parsers and printers for the three formula languages:
//
//   classical   E(x)  !a  ~a  a & b  a | b
//   quantum     E(x)  ~q a  a & b  a |q b  a ->q b
//   pragmatic   |- E(x)  N a  a K b  a A b
//
// Every formula has the single free variable x. Quantum join and the Sasaki
// hook are eliminated at parse time, so a TQFormula only ever contains atoms,
// conjunctions and quantum negations.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace qlprop {

using PropertyId = std::string;

/// Checks the IDENT token grammar `[A-Za-z_][A-Za-z0-9_+\-]*`.
bool is_identifier(std::string_view name);

class Formula {
 public:
  enum class Kind { kAtom, kNot, kAnd, kOr };

  static Formula atom(PropertyId property);
  static Formula negation(Formula inner);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);

  Kind kind() const;
  const PropertyId& property() const;
  Formula inner() const;
  Formula left() const;
  Formula right() const;

  /// Atoms have depth 1; every connective adds one level.
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class TQFormula {
 public:
  enum class Kind { kAtom, kAnd, kQNot };

  static TQFormula atom(PropertyId property);
  static TQFormula conjunction(TQFormula left, TQFormula right);
  static TQFormula qnot(TQFormula inner);
  /// a |q b, i.e. ~q(~q a & ~q b).
  static TQFormula qor(TQFormula left, TQFormula right);
  /// a ->q b, i.e. (~q a) |q (a & b).
  static TQFormula sasaki(TQFormula left, TQFormula right);

  Kind kind() const;
  const PropertyId& property() const;
  TQFormula inner() const;
  TQFormula left() const;
  TQFormula right() const;
  std::size_t depth() const;

  friend bool operator==(const TQFormula& a, const TQFormula& b);

 private:
  struct Node;
  explicit TQFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class AssertiveFormula {
 public:
  enum class Kind { kAssert, kN, kK, kA };

  static AssertiveFormula assertion(TQFormula content);
  static AssertiveFormula n(AssertiveFormula inner);
  static AssertiveFormula k(AssertiveFormula left, AssertiveFormula right);
  static AssertiveFormula a(AssertiveFormula left, AssertiveFormula right);

  Kind kind() const;
  /// The asserted quantum formula of a kAssert node.
  const TQFormula& content() const;
  AssertiveFormula inner() const;
  AssertiveFormula left() const;
  AssertiveFormula right() const;
  std::size_t depth() const;

  friend bool operator==(const AssertiveFormula& a, const AssertiveFormula& b);

 private:
  struct Node;
  explicit AssertiveFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse_lx(std::string_view text);
TQFormula parse_tq(std::string_view text);
AssertiveFormula parse_prag(std::string_view text);

// Canonical minimal-parenthesis renderings; parse(format(f)) == f.
// format_tq re-sugars ~q(~q a & ~q b) as `a |q b` and recognizes the Sasaki
// hook pattern.
std::string format_lx(const Formula& f);
std::string format_tq(const TQFormula& f);
std::string format_prag(const AssertiveFormula& f);

std::set<PropertyId> atoms_of(const Formula& f);
std::set<PropertyId> atoms_of(const TQFormula& f);

/// The operands (a, b) when `f` has the shape ~q(~q a & ~q b).
std::optional<std::pair<TQFormula, TQFormula>> match_qor(const TQFormula& f);

}  // namespace qlprop
