#pragma once

// Finite posets and lattices: construction with validation, induced quotient
// orders, exhaustive axiom checks with witnesses, order isomorphism search,
// and Hasse-diagram export.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlprop/error.hpp"

namespace qlprop {

class FinitePoset {
 public:
  /// Throws NotAPartialOrder (with the offending pair or triple) unless
  /// `leq[i][j]` is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<std::string> labels,
              std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  /// j covers i: i < j with nothing strictly between.
  bool covers(std::size_t j, std::size_t i) const;

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> join(std::size_t i, std::size_t j) const;

  /// Covering pairs (lower, upper), lexicographic by index.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

template <typename Leq>
FinitePoset build_poset(std::vector<std::string> labels, Leq&& leq) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = leq(i, j);
  }
  return FinitePoset(std::move(labels), std::move(table));
}

/// A bounded lattice with an orthocomplementation candidate. The meet and join
/// tables are validated as glb/lub of the poset; the ortho laws themselves
/// are left to check_ortho_modular.
class OrthoLattice {
 public:
  /// Derives meet/join from the order; throws MeetJoinMissing.
  OrthoLattice(FinitePoset poset, std::vector<std::size_t> ortho);
  /// Uses the given tables; throws NotAnOrthoLattice if they are not the
  /// glb/lub of `poset`.
  OrthoLattice(FinitePoset poset, std::vector<std::vector<std::size_t>> meet,
               std::vector<std::vector<std::size_t>> join,
               std::vector<std::size_t> ortho);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i][j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
  std::size_t ortho(std::size_t i) const { return ortho_[i]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  void init_bounds();

  FinitePoset poset_;
  std::vector<std::vector<std::size_t>> meet_, join_;
  std::vector<std::size_t> ortho_;
  std::size_t bottom_ = 0, top_ = 0;
};

struct LawResult {
  LawResult() = default;
  explicit LawResult(std::string law_name) : name(std::move(law_name)) {}

  std::string name;
  bool passed = true;
  /// false for laws that are only reported (never gate a suite).
  bool asserted = true;
  std::size_t failures = 0;
  /// Every failing tuple of element indices, in search order.
  std::vector<std::vector<std::size_t>> witnesses;

  bool has_witness(const std::vector<std::size_t>& tuple) const;
};

struct LawReport {
  std::vector<LawResult> laws;

  /// True iff every asserted law passed.
  bool passed() const;
  /// Throws std::out_of_range for an unknown name.
  const LawResult& law(std::string_view name) const;
};

/// Bounded, both distributive laws, uniquely complemented. Throws
/// MeetJoinMissing if some pair lacks a meet or join.
LawReport check_boolean(const FinitePoset& p);

/// Orthocomplementation laws, orthomodular law, atomicity, atomisticity and
/// the covering law (asserted), plus modularity (reported only).
LawReport check_ortho_modular(const OrthoLattice& l);

/// The Boolean lattice of subsets of {0..n-1} with set complement.
OrthoLattice power_set_lattice(std::size_t n);
/// The hexagon O6: 0 < a < b < 1 and 0 < b' < a' < 1. An ortholattice that is
/// not orthomodular.
OrthoLattice hexagon_lattice();

struct Quotient {
  FinitePoset poset;
  std::vector<std::size_t> representative;  // item index, per class
  std::vector<std::size_t> class_of;        // class index, per item
};

/// Classes of `equiv` (representative = first item of each class) ordered by
/// the order `leq` induces on them. Throws IncompatiblePreorder if `leq` does
/// not respect `equiv`.
template <typename T, typename Equiv, typename Leq, typename Label>
Quotient quotient_poset(const std::vector<T>& items, Equiv&& equiv, Leq&& leq,
                        Label&& label) {
  std::vector<std::size_t> reps, class_of(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t c = 0;
    while (c < reps.size() && !equiv(items[reps[c]], items[i])) ++c;
    if (c == reps.size()) reps.push_back(i);
    class_of[i] = c;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (leq(items[i], items[j]) !=
          leq(items[reps[class_of[i]]], items[reps[class_of[j]]])) {
        throw IncompatiblePreorder("order differs between items " +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   " and their class representatives");
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r : reps) labels.push_back(label(items[r]));
  FinitePoset poset = build_poset(std::move(labels), [&](std::size_t a,
                                                         std::size_t b) {
    return static_cast<bool>(leq(items[reps[a]], items[reps[b]]));
  });
  return Quotient{std::move(poset), std::move(reps), std::move(class_of)};
}

/// An order isomorphism a -> b (as a vector of b-indices) if one exists.
/// Throws SearchCapExceeded if either poset has more than `cap` elements.
std::optional<std::vector<std::size_t>> order_isomorphic(const FinitePoset& a,
                                                         const FinitePoset& b,
                                                         std::size_t cap = 12);

/// DOT digraph of the Hasse diagram, edges from lower to upper element.
std::string export_dot(const FinitePoset& p);

}  // namespace qlprop
