#pragma once

// Semantics of the quantum language over a Hilbert-annotated model. Each
// formula is mapped to the property whose subspace it denotes; truth,
// physical propositions and Q-truth are read off that property.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlprop/hilbert.hpp"
#include "qlprop/model.hpp"
#include "qlprop/semantics.hpp"
#include "qlprop/syntax.hpp"

namespace qlprop {

enum class QTruth { kTrue, kFalse, kIndeterminate };

/// "QTrue", "QFalse" or "QIndeterminate".
std::string to_string(QTruth v);

/// Evaluation context for one model. Construction requires the model's
/// properties to be closed under ortho, meet and join (NoHilbertAnnotation,
/// NotOperationClosed otherwise).
class QuantumEvaluator {
 public:
  explicit QuantumEvaluator(const Model& m);

  const Model& model() const { return *model_; }
  const PropertyAlgebra& algebra() const { return algebra_; }
  const StateLattice& state_lattice() const { return ls_; }

  /// Index of the property denoted by `f`. Throws UnknownProperty.
  std::size_t chi_hat(const TQFormula& f) const;
  /// The physical proposition of `f`, as a state set.
  Proposition proposition(const TQFormula& f) const;
  /// Its orthocomplement in L(S).
  Proposition ortho_proposition(const TQFormula& f) const;
  bool tau(const Interpretation& rho, std::size_t state,
           const TQFormula& f) const;
  QTruth q_truth(std::size_t state, const TQFormula& f) const;

  /// L(S) operations on propositions that are elements of L(S).
  /// Throws InvariantViolation otherwise.
  Proposition ls_ortho(const Proposition& p) const;
  Proposition ls_meet(const Proposition& a, const Proposition& b) const;
  Proposition ls_join(const Proposition& a, const Proposition& b) const;

 private:
  std::size_t element(const Proposition& p) const;

  const Model* model_;
  PropertyAlgebra algebra_;
  StateLattice ls_;
};

PropertyId chi_hat(const Model& m, const TQFormula& f);
bool tau_assignment(const Model& m, const Interpretation& rho,
                    std::string_view state, const TQFormula& f);
Proposition tq_physical_proposition(const Model& m, const TQFormula& f);
QTruth q_truth(const Model& m, std::string_view state, const TQFormula& f);

struct SasakiResult {
  TQFormula formula;  // core expansion
  PropertyId witness;
  Proposition proposition;
};
SasakiResult sasaki(const Model& m, const TQFormula& a, const TQFormula& b);

/// Q-truth of a classical formula through its testable witness: absent when
/// `f` is not testable. QTrue needs only the classical physical proposition;
/// the QFalse test needs the Hilbert annotation (NoHilbertAnnotation).
std::optional<QTruth> q_truth_classical_lx(const Model& m,
                                           std::string_view state,
                                           const Formula& f);

/// The conjunction fragment read classically.
/// Throws InvariantViolation for a formula containing a quantum negation.
Formula classical_reading(const TQFormula& f);
bool in_conjunction_fragment(const TQFormula& f);

struct TQClass {
  TQFormula representative;
  std::size_t property;
};

/// One class per property reachable by a formula of depth <= `depth`:
/// atoms, then for each further depth quantum negations and conjunctions of
/// the classes found so far.
std::vector<TQClass> enumerate_tq_classes(const QuantumEvaluator& ev,
                                          std::size_t depth,
                                          std::size_t depth_cap =
                                              kDefaultDepthCap);

/// Every formula of depth <= `depth`; DepthCapExceeded beyond `max_count`.
std::vector<TQFormula> all_tq_formulas(const std::vector<PropertyId>& atoms,
                                       std::size_t depth,
                                       std::size_t max_count = 200'000);

// Diagnostics. Each lists its findings; `asserted_failures` counts the ones
// that contradict a guaranteed law, the rest are reported only.

struct Finding {
  std::string message;
  bool asserted = false;
};

struct Diagnostic {
  std::string name;
  std::size_t checked = 0;
  std::vector<Finding> findings;

  std::size_t asserted_failures() const;
  std::size_t reported() const;
};

/// Quantum vs classical truth on the conjunction fragment, per
/// interpretation and state. Disagreement at a state where the formula is
/// Q-true or Q-false is asserted; elsewhere it is reported.
Diagnostic conjunction_agreement(const QuantumEvaluator& ev,
                                 std::size_t depth);

/// Whether equal physical propositions (approx) coincide with equal
/// per-state truth values (equiv) on depth-bounded formulas. Reported only.
Diagnostic approx_equiv_coincidence(const QuantumEvaluator& ev,
                                    std::size_t depth);

/// The negation, meet and join equalities for all class pairs, the join
/// inclusion, the orthocomplement refinement and the trichotomy partition.
Diagnostic quantum_equalities(const QuantumEvaluator& ev, std::size_t depth);

}  // namespace qlprop
