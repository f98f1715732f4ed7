#pragma once

// The translation from quantum formulas to assertive formulas and the
// justification values of its image. An assertive formula outside the image
// of the translation has no justification value here.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlprop/quantum.hpp"
#include "qlprop/syntax.hpp"

namespace qlprop {

enum class Justification { kJustified, kUnjustified };

/// "Justified" or "Unjustified".
std::string to_string(Justification v);

/// Atom -> |- atom, quantum join -> A, quantum negation -> N,
/// conjunction -> K. The join pattern is matched before negation.
AssertiveFormula translate_tau(const TQFormula& f);

/// The quantum formula translating to `af`, if any.
std::optional<TQFormula> preimage(const AssertiveFormula& af);

/// Throws NotPDecidable outside the image of translate_tau.
Justification justified(const QuantumEvaluator& ev, std::size_t state,
                        const AssertiveFormula& af);
Justification justified(const Model& m, std::string_view state,
                        const AssertiveFormula& af);

/// States where `af` is justified.
Proposition justification_set(const QuantumEvaluator& ev,
                              const AssertiveFormula& af);

/// The preorder on assertive formulas: justified in S implies justified in S,
/// for every state S.
bool af_leq(const QuantumEvaluator& ev, const AssertiveFormula& a,
            const AssertiveFormula& b);

struct PreservationReport {
  std::size_t formulas = 0;
  std::size_t pairs = 0;
  std::vector<std::string> order_counterexamples;
  std::vector<std::string> equivalence_counterexamples;
  std::vector<std::string> truth_counterexamples;
  std::vector<std::string> conjunction_counterexamples;

  bool passed() const;
};

/// Exhaustive over every quantum formula of depth <= `depth`. Throws
/// DepthCapExceeded when `depth` exceeds `depth_cap` or the formula count
/// becomes infeasible.
PreservationReport check_preservation(const Model& m, std::size_t depth,
                                      std::size_t depth_cap = kDefaultDepthCap);

}  // namespace qlprop
