#pragma once

// Classical semantics of L(x) over a finite model: extensions, assignment
// values, individual and physical propositions, the logical and physical
// preorders, testability, and the order structures built on them.
//
// Truth under an interpretation factors through per-state extensions:
// sigma(rho, S, f) holds iff rho(S) lies in ext_S(f). Everything below is
// computed from extensions; the brute-force definitions over all
// interpretations are kept for cross-checking.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qlprop/lattice.hpp"
#include "qlprop/model.hpp"
#include "qlprop/syntax.hpp"

namespace qlprop {

inline constexpr std::size_t kDefaultDepthCap = 4;

/// Throws UnknownProperty for atoms outside the model.
IndexSet extension_of(const Model& m, std::size_t state, const Formula& f);
IndexSet extension_of(const Model& m, std::string_view state, const Formula& f);

bool sigma(const Model& m, const Interpretation& rho, std::size_t state,
           const Formula& f);

Proposition individual_proposition(const Model& m, const Interpretation& rho,
                                   const Formula& f);
/// States whose extension of `f` is the whole universe.
Proposition physical_proposition(const Model& m, const Formula& f);
bool certainly_true(const Model& m, std::size_t state, const Formula& f);

bool logical_leq(const Model& m, const Formula& a, const Formula& b);
bool logical_equiv(const Model& m, const Formula& a, const Formula& b);
bool physical_leq(const Model& m, const Formula& a, const Formula& b);
bool physical_equiv(const Model& m, const Formula& a, const Formula& b);

/// Brute-force forms over every interpretation, for cross-checking.
bool logical_leq_by_enumeration(const Model& m, const Formula& a,
                                const Formula& b,
                                std::uint64_t cap = 1'000'000);
Proposition intersection_over_interpretations(const Model& m, const Formula& f,
                                              std::uint64_t cap = 1'000'000);

/// The first property (in model order) logically equivalent to `f`.
std::optional<PropertyId> testable_witness(const Model& m, const Formula& f);

/// Per-state extensions, indexed by state. Two formulas are logically
/// equivalent iff their profiles are equal.
using Profile = std::vector<IndexSet>;
Profile profile_of(const Model& m, const Formula& f);
bool profile_leq(const Profile& a, const Profile& b);

struct FormulaClass {
  Formula representative;  // first formula found with this profile
  Profile profile;
};

/// One class per profile reachable by a formula of depth <= `depth`, in
/// generation order: atoms first, then for each further depth the negations,
/// conjunctions and disjunctions of the classes found so far. Throws
/// DepthCapExceeded when `depth` exceeds `depth_cap` or is zero.
std::vector<FormulaClass> enumerate_classes(const Model& m, std::size_t depth,
                                            std::size_t depth_cap =
                                                kDefaultDepthCap);

struct PropositionPoset {
  FinitePoset poset;
  std::vector<Proposition> elements;
  std::vector<Formula> representatives;
};

/// Physical propositions of the testable formulas of depth <= `depth`
/// ordered by inclusion.
PropositionPoset testable_proposition_poset(const Model& m, std::size_t depth,
                                            std::size_t depth_cap =
                                                kDefaultDepthCap);

/// The intersection of the individual propositions over every
/// interpretation. Throws InvariantViolation if it differs from
/// physical_proposition, EnumerationCapExceeded when enumeration is too big.
Proposition forall_proposition(const Model& m, const Formula& f,
                               std::uint64_t cap = 1'000'000);

struct LindenbaumTarski {
  FinitePoset poset;  // labelled by the representatives
  std::vector<FormulaClass> classes;
};

/// Depth-bounded formulas modulo logical equivalence, ordered by the logical
/// preorder.
LindenbaumTarski lindenbaum_tarski(const Model& m, std::size_t depth,
                                   std::size_t depth_cap = kDefaultDepthCap);

/// Every formula of depth <= `depth`, without deduplication. Throws
/// DepthCapExceeded when there would be more than `max_count` formulas.
std::vector<Formula> all_formulas(const std::vector<PropertyId>& atoms,
                                  std::size_t depth,
                                  std::size_t max_count = 200'000);

}  // namespace qlprop
