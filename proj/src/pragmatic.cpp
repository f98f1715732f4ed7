#include "qlprop/pragmatic.hpp"

#include "qlprop/error.hpp"

namespace qlprop {

std::string to_string(Justification v) {
  return v == Justification::kJustified ? "Justified" : "Unjustified";
}

AssertiveFormula translate_tau(const TQFormula& f) {
  if (auto operands = match_qor(f)) {
    return AssertiveFormula::a(translate_tau(operands->first),
                               translate_tau(operands->second));
  }
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      return AssertiveFormula::assertion(f);
    case TQFormula::Kind::kQNot:
      return AssertiveFormula::n(translate_tau(f.inner()));
    case TQFormula::Kind::kAnd:
      return AssertiveFormula::k(translate_tau(f.left()),
                                 translate_tau(f.right()));
  }
  throw InvariantViolation("unhandled formula kind");
}

namespace {

std::optional<TQFormula> raw_preimage(const AssertiveFormula& af) {
  switch (af.kind()) {
    case AssertiveFormula::Kind::kAssert:
      if (af.content().kind() != TQFormula::Kind::kAtom) return std::nullopt;
      return af.content();
    case AssertiveFormula::Kind::kN:
      if (auto a = raw_preimage(af.inner())) return TQFormula::qnot(*a);
      return std::nullopt;
    case AssertiveFormula::Kind::kK:
    case AssertiveFormula::Kind::kA: {
      auto l = raw_preimage(af.left());
      auto r = raw_preimage(af.right());
      if (!l || !r) return std::nullopt;
      return af.kind() == AssertiveFormula::Kind::kK
                 ? TQFormula::conjunction(*l, *r)
                 : TQFormula::qor(*l, *r);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TQFormula> preimage(const AssertiveFormula& af) {
  // The raw preimage of N(K(N a, N b)) translates to A(a, b), not to af.
  auto pre = raw_preimage(af);
  if (!pre || !(translate_tau(*pre) == af)) return std::nullopt;
  return pre;
}

Justification justified(const QuantumEvaluator& ev, std::size_t state,
                        const AssertiveFormula& af) {
  auto pre = preimage(af);
  if (!pre) {
    throw NotPDecidable("'" + format_prag(af) +
                        "' is not the translation of a quantum formula");
  }
  return ev.q_truth(state, *pre) == QTruth::kTrue ? Justification::kJustified
                                                  : Justification::kUnjustified;
}

Justification justified(const Model& m, std::string_view state,
                        const AssertiveFormula& af) {
  return justified(QuantumEvaluator(m), m.state_index(state), af);
}

Proposition justification_set(const QuantumEvaluator& ev,
                              const AssertiveFormula& af) {
  const Model& m = ev.model();
  Proposition out = m.no_states();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (justified(ev, s, af) == Justification::kJustified) out.set(s);
  }
  return out;
}

bool af_leq(const QuantumEvaluator& ev, const AssertiveFormula& a,
            const AssertiveFormula& b) {
  return justification_set(ev, a).is_subset_of(justification_set(ev, b));
}

bool PreservationReport::passed() const {
  return order_counterexamples.empty() &&
         equivalence_counterexamples.empty() &&
         truth_counterexamples.empty() && conjunction_counterexamples.empty();
}

PreservationReport check_preservation(const Model& m, std::size_t depth,
                                      std::size_t depth_cap) {
  if (depth > depth_cap) {
    throw DepthCapExceeded("depth " + std::to_string(depth) +
                           " exceeds the cap of " + std::to_string(depth_cap));
  }
  QuantumEvaluator ev(m);
  const std::vector<TQFormula> formulas = all_tq_formulas(m.properties(), depth);
  PreservationReport r;
  r.formulas = formulas.size();

  std::vector<AssertiveFormula> afs;
  std::vector<Proposition> props, justified_in;
  for (const TQFormula& f : formulas) {
    afs.push_back(translate_tau(f));
    props.push_back(ev.proposition(f));
    justified_in.push_back(justification_set(ev, afs.back()));
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const bool qtrue = ev.q_truth(s, f) == QTruth::kTrue;
      if (qtrue != justified_in.back().test(s)) {
        r.truth_counterexamples.push_back(format_tq(f) + " at " +
                                          m.states()[s]);
      }
    }
  }
  // The af preorder and equivalence are read off the justification sets.
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    for (std::size_t j = 0; j < formulas.size(); ++j) {
      ++r.pairs;
      const bool leq = props[i].is_subset_of(props[j]);
      const bool af_le = justified_in[i].is_subset_of(justified_in[j]);
      if (leq != af_le) {
        r.order_counterexamples.push_back(format_tq(formulas[i]) + " vs " +
                                          format_tq(formulas[j]));
      }
      if ((props[i] == props[j]) != (justified_in[i] == justified_in[j])) {
        r.equivalence_counterexamples.push_back(format_tq(formulas[i]) +
                                                " vs " +
                                                format_tq(formulas[j]));
      }
    }
  }
  // K is justified exactly where both conjuncts are.
  std::vector<std::size_t> shallow;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i].depth() < depth) shallow.push_back(i);
  }
  for (std::size_t i : shallow) {
    for (std::size_t j : shallow) {
      AssertiveFormula k = AssertiveFormula::k(afs[i], afs[j]);
      if (justification_set(ev, k) != (justified_in[i] & justified_in[j])) {
        r.conjunction_counterexamples.push_back(format_prag(k));
      }
    }
  }
  return r;
}

}  // namespace qlprop
