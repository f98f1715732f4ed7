#include "qlprop/quantum.hpp"

#include <algorithm>
#include <map>

#include "qlprop/error.hpp"

namespace qlprop {

std::string to_string(QTruth v) {
  switch (v) {
    case QTruth::kTrue:
      return "QTrue";
    case QTruth::kFalse:
      return "QFalse";
    case QTruth::kIndeterminate:
      return "QIndeterminate";
  }
  return "?";
}

QuantumEvaluator::QuantumEvaluator(const Model& m)
    : model_(&m), algebra_(m), ls_(generate_ls(m)) {}

std::size_t QuantumEvaluator::chi_hat(const TQFormula& f) const {
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      return model_->property_index(f.property());
    case TQFormula::Kind::kQNot:
      return *algebra_.ortho(chi_hat(f.inner()));
    case TQFormula::Kind::kAnd:
      return *algebra_.meet(chi_hat(f.left()), chi_hat(f.right()));
  }
  throw InvariantViolation("unhandled formula kind");
}

Proposition QuantumEvaluator::proposition(const TQFormula& f) const {
  return ls_.elements[ls_.element_of[chi_hat(f)]];
}

Proposition QuantumEvaluator::ortho_proposition(const TQFormula& f) const {
  return ls_.elements[ls_.element_of[*algebra_.ortho(chi_hat(f))]];
}

bool QuantumEvaluator::tau(const Interpretation& rho, std::size_t state,
                           const TQFormula& f) const {
  return model_->extension(state, chi_hat(f)).test(rho.choice.at(state));
}

QTruth QuantumEvaluator::q_truth(std::size_t state, const TQFormula& f) const {
  std::size_t e = chi_hat(f);
  if (ls_.elements[ls_.element_of[e]].test(state)) return QTruth::kTrue;
  if (ls_.elements[ls_.element_of[*algebra_.ortho(e)]].test(state)) {
    return QTruth::kFalse;
  }
  return QTruth::kIndeterminate;
}

std::size_t QuantumEvaluator::element(const Proposition& p) const {
  if (auto e = ls_.find(p)) return *e;
  throw InvariantViolation(format_proposition(*model_, p) +
                           " is not an element of L(S)");
}

Proposition QuantumEvaluator::ls_ortho(const Proposition& p) const {
  return ls_.elements[ls_.lattice.ortho(element(p))];
}

Proposition QuantumEvaluator::ls_meet(const Proposition& a,
                                      const Proposition& b) const {
  return ls_.elements[ls_.lattice.meet(element(a), element(b))];
}

Proposition QuantumEvaluator::ls_join(const Proposition& a,
                                      const Proposition& b) const {
  return ls_.elements[ls_.lattice.join(element(a), element(b))];
}

PropertyId chi_hat(const Model& m, const TQFormula& f) {
  return m.properties()[QuantumEvaluator(m).chi_hat(f)];
}

bool tau_assignment(const Model& m, const Interpretation& rho,
                    std::string_view state, const TQFormula& f) {
  return QuantumEvaluator(m).tau(rho, m.state_index(state), f);
}

Proposition tq_physical_proposition(const Model& m, const TQFormula& f) {
  return QuantumEvaluator(m).proposition(f);
}

QTruth q_truth(const Model& m, std::string_view state, const TQFormula& f) {
  return QuantumEvaluator(m).q_truth(m.state_index(state), f);
}

SasakiResult sasaki(const Model& m, const TQFormula& a, const TQFormula& b) {
  QuantumEvaluator ev(m);
  TQFormula f = TQFormula::sasaki(a, b);
  return {f, m.properties()[ev.chi_hat(f)], ev.proposition(f)};
}

std::optional<QTruth> q_truth_classical_lx(const Model& m,
                                           std::string_view state,
                                           const Formula& f) {
  std::size_t s = m.state_index(state);
  std::optional<PropertyId> w = testable_witness(m, f);
  if (!w) return std::nullopt;
  if (physical_proposition(m, Formula::atom(*w)).test(s)) return QTruth::kTrue;
  PropertyAlgebra alg(m);
  std::size_t e = m.property_index(*w);
  std::optional<std::size_t> o = alg.ortho(e);
  if (!o) {
    throw NotOperationClosed("no property has the orthocomplement of '" + *w +
                             "'");
  }
  return theta(m, *o).test(s) ? QTruth::kFalse : QTruth::kIndeterminate;
}

bool in_conjunction_fragment(const TQFormula& f) {
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      return true;
    case TQFormula::Kind::kAnd:
      return in_conjunction_fragment(f.left()) &&
             in_conjunction_fragment(f.right());
    case TQFormula::Kind::kQNot:
      return false;
  }
  return false;
}

Formula classical_reading(const TQFormula& f) {
  switch (f.kind()) {
    case TQFormula::Kind::kAtom:
      return Formula::atom(f.property());
    case TQFormula::Kind::kAnd:
      return Formula::conjunction(classical_reading(f.left()),
                                  classical_reading(f.right()));
    case TQFormula::Kind::kQNot:
      break;
  }
  throw InvariantViolation("quantum negation has no classical reading");
}

std::vector<TQClass> enumerate_tq_classes(const QuantumEvaluator& ev,
                                          std::size_t depth,
                                          std::size_t depth_cap) {
  if (depth == 0) throw DepthCapExceeded("depth must be at least 1");
  if (depth > depth_cap) {
    throw DepthCapExceeded("depth " + std::to_string(depth) +
                           " exceeds the cap of " + std::to_string(depth_cap));
  }
  const Model& m = ev.model();
  const PropertyAlgebra& alg = ev.algebra();
  std::vector<TQClass> classes;
  std::vector<bool> seen(m.num_properties());
  auto offer = [&](const TQFormula& f, std::size_t p) {
    if (!seen[p]) {
      seen[p] = true;
      classes.push_back({f, p});
    }
  };
  for (std::size_t p = 0; p < m.num_properties(); ++p) {
    offer(TQFormula::atom(m.properties()[p]), p);
  }
  std::size_t layer_start = 0;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t n = classes.size();
    for (std::size_t i = layer_start; i < n; ++i) {
      offer(TQFormula::qnot(classes[i].representative),
            *alg.ortho(classes[i].property));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = std::max(i, layer_start); j < n; ++j) {
        offer(TQFormula::conjunction(classes[i].representative,
                                     classes[j].representative),
              *alg.meet(classes[i].property, classes[j].property));
      }
    }
    layer_start = n;
  }
  return classes;
}

std::vector<TQFormula> all_tq_formulas(const std::vector<PropertyId>& atoms,
                                       std::size_t depth,
                                       std::size_t max_count) {
  if (depth == 0) throw DepthCapExceeded("depth must be at least 1");
  std::vector<TQFormula> out;
  for (const PropertyId& e : atoms) out.push_back(TQFormula::atom(e));
  auto push = [&](TQFormula f) {
    if (out.size() >= max_count) {
      throw DepthCapExceeded("more than " + std::to_string(max_count) +
                             " formulas up to depth " + std::to_string(depth));
    }
    out.push_back(std::move(f));
  };
  std::size_t layer_start = 0;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t n = out.size();
    for (std::size_t i = layer_start; i < n; ++i) push(TQFormula::qnot(out[i]));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < layer_start && j < layer_start) continue;
        push(TQFormula::conjunction(out[i], out[j]));
      }
    }
    layer_start = n;
  }
  return out;
}

std::size_t Diagnostic::asserted_failures() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [](const Finding& f) { return f.asserted; }));
}

std::size_t Diagnostic::reported() const {
  return findings.size() - asserted_failures();
}

namespace {

std::vector<TQFormula> conjunction_formulas(const Model& m, std::size_t depth) {
  std::vector<TQFormula> out;
  for (const PropertyId& e : m.properties()) out.push_back(TQFormula::atom(e));
  std::size_t layer_start = 0;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i < layer_start && j < layer_start) continue;
        out.push_back(TQFormula::conjunction(out[i], out[j]));
      }
    }
    layer_start = n;
  }
  return out;
}

// Every atom of `f` is full or empty at `state`.
bool determinate_at(const Model& m, std::size_t state, const TQFormula& f) {
  for (const PropertyId& e : atoms_of(f)) {
    const IndexSet& x = m.extension(state, m.property_index(e));
    if (!x.none() && !x.all()) return false;
  }
  return true;
}

}  // namespace

Diagnostic conjunction_agreement(const QuantumEvaluator& ev,
                                 std::size_t depth) {
  const Model& m = ev.model();
  Diagnostic d{"conjunction fragment agreement", 0, {}};
  bool atoms_match = true;
  for (std::size_t p = 0; p < m.num_properties(); ++p) {
    if (physical_proposition(m, Formula::atom(m.properties()[p])) !=
        theta(m, p)) {
      atoms_match = false;
    }
  }
  for (const TQFormula& f : conjunction_formulas(m, depth)) {
    Formula c = classical_reading(f);
    const std::size_t e = ev.chi_hat(f);
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const IndexSet classical = extension_of(m, s, c);
      const IndexSet& quantum = m.extension(s, e);
      ++d.checked;
      // Every object is chosen by some interpretation, so per-ρ agreement
      // is agreement of extensions.
      if (classical == quantum) continue;
      const bool asserted = determinate_at(m, s, f);
      d.findings.push_back({format_tq(f) + " at " + m.states()[s] +
                                ": classical extension differs from that of " +
                                m.properties()[e],
                            asserted});
    }
    ++d.checked;
    if (physical_proposition(m, c) != ev.proposition(f)) {
      d.findings.push_back({format_tq(f) +
                                ": classical physical proposition differs "
                                "from its quantum one",
                            atoms_match});
    }
  }
  return d;
}

Diagnostic approx_equiv_coincidence(const QuantumEvaluator& ev,
                                    std::size_t depth) {
  const Model& m = ev.model();
  Diagnostic d{"approx/equiv coincidence", 0, {}};
  const auto classes = enumerate_tq_classes(ev, depth);
  std::vector<Profile> profiles;
  for (const TQClass& c : classes) {
    profiles.push_back(profile_of(m, Formula::atom(m.properties()[c.property])));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      ++d.checked;
      const bool approx = ev.proposition(classes[i].representative) ==
                          ev.proposition(classes[j].representative);
      const bool equiv = profiles[i] == profiles[j];
      if (approx != equiv) {
        d.findings.push_back(
            {format_tq(classes[i].representative) + " and " +
                 format_tq(classes[j].representative) +
                 (approx ? ": same proposition but different truth values"
                         : ": same truth values but different propositions"),
             false});
      }
    }
  }
  return d;
}

Diagnostic quantum_equalities(const QuantumEvaluator& ev, std::size_t depth) {
  const Model& m = ev.model();
  Diagnostic d{"quantum equalities", 0, {}};
  const auto classes = enumerate_tq_classes(ev, depth);
  auto fail = [&](const std::string& what) {
    d.findings.push_back({what, true});
  };
  for (const TQClass& c : classes) {
    const TQFormula& a = c.representative;
    const Proposition p = ev.proposition(a);
    const Proposition po = ev.ls_ortho(p);
    ++d.checked;
    if (ev.proposition(TQFormula::qnot(a)) != po) {
      fail("negation equality fails for " + format_tq(a));
    }
    if (!po.is_subset_of(~p)) {
      fail("orthocomplement of " + format_tq(a) +
           " is not inside the set complement");
    }
    if ((p & po).any()) {
      fail("proposition of " + format_tq(a) + " meets its orthocomplement");
    }
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      const QTruth v = ev.q_truth(s, a);
      const bool in_p = p.test(s), in_po = po.test(s);
      const bool ok = (v == QTruth::kTrue && in_p) ||
                      (v == QTruth::kFalse && !in_p && in_po) ||
                      (v == QTruth::kIndeterminate && !in_p && !in_po);
      if (!ok) {
        fail("trichotomy fails for " + format_tq(a) + " at " + m.states()[s]);
      }
    }
  }
  for (const TQClass& x : classes) {
    for (const TQClass& y : classes) {
      const TQFormula& a = x.representative;
      const TQFormula& b = y.representative;
      const Proposition pa = ev.proposition(a), pb = ev.proposition(b);
      ++d.checked;
      if (ev.proposition(TQFormula::conjunction(a, b)) != ev.ls_meet(pa, pb)) {
        fail("meet equality fails for " + format_tq(a) + ", " + format_tq(b));
      }
      const Proposition pj = ev.proposition(TQFormula::qor(a, b));
      if (pj != ev.ls_join(pa, pb)) {
        fail("join equality fails for " + format_tq(a) + ", " + format_tq(b));
      }
      if (!(pa | pb).is_subset_of(pj)) {
        fail("union of " + format_tq(a) + ", " + format_tq(b) +
             " is not inside their quantum join");
      }
    }
  }
  return d;
}

}  // namespace qlprop
