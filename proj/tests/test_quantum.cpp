#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qlprop/error.hpp"
#include "qlprop/quantum.hpp"

namespace {

using namespace qlprop;

class Qbit : public ::testing::Test {
 protected:
  Model m = make_qbit_model();
  QuantumEvaluator ev{m};

  std::string prop(const char* f) {
    return format_proposition(m, ev.proposition(parse_tq(f)));
  }
  QTruth qt(const char* state, const char* f) {
    return ev.q_truth(m.state_index(state), parse_tq(f));
  }
};

TEST_F(Qbit, ChiHat) {
  EXPECT_EQ(chi_hat(m, parse_tq("~q Ez+(x)")), "Ez-");
  EXPECT_EQ(chi_hat(m, parse_tq("Ez+(x) & Ex+(x)")), "E0");
  EXPECT_EQ(chi_hat(m, parse_tq("Ez+(x) |q Ez-(x)")), "EI");
  EXPECT_EQ(chi_hat(m, parse_tq("~q ~q Ex-(x)")), "Ex-");
  EXPECT_EQ(chi_hat(m, parse_tq("Ez+(x) |q Ex+(x)")), "EI");
  EXPECT_THROW(chi_hat(m, parse_tq("Ey+(x)")), UnknownProperty);
}

TEST_F(Qbit, Propositions) {
  EXPECT_EQ(prop("Ez+(x)"), "{Sz+}");
  EXPECT_EQ(prop("~q Ez+(x)"), "{Sz-}");
  EXPECT_EQ(prop("Ez+(x) |q Ez-(x)"), "{Sz+,Sz-,Sx+,Sx-}");
  EXPECT_EQ(prop("Ez+(x) & Ez-(x)"), "{}");
  EXPECT_EQ(format_proposition(m, ev.ortho_proposition(parse_tq("Ex+(x)"))),
            "{Sx-}");
  EXPECT_EQ(tq_physical_proposition(m, parse_tq("Ex+(x)")),
            ev.proposition(parse_tq("Ex+(x)")));
}

TEST_F(Qbit, Sasaki) {
  SasakiResult r = sasaki(m, parse_tq("Ex+(x)"), parse_tq("Ez+(x)"));
  EXPECT_EQ(r.witness, "Ex-");
  EXPECT_EQ(format_proposition(m, r.proposition), "{Sx-}");
  EXPECT_EQ(r.formula, parse_tq("Ex+(x) ->q Ez+(x)"));
  // a ->q b is everything when a <= b.
  EXPECT_EQ(sasaki(m, parse_tq("Ez+(x)"), parse_tq("EI(x)")).witness, "EI");
  EXPECT_EQ(sasaki(m, parse_tq("E0(x)"), parse_tq("Ex+(x)")).witness, "EI");
}

TEST_F(Qbit, QTruthValues) {
  EXPECT_EQ(qt("Sz+", "Ez+(x)"), QTruth::kTrue);
  EXPECT_EQ(qt("Sz-", "Ez+(x)"), QTruth::kFalse);
  EXPECT_EQ(qt("Sx+", "Ez+(x)"), QTruth::kIndeterminate);
  EXPECT_EQ(qt("Sx+", "Ez+(x) |q Ez-(x)"), QTruth::kTrue);
  EXPECT_EQ(qt("Sx+", "Ez+(x) & Ez-(x)"), QTruth::kFalse);
  EXPECT_EQ(to_string(QTruth::kTrue), "QTrue");
  EXPECT_EQ(to_string(QTruth::kFalse), "QFalse");
  EXPECT_EQ(to_string(QTruth::kIndeterminate), "QIndeterminate");
  EXPECT_EQ(q_truth(m, "Sx+", parse_tq("Ez+(x)")), QTruth::kIndeterminate);
}

TEST_F(Qbit, TrichotomyPartitionsStates) {
  for (const TQClass& c : enumerate_tq_classes(ev, 3)) {
    Proposition t = m.no_states(), f = m.no_states(), i = m.no_states();
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      switch (ev.q_truth(s, c.representative)) {
        case QTruth::kTrue: t.set(s); break;
        case QTruth::kFalse: f.set(s); break;
        case QTruth::kIndeterminate: i.set(s); break;
      }
    }
    EXPECT_FALSE((t & f).any());
    EXPECT_FALSE((t & i).any());
    EXPECT_FALSE((f & i).any());
    EXPECT_TRUE((t | f | i).all());
  }
}

TEST_F(Qbit, Tau) {
  Interpretation first{{0, 0, 0, 0}}, second{{1, 1, 1, 1}};
  const TQFormula ez = parse_tq("Ez+(x)");
  EXPECT_TRUE(ev.tau(first, m.state_index("Sx+"), ez));
  EXPECT_FALSE(ev.tau(second, m.state_index("Sx+"), ez));
  EXPECT_TRUE(tau_assignment(m, second, "Sz+", ez));
  EXPECT_FALSE(tau_assignment(m, first, "Sz-", ez));
}

TEST_F(Qbit, QTrueMeansCertainlyTrue) {
  for (const TQClass& c : enumerate_tq_classes(ev, 3)) {
    const Formula atom = Formula::atom(m.properties()[c.property]);
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      EXPECT_EQ(ev.q_truth(s, c.representative) == QTruth::kTrue,
                certainly_true(m, s, atom));
    }
  }
}

TEST_F(Qbit, LatticeOperations) {
  Proposition z = ev.proposition(parse_tq("Ez+(x)"));
  Proposition zm = ev.proposition(parse_tq("Ez-(x)"));
  EXPECT_EQ(ev.ls_ortho(z), zm);
  EXPECT_TRUE(ev.ls_join(z, zm).all());
  EXPECT_TRUE(ev.ls_meet(z, zm).none());
  EXPECT_THROW(ev.ls_ortho(z | zm), InvariantViolation);
}

TEST_F(Qbit, ClassEnumeration) {
  EXPECT_EQ(enumerate_tq_classes(ev, 1).size(), 6u);
  EXPECT_EQ(enumerate_tq_classes(ev, 3).size(), 6u);
  EXPECT_THROW(enumerate_tq_classes(ev, 5), DepthCapExceeded);
}

TEST_F(Qbit, ClassesMatchRawFormulas) {
  std::set<std::size_t> raw;
  for (const TQFormula& f : all_tq_formulas(m.properties(), 2)) {
    raw.insert(ev.chi_hat(f));
  }
  std::set<std::size_t> got;
  for (const TQClass& c : enumerate_tq_classes(ev, 2)) got.insert(c.property);
  EXPECT_EQ(raw, got);
}

TEST_F(Qbit, QuantumEqualitiesHold) {
  Diagnostic d = quantum_equalities(ev, 3);
  EXPECT_GT(d.checked, 0u);
  EXPECT_EQ(d.asserted_failures(), 0u);
}

TEST_F(Qbit, ConjunctionAgreementHasNoAssertedFailures) {
  Diagnostic d = conjunction_agreement(ev, 2);
  EXPECT_GT(d.checked, 0u);
  EXPECT_EQ(d.asserted_failures(), 0u);
  // Born extensions overlap at the x states: Ez+ & Ez- is empty quantum
  // mechanically but not classically.
  EXPECT_GT(d.reported(), 0u);
}

TEST_F(Qbit, ApproxEquivIsReportedOnly) {
  Diagnostic d = approx_equiv_coincidence(ev, 2);
  EXPECT_EQ(d.asserted_failures(), 0u);
}

TEST(QuantumRandom, EqualitiesOnRandomFormulas) {
  Model m = make_qutrit_model();
  QuantumEvaluator ev(m);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    TQFormula a = oracle::random_tq(rng, m.properties(), 4);
    TQFormula b = oracle::random_tq(rng, m.properties(), 4);
    const Proposition pa = ev.proposition(a), pb = ev.proposition(b);
    EXPECT_EQ(ev.proposition(TQFormula::qnot(a)), ev.ls_ortho(pa));
    EXPECT_EQ(ev.proposition(TQFormula::conjunction(a, b)), pa & pb);
    EXPECT_EQ(ev.proposition(TQFormula::qor(a, b)), ev.ls_join(pa, pb));
    EXPECT_TRUE((pa | pb).is_subset_of(ev.ls_join(pa, pb)));
  }
}

TEST(QuantumErrors, Preconditions) {
  EXPECT_THROW(QuantumEvaluator{make_sr_model()}, NoHilbertAnnotation);
  QmModelSpec spec = qbit_model_spec();
  std::erase_if(spec.subspaces,
                [](const auto& e) { return e.first == "Ex-"; });
  Model open = build_qm_model(spec);
  EXPECT_THROW(QuantumEvaluator{open}, NotOperationClosed);
}

TEST(ClassicalQTruth, ThroughTestableWitness) {
  Model m = make_qbit_model();
  EXPECT_EQ(q_truth_classical_lx(m, "Sz+", parse_lx("Ez+(x) & EI(x)")),
            QTruth::kTrue);
  EXPECT_EQ(q_truth_classical_lx(m, "Sz-", parse_lx("Ez+(x)")),
            QTruth::kFalse);
  EXPECT_EQ(q_truth_classical_lx(m, "Sx+", parse_lx("Ez+(x)")),
            QTruth::kIndeterminate);
  EXPECT_FALSE(q_truth_classical_lx(m, "Sx+", parse_lx("Ez+(x) | Ez-(x)")));
  Model sr = make_sr_model();
  EXPECT_EQ(q_truth_classical_lx(sr, "S2", parse_lx("E(x)")), QTruth::kTrue);
  EXPECT_THROW(q_truth_classical_lx(sr, "S1", parse_lx("E(x)")),
               NoHilbertAnnotation);
}

TEST(ConjunctionFragment, Reading) {
  EXPECT_TRUE(in_conjunction_fragment(parse_tq("E(x) & F(x) & G(x)")));
  EXPECT_FALSE(in_conjunction_fragment(parse_tq("E(x) & ~q F(x)")));
  EXPECT_EQ(classical_reading(parse_tq("E(x) & F(x)")),
            parse_lx("E(x) & F(x)"));
  EXPECT_THROW(classical_reading(parse_tq("~q E(x)")), InvariantViolation);
}

TEST(AllTqFormulas, Counts) {
  EXPECT_EQ(all_tq_formulas({"E"}, 2).size(), 3u);
  EXPECT_EQ(all_tq_formulas({"E", "F"}, 2).size(), 2u + 2u + 4u);
  EXPECT_THROW(all_tq_formulas({"A", "B", "C", "D", "E", "F"}, 4),
               DepthCapExceeded);
}

}  // namespace
