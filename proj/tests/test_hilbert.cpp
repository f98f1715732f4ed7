#include <gtest/gtest.h>

#include "qlprop/error.hpp"
#include "qlprop/hilbert.hpp"

namespace {

using namespace qlprop;

std::string show(const Model& m, const Proposition& p) {
  return format_proposition(m, p);
}

QmModelSpec without(QmModelSpec spec, const std::string& property) {
  std::erase_if(spec.subspaces,
                [&](const auto& e) { return e.first == property; });
  return spec;
}

TEST(Theta, QbitImages) {
  Model m = make_qbit_model();
  EXPECT_EQ(show(m, theta(m, "E0")), "{}");
  EXPECT_EQ(show(m, theta(m, "Ez+")), "{Sz+}");
  EXPECT_EQ(show(m, theta(m, "Ez-")), "{Sz-}");
  EXPECT_EQ(show(m, theta(m, "Ex+")), "{Sx+}");
  EXPECT_EQ(show(m, theta(m, "Ex-")), "{Sx-}");
  EXPECT_EQ(show(m, theta(m, "EI")), "{Sz+,Sz-,Sx+,Sx-}");
  EXPECT_THROW(theta(make_sr_model(), "E"), NoHilbertAnnotation);
  EXPECT_THROW(theta(m, "Ey+"), UnknownProperty);
}

TEST(Theta, QutritPlanes) {
  Model m = make_qutrit_model();
  EXPECT_EQ(show(m, theta(m, "E12")), "{S1,S2,Sp,Sm}");
  EXPECT_EQ(show(m, theta(m, "Ep3")), "{S3,Sp}");
  EXPECT_EQ(show(m, theta(m, "E3")), "{S3}");
}

TEST(PropertyAlgebra, QbitTables) {
  Model m = make_qbit_model();
  PropertyAlgebra alg(m);
  auto idx = [&](const char* p) { return m.property_index(p); };
  EXPECT_EQ(alg.ortho(idx("Ez+")), idx("Ez-"));
  EXPECT_EQ(alg.ortho(idx("E0")), idx("EI"));
  EXPECT_EQ(alg.meet(idx("Ez+"), idx("Ex+")), idx("E0"));
  EXPECT_EQ(alg.join(idx("Ez+"), idx("Ex+")), idx("EI"));
  EXPECT_EQ(alg.join(idx("Ez+"), idx("E0")), idx("Ez+"));
  EXPECT_NO_THROW(alg.require_closed());
}

TEST(PropertyAlgebra, MissingComplement) {
  Model m = build_qm_model(without(qbit_model_spec(), "Ex-"));
  PropertyAlgebra alg(m);
  EXPECT_FALSE(alg.ortho(m.property_index("Ex+")));
  EXPECT_THROW(alg.require_closed(), NotOperationClosed);
  EXPECT_THROW(generate_ls(m), NotOperationClosed);
}

TEST(PropertyAlgebra, MissingWholeSpace) {
  Model m = build_qm_model(without(qbit_model_spec(), "EI"));
  // Without the whole space nothing has an orthocomplement of E0.
  EXPECT_THROW(PropertyAlgebra(m).require_closed(false), NotOperationClosed);
}

TEST(StateLattice, Qbit) {
  Model m = make_qbit_model();
  StateLattice ls = generate_ls(m);
  ASSERT_EQ(ls.elements.size(), 6u);
  EXPECT_TRUE(ls.theta_collisions.empty());
  EXPECT_TRUE(ls.meet_is_intersection);
  const OrthoLattice& l = ls.lattice;
  auto el = [&](const char* p) { return ls.element_of[m.property_index(p)]; };
  // {Sz+} v {Sz-} is every state, not the union.
  EXPECT_EQ(show(m, ls.elements[l.join(el("Ez+"), el("Ez-"))]),
            "{Sz+,Sz-,Sx+,Sx-}");
  EXPECT_EQ(show(m, ls.elements[l.ortho(el("Ex+"))]), "{Sx-}");
  EXPECT_EQ(show(m, ls.elements[l.meet(el("Ez+"), el("Ex+"))]), "{}");
  EXPECT_EQ(l.poset().label(el("Ez+")), "{Sz+}");
  EXPECT_EQ(ls.find(theta(m, "Ex-")), el("Ex-"));
  EXPECT_FALSE(ls.find(m.no_states().set(0).set(1)));
}

TEST(StateLattice, OrthoModularNotDistributive) {
  for (const Model& m : {make_qbit_model(), make_qutrit_model()}) {
    StateLattice ls = generate_ls(m);
    LawReport r = check_ortho_modular(ls.lattice);
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.law("orthomodular").passed);
    EXPECT_TRUE(r.law("atomistic").passed);
    EXPECT_TRUE(r.law("covering").passed);
    EXPECT_FALSE(check_boolean(ls.lattice.poset()).passed());
  }
}

TEST(StateLattice, QutritSize) {
  StateLattice ls = generate_ls(make_qutrit_model());
  EXPECT_EQ(ls.elements.size(), 12u);
  EXPECT_TRUE(ls.theta_collisions.empty());
}

TEST(StateLattice, DocumentedDistributivityWitness) {
  Model m = make_qbit_model();
  StateLattice ls = generate_ls(m);
  auto el = [&](const char* p) { return ls.element_of[m.property_index(p)]; };
  LawReport r = check_boolean(ls.lattice.poset());
  const LawResult& d = r.law("distributive: x meet (a join b)");
  EXPECT_FALSE(d.passed);
  EXPECT_TRUE(d.has_witness({el("Ex+"), el("Ez+"), el("Ez-")}));
  EXPECT_EQ(d.witnesses.front(),
            (std::vector<std::size_t>{el("Ez+"), el("Ez-"), el("Ex+")}));
}

TEST(StateLattice, IsomorphicToSubspaces) {
  for (const Model& m : {make_qbit_model(), make_qutrit_model()}) {
    StateLattice ls = generate_ls(m);
    EXPECT_TRUE(order_isomorphic(ls.lattice.poset(), subspace_poset(m)));
  }
}

TEST(StateLattice, CollidingImagesWithInconsistentOrtho) {
  // Only the z states: Ex+ and E0 both see no state, but their
  // complements differ.
  QmModelSpec spec = qbit_model_spec();
  spec.rays.resize(2);
  EXPECT_THROW(generate_ls(build_qm_model(spec)), NotAnOrthoLattice);
}

TEST(StateLattice, NoAnnotation) {
  EXPECT_THROW(generate_ls(make_sr_model()), NoHilbertAnnotation);
}

TEST(SubspacePoset, Containment) {
  Model m = make_qbit_model();
  FinitePoset p = subspace_poset(m);
  EXPECT_TRUE(p.leq(m.property_index("E0"), m.property_index("Ez+")));
  EXPECT_FALSE(p.leq(m.property_index("Ex+"), m.property_index("Ez+")));
  EXPECT_EQ(p.hasse_edges().size(), 8u);
}

}  // namespace
