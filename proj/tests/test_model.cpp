#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qlprop/error.hpp"
#include "qlprop/model.hpp"

namespace {

using namespace qlprop;

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(QLPROP_MODELS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IndexSet bits(std::size_t n, std::initializer_list<std::size_t> on) {
  IndexSet b(n);
  for (auto i : on) b.set(i);
  return b;
}

bool same_model(const Model& a, const Model& b) {
  if (a.states() != b.states() || a.properties() != b.properties()) {
    return false;
  }
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (a.universe(s) != b.universe(s)) return false;
    for (std::size_t p = 0; p < a.num_properties(); ++p) {
      if (a.extension(s, p) != b.extension(s, p)) return false;
    }
  }
  if (a.hilbert().has_value() != b.hilbert().has_value()) return false;
  if (!a.hilbert()) return true;
  const auto& ha = *a.hilbert();
  const auto& hb = *b.hilbert();
  if (ha.dim != hb.dim) return false;
  for (std::size_t s = 0; s < a.num_states(); ++s) {
    if (!same_subspace(ha.state_rays[s], hb.state_rays[s])) return false;
  }
  for (std::size_t p = 0; p < a.num_properties(); ++p) {
    if (!same_subspace(ha.property_subspaces[p], hb.property_subspaces[p])) {
      return false;
    }
  }
  return true;
}

TEST(Fixtures, SrExtensions) {
  Model m = make_sr_model();
  EXPECT_EQ(m.states(), (std::vector<StateId>{"S1", "S2"}));
  EXPECT_EQ(m.extension(0, m.property_index("E")), bits(2, {0}));
  EXPECT_EQ(m.extension(0, m.property_index("F")), bits(2, {1}));
  EXPECT_EQ(m.extension(1, m.property_index("E")), bits(1, {0}));
  EXPECT_EQ(m.extension(1, m.property_index("F")), bits(1, {}));
  EXPECT_FALSE(m.hilbert());
}

TEST(Fixtures, FilesMatchBuiltins) {
  EXPECT_TRUE(same_model(load_model(read_file("m_sr.json")), make_sr_model()));
  EXPECT_TRUE(same_model(load_model(read_file("m_cm.json")), make_cm_model()));
  EXPECT_TRUE(
      same_model(load_model(read_file("m_qbit.json")), make_qbit_model()));
  EXPECT_TRUE(
      same_model(load_model(read_file("m_qutrit.json")), make_qutrit_model()));
}

TEST(Fixtures, QbitBornExtensions) {
  Model m = make_qbit_model();
  const std::size_t sx = m.state_index("Sx+");
  const std::size_t sz = m.state_index("Sz+");
  // Born weight 1/2 on two objects: the first object only.
  EXPECT_EQ(m.extension(sx, m.property_index("Ez+")), bits(2, {0}));
  EXPECT_EQ(m.extension(sx, m.property_index("Ez-")), bits(2, {0}));
  EXPECT_EQ(m.extension(sz, m.property_index("Ez+")), bits(2, {0, 1}));
  EXPECT_EQ(m.extension(sz, m.property_index("Ez-")), bits(2, {}));
  EXPECT_EQ(m.extension(sz, m.property_index("EI")), bits(2, {0, 1}));
  EXPECT_EQ(m.extension(sz, m.property_index("E0")), bits(2, {}));
}

TEST(Fixtures, CmsHoldsOnlyOnCm) {
  EXPECT_TRUE(check_cms(make_cm_model()).holds);
  CmsResult sr = check_cms(make_sr_model());
  EXPECT_FALSE(sr.holds);
  ASSERT_TRUE(sr.witness);
  EXPECT_EQ(*sr.witness, (std::pair<std::size_t, std::size_t>{0, 0}));
  EXPECT_FALSE(check_cms(make_qbit_model()).holds);
}

TEST(Model, Validation) {
  EXPECT_THROW(Model({"S1"}, {{"u"}}, {"E"}, {{bits(2, {1})}}),
               ExtensionOutOfUniverse);
  EXPECT_THROW(Model({"S1", "S1"}, {{"u"}, {"v"}}, {"E"},
                     {{bits(1, {})}, {bits(1, {})}}),
               DuplicateId);
  EXPECT_THROW(Model({"S1"}, {{"u", "u"}}, {"E"}, {{bits(2, {})}}),
               DuplicateId);
  EXPECT_THROW(Model({"S1"}, {{}}, {"E"}, {{bits(0, {})}}), SchemaError);
  EXPECT_THROW(Model({"S1"}, {{"u"}}, {"1E"}, {{bits(1, {})}}), SchemaError);
}

TEST(Model, Lookups) {
  Model m = make_sr_model();
  EXPECT_EQ(m.state_index("S2"), 1u);
  EXPECT_THROW(m.state_index("S9"), UnknownState);
  EXPECT_THROW(m.property_index("G"), UnknownProperty);
  EXPECT_EQ(m.object_index(0, "u2"), 1u);
  EXPECT_THROW(m.object_index(1, "u2"), UnknownObject);
  EXPECT_FALSE(m.find_property("G"));
  EXPECT_THROW(m.require_hilbert(), NoHilbertAnnotation);
  EXPECT_EQ(format_proposition(m, m.all_states()), "{S1,S2}");
  EXPECT_EQ(format_proposition(m, m.no_states()), "{}");
}

TEST(Load, RejectsExtensionOutsideUniverse) {
  const char* text = R"({"states":["S"],"universes":{"S":["u"]},
    "properties":["E"],"extensions":{"S":{"E":["w"]}}})";
  EXPECT_THROW(load_model(text), ExtensionOutOfUniverse);
}

TEST(Load, SchemaErrors) {
  EXPECT_THROW(load_model("not json"), SchemaError);
  EXPECT_THROW(load_model(R"({"states":["S"]})"), SchemaError);
  EXPECT_THROW(load_model(R"({"states":["S"],"universes":{"S":["u"]},
    "properties":["E"],"extensions":{"S":{"E":[]}},"extra":1})"),
               SchemaError);
  EXPECT_THROW(load_model(R"({"states":["S"],"universes":{"S":["u"]},
    "properties":["E"],"extensions":{"S":{}}})"),
               SchemaError);
}

TEST(Load, HilbertErrors) {
  const char* bad_dim = R"({"states":["S"],"universes":{"S":["u"]},
    "properties":["E"],"extensions":{"S":{"E":["u"]}},
    "hilbert":{"dim":2,"state_rays":{"S":[[1,0]]},
               "property_subspaces":{"E":[[[1,0],[0,0]]]}}})";
  EXPECT_THROW(load_model(bad_dim), HilbertDimensionMismatch);
  const char* not_unit = R"({"states":["S"],"universes":{"S":["u"]},
    "properties":["E"],"extensions":{"S":{"E":["u"]}},
    "hilbert":{"dim":2,"state_rays":{"S":[[2,0],[0,0]]},
               "property_subspaces":{"E":[[[1,0],[0,0]]]}}})";
  EXPECT_THROW(load_model(not_unit), NonOrthonormalBasis);
}

TEST(Load, RoundTrip) {
  for (const Model& m : {make_sr_model(), make_cm_model(), make_qbit_model(),
                         make_qutrit_model()}) {
    Model back = load_model(save_model(m));
    EXPECT_TRUE(same_model(m, back));
    EXPECT_EQ(save_model(back), save_model(m));
  }
}

TEST(Load, RandomRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Model m = oracle::random_model(rng);
    EXPECT_TRUE(same_model(m, load_model(save_model(m))));
  }
}

TEST(Interpretations, LexicographicEnumeration) {
  Model m = make_sr_model();
  auto all = enumerate_interpretations(m);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].choice, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(all[1].choice, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(count_interpretations(make_qbit_model()), 16u);
  EXPECT_EQ(enumerate_interpretations(make_qbit_model()).size(), 16u);
  EXPECT_EQ(enumerate_interpretations(make_qbit_model())[1].choice,
            (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(Interpretations, CountIsProductOfUniverses) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    Model m = oracle::random_model(rng);
    std::uint64_t product = 1;
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      product *= m.universe(s).size();
    }
    EXPECT_EQ(count_interpretations(m), product);
    EXPECT_EQ(enumerate_interpretations(m).size(), product);
  }
}

TEST(Interpretations, Cap) {
  EXPECT_THROW(enumerate_interpretations(make_qbit_model(), 15),
               EnumerationCapExceeded);
}

TEST(QmBuilder, DeterminatePairsAreFullOrEmpty) {
  Model m = make_qutrit_model();
  const auto& h = m.require_hilbert();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (std::size_t p = 0; p < m.num_properties(); ++p) {
      const Subspace& sub = h.property_subspaces[p];
      const Subspace& ray = h.state_rays[s];
      const IndexSet& e = m.extension(s, p);
      if (contains(sub, ray)) {
        EXPECT_TRUE(e.all());
      } else if (contains(ortho(sub), ray)) {
        EXPECT_TRUE(e.none());
      } else {
        EXPECT_TRUE(e.any() && !e.all());
      }
    }
  }
}

TEST(QmBuilder, SeededPolicyIsReproducible) {
  QmModelSpec spec = qbit_model_spec();
  spec.policy = ExtensionPolicy::kSeededRandom;
  spec.universe_size = 5;
  spec.seed = 42;
  EXPECT_EQ(save_model(build_qm_model(spec)), save_model(build_qm_model(spec)));
}

TEST(QmBuilder, UniverseTooSmall) {
  QmModelSpec spec = qbit_model_spec();
  spec.universe_size = 1;
  EXPECT_THROW(build_qm_model(spec), UniverseTooSmall);
}

TEST(QmBuilder, DependentBasis) {
  QmModelSpec spec = qbit_model_spec();
  spec.subspaces.push_back({"Bad", {{1.0, 0.0}, {2.0, 0.0}}});
  EXPECT_THROW(build_qm_model(spec), RankError);
}

}  // namespace
