#include "qlprop/semantics.hpp"

#include <algorithm>
#include <map>

#include "qlprop/error.hpp"

namespace qlprop {

IndexSet extension_of(const Model& m, std::size_t state, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      return m.extension(state, m.property_index(f.property()));
    case Formula::Kind::kNot:
      return ~extension_of(m, state, f.inner());
    case Formula::Kind::kAnd:
      return extension_of(m, state, f.left()) &
             extension_of(m, state, f.right());
    case Formula::Kind::kOr:
      return extension_of(m, state, f.left()) |
             extension_of(m, state, f.right());
  }
  throw InvariantViolation("unhandled formula kind");
}

IndexSet extension_of(const Model& m, std::string_view state,
                      const Formula& f) {
  return extension_of(m, m.state_index(state), f);
}

bool sigma(const Model& m, const Interpretation& rho, std::size_t state,
           const Formula& f) {
  return extension_of(m, state, f).test(rho.choice.at(state));
}

Proposition individual_proposition(const Model& m, const Interpretation& rho,
                                   const Formula& f) {
  Proposition p = m.no_states();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (sigma(m, rho, s, f)) p.set(s);
  }
  return p;
}

Proposition physical_proposition(const Model& m, const Formula& f) {
  Proposition p = m.no_states();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (extension_of(m, s, f).all()) p.set(s);
  }
  return p;
}

bool certainly_true(const Model& m, std::size_t state, const Formula& f) {
  return extension_of(m, state, f).all();
}

Profile profile_of(const Model& m, const Formula& f) {
  Profile out;
  out.reserve(m.num_states());
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    out.push_back(extension_of(m, s, f));
  }
  return out;
}

bool profile_leq(const Profile& a, const Profile& b) {
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (!a[s].is_subset_of(b[s])) return false;
  }
  return true;
}

bool logical_leq(const Model& m, const Formula& a, const Formula& b) {
  return profile_leq(profile_of(m, a), profile_of(m, b));
}

bool logical_equiv(const Model& m, const Formula& a, const Formula& b) {
  return profile_of(m, a) == profile_of(m, b);
}

bool physical_leq(const Model& m, const Formula& a, const Formula& b) {
  return physical_proposition(m, a).is_subset_of(physical_proposition(m, b));
}

bool physical_equiv(const Model& m, const Formula& a, const Formula& b) {
  return physical_proposition(m, a) == physical_proposition(m, b);
}

bool logical_leq_by_enumeration(const Model& m, const Formula& a,
                                const Formula& b, std::uint64_t cap) {
  for (const Interpretation& rho : enumerate_interpretations(m, cap)) {
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      if (sigma(m, rho, s, a) && !sigma(m, rho, s, b)) return false;
    }
  }
  return true;
}

Proposition intersection_over_interpretations(const Model& m, const Formula& f,
                                              std::uint64_t cap) {
  Proposition p = m.all_states();
  for (const Interpretation& rho : enumerate_interpretations(m, cap)) {
    p &= individual_proposition(m, rho, f);
  }
  return p;
}

std::optional<PropertyId> testable_witness(const Model& m, const Formula& f) {
  const Profile target = profile_of(m, f);
  for (const PropertyId& e : m.properties()) {
    if (profile_of(m, Formula::atom(e)) == target) return e;
  }
  return std::nullopt;
}

namespace {

void check_depth(std::size_t depth, std::size_t cap) {
  if (depth == 0) throw DepthCapExceeded("depth must be at least 1");
  if (depth > cap) {
    throw DepthCapExceeded("depth " + std::to_string(depth) +
                           " exceeds the cap of " + std::to_string(cap));
  }
}

Profile negate(const Profile& a) {
  Profile out(a);
  for (IndexSet& e : out) e.flip();
  return out;
}

template <typename Op>
Profile combine(const Profile& a, const Profile& b, Op op) {
  Profile out;
  out.reserve(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) out.push_back(op(a[s], b[s]));
  return out;
}

}  // namespace

std::vector<FormulaClass> enumerate_classes(const Model& m, std::size_t depth,
                                            std::size_t depth_cap) {
  check_depth(depth, depth_cap);
  std::vector<FormulaClass> classes;
  std::map<Profile, std::size_t> index;
  auto offer = [&](const Formula& f, Profile p) {
    if (index.emplace(p, classes.size()).second) {
      classes.push_back({f, std::move(p)});
    }
  };
  for (const PropertyId& e : m.properties()) {
    Formula a = Formula::atom(e);
    offer(a, profile_of(m, a));
  }
  std::size_t layer_start = 0;
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t n = classes.size();
    for (std::size_t i = layer_start; i < n; ++i) {
      offer(Formula::negation(classes[i].representative),
            negate(classes[i].profile));
    }
    // Pairs with at least one operand from the newest layer.
    auto pairs = [&](auto&& make, auto&& op) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = std::max(i, layer_start); j < n; ++j) {
          offer(make(classes[i].representative, classes[j].representative),
                combine(classes[i].profile, classes[j].profile, op));
        }
      }
    };
    pairs(Formula::conjunction,
          [](const IndexSet& a, const IndexSet& b) { return a & b; });
    pairs(Formula::disjunction,
          [](const IndexSet& a, const IndexSet& b) { return a | b; });
    layer_start = n;
  }
  return classes;
}

PropositionPoset testable_proposition_poset(const Model& m, std::size_t depth,
                                            std::size_t depth_cap) {
  std::vector<Profile> atom_profiles;
  for (const PropertyId& e : m.properties()) {
    atom_profiles.push_back(profile_of(m, Formula::atom(e)));
  }
  std::vector<Proposition> elements;
  std::vector<Formula> reps;
  for (const FormulaClass& c : enumerate_classes(m, depth, depth_cap)) {
    if (std::find(atom_profiles.begin(), atom_profiles.end(), c.profile) ==
        atom_profiles.end()) {
      continue;
    }
    Proposition p = physical_proposition(m, c.representative);
    if (std::find(elements.begin(), elements.end(), p) != elements.end()) {
      continue;
    }
    elements.push_back(std::move(p));
    reps.push_back(c.representative);
  }
  std::vector<std::string> labels;
  for (const Proposition& p : elements) {
    labels.push_back(format_proposition(m, p));
  }
  FinitePoset poset = build_poset(std::move(labels), [&](std::size_t i,
                                                         std::size_t j) {
    return elements[i].is_subset_of(elements[j]);
  });
  return {std::move(poset), std::move(elements), std::move(reps)};
}

Proposition forall_proposition(const Model& m, const Formula& f,
                               std::uint64_t cap) {
  Proposition brute = intersection_over_interpretations(m, f, cap);
  Proposition direct = physical_proposition(m, f);
  if (brute != direct) {
    throw InvariantViolation("intersection over interpretations " +
                             format_proposition(m, brute) +
                             " differs from the physical proposition " +
                             format_proposition(m, direct) + " of " +
                             format_lx(f));
  }
  return brute;
}

LindenbaumTarski lindenbaum_tarski(const Model& m, std::size_t depth,
                                   std::size_t depth_cap) {
  std::vector<FormulaClass> classes = enumerate_classes(m, depth, depth_cap);
  std::vector<std::string> labels;
  for (const FormulaClass& c : classes) {
    labels.push_back(format_lx(c.representative));
  }
  FinitePoset poset = build_poset(std::move(labels), [&](std::size_t i,
                                                         std::size_t j) {
    return profile_leq(classes[i].profile, classes[j].profile);
  });
  return {std::move(poset), std::move(classes)};
}

std::vector<Formula> all_formulas(const std::vector<PropertyId>& atoms,
                                  std::size_t depth, std::size_t max_count) {
  if (depth == 0) throw DepthCapExceeded("depth must be at least 1");
  std::vector<Formula> out;
  for (const PropertyId& e : atoms) out.push_back(Formula::atom(e));
  std::size_t layer_start = 0;
  auto push = [&](Formula f) {
    if (out.size() >= max_count) {
      throw DepthCapExceeded("more than " + std::to_string(max_count) +
                             " formulas up to depth " + std::to_string(depth));
    }
    out.push_back(std::move(f));
  };
  for (std::size_t d = 2; d <= depth; ++d) {
    const std::size_t n = out.size();
    for (std::size_t i = layer_start; i < n; ++i) {
      push(Formula::negation(out[i]));
    }
    for (auto make : {Formula::conjunction, Formula::disjunction}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i < layer_start && j < layer_start) continue;
          push(make(out[i], out[j]));
        }
      }
    }
    layer_start = n;
  }
  return out;
}

}  // namespace qlprop
