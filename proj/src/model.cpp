#include "qlprop/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "qlprop/error.hpp"

namespace qlprop {

namespace {

template <typename Names>
void check_unique(const Names& names, const std::string& what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw DuplicateId("duplicate " + what + " '" + std::string(n) + "'");
    }
  }
}

}  // namespace

Model::Model(std::vector<StateId> states,
             std::vector<std::vector<ObjectId>> universes,
             std::vector<PropertyId> properties,
             std::vector<std::vector<IndexSet>> extensions,
             std::optional<HilbertAnnotation> hilbert)
    : states_(std::move(states)),
      universes_(std::move(universes)),
      properties_(std::move(properties)),
      extensions_(std::move(extensions)),
      hilbert_(std::move(hilbert)) {
  if (states_.empty()) throw SchemaError("a model needs at least one state");
  if (properties_.empty()) {
    throw SchemaError("a model needs at least one property");
  }
  check_unique(states_, "state");
  check_unique(properties_, "property");
  for (const PropertyId& p : properties_) {
    if (!is_identifier(p)) {
      throw SchemaError("property name '" + p + "' is not an identifier");
    }
  }
  if (universes_.size() != states_.size()) {
    throw SchemaError("one universe per state required");
  }
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (universes_[s].empty()) {
      throw SchemaError("universe of state '" + states_[s] + "' is empty");
    }
    check_unique(universes_[s], "object in universe of '" + states_[s] + "'");
  }
  if (extensions_.size() != states_.size()) {
    throw SchemaError("extensions must be given for every state");
  }
  for (std::size_t s = 0; s < states_.size(); ++s) {
    if (extensions_[s].size() != properties_.size()) {
      throw SchemaError("extensions of state '" + states_[s] +
                        "' must cover every property");
    }
    for (const IndexSet& e : extensions_[s]) {
      if (e.size() != universes_[s].size()) {
        throw ExtensionOutOfUniverse("extension in state '" + states_[s] +
                                     "' does not index its universe");
      }
    }
  }
  if (hilbert_) {
    const HilbertAnnotation& h = *hilbert_;
    if (h.dim == 0) throw SchemaError("hilbert.dim must be positive");
    if (h.state_rays.size() != states_.size() ||
        h.property_subspaces.size() != properties_.size()) {
      throw SchemaError("hilbert annotation must cover every state and property");
    }
    for (std::size_t s = 0; s < states_.size(); ++s) {
      const Subspace& r = h.state_rays[s];
      if (r.dim() != h.dim) {
        throw HilbertDimensionMismatch("ray of '" + states_[s] +
                                       "' has the wrong dimension");
      }
      if (r.rank() != 1) {
        throw RankError("ray of '" + states_[s] + "' is not one-dimensional");
      }
      for (std::size_t t = 0; t < s; ++t) {
        if (same_subspace(r, h.state_rays[t])) {
          throw SchemaError("states '" + states_[t] + "' and '" + states_[s] +
                            "' share a ray");
        }
      }
    }
    for (std::size_t p = 0; p < properties_.size(); ++p) {
      const Subspace& sp = h.property_subspaces[p];
      if (sp.dim() != h.dim) {
        throw HilbertDimensionMismatch("subspace of '" + properties_[p] +
                                       "' has the wrong dimension");
      }
      for (std::size_t q = 0; q < p; ++q) {
        if (same_subspace(sp, h.property_subspaces[q])) {
          throw SchemaError("properties '" + properties_[q] + "' and '" +
                            properties_[p] + "' share a subspace");
        }
      }
    }
  }
}

const HilbertAnnotation& Model::require_hilbert() const {
  if (!hilbert_) throw NoHilbertAnnotation("model has no hilbert annotation");
  return *hilbert_;
}

std::size_t Model::state_index(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) {
    throw UnknownState("unknown state '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - states_.begin());
}

std::optional<std::size_t> Model::find_property(std::string_view name) const {
  auto it = std::find(properties_.begin(), properties_.end(), name);
  if (it == properties_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - properties_.begin());
}

std::size_t Model::property_index(std::string_view name) const {
  if (auto p = find_property(name)) return *p;
  throw UnknownProperty("unknown property '" + std::string(name) + "'");
}

std::size_t Model::object_index(std::size_t state,
                                std::string_view name) const {
  const auto& u = universes_.at(state);
  auto it = std::find(u.begin(), u.end(), name);
  if (it == u.end()) {
    throw UnknownObject("object '" + std::string(name) +
                        "' is not in the universe of '" + states_[state] + "'");
  }
  return static_cast<std::size_t>(it - u.begin());
}

IndexSet Model::full_universe(std::size_t state) const {
  IndexSet all(universes_[state].size());
  all.set();
  return all;
}

IndexSet Model::all_states() const {
  IndexSet all(states_.size());
  all.set();
  return all;
}

IndexSet Model::no_states() const { return IndexSet(states_.size()); }

std::string format_proposition(const Model& m, const Proposition& p) {
  std::string out = "{";
  for (std::size_t s = p.find_first(); s != Proposition::npos;
       s = p.find_next(s)) {
    if (out.size() > 1) out += ",";
    out += m.states()[s];
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Model files

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void only_keys(const json& obj, std::initializer_list<std::string_view> keys,
               const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [k, _] : obj.items()) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw SchemaError("unknown key '" + k + "' in " + where);
    }
  }
}

const json& required(const json& obj, const std::string& key,
                     const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("missing key '" + key + "' in " + where);
  }
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& e : j) {
    if (!e.is_string()) throw SchemaError(where + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Vector complex_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be an array of complex");
  Vector v;
  for (const json& c : j) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
        !c[1].is_number()) {
      throw SchemaError(where + ": complex numbers are [re, im] pairs");
    }
    v.emplace_back(c[0].get<double>(), c[1].get<double>());
  }
  return v;
}

ordered_json complex_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (const Scalar& c : v) out.push_back({c.real(), c.imag()});
  return out;
}

HilbertAnnotation parse_hilbert(const json& h,
                                const std::vector<StateId>& states,
                                const std::vector<PropertyId>& properties,
                                double tol) {
  only_keys(h, {"dim", "state_rays", "property_subspaces"}, "hilbert");
  const json& dim_j = required(h, "dim", "hilbert");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) {
    throw SchemaError("hilbert.dim must be a positive integer");
  }
  HilbertAnnotation out;
  out.dim = dim_j.get<std::size_t>();

  const json& rays = required(h, "state_rays", "hilbert");
  if (!rays.is_object()) throw SchemaError("hilbert.state_rays must be an object");
  for (const auto& [k, _] : rays.items()) {
    if (std::find(states.begin(), states.end(), k) == states.end()) {
      throw SchemaError("hilbert.state_rays names unknown state '" + k + "'");
    }
  }
  for (const StateId& s : states) {
    Vector v = complex_vector(required(rays, s, "hilbert.state_rays"),
                              "ray of '" + s + "'");
    if (v.size() != out.dim) {
      throw HilbertDimensionMismatch("ray of '" + s + "' has length " +
                                     std::to_string(v.size()));
    }
    if (std::abs(norm(v) - 1.0) > tol) {
      throw NonOrthonormalBasis("ray of '" + s + "' is not a unit vector");
    }
    out.state_rays.push_back(Subspace::from_orthonormal(out.dim, {v}, tol));
  }

  const json& subs = required(h, "property_subspaces", "hilbert");
  if (!subs.is_object()) {
    throw SchemaError("hilbert.property_subspaces must be an object");
  }
  for (const auto& [k, _] : subs.items()) {
    if (std::find(properties.begin(), properties.end(), k) ==
        properties.end()) {
      throw SchemaError("hilbert.property_subspaces names unknown property '" +
                        k + "'");
    }
  }
  for (const PropertyId& p : properties) {
    const json& basis_j = required(subs, p, "hilbert.property_subspaces");
    if (!basis_j.is_array()) {
      throw SchemaError("basis of '" + p + "' must be an array of vectors");
    }
    std::vector<Vector> basis;
    for (const json& vj : basis_j) {
      Vector v = complex_vector(vj, "basis of '" + p + "'");
      if (v.size() != out.dim) {
        throw HilbertDimensionMismatch("basis vector of '" + p +
                                       "' has length " +
                                       std::to_string(v.size()));
      }
      basis.push_back(std::move(v));
    }
    out.property_subspaces.push_back(
        Subspace::from_orthonormal(out.dim, std::move(basis), tol));
  }
  return out;
}

}  // namespace

Model load_model(std::string_view content, const LoadOptions& options) {
  json root;
  try {
    root = json::parse(content.begin(), content.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  only_keys(root, {"states", "universes", "properties", "extensions", "hilbert"},
            "model");
  auto states = string_list(required(root, "states", "model"), "states");
  auto properties =
      string_list(required(root, "properties", "model"), "properties");
  check_unique(states, "state");
  check_unique(properties, "property");

  const json& uj = required(root, "universes", "model");
  if (!uj.is_object()) throw SchemaError("universes must be an object");
  for (const auto& [k, _] : uj.items()) {
    if (std::find(states.begin(), states.end(), k) == states.end()) {
      throw SchemaError("universes names unknown state '" + k + "'");
    }
  }
  std::vector<std::vector<ObjectId>> universes;
  for (const StateId& s : states) {
    universes.push_back(
        string_list(required(uj, s, "universes"), "universe of '" + s + "'"));
    check_unique(universes.back(), "object in universe of '" + s + "'");
  }

  const json& ej = required(root, "extensions", "model");
  if (!ej.is_object()) throw SchemaError("extensions must be an object");
  for (const auto& [k, _] : ej.items()) {
    if (std::find(states.begin(), states.end(), k) == states.end()) {
      throw SchemaError("extensions names unknown state '" + k + "'");
    }
  }
  std::vector<std::vector<IndexSet>> extensions;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const json& per_state = required(ej, states[s], "extensions");
    if (!per_state.is_object()) {
      throw SchemaError("extensions of '" + states[s] + "' must be an object");
    }
    for (const auto& [k, _] : per_state.items()) {
      if (std::find(properties.begin(), properties.end(), k) ==
          properties.end()) {
        throw SchemaError("extensions of '" + states[s] +
                          "' name unknown property '" + k + "'");
      }
    }
    std::vector<IndexSet> row;
    for (const PropertyId& p : properties) {
      const std::string where = "extension of '" + p + "' in '" + states[s] + "'";
      IndexSet e(universes[s].size());
      for (const std::string& obj :
           string_list(required(per_state, p, "extensions of '" + states[s] + "'"),
                       where)) {
        auto it = std::find(universes[s].begin(), universes[s].end(), obj);
        if (it == universes[s].end()) {
          throw ExtensionOutOfUniverse(where + " contains '" + obj +
                                       "', which is not in the universe");
        }
        e.set(static_cast<std::size_t>(it - universes[s].begin()));
      }
      row.push_back(std::move(e));
    }
    extensions.push_back(std::move(row));
  }

  std::optional<HilbertAnnotation> hilbert;
  if (auto it = root.find("hilbert"); it != root.end()) {
    hilbert = parse_hilbert(*it, states, properties, options.tol);
  }
  return Model(std::move(states), std::move(universes), std::move(properties),
               std::move(extensions), std::move(hilbert));
}

std::string save_model(const Model& m) {
  ordered_json root;
  root["states"] = m.states();
  ordered_json universes = ordered_json::object();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    universes[m.states()[s]] = m.universe(s);
  }
  root["universes"] = universes;
  root["properties"] = m.properties();
  ordered_json ext = ordered_json::object();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    ordered_json row = ordered_json::object();
    for (std::size_t p = 0; p < m.num_properties(); ++p) {
      ordered_json objs = ordered_json::array();
      const IndexSet& e = m.extension(s, p);
      for (std::size_t o = e.find_first(); o != IndexSet::npos;
           o = e.find_next(o)) {
        objs.push_back(m.universe(s)[o]);
      }
      row[m.properties()[p]] = objs;
    }
    ext[m.states()[s]] = row;
  }
  root["extensions"] = ext;
  if (const auto& h = m.hilbert()) {
    ordered_json hj;
    hj["dim"] = h->dim;
    ordered_json rays = ordered_json::object();
    for (std::size_t s = 0; s < m.num_states(); ++s) {
      rays[m.states()[s]] = complex_json(h->state_rays[s].basis().front());
    }
    hj["state_rays"] = rays;
    ordered_json subs = ordered_json::object();
    for (std::size_t p = 0; p < m.num_properties(); ++p) {
      ordered_json basis = ordered_json::array();
      for (const Vector& v : h->property_subspaces[p].basis()) {
        basis.push_back(complex_json(v));
      }
      subs[m.properties()[p]] = basis;
    }
    hj["property_subspaces"] = subs;
    root["hilbert"] = hj;
  }
  return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

std::uint64_t count_interpretations(const Model& m) {
  std::uint64_t n = 1;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    std::uint64_t u = m.universe(s).size();
    if (n > UINT64_MAX / u) return UINT64_MAX;
    n *= u;
  }
  return n;
}

std::vector<Interpretation> enumerate_interpretations(const Model& m,
                                                      std::uint64_t cap) {
  std::uint64_t total = count_interpretations(m);
  if (total > cap) {
    throw EnumerationCapExceeded(std::to_string(total) +
                                 " interpretations exceed the cap of " +
                                 std::to_string(cap));
  }
  std::vector<Interpretation> out;
  out.reserve(total);
  Interpretation rho{std::vector<std::size_t>(m.num_states(), 0)};
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(rho);
    // Odometer increment, last state fastest.
    for (std::size_t s = m.num_states(); s-- > 0;) {
      if (++rho.choice[s] < m.universe(s).size()) break;
      rho.choice[s] = 0;
    }
  }
  return out;
}

CmsResult check_cms(const Model& m) {
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    for (std::size_t p = 0; p < m.num_properties(); ++p) {
      const IndexSet& e = m.extension(s, p);
      if (!e.none() && !e.all()) return {false, std::make_pair(s, p)};
    }
  }
  return {};
}

Model build_qm_model(const QmModelSpec& spec) {
  if (spec.dim == 0) throw RankError("dimension must be positive");
  std::vector<StateId> states;
  std::vector<Subspace> rays;
  for (const auto& [name, v] : spec.rays) {
    if (v.size() != spec.dim) {
      throw HilbertDimensionMismatch("ray of '" + name + "' has length " +
                                     std::to_string(v.size()));
    }
    states.push_back(name);
    rays.push_back(Subspace::ray(v, spec.tol));
  }
  std::vector<PropertyId> properties;
  std::vector<Subspace> subspaces;
  for (const auto& [name, basis] : spec.subspaces) {
    for (const Vector& v : basis) {
      if (v.size() != spec.dim) {
        throw HilbertDimensionMismatch("basis vector of '" + name +
                                       "' has length " +
                                       std::to_string(v.size()));
      }
    }
    Subspace sp = Subspace::span(spec.dim, basis, spec.tol);
    if (sp.rank() != basis.size()) {
      throw RankError("basis of '" + name + "' is linearly dependent");
    }
    properties.push_back(name);
    subspaces.push_back(std::move(sp));
  }

  const std::size_t n = spec.universe_size;
  std::mt19937_64 rng(spec.seed);
  std::vector<std::vector<ObjectId>> universes;
  std::vector<std::vector<IndexSet>> extensions;
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<ObjectId> universe;
    for (std::size_t o = 0; o < n; ++o) {
      universe.push_back("o" + std::to_string(o + 1));
    }
    std::vector<IndexSet> row;
    for (std::size_t p = 0; p < properties.size(); ++p) {
      IndexSet e(n);
      if (contains(subspaces[p], rays[s])) {
        e.set();
      } else if (!contains(ortho(subspaces[p]), rays[s])) {
        if (n < 2) {
          throw UniverseTooSmall("state '" + states[s] + "' and property '" +
                                 properties[p] +
                                 "' need a proper nonempty extension");
        }
        if (spec.policy == ExtensionPolicy::kBornFraction) {
          double prob = std::pow(norm(subspaces[p].project(
                                     rays[s].basis().front())),
                                 2);
          auto k = static_cast<std::size_t>(
              std::llround(prob * static_cast<double>(n)));
          k = std::clamp<std::size_t>(k, 1, n - 1);
          for (std::size_t o = 0; o < k; ++o) e.set(o);
        } else {
          std::uniform_int_distribution<std::size_t> size_dist(1, n - 1);
          std::size_t k = size_dist(rng);
          std::vector<std::size_t> order(n);
          std::iota(order.begin(), order.end(), 0);
          std::shuffle(order.begin(), order.end(), rng);
          for (std::size_t o = 0; o < k; ++o) e.set(order[o]);
        }
      }
      row.push_back(std::move(e));
    }
    universes.push_back(std::move(universe));
    extensions.push_back(std::move(row));
  }
  HilbertAnnotation h{spec.dim, std::move(rays), std::move(subspaces)};
  return Model(std::move(states), std::move(universes), std::move(properties),
               std::move(extensions), std::move(h));
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

IndexSet bits(std::size_t n, std::initializer_list<std::size_t> members) {
  IndexSet b(n);
  for (std::size_t i : members) b.set(i);
  return b;
}

}  // namespace

Model make_sr_model() {
  // S1: E = {u1}, F = {u2}; S2: E = {v1}, F = {}.
  return Model({"S1", "S2"}, {{"u1", "u2"}, {"v1"}}, {"E", "F"},
               {{bits(2, {0}), bits(2, {1})}, {bits(1, {0}), bits(1, {})}});
}

Model make_cm_model() {
  return Model({"S1", "S2", "S3"}, {{"a1", "a2"}, {"b1"}, {"c1"}}, {"E", "F"},
               {{bits(2, {0, 1}), bits(2, {})},
                {bits(1, {0}), bits(1, {0})},
                {bits(1, {}), bits(1, {0})}});
}

QmModelSpec qbit_model_spec() {
  const double h = 1.0 / std::sqrt(2.0);
  QmModelSpec spec;
  spec.dim = 2;
  spec.rays = {{"Sz+", {1.0, 0.0}},
               {"Sz-", {0.0, 1.0}},
               {"Sx+", {h, h}},
               {"Sx-", {h, -h}}};
  spec.subspaces = {{"E0", {}},
                    {"Ez+", {{1.0, 0.0}}},
                    {"Ez-", {{0.0, 1.0}}},
                    {"Ex+", {{h, h}}},
                    {"Ex-", {{h, -h}}},
                    {"EI", {{1.0, 0.0}, {0.0, 1.0}}}};
  spec.universe_size = 2;
  return spec;
}

QmModelSpec qutrit_model_spec() {
  const double h = 1.0 / std::sqrt(2.0);
  const Vector e1{1.0, 0.0, 0.0}, e2{0.0, 1.0, 0.0}, e3{0.0, 0.0, 1.0};
  const Vector p{h, h, 0.0}, q{h, -h, 0.0};
  QmModelSpec spec;
  spec.dim = 3;
  spec.rays = {{"S1", e1}, {"S2", e2}, {"S3", e3}, {"Sp", p}, {"Sm", q}};
  spec.subspaces = {{"E0", {}},        {"E1", {e1}},      {"E2", {e2}},
                    {"E3", {e3}},      {"Ep", {p}},       {"Em", {q}},
                    {"E23", {e2, e3}}, {"E13", {e1, e3}}, {"E12", {e1, e2}},
                    {"Em3", {q, e3}},  {"Ep3", {p, e3}},  {"EI", {e1, e2, e3}}};
  spec.universe_size = 2;
  return spec;
}

Model make_qbit_model() { return build_qm_model(qbit_model_spec()); }
Model make_qutrit_model() { return build_qm_model(qutrit_model_spec()); }

CanonicalModels canonical_models() {
  return {make_sr_model(), make_cm_model(), make_qbit_model()};
}

}  // namespace qlprop
