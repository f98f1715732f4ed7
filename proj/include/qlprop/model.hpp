#pragma once

// Finite semantic models: a list of states, a universe of physical objects
// per state, a list of properties and, for every (state, property) pair, the
// set of objects in that state's universe possessing the property. A model
// may carry a Hilbert annotation mapping states to rays and properties to
// subspaces.
//
// Internally everything is index based: states, properties and the objects of
// each universe are addressed by their position in the model's lists.

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlprop/subspace.hpp"
#include "qlprop/syntax.hpp"

namespace qlprop {

/// Subset of an index range (objects of a universe, or states of a model).
using IndexSet = boost::dynamic_bitset<>;

/// A set of states of one model.
using Proposition = IndexSet;

using StateId = std::string;
using ObjectId = std::string;

struct HilbertAnnotation {
  std::size_t dim = 0;
  std::vector<Subspace> state_rays;          // indexed like Model::states()
  std::vector<Subspace> property_subspaces;  // indexed like Model::properties()
};

/// One object chosen from each state's universe, indexed by state.
struct Interpretation {
  std::vector<std::size_t> choice;

  friend bool operator==(const Interpretation&,
                         const Interpretation&) = default;
};

class Model {
 public:
  /// `extensions[s][p]` is a subset of universe s (its size must equal the
  /// universe size). Validates every invariant; throws the matching error.
  Model(std::vector<StateId> states,
        std::vector<std::vector<ObjectId>> universes,
        std::vector<PropertyId> properties,
        std::vector<std::vector<IndexSet>> extensions,
        std::optional<HilbertAnnotation> hilbert = std::nullopt);

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_properties() const { return properties_.size(); }

  const std::vector<StateId>& states() const { return states_; }
  const std::vector<PropertyId>& properties() const { return properties_; }
  const std::vector<ObjectId>& universe(std::size_t state) const {
    return universes_[state];
  }
  const IndexSet& extension(std::size_t state, std::size_t property) const {
    return extensions_[state][property];
  }
  const std::optional<HilbertAnnotation>& hilbert() const { return hilbert_; }
  /// Throws NoHilbertAnnotation when absent.
  const HilbertAnnotation& require_hilbert() const;

  std::size_t state_index(std::string_view name) const;     // UnknownState
  std::size_t property_index(std::string_view name) const;  // UnknownProperty
  std::size_t object_index(std::size_t state,
                           std::string_view name) const;  // UnknownObject
  std::optional<std::size_t> find_property(std::string_view name) const;

  IndexSet full_universe(std::size_t state) const;
  IndexSet all_states() const;
  IndexSet no_states() const;

 private:
  std::vector<StateId> states_;
  std::vector<std::vector<ObjectId>> universes_;
  std::vector<PropertyId> properties_;
  std::vector<std::vector<IndexSet>> extensions_;
  std::optional<HilbertAnnotation> hilbert_;
};

/// "{S1,S2}" in model state order; "{}" when empty.
std::string format_proposition(const Model& m, const Proposition& p);

struct LoadOptions {
  double tol = kDefaultTolerance;
};

/// Parses and validates a model file (JSON, see README).
Model load_model(std::string_view content, const LoadOptions& options = {});
std::string save_model(const Model& m);

/// Every interpretation in lexicographic order (last state varies fastest).
/// Throws EnumerationCapExceeded when the product of universe sizes exceeds
/// `cap`.
std::vector<Interpretation> enumerate_interpretations(
    const Model& m, std::uint64_t cap = 1'000'000);
std::uint64_t count_interpretations(const Model& m);

struct CmsResult {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (state, prop)
};

/// Checks that every extension is either the full universe or empty.
CmsResult check_cms(const Model& m);

enum class ExtensionPolicy { kBornFraction, kSeededRandom };

struct QmModelSpec {
  std::size_t dim = 0;
  std::vector<std::pair<StateId, Vector>> rays;
  std::vector<std::pair<PropertyId, std::vector<Vector>>> subspaces;
  std::size_t universe_size = 2;
  ExtensionPolicy policy = ExtensionPolicy::kBornFraction;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
};

/// Builds a Hilbert-annotated model. Determinate pairs get the full or empty
/// extension; every other pair gets a proper nonempty subset: the first k
/// objects with k = round(p * n) clamped to [1, n-1] (p the squared norm of
/// the projected ray) under kBornFraction, or a seeded random subset.
Model build_qm_model(const QmModelSpec& spec);

struct CanonicalModels {
  Model sr;
  Model cm;
  Model qbit;
};

CanonicalModels canonical_models();
Model make_sr_model();
Model make_cm_model();
Model make_qbit_model();
QmModelSpec qbit_model_spec();
/// Dimension 3: the closure of e1, e2, e3 and (e1+e2)/sqrt2, with the atoms
/// of that closure as states.
Model make_qutrit_model();
QmModelSpec qutrit_model_spec();

}  // namespace qlprop
