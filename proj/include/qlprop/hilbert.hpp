#pragma once

// The Hilbert side of a model: the map from properties to the set of states
// whose ray lies in the property's subspace, the lattice operations on
// properties induced by their subspaces, and the resulting lattice of closed
// state sets.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlprop/lattice.hpp"
#include "qlprop/model.hpp"

namespace qlprop {

/// States whose ray is contained in the subspace of `property`.
/// Throws NoHilbertAnnotation.
Proposition theta(const Model& m, std::size_t property);
Proposition theta(const Model& m, std::string_view property);

/// Ortho, meet and join between the model's properties, looked up by
/// subspace equality. An operation whose result is not some property's
/// subspace has no value.
class PropertyAlgebra {
 public:
  explicit PropertyAlgebra(const Model& m);  // throws NoHilbertAnnotation

  std::size_t size() const { return ortho_.size(); }
  std::optional<std::size_t> ortho(std::size_t p) const { return ortho_[p]; }
  std::optional<std::size_t> meet(std::size_t p, std::size_t q) const {
    return meet_[p][q];
  }
  std::optional<std::size_t> join(std::size_t p, std::size_t q) const {
    return join_[p][q];
  }

  /// Throws NotOperationClosed naming the first missing result. The join
  /// table is only checked when `include_join` is set.
  void require_closed(bool include_join = true) const;

 private:
  const Model* model_;
  std::vector<std::optional<std::size_t>> ortho_;
  std::vector<std::vector<std::optional<std::size_t>>> meet_, join_;
};

/// L(S): the distinct images of theta with operations induced via the
/// property subspaces.
struct StateLattice {
  OrthoLattice lattice;
  std::vector<Proposition> elements;
  std::vector<std::size_t> property_of;  // first property per element
  std::vector<std::size_t> element_of;   // element per property
  /// Pairs of distinct properties with the same image (theta not injective).
  std::vector<std::pair<std::size_t, std::size_t>> theta_collisions;
  /// Whether every induced meet equals set intersection.
  bool meet_is_intersection = true;

  std::optional<std::size_t> find(const Proposition& p) const;
};

/// Throws NoHilbertAnnotation, NotOperationClosed, or NotAnOrthoLattice when
/// theta collisions make the induced operations inconsistent.
StateLattice generate_ls(const Model& m);

/// The properties' subspaces ordered by inclusion, labelled by name.
FinitePoset subspace_poset(const Model& m);

}  // namespace qlprop
