#include "qlprop/hilbert.hpp"

#include "qlprop/error.hpp"

namespace qlprop {

Proposition theta(const Model& m, std::size_t property) {
  const HilbertAnnotation& h = m.require_hilbert();
  const Subspace& sp = h.property_subspaces.at(property);
  Proposition out = m.no_states();
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    if (contains(sp, h.state_rays[s])) out.set(s);
  }
  return out;
}

Proposition theta(const Model& m, std::string_view property) {
  return theta(m, m.property_index(property));
}

namespace {

std::optional<std::size_t> lookup(const std::vector<Subspace>& subs,
                                  const Subspace& s) {
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (same_subspace(subs[i], s)) return i;
  }
  return std::nullopt;
}

}  // namespace

PropertyAlgebra::PropertyAlgebra(const Model& m) : model_(&m) {
  const auto& subs = m.require_hilbert().property_subspaces;
  const std::size_t n = subs.size();
  ortho_.resize(n);
  meet_.assign(n, std::vector<std::optional<std::size_t>>(n));
  join_ = meet_;
  for (std::size_t p = 0; p < n; ++p) {
    ortho_[p] = lookup(subs, qlprop::ortho(subs[p]));
    for (std::size_t q = 0; q < n; ++q) {
      if (q < p) {
        meet_[p][q] = meet_[q][p];
        join_[p][q] = join_[q][p];
        continue;
      }
      meet_[p][q] = lookup(subs, qlprop::meet(subs[p], subs[q]));
      join_[p][q] = lookup(subs, qlprop::join(subs[p], subs[q]));
    }
  }
}

void PropertyAlgebra::require_closed(bool include_join) const {
  const auto& names = model_->properties();
  for (std::size_t p = 0; p < size(); ++p) {
    if (!ortho_[p]) {
      throw NotOperationClosed("no property has the orthocomplement of '" +
                               names[p] + "' (witness " + names[p] + ", ortho)");
    }
  }
  for (std::size_t p = 0; p < size(); ++p) {
    for (std::size_t q = p; q < size(); ++q) {
      if (!meet_[p][q]) {
        throw NotOperationClosed("no property has the meet of '" + names[p] +
                                 "' and '" + names[q] + "'");
      }
      if (include_join && !join_[p][q]) {
        throw NotOperationClosed("no property has the join of '" + names[p] +
                                 "' and '" + names[q] + "'");
      }
    }
  }
}

std::optional<std::size_t> StateLattice::find(const Proposition& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == p) return i;
  }
  return std::nullopt;
}

namespace {

struct Images {
  std::vector<Proposition> elements;
  std::vector<std::size_t> property_of, element_of;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

Images distinct_images(const Model& m) {
  Images out;
  for (std::size_t p = 0; p < m.num_properties(); ++p) {
    Proposition t = theta(m, p);
    std::size_t e = 0;
    while (e < out.elements.size() && out.elements[e] != t) ++e;
    if (e == out.elements.size()) {
      out.elements.push_back(t);
      out.property_of.push_back(p);
    } else {
      out.collisions.emplace_back(out.property_of[e], p);
    }
    out.element_of.push_back(e);
  }
  return out;
}

}  // namespace

StateLattice generate_ls(const Model& m) {
  PropertyAlgebra alg(m);
  alg.require_closed();
  Images img = distinct_images(m);
  const std::size_t n = img.elements.size();
  const auto& names = m.properties();

  // Every property of a class must induce the same operation results.
  std::vector<std::size_t> ortho(n);
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)),
      join = meet;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n));
  std::vector<bool> ortho_seen(n);
  for (std::size_t p = 0; p < m.num_properties(); ++p) {
    std::size_t a = img.element_of[p];
    std::size_t o = img.element_of[*alg.ortho(p)];
    if (ortho_seen[a] && ortho[a] != o) {
      throw NotAnOrthoLattice("orthocomplement is not well defined on the "
                              "image of '" + names[p] + "'");
    }
    ortho[a] = o;
    ortho_seen[a] = true;
    for (std::size_t q = 0; q < m.num_properties(); ++q) {
      std::size_t b = img.element_of[q];
      std::size_t mt = img.element_of[*alg.meet(p, q)];
      std::size_t jn = img.element_of[*alg.join(p, q)];
      if (seen[a][b] && (meet[a][b] != mt || join[a][b] != jn)) {
        throw NotAnOrthoLattice("meet or join is not well defined on the "
                                "images of '" + names[p] + "' and '" +
                                names[q] + "'");
      }
      meet[a][b] = mt;
      join[a][b] = jn;
      seen[a][b] = true;
    }
  }

  std::vector<std::string> labels;
  for (const Proposition& e : img.elements) {
    labels.push_back(format_proposition(m, e));
  }
  FinitePoset poset = build_poset(std::move(labels), [&](std::size_t i,
                                                         std::size_t j) {
    return img.elements[i].is_subset_of(img.elements[j]);
  });
  bool meet_is_intersection = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (img.elements[meet[a][b]] != (img.elements[a] & img.elements[b])) {
        meet_is_intersection = false;
      }
    }
  }
  OrthoLattice lattice(std::move(poset), std::move(meet), std::move(join),
                       std::move(ortho));
  return StateLattice{std::move(lattice),        std::move(img.elements),
                      std::move(img.property_of), std::move(img.element_of),
                      std::move(img.collisions),  meet_is_intersection};
}

FinitePoset subspace_poset(const Model& m) {
  const auto& subs = m.require_hilbert().property_subspaces;
  return build_poset(m.properties(), [&](std::size_t i, std::size_t j) {
    return contains(subs[j], subs[i]);
  });
}

}  // namespace qlprop
