#include "qlprop/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlprop/error.hpp"

namespace qlprop {

Scalar inner(const Vector& a, const Vector& b) {
  Scalar s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Vector& v) {
  double s = 0.0;
  for (const Scalar& x : v) s += std::norm(x);
  return std::sqrt(s);
}

namespace {

void check_dim(std::size_t expected, const Vector& v) {
  if (v.size() != expected) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in dimension " + std::to_string(expected));
  }
}

void check_same_dim(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("subspaces of dimension " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

// Removes the components of `v` along the orthonormal vectors `q`, twice.
Vector orthogonalize(const std::vector<Vector>& q, Vector v) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& e : q) {
      Scalar c = inner(e, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * e[k];
    }
  }
  return v;
}

// Appends the normalized residual of `v` to `q` unless it vanishes.
bool extend_basis(std::vector<Vector>& q, const Vector& v, double tol) {
  double scale = norm(v);
  if (scale <= tol) return false;
  Vector w = orthogonalize(q, v);
  double n = norm(w);
  if (n <= tol * std::max(1.0, scale)) return false;
  for (Scalar& x : w) x /= n;
  q.push_back(std::move(w));
  return true;
}

}  // namespace

Subspace Subspace::span(std::size_t dim, const std::vector<Vector>& vectors,
                        double tol) {
  std::vector<Vector> q;
  for (const Vector& v : vectors) {
    check_dim(dim, v);
    if (q.size() == dim) break;
    extend_basis(q, v, tol);
  }
  return Subspace(dim, std::move(q), tol);
}

Subspace Subspace::from_orthonormal(std::size_t dim, std::vector<Vector> basis,
                                    double tol) {
  if (basis.size() > dim) {
    throw NonOrthonormalBasis(std::to_string(basis.size()) +
                              " basis vectors in dimension " +
                              std::to_string(dim));
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    check_dim(dim, basis[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      Scalar g = inner(basis[i], basis[j]);
      double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol) {
        throw NonOrthonormalBasis("Gram entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") off by " +
                                  std::to_string(std::abs(g - expected)));
      }
    }
  }
  return Subspace(dim, std::move(basis), tol);
}

Subspace Subspace::ray(const Vector& v, double tol) {
  Subspace s = span(v.size(), {v}, tol);
  if (s.rank() != 1) throw RankError("ray from a zero vector");
  return s;
}

Subspace Subspace::zero(std::size_t dim, double tol) {
  return Subspace(dim, {}, tol);
}

Subspace Subspace::whole(std::size_t dim, double tol) {
  std::vector<Vector> e(dim, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i) e[i][i] = 1.0;
  return Subspace(dim, std::move(e), tol);
}

Vector Subspace::project(const Vector& v) const {
  check_dim(dim_, v);
  Vector p(dim_);
  for (const Vector& e : basis_) {
    Scalar c = inner(e, v);
    for (std::size_t k = 0; k < dim_; ++k) p[k] += c * e[k];
  }
  return p;
}

double Subspace::residual(const Vector& v) const {
  check_dim(dim_, v);
  return norm(orthogonalize(basis_, v));
}

bool contains(const Subspace& a, const Subspace& b) {
  check_same_dim(a, b);
  if (b.rank() > a.rank()) return false;
  double tol = std::max(a.tol(), b.tol());
  return std::all_of(b.basis().begin(), b.basis().end(),
                     [&](const Vector& v) { return a.residual(v) <= tol; });
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  return a.rank() == b.rank() && contains(a, b) && contains(b, a);
}

// Completes the basis of `a` with standard basis vectors, always taking the
// one with the largest residual, so the complement has rank dim - rank(a).
Subspace ortho(const Subspace& a) {
  const std::size_t dim = a.dim();
  std::vector<Vector> q = a.basis();
  std::vector<Vector> complement;
  while (q.size() < dim) {
    double best_residual = -1.0;
    Vector best_w;
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1.0;
      Vector w = orthogonalize(q, e);
      double r = norm(w);
      if (r > best_residual + 1e-15) {
        best_residual = r;
        best_w = std::move(w);
      }
    }
    for (Scalar& x : best_w) x /= best_residual;
    q.push_back(best_w);
    complement.push_back(std::move(best_w));
  }
  return Subspace::span(dim, complement, a.tol());
}

Subspace join(const Subspace& a, const Subspace& b) {
  check_same_dim(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.dim(), all, std::max(a.tol(), b.tol()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  return ortho(join(ortho(a), ortho(b)));
}

std::vector<Subspace> closure_generate(std::size_t dim,
                                       const std::vector<Subspace>& generators,
                                       std::size_t cap) {
  std::vector<Subspace> out;
  auto add = [&](const Subspace& s) {
    if (s.dim() != dim) {
      throw DimensionMismatch("generator of dimension " +
                              std::to_string(s.dim()) + " in dimension " +
                              std::to_string(dim));
    }
    for (const Subspace& t : out) {
      if (same_subspace(s, t)) return;
    }
    if (out.size() == cap) {
      throw ClosureCapExceeded("closure exceeds " + std::to_string(cap) +
                               " subspaces");
    }
    out.push_back(s);
  };
  for (const Subspace& g : generators) add(g);
  for (std::size_t i = 0; i < out.size(); ++i) {
    add(ortho(out[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      Subspace m = meet(out[i], out[j]);
      Subspace jn = join(out[i], out[j]);
      add(m);
      add(jn);
    }
  }
  return out;
}

}  // namespace qlprop
