#pragma once

// Closed subspaces of a finite-dimensional complex Hilbert space, stored as
// orthonormal bases. Equality is mutual containment within tolerance; bases
// themselves are not canonical.

#include <complex>
#include <cstddef>
#include <vector>

namespace qlprop {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

inline constexpr double kDefaultTolerance = 1e-9;

Scalar inner(const Vector& a, const Vector& b);  // <a|b>, conjugate-linear in a
double norm(const Vector& v);

class Subspace {
 public:
  /// Orthonormalized span of `vectors` (modified Gram-Schmidt with one
  /// re-orthogonalization pass). Vectors whose residual is within `tol` of
  /// the span so far are dropped.
  static Subspace span(std::size_t dim, const std::vector<Vector>& vectors,
                       double tol = kDefaultTolerance);
  /// Throws NonOrthonormalBasis if `basis` is not orthonormal within `tol`.
  static Subspace from_orthonormal(std::size_t dim, std::vector<Vector> basis,
                                   double tol = kDefaultTolerance);
  /// The line through `v`; throws RankError for a (numerically) zero vector.
  static Subspace ray(const Vector& v, double tol = kDefaultTolerance);
  static Subspace zero(std::size_t dim, double tol = kDefaultTolerance);
  static Subspace whole(std::size_t dim, double tol = kDefaultTolerance);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  double tol() const { return tol_; }

  Vector project(const Vector& v) const;
  /// Norm of the component of `v` orthogonal to this subspace.
  double residual(const Vector& v) const;

 private:
  Subspace(std::size_t dim, std::vector<Vector> basis, double tol)
      : dim_(dim), basis_(std::move(basis)), tol_(tol) {}

  std::size_t dim_;
  std::vector<Vector> basis_;
  double tol_;
};

/// b ⊆ a: every basis vector of b has residual at most tol against a.
bool contains(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);

Subspace ortho(const Subspace& a);
Subspace join(const Subspace& a, const Subspace& b);
/// Computed as ortho(join(ortho(a), ortho(b))).
Subspace meet(const Subspace& a, const Subspace& b);

/// Smallest family containing `generators` closed under ortho, meet and
/// join, deduplicated by mutual containment. Generators come first, in order,
/// followed by new elements in discovery order. Throws ClosureCapExceeded
/// once more than `cap` distinct subspaces appear.
std::vector<Subspace> closure_generate(std::size_t dim,
                                       const std::vector<Subspace>& generators,
                                       std::size_t cap = 64);

}  // namespace qlprop
