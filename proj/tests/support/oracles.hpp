#pragma once

// Independent reference implementations used to cross-check the library:
// fully parenthesized printers and parsers, random generators for formulas,
// models and subspaces, and projector algebra over Eigen.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qlprop/model.hpp"
#include "qlprop/subspace.hpp"
#include "qlprop/syntax.hpp"

namespace oracle {

using qlprop::AssertiveFormula;
using qlprop::Formula;
using qlprop::TQFormula;

// Fully parenthesized renderings: every connective gets its own parentheses,
// so no precedence knowledge is needed to read them back.
std::string full_lx(const Formula& f);
std::string full_tq(const TQFormula& f);
std::string full_prag(const AssertiveFormula& f);

// Parsers for exactly the renderings above. Throw std::runtime_error.
Formula read_full_lx(std::string_view text);
TQFormula read_full_tq(std::string_view text);
AssertiveFormula read_full_prag(std::string_view text);

Formula random_formula(std::mt19937_64& rng,
                       const std::vector<std::string>& atoms,
                       std::size_t max_depth);
TQFormula random_tq(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                    std::size_t max_depth);
/// Random elements of the image of the translation plus arbitrary N/K/A
/// nesting over assertions of random quantum formulas.
AssertiveFormula random_prag(std::mt19937_64& rng,
                             const std::vector<std::string>& atoms,
                             std::size_t max_depth);

struct ModelShape {
  std::size_t max_states = 4;
  std::size_t max_objects = 3;
  std::size_t max_properties = 3;
};

/// Arbitrary extensions.
qlprop::Model random_model(std::mt19937_64& rng, const ModelShape& shape = {});
/// Every extension full or empty.
qlprop::Model random_cms_model(std::mt19937_64& rng,
                               const ModelShape& shape = {});

/// A random subspace of rank `rank` in dimension `dim`, optionally containing
/// the given vectors.
qlprop::Subspace random_subspace(std::mt19937_64& rng, std::size_t dim,
                                 std::size_t rank,
                                 const std::vector<qlprop::Vector>& shared = {});
qlprop::Vector random_vector(std::mt19937_64& rng, std::size_t dim);

using Matrix = Eigen::MatrixXcd;

Matrix projector(const qlprop::Subspace& s);
/// Projector onto the column span of `vectors` via SVD.
Matrix span_projector(std::size_t dim, const std::vector<qlprop::Vector>& vectors);
Matrix ortho_projector(const Matrix& p);
/// Range of P + Q.
Matrix join_projector(const Matrix& p, const Matrix& q);
/// Eigenspace of P + Q at eigenvalue 2, i.e. the null space of P + Q - 2I.
Matrix meet_projector(const Matrix& p, const Matrix& q);
double distance(const Matrix& a, const Matrix& b);

}  // namespace oracle
