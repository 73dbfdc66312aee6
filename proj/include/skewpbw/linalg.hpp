#pragma once

// Dense exact linear algebra over a Field, and the coordinate maps between
// polynomials and coefficient vectors used by the truncated-ideal routines.

#include <optional>
#include <unordered_map>
#include <vector>

#include "skewpbw/polynomial.hpp"

namespace skewpbw::linalg {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

struct Echelon {
  Matrix rows;                      ///< nonzero rows of the reduced echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form of `m` (columns = `cols`).
Echelon row_reduce(Matrix m, std::size_t cols, const Field& field);

std::size_t rank(const Matrix& m, std::size_t cols, const Field& field);

/// Basis of { v : m v = 0 }.
Matrix nullspace(const Matrix& m, std::size_t cols, const Field& field);

/// Some v with a v = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, const Field& field);

/// A fixed list of monomials and its inverse index.
class MonomialIndex {
 public:
  explicit MonomialIndex(std::vector<Exponent> monomials);

  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Exponent>& monomials() const noexcept { return monomials_; }
  std::optional<std::size_t> find(const Exponent& e) const;

  /// Coefficient vector; throws InvalidArgument when f has a term outside
  /// the index.
  Vector to_vector(const Polynomial& f) const;
  Polynomial to_polynomial(const RingPtr& ring, const Vector& v) const;

 private:
  std::vector<Exponent> monomials_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

}  // namespace skewpbw::linalg
