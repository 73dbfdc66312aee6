#include "skewpbw/linalg.hpp"

namespace skewpbw::linalg {

Echelon row_reduce(Matrix m, std::size_t cols, const Field&) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols, const Field& field) {
  return row_reduce(m, cols, field).pivots.size();
}

Matrix nullspace(const Matrix& m, std::size_t cols, const Field& field) {
  const Echelon e = row_reduce(m, cols, field);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols, field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t cols, const Field& field) {
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const Echelon e = row_reduce(std::move(aug), cols + 1, field);
  Vector x(cols, field.zero());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

MonomialIndex::MonomialIndex(std::vector<Exponent> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> MonomialIndex::find(const Exponent& e) const {
  if (auto it = index_.find(e); it != index_.end()) return it->second;
  return std::nullopt;
}

Vector MonomialIndex::to_vector(const Polynomial& f) const {
  Vector v(monomials_.size(), f.ring()->field().zero());
  for (const auto& t : f.terms()) {
    auto k = find(t.exponent);
    if (!k) throw InvalidArgument("term " + t.exponent.to_string() + " outside the monomial index");
    v[*k] = t.coefficient;
  }
  return v;
}

Polynomial MonomialIndex::to_polynomial(const RingPtr& ring, const Vector& v) const {
  TermVector terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.push_back(Term{monomials_[k], v[k]});
  return Polynomial(ring, std::move(terms));
}

}  // namespace skewpbw::linalg
