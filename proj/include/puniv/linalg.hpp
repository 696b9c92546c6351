#ifndef PUNIV_LINALG_HPP
#define PUNIV_LINALG_HPP

#include <optional>
#include <vector>

#include "puniv/matrix.hpp"

namespace puniv {

/// Gauss-Jordan over the coefficient field.  Returns the reduced row echelon
/// form, the rank and the pivot columns.
struct RrefResult {
  ScalarMatrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(ScalarMatrix m) {
  const ScalarRing ring = m.ring();
  std::size_t lead = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead, j));
    Scalar inv = m.at(lead, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(lead, j) = m.at(lead, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) - f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return RrefResult{std::move(m), pivots.size(), std::move(pivots)};
}

/// Matrix inverse, or nullopt when singular.
inline std::optional<ScalarMatrix> invert(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ScalarMatrix aug(m.ring(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.ring().field);
  }
  RrefResult r = rref(std::move(aug));
  for (std::size_t i = 0; i < n; ++i)
    if (i >= r.pivots.size() || r.pivots[i] != i) return std::nullopt;
  ScalarMatrix inv(m.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

/// Canonical basis of the row span: nonzero rows of the RREF.
inline std::vector<std::vector<Scalar>> row_space_basis(const ScalarMatrix& m) {
  RrefResult r = rref(m);
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::vector<Scalar> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(r.mat.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Does v lie in the span of the rows of `basis` (rows need not be reduced)?
inline bool in_row_span(const std::vector<std::vector<Scalar>>& basis,
                        const std::vector<Scalar>& v, const Field& field) {
  if (basis.empty()) {
    for (const Scalar& c : v)
      if (!c.is_zero()) return false;
    return true;
  }
  ScalarMatrix m(ScalarRing(field), basis.size() + 1, v.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = basis[i][j];
  for (std::size_t j = 0; j < v.size(); ++j) m.at(basis.size(), j) = v[j];
  ScalarMatrix base(ScalarRing(field), basis.size(), v.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) base.at(i, j) = basis[i][j];
  return rref(std::move(m)).rank == rref(std::move(base)).rank;
}

}  // namespace puniv

#endif
