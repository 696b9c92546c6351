#ifndef PUNIV_MATRIX_HPP
#define PUNIV_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "puniv/errors.hpp"
#include "puniv/rings.hpp"

namespace puniv {

/// Dense matrix over a ring object (see rings.hpp).  Every entry belongs to
/// the one ring instance carried by the matrix.
template <class Ring>
class Matrix {
public:
  using Element = typename Ring::Element;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, ring_.zero()) {}

  static Matrix identity(Ring ring, std::size_t n) {
    Matrix m(std::move(ring), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (!ring_.same_ring(o.ring_)) throw input_error("matrix product across different rings");
    if (cols_ != o.rows_)
      throw input_error("matrix product shape mismatch: " + shape() + " * " + o.shape());
    Matrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Element& a = at(i, k);
        if (ring_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(a, o.at(k, j)));
      }
    for (auto& e : r.data_) e = ring_.normalize(e);
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (!ring_.same_ring(o.ring_) || rows_ != o.rows_ || cols_ != o.cols_)
      throw input_error("matrix sum shape mismatch");
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.add(data_[i], o.data_[i]);
    return r;
  }

  bool operator==(const Matrix& o) const {
    if (!ring_.same_ring(o.ring_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ring_.equal(data_[i], o.data_[i])) return false;
    return true;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ", ";
        out += ring_.str(at(i, j));
      }
    }
    return out + "]";
  }

private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

using ScalarMatrix = Matrix<ScalarRing>;

/// d x d matrices over the coefficient field, as a ring object.  Not
/// commutative in general; evaluating commutative polynomials at matrix
/// tuples is only meaningful when the substituted matrices pairwise commute,
/// which callers check separately.
struct DenseMatrixRing {
  using Element = ScalarMatrix;
  Field field;
  std::size_t d;

  DenseMatrixRing(Field f, std::size_t dim) : field(std::move(f)), d(dim) {}
  Element zero() const { return Element(ScalarRing(field), d, d); }
  Element one() const { return Element::identity(ScalarRing(field), d); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const {
    Element r(ScalarRing(field), d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) r.at(i, j) = -a.at(i, j);
    return r;
  }
  Element from_scalar(const Scalar& c) const {
    Element r(ScalarRing(field), d, d);
    for (std::size_t i = 0; i < d; ++i) r.at(i, i) = c;
    return r;
  }
  Element normalize(const Element& a) const { return a; }
  bool is_zero(const Element& a) const {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!a.at(i, j).is_zero()) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string str(const Element& a) const { return a.str(); }
  bool same_ring(const DenseMatrixRing& o) const { return field == o.field && d == o.d; }
};

/// A linear map between free modules over a ring, stored column-wise: column
/// i holds the coordinates of the image of the i-th source basis vector.
template <class Ring>
struct LinearMapOverRing {
  std::size_t source_dim;
  std::size_t target_dim;
  Matrix<Ring> matrix;  ///< target_dim x source_dim

  LinearMapOverRing(std::size_t src, std::size_t tgt, Matrix<Ring> m)
      : source_dim(src), target_dim(tgt), matrix(std::move(m)) {
    if (matrix.rows() != tgt || matrix.cols() != src)
      throw input_error("linear map matrix shape mismatch");
  }
};

}  // namespace puniv

#endif
