#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invqm/error.hpp"
#include "invqm/rational.hpp"

namespace invqm {

/// Dense row-major matrix with explicit dimensions.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _data(rows * cols) {}

  /// Builds from nested rows; all rows must have equal length.
  static Matrix from_rows(std::vector<std::vector<T>> const& rows) {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw PreconditionError("ragged matrix rows");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return _rows; }
  [[nodiscard]] std::size_t cols() const noexcept { return _cols; }
  [[nodiscard]] bool is_square() const noexcept { return _rows == _cols; }

  T& operator()(std::size_t i, std::size_t j) { return _data[i * _cols + j]; }
  T const& operator()(std::size_t i, std::size_t j) const { return _data[i * _cols + j]; }

  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(_data.begin() + static_cast<std::ptrdiff_t>(i * _cols),
                          _data.begin() + static_cast<std::ptrdiff_t>((i + 1) * _cols));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < _cols; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < _rows; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a._cols != b._rows) {
      throw PreconditionError("matrix product dimension mismatch");
    }
    Matrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        T const& aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator-(Matrix const& a, Matrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw PreconditionError("matrix difference dimension mismatch");
    }
    Matrix c(a._rows, a._cols);
    for (std::size_t i = 0; i < a._data.size(); ++i) {
      c._data[i] = a._data[i] - b._data[i];
    }
    return c;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
  }

 private:
  std::size_t    _rows = 0;
  std::size_t    _cols = 0;
  std::vector<T> _data;
};

using MatQ = Matrix<Rat>;
using MatZ = Matrix<Int>;
using VecQ = std::vector<Rat>;
using VecZ = std::vector<Int>;

MatQ to_rational(MatZ const& m);
/// Throws PreconditionError if some entry is not an integer.
MatZ to_integer(MatQ const& m);

VecQ apply(MatQ const& m, VecQ const& v);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(MatQ const& m);
std::size_t rank(MatZ const& m);

/// Basis of the right null space {v : m v = 0}. Vectors are integral with
/// content 1, one per free column of the reduced row echelon form, ordered
/// by free column, with the free coordinate positive.
std::vector<VecQ> kernel_basis(MatQ const& m);

/// Reduced row echelon form over Q; the second member lists pivot columns.
std::pair<MatQ, std::vector<std::size_t>> rref(MatQ const& m);

/// Determinant of a square integer matrix (Bareiss).
Int determinant(MatZ const& m);

/// U * A * V == D with U, V unimodular and D diagonal, d_i >= 0,
/// d_i | d_{i+1}.
struct SmithForm {
  MatZ U;
  MatZ D;
  MatZ V;

  /// Diagonal entries of D, length min(rows, cols).
  [[nodiscard]] VecZ diagonal() const;
};

SmithForm smith_normal_form(MatZ const& a);

/// Number of index pairs (i < j) among n indices.
constexpr std::size_t choose2(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Position of the 1-based pair (i, j), i < j, in lexicographic order
/// (1,2), (1,3), ..., (1,n), (2,3), ...
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
/// All 1-based pairs (i < j) in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n);

/// Induced map on the exterior square; entry ((i,j),(k,l)) is the 2x2
/// minor A_ik A_jl - A_il A_jk. Throws on non-square input.
MatQ exterior_square(MatQ const& a);
MatZ exterior_square(MatZ const& a);

/// A^T J A == J with J = [[0, I_l], [-I_l, 0]]. Throws on odd dimension.
bool is_symplectic(MatZ const& a);
/// The standard symplectic form J of size 2l.
MatZ symplectic_form(std::size_t l);

/// dim Ker(I - A) over Q.
std::size_t fixed_space_dim(MatQ const& a);

}  // namespace invqm
