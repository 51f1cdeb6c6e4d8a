#pragma once

// Exact dense linear algebra over any Field: reduced row echelon form,
// kernels, determinants and maximal minors.  rref is the canonicalizer the
// whole code layer relies on for equality.

#include <goppa/fields.hpp>

#include <cstddef>
#include <utility>

namespace goppa {

struct Matrix {
  Field field;
  std::size_t rows = 0, cols = 0;
  std::vector<FieldElement> entries;  // row-major

  FieldElement& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return same_field(a.field, b.field) && a.rows == b.rows && a.cols == b.cols &&
           a.entries == b.entries;
  }
};

Matrix make_matrix(const Field& f, std::size_t rows, std::size_t cols);
// convenience for tests and fixtures: entries as integers, row-major
Matrix matrix_from(const Field& f, std::size_t rows, std::size_t cols,
                   const std::vector<std::int64_t>& values);
Matrix identity_matrix(const Field& f, std::size_t n);
Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& m);

struct RrefResult {
  Matrix m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // 0-based
};

RrefResult rref(const Matrix& m);

// Rows span {x : m * x^T = 0}; (cols - rank) rows, deterministic order
// (one row per free column, ascending).
Matrix kernel_basis(const Matrix& m);

// Strictly increasing 1-based index tuples, lexicographic.
using IndexTuple = std::vector<std::size_t>;
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k);

FieldElement determinant(const Matrix& m);

enum class minor_axis { rows, cols };

// All maximal square minors: along rows picks cols-many rows (rows >= cols),
// along cols picks rows-many columns.  Lexicographic tuple order.
std::vector<std::pair<IndexTuple, FieldElement>> maximal_minors(const Matrix& m, minor_axis axis);

}  // namespace goppa
