#include <goppa/matrix.hpp>

namespace goppa {

namespace {

[[noreturn]] void fail(errc c, const std::string& msg) { throw error(c, msg); }

void check_field(const Matrix& m) {
  if (!m.field) fail(errc::bad_argument, "matrix without a field");
}

}  // namespace

Matrix make_matrix(const Field& f, std::size_t rows, std::size_t cols) {
  if (!f) fail(errc::bad_argument, "missing field");
  Matrix m;
  m.field = f;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(rows * cols, zero(f));
  return m;
}

Matrix matrix_from(const Field& f, std::size_t rows, std::size_t cols,
                   const std::vector<std::int64_t>& values) {
  if (values.size() != rows * cols) fail(errc::shape_error, "entry count mismatch");
  Matrix m = make_matrix(f, rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) m.entries[i] = from_integer(f, values[i]);
  return m;
}

Matrix identity_matrix(const Field& f, std::size_t n) {
  Matrix m = make_matrix(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(f);
  return m;
}

Matrix transpose(const Matrix& m) {
  check_field(m);
  Matrix t = make_matrix(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_field(a);
  check_field(b);
  if (!same_field(a.field, b.field)) fail(errc::field_mismatch, "matrix fields differ");
  if (a.cols != b.rows) fail(errc::shape_error, "inner dimensions differ");
  Matrix c = make_matrix(a.field, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const FieldElement& av = a.at(i, k);
      if (av.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = add(c.at(i, j), mul(av, b.at(k, j)));
    }
  }
  return c;
}

bool is_zero_matrix(const Matrix& m) {
  for (const auto& e : m.entries)
    if (!e.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& input) {
  check_field(input);
  RrefResult res;
  res.m = input;
  Matrix& m = res.m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    // first row at or below pivot_row with a nonzero entry in this column
    std::size_t found = m.rows;
    for (std::size_t r = pivot_row; r < m.rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == m.rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(found, j), m.at(pivot_row, j));
    }
    FieldElement scale = inv(m.at(pivot_row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) = mul(m.at(pivot_row, j), scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      FieldElement factor = m.at(r, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(r, j) = sub(m.at(r, j), mul(factor, m.at(pivot_row, j)));
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

Matrix kernel_basis(const Matrix& input) {
  RrefResult r = rref(input);
  const Matrix& m = r.m;
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  Matrix k = make_matrix(input.field, m.cols - r.rank, m.cols);
  std::size_t row = 0;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    k.at(row, free_col) = one(input.field);
    for (std::size_t i = 0; i < r.rank; ++i)
      k.at(row, r.pivot_cols[i]) = neg(m.at(i, free_col));
    ++row;
  }
  return k;
}

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i + 1;
  for (;;) {
    out.push_back(t);
    if (k == 0) break;
    // advance: rightmost index that can still grow
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

FieldElement determinant(const Matrix& input) {
  check_field(input);
  if (input.rows != input.cols) fail(errc::shape_error, "determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows;
  bool negate = false;
  FieldElement det = one(m.field);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!m.at(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found == n) return zero(m.field);
    if (found != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(found, j), m.at(col, j));
      negate = !negate;
    }
    det = mul(det, m.at(col, col));
    FieldElement scale = inv(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      FieldElement factor = mul(m.at(r, col), scale);
      for (std::size_t j = col; j < n; ++j)
        m.at(r, j) = sub(m.at(r, j), mul(factor, m.at(col, j)));
    }
  }
  return negate ? neg(det) : det;
}

std::vector<std::pair<IndexTuple, FieldElement>> maximal_minors(const Matrix& m,
                                                                minor_axis axis) {
  check_field(m);
  const Matrix& base = m;
  std::size_t pick = axis == minor_axis::rows ? base.cols : base.rows;
  std::size_t from = axis == minor_axis::rows ? base.rows : base.cols;
  if (pick > from)
    fail(errc::shape_error, axis == minor_axis::rows ? "needs rows >= cols" : "needs cols >= rows");
  std::vector<std::pair<IndexTuple, FieldElement>> out;
  for (const IndexTuple& t : index_tuples(from, pick)) {
    Matrix square = make_matrix(base.field, pick, pick);
    for (std::size_t i = 0; i < pick; ++i) {
      for (std::size_t j = 0; j < pick; ++j) {
        square.at(i, j) =
            axis == minor_axis::rows ? base.at(t[i] - 1, j) : base.at(i, t[j] - 1);
      }
    }
    out.emplace_back(t, determinant(square));
  }
  return out;
}

}  // namespace goppa
