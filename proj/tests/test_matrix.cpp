#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <goppa/matrix.hpp>

#include <random>

using namespace goppa;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
FieldElement cofactor_det(const Matrix& m) {
  REQUIRE(m.rows == m.cols);
  if (m.rows == 0) return one(m.field);
  if (m.rows == 1) return m.at(0, 0);
  FieldElement acc = zero(m.field);
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Matrix rest = make_matrix(m.field, m.rows - 1, m.cols - 1);
    for (std::size_t r = 1; r < m.rows; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (c == j) continue;
        rest.at(r - 1, cc++) = m.at(r, c);
      }
    }
    FieldElement term = mul(m.at(0, j), cofactor_det(rest));
    acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
  }
  return acc;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f->q - 1);
  Matrix m = make_matrix(f, rows, cols);
  for (auto& e : m.entries) e = element_from_rank(f, dist(rng));
  return m;
}

}  // namespace

TEST_CASE("rref canonicalizes and reports rank") {
  Field f7 = make_prime_field(7);

  Matrix id = identity_matrix(f7, 3);
  RrefResult r = rref(id);
  CHECK(r.m == id);
  CHECK(r.rank == 3);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});

  Matrix z = make_matrix(f7, 2, 3);
  r = rref(z);
  CHECK(r.m == z);
  CHECK(r.rank == 0);

  // [[2,4],[3,6]] over F7 -> [[1,2],[0,0]], rank 1
  Matrix m = matrix_from(f7, 2, 2, {2, 4, 3, 6});
  r = rref(m);
  CHECK(r.m == matrix_from(f7, 2, 2, {1, 2, 0, 0}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent and row-op invariant") {
  Field f9 = make_extension_field(3, 2, {1, 0, 1});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> nz(1, 8);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix m = random_matrix(f9, 3, 5, rng);
    RrefResult r = rref(m);
    CHECK(rref(r.m).m == r.m);

    // random row operations preserve the rref
    Matrix t = m;
    for (int op = 0; op < 6; ++op) {
      std::size_t i = rng() % t.rows, j = rng() % t.rows;
      FieldElement c = element_from_rank(f9, nz(rng));
      if (i == j) {
        for (std::size_t col = 0; col < t.cols; ++col) t.at(i, col) = mul(t.at(i, col), c);
      } else {
        for (std::size_t col = 0; col < t.cols; ++col)
          t.at(i, col) = add(t.at(i, col), mul(c, t.at(j, col)));
      }
    }
    CHECK(rref(t).m == r.m);
  }
}

TEST_CASE("kernel basis spans the kernel") {
  Field f7 = make_prime_field(7);
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 200; ++iter) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    Matrix m = random_matrix(f7, rows, cols, rng);
    RrefResult r = rref(m);
    Matrix k = kernel_basis(m);
    CHECK(k.rows == cols - r.rank);
    CHECK(k.cols == cols);
    if (k.rows > 0) {
      Matrix prod = mat_mul(m, transpose(k));
      CHECK(is_zero_matrix(prod));
      CHECK(rref(k).rank == k.rows);  // independent rows
    }
  }
}

TEST_CASE("kernel of identity is empty, kernel of zero is everything") {
  Field f = make_prime_field(5);
  CHECK(kernel_basis(identity_matrix(f, 4)).rows == 0);
  Matrix z = make_matrix(f, 3, 4);
  Matrix k = kernel_basis(z);
  CHECK(k.rows == 4);
  CHECK(rref(k).m == identity_matrix(f, 4));
}

TEST_CASE("index tuples are lexicographic") {
  auto t = index_tuples(4, 2);
  std::vector<IndexTuple> expect = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(t == expect);
  CHECK(index_tuples(3, 0) == std::vector<IndexTuple>{{}});
  CHECK(index_tuples(3, 3) == std::vector<IndexTuple>{{1, 2, 3}});
}

TEST_CASE("maximal minors match the frozen example") {
  Field f7 = make_prime_field(7);
  Matrix m = matrix_from(f7, 3, 2, {1, 0, 0, 1, 1, 1});
  auto minors = maximal_minors(m, minor_axis::rows);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0].first == IndexTuple{1, 2});
  CHECK(minors[0].second == from_integer(f7, 1));
  CHECK(minors[1].first == IndexTuple{1, 3});
  CHECK(minors[1].second == from_integer(f7, 1));
  CHECK(minors[2].first == IndexTuple{2, 3});
  CHECK(minors[2].second == from_integer(f7, 6));  // 0*1 - 1*1 = -1

  // along columns of the transpose: same values, tuples index columns
  auto cminors = maximal_minors(transpose(m), minor_axis::cols);
  REQUIRE(cminors.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(cminors[i].first == minors[i].first);
    CHECK(cminors[i].second == minors[i].second);
  }
}

TEST_CASE("determinants agree with cofactor expansion") {
  Field f7 = make_prime_field(7);
  std::mt19937_64 rng(3);
  for (std::size_t size = 1; size <= 5; ++size) {
    for (int iter = 0; iter < 60; ++iter) {
      Matrix m = random_matrix(f7, size, size, rng);
      CHECK(determinant(m) == cofactor_det(m));
    }
  }
  // and over a rational function field
  Field rf = make_rational_function_field(make_prime_field(2));
  const Field& b = rf->base;
  FieldElement z = indeterminate(rf);
  Matrix m = make_matrix(rf, 2, 2);
  m.at(0, 0) = z;
  m.at(0, 1) = one(rf);
  m.at(1, 0) = one(rf);
  m.at(1, 1) = z;
  // det = z^2 - 1 = z^2 + 1 over F2
  CHECK(determinant(m) == rational_function(rf, {one(b), zero(b), one(b)}, {one(b)}));
  CHECK(determinant(m) == cofactor_det(m));
}

TEST_CASE("minors via elimination equal cofactor minors") {
  Field f = make_extension_field(2, 2, {1, 1, 1});
  std::mt19937_64 rng(4);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix m = random_matrix(f, 5, 3, rng);
    auto minors = maximal_minors(m, minor_axis::rows);
    REQUIRE(minors.size() == 10);
    for (const auto& [tuple, value] : minors) {
      Matrix picked = make_matrix(f, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) picked.at(i, j) = m.at(tuple[i] - 1, j);
      CHECK(value == cofactor_det(picked));
    }
  }
}

TEST_CASE("matrix multiplication sanity") {
  Field f7 = make_prime_field(7);
  Matrix a = matrix_from(f7, 2, 3, {1, 2, 3, 4, 5, 6});
  Matrix b = matrix_from(f7, 3, 2, {1, 0, 0, 1, 1, 1});
  CHECK(mat_mul(a, b) == matrix_from(f7, 2, 2, {4, 5, 3, 4}));
  CHECK(mat_mul(a, identity_matrix(f7, 3)) == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK_THROWS_AS(mat_mul(a, a), error);
}

TEST_CASE("rank plus kernel dimension is the column count") {
  Field f = make_prime_field(3);
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix m = random_matrix(f, rows, cols, rng);
    CHECK(rref(m).rank + kernel_basis(m).rows == cols);
  }
}
