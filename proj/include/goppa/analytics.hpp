#pragma once

// Closed-form parameter analysis for genus-g constructions: code dimension,
// moduli and Grassmannian dimensions, the dimension-gap parabola
// Xi(d) = -d^2 + a d - (a(g+1) - (g-1)^2) with a = n-2+2g, its roots, and the
// resulting parameter-safety classification.

#include <cstdint>
#include <vector>

namespace goppa {

struct DimensionBound {
  bool exact = false;   // exact k = 1-g+d when d > 2g-2, else upper bound g
  std::int64_t value = 0;
};

DimensionBound code_dimension(std::int64_t g, std::int64_t n, std::int64_t d);

std::int64_t xi(std::int64_t g, std::int64_t n, std::int64_t d);

// Roots (a +- sqrt(disc)) / 2 of Xi, kept exact: integer axis numerator a and
// discriminant, plus decimal approximations for display.
struct CutPoints {
  bool real = false;
  std::int64_t axis_numerator = 0;  // roots = (axis_numerator +- sqrt(discriminant)) / 2
  std::int64_t discriminant = 0;
  double lower = 0, upper = 0;
};

CutPoints cut_points(std::int64_t g, std::int64_t n);

// Integer degrees strictly inside (d0-, d0+) intersect (2g-1, n): decided by
// the integer sign test Xi(d) > 0, no radicals.
std::vector<std::int64_t> unsafe_degrees(std::int64_t g, std::int64_t n);

struct ParameterReport {
  std::int64_t g = 0, n = 0, d = 0;
  DimensionBound k;
  bool strong = false;  // n > d > 2g-2
  std::int64_t dim_ls = 0, dim_gr = 0, xi = 0;
  CutPoints unsafe_range;
  std::vector<std::int64_t> unsafe_degrees;
  bool unsafe = false;  // this d lies strictly inside the range
  bool universally_injective = false;  // n/2 > d > 2g+1
  bool moduli_hypotheses = false;      // 2g-2+n > 0, where dim_ls is backed by theory
};

ParameterReport parameter_report(std::int64_t g, std::int64_t n, std::int64_t d);

}  // namespace goppa
