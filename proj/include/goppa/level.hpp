#pragma once

// Canonical genus-zero level structures over P^1 and their codes: a degree-d
// line bundle presented as O(d*inf) with scaled evaluation trivializations at
// the marked points inf, 0, 1, alpha_4..alpha_n.  Provides the generator and
// parity-check matrices, the residue dual, the tensor group law, equivalence,
// self-duality and normalization of classically-presented data.

#include <goppa/codes.hpp>

namespace goppa {

struct ProjPoint {
  bool infinite = false;
  FieldElement a;  // finite value [a;1] when !infinite

  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.infinite == y.infinite && (x.infinite || x.a == y.a);
  }
};

ProjPoint point_at_infinity();
ProjPoint finite_point(const FieldElement& a);

// Canonical form: points p1=inf, p2=0, p3=1, p4..pn the alphas; scalars
// l1..l_{n-1} with l_n pinned to 1.  d may be any integer; code-producing
// operations require 0 <= d < n.
struct LevelStructure {
  Field field;
  std::size_t n = 0;
  std::int64_t d = 0;
  std::vector<FieldElement> alphas;   // n-3 entries, not in {0,1}, distinct
  std::vector<FieldElement> scalars;  // n-1 nonzero entries

  friend bool operator==(const LevelStructure& a, const LevelStructure& b) {
    return a.n == b.n && a.d == b.d && same_field(a.field, b.field) && a.alphas == b.alphas &&
           a.scalars == b.scalars;
  }
};

// Classical presentation: n distinct marked points, an effective divisor
// (summing to the degree) away from the marked points, and n scalars.
struct RawLevelStructure {
  Field field;
  std::size_t n = 0;
  std::vector<ProjPoint> points;
  std::vector<std::pair<ProjPoint, std::uint64_t>> divisor;
  std::vector<FieldElement> scalars;  // n entries
};

LevelStructure make_level_structure(const Field& f, std::size_t n, std::int64_t d,
                                    std::vector<FieldElement> alphas,
                                    std::vector<FieldElement> scalars);

// The full point list inf, 0, 1, alphas as field elements for indices >= 2
// (alpha_2 = 0, alpha_3 = 1); handy for formulas indexed by points.
std::vector<FieldElement> support_values(const LevelStructure& g);

// h_j = 1 / prod_{i != 1,j} (alpha_j - alpha_i) for j = 2..n.
std::vector<FieldElement> h_vector(const LevelStructure& g);

Matrix generator_matrix(const LevelStructure& g);     // (d+1) x n
Matrix parity_check_matrix(const LevelStructure& g);  // n x (n-d-1)

std::vector<FieldElement> encode(const LevelStructure& g,
                                 const std::vector<FieldElement>& message);

LinearCode code_of(const LevelStructure& g);

// Residue dual: degree n-d-2, scalars (-1/l1, h_j/l_j) renormalized.
LevelStructure dual_structure(const LevelStructure& g);

LevelStructure tensor(const LevelStructure& a, const LevelStructure& b);
LevelStructure inverse_structure(const LevelStructure& g);
LevelStructure unit_structure(const Field& f, std::size_t n, std::vector<FieldElement> alphas);

// The structure on the twisted differential sheaf (degree n-2, scalars
// (-1, h_2, ..., h_n) renormalized); the square root locus of self-duality.
LevelStructure canonical_differential_structure(const Field& f, std::size_t n,
                                                std::vector<FieldElement> alphas);

bool is_equivalent(const LevelStructure& a, const LevelStructure& b);
bool is_self_dual(const LevelStructure& g);

// Moves the first three points to inf, 0, 1 by the unique Moebius transform,
// slides the divisor to d*inf, and renormalizes scalars; the code of the
// result equals the raw evaluation code.
LevelStructure classical_to_canonical(const RawLevelStructure& raw);

}  // namespace goppa
