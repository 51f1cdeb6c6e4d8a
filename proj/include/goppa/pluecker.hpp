#pragma once

// Pluecker coordinates of codes and level structures: maximal minors of a
// parity-check matrix, the closed-form coordinates of a level structure, the
// ratio invariants, fiber residuals, and scalar recovery from a code.

#include <goppa/level.hpp>

namespace goppa {

struct PlueckerVector {
  std::size_t n = 0, k = 0;
  // C(n, n-k) coordinates in lexicographic tuple order, normalized so the
  // first nonzero coordinate is 1
  std::vector<std::pair<IndexTuple, FieldElement>> coords;

  friend bool operator==(const PlueckerVector& a, const PlueckerVector& b) {
    return a.n == b.n && a.k == b.k && a.coords == b.coords;
  }
};

// Minors along row-tuples of a parity-check matrix of the code (k < n).
PlueckerVector pluecker_of_code(const LinearCode& c);

// The same vector evaluated from the closed forms in the alphas and scalars,
// no elimination (0 <= d <= n-2).
PlueckerVector pluecker_closed_form(const LevelStructure& g);

struct InvariantsY {
  std::vector<FieldElement> values;      // H_iota / H_(normalizer)
  std::size_t normalizer = 0;            // index into coords actually used
  bool first_coordinate_zero = false;    // fell back past the lex-first tuple
};

InvariantsY invariants_Y(const PlueckerVector& v);

// Componentwise y - Y differences; all zero iff g lies in the fiber over c.
std::vector<FieldElement> fiber_residual(const LinearCode& c, const LevelStructure& g);

enum class recover_status { recovered, not_in_fiber, zero_coordinate_obstruction };

struct RecoverResult {
  recover_status status = recover_status::not_in_fiber;
  std::vector<FieldElement> scalars;  // n-1 entries when recovered
};

// Rebuilds the scalars of a structure over the given evaluation points from
// coordinate ratios of the code's Pluecker vector (k = d+1), then verifies by
// reconstructing the code.
RecoverResult recover_scalars(const LinearCode& c, const std::vector<FieldElement>& alphas,
                              std::int64_t d);

}  // namespace goppa
