#pragma once

// Linear block codes with canonical equality (unique rref generator), duals
// under the standard pairing, trace codes and subfield subcodes.

#include <goppa/matrix.hpp>

namespace goppa {

struct LinearCode {
  Field field;
  std::size_t n = 0, k = 0;
  Matrix gen;  // k x n, rref, no zero rows

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n == b.n && a.k == b.k && a.gen == b.gen;
  }
};

LinearCode from_generator(const Matrix& m);
LinearCode dual(const LinearCode& c);

// true iff some coordinate position is zero in every codeword
bool is_degenerate(const LinearCode& c);

bool contains_word(const LinearCode& c, const std::vector<FieldElement>& word);

// Componentwise-trace image over the prime subfield (extension fields only).
LinearCode trace_code(const LinearCode& c);
// Codewords with all coordinates in the prime subfield, as a code over F_p.
LinearCode subfield_subcode(const LinearCode& c);

// Every subspace of F^n as a code, by rref-shape enumeration (tiny n only;
// also serves as an independent Gaussian-binomial oracle).
std::vector<LinearCode> all_codes(const Field& f, std::size_t n);

// All q^k codewords (test-scale helper).
std::vector<std::vector<FieldElement>> all_codewords(const LinearCode& c);

}  // namespace goppa
