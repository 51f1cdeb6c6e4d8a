#pragma once

// Exact arithmetic in the three coefficient fields the construction runs over:
// prime fields F_p, extensions F_{p^r} = F_p[x]/(m(x)), and rational function
// fields F_q(z).  One runtime descriptor covers all three so matrices, codes
// and level structures stay field-generic.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace goppa {

enum class errc {
  not_prime,
  reducible_modulus,
  bad_arity,
  division_by_zero,
  field_mismatch,
  unsupported_field,
  infinite_field,
  shape_error,
  bad_length,
  degree_out_of_range,
  point_mismatch,
  degenerate_configuration,
  divisor_meets_points,
  full_space,
  field_too_small,
  parameter_violation,
  parse_error,
  bad_argument,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

enum class field_kind { prime, extension, rational_function };

struct FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

struct FieldDescriptor {
  field_kind kind = field_kind::prime;
  std::uint64_t p = 0;                  // characteristic
  unsigned r = 1;                       // extension degree over F_p
  std::vector<std::uint64_t> modulus;   // extension only: monic, length r+1, low-to-high
  Field base;                           // rational_function only: coefficient field
  std::uint64_t q = 0;                  // p^r when finite, 0 when infinite

  bool finite() const { return kind != field_kind::rational_function; }
};

Field make_prime_field(std::uint64_t p);
Field make_extension_field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus);
Field make_rational_function_field(const Field& base);

// Field spec strings: "7", "2^3/1,1,0,1" (modulus coefficients low-to-high),
// "ratfun(7)", "ratfun(2^2/1,1,1)".
Field parse_field(const std::string& spec);
std::string field_to_string(const Field& f);
bool same_field(const Field& a, const Field& b);

// Value type for all three kinds.  Prime: num = {v}, v in (0,p).  Extension:
// num = coefficients low-to-high, trailing zeros trimmed.  Rational function:
// num/den are polynomials over the base field stored as element ranks,
// gcd-reduced with monic denominator.  Zero is always the empty num.
class FieldElement {
public:
  FieldElement() = default;

  const Field& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // raw access for serialization and the table builders
  const std::vector<std::uint64_t>& num() const { return num_; }
  const std::vector<std::uint64_t>& den() const { return den_; }

  static FieldElement make(Field f, std::vector<std::uint64_t> num,
                           std::vector<std::uint64_t> den = {});

private:
  Field field_;
  std::vector<std::uint64_t> num_;
  std::vector<std::uint64_t> den_;
};

FieldElement zero(const Field& f);
FieldElement one(const Field& f);
// Embeds an integer (reduced mod p; constants for rational functions).
FieldElement from_integer(const Field& f, std::int64_t v);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement div(const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldElement& a, std::int64_t e);

// Tr(a) = a + a^p + ... + a^(p^(r-1)), landing in the prime subfield; the
// result is returned as an element of F_p.
FieldElement trace_to_prime(const FieldElement& a);

// Rank of an element of a finite field in coefficient-lexicographic order
// (0 first, 1 second); ranks enumerate [0, q).
std::uint64_t element_rank(const FieldElement& a);
FieldElement element_from_rank(const Field& f, std::uint64_t rank);
std::vector<FieldElement> enumerate_elements(const Field& f);

// Indeterminate z of a rational function field.
FieldElement indeterminate(const Field& f);

// Rational function with the given polynomial coefficients over the base
// field (arbitrary, will be reduced); mainly a construction convenience.
FieldElement rational_function(const Field& f, const std::vector<FieldElement>& num,
                               const std::vector<FieldElement>& den);

std::string element_to_string(const FieldElement& a);

}  // namespace goppa
