#pragma once

// Dense arithmetic tables for a small finite field, built from the generic
// field operations.  The audit kernels run on element ranks with these tables
// so that exhaustive sweeps stay cheap; the generic path remains the single
// source of arithmetic truth.

#include <goppa/fields.hpp>

#include <cstdint>

namespace goppa {

struct SmallField {
  Field field;
  unsigned q = 0;
  std::vector<std::uint8_t> add_t;  // q*q
  std::vector<std::uint8_t> mul_t;  // q*q
  std::vector<std::uint8_t> neg_t;  // q
  std::vector<std::uint8_t> inv_t;  // q (inv_t[0] unused)

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_t[a * q + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_t[a * q + neg_t[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_t[a * q + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_t[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_t[a]; }
};

// Requires a finite field with q <= 255.
SmallField build_small_field(const Field& f);

}  // namespace goppa
