#pragma once

// Exhaustive desk-scale experiments over small finite fields: enumerate every
// canonical level structure of given (field, n, d), audit injectivity of the
// structure -> code map, census the image against the Grassmannian, census
// self-dual structures, sweep the Delsarte identity, and run the conformance
// grid (annihilation / dimension / duality / Pluecker) used by the acceptance
// suite.
//
// Each audit has two implementations: a serial reference that walks the
// generic-arithmetic module operations, and a table-driven kernel
// parallelized with OpenMP over point-configuration prefixes.  Tests compare
// the two; the benchmark target times them against each other.

#include <goppa/pluecker.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <string>

namespace goppa {

using BigInt = boost::multiprecision::cpp_int;

// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(const BigInt& q, unsigned n, unsigned k);

// (q-2)(q-3)...(q-n+2) * (q-1)^(n-1)
BigInt structure_count(std::uint64_t q, std::size_t n);

// Streams every canonical structure in deterministic order: alpha tuples in
// element-enumeration lexicographic order, then scalar tuples likewise.
// Preconditions: finite field, q >= n-1, 0 <= d < n.
void enumerate_structures(const Field& f, std::size_t n, std::int64_t d,
                          const std::function<void(const LevelStructure&)>& visit);
std::vector<LevelStructure> list_structures(const Field& f, std::size_t n, std::int64_t d);

struct CollisionGroup {
  std::uint64_t multiplicity = 0;
  std::vector<LevelStructure> examples;  // at most two witnesses per group
};

struct AuditReport {
  std::string field;
  std::size_t n = 0;
  std::int64_t d = 0;
  std::uint64_t structures = 0;
  std::uint64_t distinct_codes = 0;
  std::vector<CollisionGroup> collisions;     // capped; see collision_groups
  std::uint64_t collision_groups = 0;         // total number of collided keys
  std::uint64_t collision_excess = 0;         // sum over keys of (multiplicity - 1)
  BigInt grassmannian_size = 0;               // census only
  std::string image_density;                  // census only, reduced "a/b"
  bool exploratory = false;                   // outside n/2 > d > 1
  double elapsed_seconds = 0;
};

AuditReport injectivity_audit(const Field& f, std::size_t n, std::int64_t d, unsigned jobs = 0,
                              bool use_reference = false);
AuditReport image_census(const Field& f, std::size_t n, std::int64_t d, unsigned jobs = 0,
                         bool use_reference = false);

struct SelfDualConfig {
  std::vector<FieldElement> alphas;
  std::vector<std::vector<FieldElement>> hits;  // scalar vectors found self-dual
};

struct SelfDualReport {
  std::string field;
  std::size_t n = 0;
  std::int64_t d = 0;
  std::vector<SelfDualConfig> configs;
  bool counts_ok = false;      // every config has 0 or 2^(n-1) hits
  bool crosscheck_ok = false;  // squaring criterion == direct C = C-perp, everywhere
  std::uint64_t total_hits = 0;
  double elapsed_seconds = 0;
};

// Requires odd q and n = 2(d+1).
SelfDualReport selfdual_census(const Field& f, std::size_t n, std::int64_t d);

struct DelsarteReport {
  std::string field;
  std::size_t n_max = 0;
  bool exhaustive = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;
  double elapsed_seconds = 0;
};

// Exhaustive over all subspaces when samples == 0, else seeded random codes.
DelsarteReport delsarte_audit(const Field& f, std::size_t n_max, std::uint64_t samples,
                              std::uint64_t seed = 0);

struct ConformanceReport {
  std::string field;
  std::size_t n = 0;
  std::int64_t d = 0;
  std::uint64_t structures = 0;
  std::uint64_t annihilation_failures = 0;
  std::uint64_t dimension_failures = 0;
  std::uint64_t duality_failures = 0;
  std::uint64_t double_dual_failures = 0;
  std::uint64_t pluecker_failures = 0;
  double elapsed_seconds = 0;

  bool clean() const {
    return annihilation_failures + dimension_failures + duality_failures +
               double_dual_failures + pluecker_failures ==
           0;
  }
};

// G*H = 0, dim = d+1, code(dual_structure) = dual(code), double dual,
// closed-form Pluecker = minor Pluecker — over every enumerable structure.
ConformanceReport conformance_audit(const Field& f, std::size_t n, std::int64_t d,
                                    unsigned jobs = 0, bool use_reference = false);

}  // namespace goppa
