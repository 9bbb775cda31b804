#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ga/multivector.hpp"

namespace ga {

/// SplitMix64: the fully specified 64-bit generator used for every random
/// draw in this project, so any report replays bit-for-bit from its seed.
/// Each call advances the state by the golden-ratio increment and returns a
/// mixed copy:
///   s += 0x9E3779B97F4A7C15
///   z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Bounded draws use plain modulo reduction.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi] via modulo reduction; lo <= hi required.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

/// Per-trial generator: state seeded with seed + (index + 1) * golden ratio,
/// so trials are independent streams and schedule order cannot matter.
SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index);

/// Linear-algebra ground truth, independent of the contraction-based
/// criteria: solves x ^ B = 0 with its own elimination and reports whether
/// the solution space has dimension exactly r.
bool blade_oracle(const Multivector& b, int r);

/// Nonzero grade-1 element with numerators in [-bound, bound] and
/// denominators in [1, bound], drawn deterministically.
Multivector random_vector(int n, SplitMix64& rng, long bound = 10);

/// Outer product of r random vectors, resampled until nonzero; an r-blade
/// by construction.
Multivector random_blade(int n, int r, SplitMix64& rng, long bound = 10);

/// Sparse random grade-r element: each coordinate blade joins with
/// probability 1/2 carrying a random coefficient; resampled until nonzero.
Multivector random_rvector(int n, int r, SplitMix64& rng, long bound = 10);

struct TrialConfig {
  int n = 0;
  int r = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  long bound = 10;
};

/// One instance on which the criteria disagreed, with everything needed to
/// replay it.
struct Disagreement {
  int trial = 0;
  std::string kind;  // "blade" or "rvector"
  Multivector input;
  bool oracle = false;
  bool plucker = false;
  bool nguyen = false;
  bool span_rank_is_r = false;
};

struct TrialReport {
  TrialConfig config;
  int trials_run = 0;
  int instances = 0;
  int agreements = 0;   // trials whose instances all agreed
  int quad_checks = 0;  // n=4, r=2 only: instances cross-checked against the quadratic relation
  std::optional<Disagreement> first_disagreement;

  bool all_agree() const { return agreements == trials_run; }
};

/// Per trial: one random blade and one sparse random r-vector, each judged
/// by the oracle, both criteria, and the span rank; any split verdict is
/// recorded verbatim. For n=4, r=2 the quadratic relation
/// B12 B34 - B13 B24 + B14 B23 = 0 is cross-checked as well.
TrialReport run_equivalence_trials(const TrialConfig& cfg);

}  // namespace ga
