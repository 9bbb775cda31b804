#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ga/multivector.hpp"

namespace ga {

/// Outcome of a blade criterion. On failure carries a reproducible witness:
/// the offending coordinate (r-1)-blade (when one exists for the failing
/// condition) and the nonzero residual whose vanishing the criterion demands.
struct CheckReport {
  enum class Failure {
    none,                // passed
    plucker_residual,    // (e_K . B) ^ B != 0
    square_not_scalar,   // B^2 has a nonzero grade > 0 part
    sandwich_not_vector  // B v B has a nonzero grade > 1 part
  };

  bool passed = false;
  Failure failure = Failure::none;
  std::optional<BladeIndex> witness_k;
  std::optional<Multivector> residual;

  static CheckReport pass() { return {true, Failure::none, std::nullopt, std::nullopt}; }
};

struct NotABladeError : std::runtime_error {
  explicit NotABladeError(CheckReport r)
      : std::runtime_error("factorize: input is not a blade"), report(std::move(r)) {}
  CheckReport report;
};

/// Scale and r grade-1 factors whose outer product, scaled, reconstructs the
/// input exactly: scale * (vectors[0] ^ ... ^ vectors[r-1]) == B. The pivot
/// is the coordinate blade the factors were read off from.
struct Factorization {
  Rational scale;
  std::vector<Multivector> vectors;
  BladeIndex pivot;
};

/// Classical Plucker relations over all coordinate (r-1)-blades:
/// passes iff (e_K . B) ^ B == 0 for every grade-(r-1) subset K of {1..n}.
/// Stops at the lexicographically first failing K.
CheckReport plucker_check(const Multivector& b, int r);

/// All failing witnesses, for diagnostics; empty iff plucker_check passes.
std::vector<CheckReport> plucker_failures(const Multivector& b, int r);

/// B ^ B of a grade-2 element; zero iff B is a 2-blade.
Multivector wedge_square(const Multivector& b);

/// Nguyen's two conditions: (i) B^2 is a pure scalar, and (ii) B v B is
/// homogeneous of grade <= 1 for every v = e_K . B over coordinate
/// (r-1)-blades K. Together equivalent to the Plucker relations.
CheckReport nguyen_check(const Multivector& b, int r);

/// True iff B^2 equals its grade-0 part. Necessary but not sufficient for
/// blade-ness; parity of term overlaps decides it termwise.
bool square_parity(const Multivector& b);

/// When square_parity fails, a grade-(r-1) index K contained in some term
/// J_m of a surviving same-parity pair (m, p), with |K intersect J_p| <= r-2
/// and (e_K . B) ^ B != 0. Absent when square_parity holds.
std::optional<BladeIndex> parity_witness(const Multivector& b, int r);

/// The contraction vectors e_K . B over all grade-(r-1) coordinate blades K
/// in lexicographic K order, zero entries skipped.
std::vector<Multivector> span_set(const Multivector& b, int r);

/// Rank of span_set(b, r); between r and n, equal to r only for blades.
int span_rank(const Multivector& b, int r);

struct RankSpace {
  int dimension = 0;
  std::vector<Multivector> basis;  // grade-1 elements spanning {x : x ^ B = 0}
};

/// Solves x ^ B = 0 by exact elimination; the solution space has dimension r
/// exactly when B is an r-blade.
RankSpace rank_space(const Multivector& b, int r);

/// True iff the geometric product k B is homogeneous of grade r - grade(k).
bool is_divisible(const Multivector& b, const Multivector& k);

/// The quotient Q = (l . B) / l^2 with l B verified to rebuild B; throws
/// std::invalid_argument when b is not divisible by l.
Multivector divide(const Multivector& b, const Multivector& l);

/// Factors an r-blade into scale * v_1 ^ ... ^ v_r with the v_i read off a
/// pivot coordinate blade via contractions. Runs plucker_check first and
/// throws NotABladeError (with that witness) when it fails; the returned
/// factorization is verified to reconstruct b exactly.
Factorization factorize(const Multivector& b, int r);

/// First nonzero value (lexicographic K order) of
/// B v B - (-1)^(r+1) (B . B) v over v = e_K . B, or zero if all vanish;
/// vanishes identically whenever B satisfies the Plucker relations.
Multivector blade_vb_identity_residual(const Multivector& b, int r);

}  // namespace ga
