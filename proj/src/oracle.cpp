#include "ga/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "ga/plucker.hpp"

namespace ga {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("SplitMix64::int_in: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  return SplitMix64(seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL);
}

namespace {

Rational random_coefficient(SplitMix64& rng, long bound) {
  const long num = rng.int_in(-bound, bound);
  const long den = rng.int_in(1, bound);
  return Rational(num, den);
}

// Rank by exact elimination, local to the oracle on purpose: the oracle must
// not inherit a defect from the library's elimination or the criteria it is
// judging. Rows are consumed column by column without normalization.
int oracle_rank(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  int rank = 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t sel = top;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[top], rows[sel]);
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[top][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[r][c] -= factor * rows[top][c];
      }
    }
    ++rank;
    ++top;
  }
  return rank;
}

}  // namespace

bool blade_oracle(const Multivector& b, int r) {
  if (b.is_zero()) throw std::invalid_argument("blade_oracle: zero multivector");
  if (!b.is_homogeneous(r)) {
    throw std::invalid_argument("blade_oracle: input is not homogeneous of the given grade");
  }
  const int n = b.dimension();

  // dim {x : x ^ B = 0} = n - rank of the matrix whose i-th row holds the
  // coordinates of e_i ^ B over the grade-(r+1) blades.
  const std::vector<BladeIndex> constraint_blades = coordinate_blades(n, r + 1);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Multivector w = outer_product(Multivector::blade(n, BladeIndex::unit(i)), b);
    std::vector<Rational> row;
    row.reserve(constraint_blades.size());
    for (BladeIndex j : constraint_blades) row.push_back(w.coefficient(j));
    rows.push_back(std::move(row));
  }
  const int dim = n - oracle_rank(std::move(rows), constraint_blades.size());
  return dim == r;
}

Multivector random_vector(int n, SplitMix64& rng, long bound) {
  if (n < 1) throw std::invalid_argument("random_vector: dimension must be positive");
  while (true) {
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coords.push_back(random_coefficient(rng, bound));
    Multivector v = Multivector::vector(n, coords);
    if (!v.is_zero()) return v;
  }
}

Multivector random_blade(int n, int r, SplitMix64& rng, long bound) {
  if (r < 1 || r > n) throw std::invalid_argument("random_blade: need 1 <= r <= n");
  while (true) {
    Multivector wedge = random_vector(n, rng, bound);
    for (int i = 1; i < r; ++i) wedge = outer_product(wedge, random_vector(n, rng, bound));
    if (!wedge.is_zero()) return wedge;
  }
}

Multivector random_rvector(int n, int r, SplitMix64& rng, long bound) {
  if (r < 1 || r > n) throw std::invalid_argument("random_rvector: need 1 <= r <= n");
  while (true) {
    Multivector::TermMap terms;
    for (BladeIndex j : coordinate_blades(n, r)) {
      if (!rng.coin()) continue;
      Rational c = random_coefficient(rng, bound);
      if (!c.is_zero()) terms.emplace(j, std::move(c));
    }
    Multivector b = Multivector::from_terms(n, std::move(terms));
    if (!b.is_zero()) return b;
  }
}

namespace {

// The quadratic relation of G_4^2: B12 B34 - B13 B24 + B14 B23 = 0.
bool quadratic_relation_holds(const Multivector& b) {
  auto coeff = [&](int i, int j) {
    return b.coefficient(BladeIndex::unit(i).with(j));
  };
  const Rational q = coeff(1, 2) * coeff(3, 4) - coeff(1, 3) * coeff(2, 4) +
                     coeff(1, 4) * coeff(2, 3);
  return q.is_zero();
}

}  // namespace

TrialReport run_equivalence_trials(const TrialConfig& cfg) {
  if (cfg.r < 1 || cfg.r > cfg.n || cfg.n > 12) {
    throw std::invalid_argument("run_equivalence_trials: need 1 <= r <= n <= 12");
  }
  if (cfg.trials < 1) throw std::invalid_argument("run_equivalence_trials: need trials >= 1");
  if (cfg.bound < 1) throw std::invalid_argument("run_equivalence_trials: need bound >= 1");

  TrialReport report;
  report.config = cfg;
  const bool quad_case = (cfg.n == 4 && cfg.r == 2);

  for (int trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    bool trial_agrees = true;
    for (const char* kind : {"blade", "rvector"}) {
      const Multivector b = (kind[0] == 'b')
                                ? random_blade(cfg.n, cfg.r, rng, cfg.bound)
                                : random_rvector(cfg.n, cfg.r, rng, cfg.bound);
      const bool oracle = blade_oracle(b, cfg.r);
      const bool plucker = plucker_check(b, cfg.r).passed;
      const bool nguyen = nguyen_check(b, cfg.r).passed;
      const bool span_is_r = span_rank(b, cfg.r) == cfg.r;
      bool agree = (oracle == plucker) && (oracle == nguyen) && (oracle == span_is_r);
      if (quad_case) {
        ++report.quad_checks;
        agree = agree && (quadratic_relation_holds(b) == oracle) &&
                (wedge_square(b).is_zero() == oracle);
      }
      ++report.instances;
      if (!agree) {
        trial_agrees = false;
        if (!report.first_disagreement) {
          report.first_disagreement =
              Disagreement{trial, kind, b, oracle, plucker, nguyen, span_is_r};
        }
      }
    }
    ++report.trials_run;
    if (trial_agrees) ++report.agreements;
  }
  return report;
}

}  // namespace ga
