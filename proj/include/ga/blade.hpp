#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace ga {

/// Index set of a coordinate basis blade of G_n, packed as a bitmask:
/// bit (i-1) set  <=>  basis vector e_i is a factor. The empty set is the
/// scalar unit. Grade is the set's cardinality. Supports n up to 64.
class BladeIndex {
 public:
  static constexpr int kMaxDim = 64;

  constexpr BladeIndex() = default;

  static constexpr BladeIndex from_mask(std::uint64_t mask) { return BladeIndex(mask); }
  /// Builds from 1-based indices; throws std::invalid_argument unless they are
  /// strictly ascending and within [1, kMaxDim].
  static BladeIndex from_indices(const std::vector<int>& ascending);
  static BladeIndex unit(int i);  // the single vector e_i

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int grade() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr bool subset_of(BladeIndex o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr int max_index() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  BladeIndex with(int i) const { return BladeIndex(mask_ | (std::uint64_t{1} << (i - 1))); }
  BladeIndex without(int i) const { return BladeIndex(mask_ & ~(std::uint64_t{1} << (i - 1))); }

  /// Ascending 1-based indices.
  std::vector<int> indices() const;

  friend constexpr bool operator==(BladeIndex a, BladeIndex b) { return a.mask_ == b.mask_; }
  friend constexpr bool operator!=(BladeIndex a, BladeIndex b) { return a.mask_ != b.mask_; }

 private:
  constexpr explicit BladeIndex(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Lexicographic order on the ascending index sequences, e.g.
/// {} < {1} < {1,2} < {1,3} < {1,3,4} < {2}. This is the canonical term
/// order everywhere: term storage, witness and pivot selection, formatting.
bool lex_less(BladeIndex a, BladeIndex b);

struct BladeLexLess {
  bool operator()(BladeIndex a, BladeIndex b) const { return lex_less(a, b); }
};

/// Sign and index set of the geometric product of two coordinate blades in
/// the Euclidean metric: repeated indices annihilate to +1, the sign counts
/// the transpositions needed to sort the concatenation of a then b.
std::pair<int, BladeIndex> basis_product(BladeIndex a, BladeIndex b);

/// All grade-k subsets of {1..n} in lexicographic order.
std::vector<BladeIndex> coordinate_blades(int n, int k);

}  // namespace ga
