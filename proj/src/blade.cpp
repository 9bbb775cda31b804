#include "ga/blade.hpp"

#include <stdexcept>

namespace ga {

BladeIndex BladeIndex::from_indices(const std::vector<int>& ascending) {
  std::uint64_t mask = 0;
  int prev = 0;
  for (int i : ascending) {
    if (i < 1 || i > kMaxDim) throw std::invalid_argument("BladeIndex: index out of range");
    if (i <= prev) throw std::invalid_argument("BladeIndex: indices must be strictly ascending");
    mask |= std::uint64_t{1} << (i - 1);
    prev = i;
  }
  return BladeIndex(mask);
}

BladeIndex BladeIndex::unit(int i) {
  if (i < 1 || i > kMaxDim) throw std::invalid_argument("BladeIndex: index out of range");
  return BladeIndex(std::uint64_t{1} << (i - 1));
}

std::vector<int> BladeIndex::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(grade()));
  std::uint64_t m = mask_;
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

bool lex_less(BladeIndex a, BladeIndex b) {
  std::uint64_t ma = a.mask();
  std::uint64_t mb = b.mask();
  while (ma != 0 && mb != 0) {
    const int ia = std::countr_zero(ma);
    const int ib = std::countr_zero(mb);
    if (ia != ib) return ia < ib;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  // A proper prefix sorts first.
  return ma == 0 && mb != 0;
}

std::pair<int, BladeIndex> basis_product(BladeIndex a, BladeIndex b) {
  // Counts the pairs (i in a, j in b) with i > j: exactly the transpositions
  // needed to merge the two ascending runs into one sorted sequence. Equal
  // indices then sit adjacent and annihilate to +1 (Euclidean metric) with
  // no further sign.
  std::uint64_t ma = a.mask() >> 1;
  int swaps = 0;
  while (ma != 0) {
    swaps += std::popcount(ma & b.mask());
    ma >>= 1;
  }
  const int sign = (swaps & 1) ? -1 : 1;
  return {sign, BladeIndex::from_mask(a.mask() ^ b.mask())};
}

std::vector<BladeIndex> coordinate_blades(int n, int k) {
  if (n < 0 || n > BladeIndex::kMaxDim) throw std::invalid_argument("coordinate_blades: bad n");
  if (k < 0 || k > n) return {};
  if (k == 0) return {BladeIndex{}};
  std::vector<BladeIndex> out;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(BladeIndex::from_indices(comb));
    // advance to the next combination in lexicographic order
    int pos = k - 1;
    while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++comb[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace ga
