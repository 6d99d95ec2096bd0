#pragma once

#include <cstdint>
#include <vector>

#include "linfty/rational.hpp"

namespace linfty {

/// Koszul sign of the reordering (x_{order[0]}, ..., x_{order[n-1]}) relative
/// to (x_0, ..., x_{n-1}): bubble-sorting `order` back to the identity, each
/// adjacent swap of items p, q contributes (-1)^(|x_p||x_q|).
inline int koszul_sign(std::vector<int> order, const std::vector<int>& degrees) {
  int par = 0;
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j + 1 < n - i; ++j) {
      if (order[j] > order[j + 1]) {
        par += parity(degrees[order[j]]) * parity(degrees[order[j + 1]]);
        std::swap(order[j], order[j + 1]);
      }
    }
  }
  return (par % 2 == 0) ? 1 : -1;
}

/// Sign for moving the positions selected by `mask` to the front of the
/// sequence, preserving relative order on both sides.
inline int unshuffle_sign(const std::vector<int>& degrees, std::uint32_t mask) {
  int par = 0;
  int passed = 0;  // parity sum of unselected degrees seen so far
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (mask & (1u << i)) {
      par += parity(degrees[i]) * passed;
    } else {
      passed += parity(degrees[i]);
    }
  }
  return (par % 2 == 0) ? 1 : -1;
}

}  // namespace linfty
