#pragma once

#include <cstddef>

#include "sqrtlab/kernels.hpp"

namespace sqrtlab::kernels::detail {

// Sums leaf(begin, end) over blocks of kBlock elements, combining the block
// partials along a balanced binary tree.  Leaf functions return a value with
// operator+ (double or Complex).
template <class T, class Leaf>
T pairwise_blocks(std::size_t begin, std::size_t end, const Leaf& leaf) {
  const std::size_t n = end - begin;
  if (n <= kBlock) return leaf(begin, end);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  const std::size_t mid = begin + (blocks / 2) * kBlock;
  return pairwise_blocks<T>(begin, mid, leaf) + pairwise_blocks<T>(mid, end, leaf);
}

}  // namespace sqrtlab::kernels::detail
