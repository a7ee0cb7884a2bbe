#pragma once

// Internal: generator elimination for presentations with many short relators.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tensordeg/fpgroup.hpp"

namespace tdeg::detail {

/**
 * Result of eliminating generators. Every original generator is either a
 * basis generator or defined by a word in generators earlier in `order`;
 * each definition comes from solving a relator for its only unknown letter,
 * so the reduced presentation defines the same group.
 */
struct Elimination {
  std::size_t basis_count = 0;
  std::vector<std::int32_t> basis_index; ///< original (0-based) -> basis (0-based) or -1
  std::vector<Word> definition;          ///< over original letters; empty for basis generators
  std::vector<Word> expansion;           ///< over basis letters
  std::vector<std::uint32_t> order;      ///< non-basis generators, dependencies first
  std::vector<Word> relators;            ///< reduced, canonical, deduplicated, over basis letters
};

/// Generators listed in `preferred` (0-based) start out in the basis.
Elimination eliminate_generators(const Presentation &p, std::size_t max_expansion = 48,
                                 std::span<const std::uint32_t> preferred = {});

/// Least rotation of a cyclic word and of its inverse, whichever is smaller.
Word canonical_cyclic(const Word &w);

} // namespace tdeg::detail
