#pragma once

// Internal: trivial-subgroup enumeration through generator elimination.

#include "tensordeg/fpgroup.hpp"
#include "tietze.hpp"

namespace tdeg::detail {

/// Regular coset table over the elimination basis together with the
/// expansions of every original generator.
struct ReducedEnumeration {
  Elimination elimination;
  CosetTable basis_table; ///< standardized, over basis_count generators
};

struct ReduceOptions {
  std::vector<std::uint32_t> preferred_basis; ///< 0-based original generators
  std::size_t max_expansion = 48;
  /// Enumerate with a growing prefix of the reduced relators, adding back the
  /// ones that fail in the result, until every relator holds.
  bool staged = true;
  /// The first stage holds the 256 shortest relators plus, for each
  /// generator, the shortest relators mentioning it this many times.
  std::size_t seed_per_generator = 16;
};

/// Enumerates <p> over the trivial subgroup by eliminating generators first.
/// The result is checked against every original relator (InternalError if any
/// fails, since elimination preserves the group).
ReducedEnumeration enumerate_reduced(const Presentation &p, const EnumerationLimits &limits,
                                     const ReduceOptions &options = {});

/// Element reached from `coset` by reading the original generator letter `l`.
std::uint32_t apply_original(const ReducedEnumeration &r, std::uint32_t coset, Letter l);

} // namespace tdeg::detail
