#pragma once

// Internal: the HLT coset enumeration engine used by coset_enumerate.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tensordeg/fpgroup.hpp"

namespace tdeg::detail {

/**
 * HLT enumeration: for each live coset in order, scan every relator with
 * definitions, then complete the row. Coincidences are processed at once with
 * a union-find over cosets; dead rows are reclaimed by compaction when the
 * table runs out of room.
 */
class HltEnumerator {
public:
  HltEnumerator(std::size_t generator_count, const std::vector<Word> &relators,
                const EnumerationLimits &limits);

  /// Runs to completion or throws ResourceError.
  void run(const std::vector<Word> &subgroup_words);

  /// Renumbers live cosets breadth-first from coset 0.
  CosetTable standardized(bool trivial_subgroup) const;

  std::size_t live_cosets() const noexcept { return live_; }
  std::size_t cosets_defined() const noexcept { return defined_; }

private:
  using Coset = std::int32_t;
  static constexpr Coset kUndef = -1;

  Coset &cell(Coset c, std::size_t col) noexcept {
    return table_[static_cast<std::size_t>(c) * width_ + col];
  }
  Coset cell(Coset c, std::size_t col) const noexcept {
    return table_[static_cast<std::size_t>(c) * width_ + col];
  }
  bool alive(Coset c) const noexcept { return forward_[static_cast<std::size_t>(c)] == c; }

  Coset rep(Coset c);
  void merge(Coset a, Coset b);
  void coincidence(Coset a, Coset b);
  Coset define(Coset c, std::size_t col);
  void scan_and_fill(Coset c, const std::vector<std::uint32_t> &cols);
  /// Makes room for `rows` new cosets; may compact, which renumbers `keep`.
  void ensure_room(std::size_t rows, Coset &keep);
  void compact(Coset &keep);

  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::size_t row_limit_;
  std::size_t max_relator_ = 0;

  std::vector<Coset> table_;
  std::vector<Coset> forward_;
  std::vector<Coset> queue_;
  std::size_t capacity_ = 0;
  std::size_t next_ = 0;
  std::size_t live_ = 0;
  std::size_t defined_ = 0;
};

} // namespace tdeg::detail
