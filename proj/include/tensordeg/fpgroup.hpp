#pragma once

/**
 * @file fpgroup.hpp
 * @brief Finitely presented groups and Todd-Coxeter coset enumeration.
 *
 * Words are sequences of signed 1-based generator indices: +i is generator i,
 * -i its inverse. Coset tables store two columns per generator, column 2(i-1)
 * for generator i and 2(i-1)+1 for its inverse.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensordeg/group.hpp"

namespace tdeg {

using Letter = std::int32_t;
using Word = std::vector<Letter>;

/// Cancel adjacent x x^-1 pairs.
Word free_reduce(std::span<const Letter> w);
/// Free reduction followed by cancelling inverse letters at the two ends.
Word cyclic_reduce(std::span<const Letter> w);
Word invert(std::span<const Letter> w);

inline std::size_t column_of(Letter l) noexcept {
  return l > 0 ? 2 * static_cast<std::size_t>(l - 1) : 2 * static_cast<std::size_t>(-l - 1) + 1;
}
inline Letter letter_of(std::size_t column) noexcept {
  const auto g = static_cast<Letter>(column / 2 + 1);
  return column % 2 ? -g : g;
}
inline std::size_t inverse_column(std::size_t column) noexcept { return column ^ 1u; }

class Presentation {
public:
  Presentation() = default;
  /// Relators are freely reduced on the way in; empty ones are dropped.
  /// DomainError if a letter is out of range.
  Presentation(std::size_t generator_count, std::vector<Word> relators,
               std::vector<std::string> generator_labels = {});

  std::size_t generator_count() const noexcept { return generator_count_; }
  const std::vector<Word> &relators() const noexcept { return relators_; }
  const std::vector<std::string> &generator_labels() const noexcept { return labels_; }
  std::string generator_label(std::size_t i) const; ///< 0-based

  void validate_word(std::span<const Letter> w) const;

private:
  std::size_t generator_count_ = 0;
  std::vector<Word> relators_;
  std::vector<std::string> labels_;
};

/// Parses "a, b | a^2, b^2, (a b)^3". Inverses via "-a", "a^-1" or "(...)^-2".
/// ParseError carries the offending position.
Presentation parse_presentation(std::string_view text);

struct EnumerationLimits {
  std::size_t max_cosets = std::size_t{1} << 22;
  std::size_t max_table_cells = std::size_t{1} << 31;
};

/// Reads MAX_COSETS / MAX_TABLE_CELLS from the environment over the defaults.
EnumerationLimits limits_from_environment(EnumerationLimits base = {});

struct Definition {
  std::uint32_t source;
  std::uint32_t column;
};

/**
 * @brief A complete, standardized coset table.
 *
 * Coset 0 is the subgroup. definitions[k] (k >= 1) says coset k was first
 * reached as source * letter_of(column); these form a breadth-first Schreier
 * tree, so source < k.
 */
struct CosetTable {
  std::size_t generator_count = 0;
  std::size_t coset_count = 0;
  std::vector<std::uint32_t> action; ///< coset_count x 2*generator_count
  std::vector<Definition> definitions;
  bool trivial_subgroup = true;
  std::size_t cosets_defined = 0; ///< total definitions made while enumerating

  std::size_t width() const noexcept { return 2 * generator_count; }
  std::uint32_t at(std::size_t coset, std::size_t column) const noexcept {
    return action[coset * width() + column];
  }
  std::uint32_t apply(std::uint32_t coset, Letter l) const noexcept {
    return at(coset, column_of(l));
  }
  std::uint32_t trace(std::uint32_t coset, std::span<const Letter> w) const noexcept {
    for (Letter l : w)
      coset = apply(coset, l);
    return coset;
  }
  /// Word w with 0 * w = coset, read off the Schreier tree.
  Word schreier_word(std::uint32_t coset) const;
};

/**
 * Todd-Coxeter enumeration of the cosets of <subgroup_words> in the presented
 * group. Throws ResourceError when limits are exceeded (progress() = cosets
 * defined so far), including immediately for a relator-free presentation over
 * the trivial subgroup with at least one generator.
 */
CosetTable coset_enumerate(const Presentation &p, std::span<const Word> subgroup_words = {},
                           const EnumerationLimits &limits = {});

/**
 * @brief The group of a trivial-subgroup coset table, acting on itself.
 *
 * Element k is coset k; k * m is found by replaying m's Schreier word from k,
 * so no |G|^2 table is needed.
 */
class RealizedGroup {
public:
  /// DomainError unless the table was enumerated over the trivial subgroup.
  explicit RealizedGroup(CosetTable table);

  std::size_t order() const noexcept { return table_.coset_count; }
  const CosetTable &table() const noexcept { return table_; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::size_t k) const;
  /// Element represented by a word in the generators.
  Elem evaluate(std::span<const Letter> w) const { return table_.trace(0, w); }
  /// Image of generator i (1-based).
  Elem generator_image(std::size_t i) const { return table_.at(0, 2 * (i - 1)); }
  /// Right multiplication by generator letter: a * l, a table lookup.
  Elem mul_letter(Elem a, Letter l) const { return table_.apply(a, l); }

  std::size_t element_order(Elem a) const;
  /// Closure of the given elements; elements given as letters use table
  /// columns directly.
  Subgroup generated_by_letters(std::span<const Letter> letters) const;
  Subgroup generated_by(std::span<const Elem> elems) const;
  bool is_abelian() const;
  /// Elementary divisors; DomainError if nonabelian.
  std::vector<std::uint64_t> abelian_invariants() const;

  /// Full Cayley table; ResourceError if order exceeds `order_cap`.
  FiniteGroup materialize(std::size_t order_cap = 4096) const;

private:
  CosetTable table_;
  std::vector<std::uint32_t> depth_;
};

struct Realization {
  FiniteGroup group;
  std::vector<Elem> generator_images;
};

/// Materializes the group of a trivial-subgroup table as a FiniteGroup.
Realization realize(const CosetTable &ct, std::size_t order_cap = 4096);

} // namespace tdeg
