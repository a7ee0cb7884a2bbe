#pragma once

/**
 * @file group.hpp
 * @brief Finite groups given by multiplication tables, and the structural
 *        queries (classes, centralizers, subgroups, quotients) built on them.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tensordeg/subgroup.hpp"

namespace tdeg {

/// A permutation of {0, ..., n-1}, stored as the image list.
using Permutation = std::vector<std::uint32_t>;

/**
 * @brief A finite group of order n as an n x n Cayley table.
 *
 * The identity is always element 0. Every constructor renumbers to keep it
 * there. Objects are immutable once built.
 */
class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  /// The group of order 1.
  static FiniteGroup trivial();

  /**
   * Build from a user supplied table (rows[i][j] = i*j). All group axioms are
   * checked; associativity is checked exhaustively, which is only attempted for
   * n <= 256 (DomainError otherwise). The identity is renumbered to 0.
   */
  static FiniteGroup from_table(const std::vector<std::vector<Elem>> &rows,
                                std::vector<std::string> labels = {},
                                std::string name = {});

  /**
   * Build from a table produced by a construction that is associative by
   * design. Identity, inverse and Latin-square properties are still checked
   * (O(n^2)); associativity is not. `flat` is row-major and 0 must be the
   * identity.
   */
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Elem> flat,
                                        std::vector<std::string> labels = {},
                                        std::string name = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverses_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  /// y^x = x^-1 y x.
  Elem conj(Elem y, Elem x) const noexcept { return mul(mul(inv(x), y), x); }
  /// x y x^-1, the left conjugation action.
  Elem left_conj(Elem x, Elem y) const noexcept { return mul(mul(x, y), inv(x)); }
  /// [x, y] = x y x^-1 y^-1.
  Elem commutator(Elem x, Elem y) const noexcept {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  bool is_abelian() const noexcept;

  const std::string &name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  std::string label(Elem e) const;

  friend bool operator==(const FiniteGroup &a, const FiniteGroup &b) noexcept {
    return a.table_ == b.table_;
  }

private:
  FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<Elem> inverses,
              std::vector<std::string> labels, std::string name)
      : order_(order), table_(std::move(table)), inverses_(std::move(inverses)),
        labels_(std::move(labels)), name_(std::move(name)) {}

  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<std::string> labels_;
  std::string name_;
};

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

/// Closure of the generators under composition. Composition applies the left
/// factor first: (p q)(i) = q(p(i)). Labels record the first shortest
/// generator word found ("e" for the identity, generators "g1", "g2", ...).
FiniteGroup from_permutations(std::span<const Permutation> generators,
                              std::size_t order_cap = kDefaultOrderCap);

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b,
                           std::size_t order_cap = kDefaultOrderCap);

struct Quotient {
  FiniteGroup group;
  std::vector<Elem> projection; ///< element of G -> coset index in G/N
};

/// G/N. Cosets are numbered by their smallest element, so N itself is 0.
Quotient quotient(const FiniteGroup &g, const Subgroup &n);

struct ConjugacyClasses {
  std::vector<Elem> representatives;      ///< increasing element index
  std::vector<std::uint32_t> class_of;    ///< element -> class index
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return representatives.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup &g);

Subgroup centralizer(const FiniteGroup &g, Elem x);
Subgroup center(const FiniteGroup &g);
Subgroup derived_subgroup(const FiniteGroup &g);
Subgroup generated_subgroup(const FiniteGroup &g, std::span<const Elem> generators);
Subgroup normal_closure(const FiniteGroup &g, std::span<const Elem> generators);

/// Checks the Subgroup invariants: identity, closure, Lagrange.
bool is_subgroup(const FiniteGroup &g, const Subgroup &s);
bool is_normal(const FiniteGroup &g, const Subgroup &s);

std::size_t element_order(const FiniteGroup &g, Elem x);
std::size_t exponent(const FiniteGroup &g);
/// DomainError for the trivial group.
std::uint64_t smallest_prime_divisor(const FiniteGroup &g);

/// Prime-power elementary divisors, sorted ascending. DomainError if G is
/// nonabelian. The trivial group gives an empty list.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup &g);

/// Primes dividing n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

// JSON: {"name", "order", "table": [[...]], "labels": [...]}
nlohmann::json to_json(const FiniteGroup &g);
FiniteGroup group_from_json(const nlohmann::json &j);

} // namespace tdeg
