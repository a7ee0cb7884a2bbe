#pragma once

/**
 * @file tensor.hpp
 * @brief The nonabelian tensor square G (x) G and its exterior square.
 *
 * Conventions: G acts on itself on the left, ^x y = x y x^-1, and the defining
 * relations are
 *
 *     xy (x) h = (^x y (x) ^x h)(x (x) h)
 *     x (x) hk = (x (x) h)(^h x (x) ^h k)
 *
 * with kappa(x (x) y) = [x, y] = x y x^-1 y^-1. Generator t_{x,y} has index
 * x*|G| + y + 1.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tensordeg/fpgroup.hpp"
#include "tensordeg/group.hpp"

namespace tdeg {

/// 1-based generator index of t_{x,y}.
inline Letter tensor_generator(std::size_t order, Elem x, Elem y) {
  return static_cast<Letter>(static_cast<std::size_t>(x) * order + y + 1);
}

/// All |G|^2 generators and 2|G|^3 relators, first family then second.
Presentation present_tensor_square(const FiniteGroup &g);

/**
 * Relators of the first family with x in `left` and of the second with h in
 * `right`. When both sets are unions of conjugacy classes that generate G,
 * this presents the same group as the full set.
 */
Presentation present_tensor_square(const FiniteGroup &g, std::span<const Elem> left,
                                   std::span<const Elem> right);

/// Smallest union of conjugacy classes generating G, grown greedily from the
/// classes in index order.
std::vector<Elem> conjugation_closed_generators(const FiniteGroup &g);

struct TensorEnumerationStats {
  std::size_t relators_used = 0;
  std::size_t basis_generators = 0;
  std::size_t reduced_relators = 0;
  std::size_t cosets_defined = 0;
  std::size_t relators_certified = 0;
};

class TensorSquare {
public:
  /// Element count above which no Cayley table of T is built.
  static constexpr std::size_t kTableCap = 4096;

  const FiniteGroup &base() const noexcept { return *base_; }
  std::size_t order() const noexcept { return realized_->order(); }
  const RealizedGroup &realized() const noexcept { return *realized_; }

  bool has_table() const noexcept { return table_.has_value(); }
  /// DomainError when |T| > kTableCap.
  const FiniteGroup &group() const;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;

  Elem pair(Elem x, Elem y) const noexcept { return pairing_[x * base_->order() + y]; }
  const std::vector<Elem> &pairing() const noexcept { return pairing_; }

  Elem kappa(Elem t) const noexcept { return kappa_[t]; }
  const Subgroup &nabla() const noexcept { return nabla_; }
  const Subgroup &j2() const noexcept { return j2_; }

  bool is_abelian() const { return realized_->is_abelian(); }
  std::vector<std::uint64_t> abelian_invariants() const { return realized_->abelian_invariants(); }

  /**
   * The permutation t -> ^g t of T induced by x (x) y -> ^g x (x) ^g y.
   * InternalError if that assignment does not extend to an automorphism.
   */
  std::vector<Elem> action(Elem g) const;

  const TensorEnumerationStats &stats() const noexcept { return stats_; }

private:
  friend TensorSquare tensor_square(const FiniteGroup &, const EnumerationLimits &);
  TensorSquare() = default;

  std::shared_ptr<const FiniteGroup> base_;
  std::shared_ptr<const RealizedGroup> realized_;
  std::optional<FiniteGroup> table_;
  std::vector<Elem> pairing_;
  std::vector<Elem> kappa_;
  std::vector<Letter> basis_source_; ///< basis generator -> original generator
  Subgroup nabla_;
  Subgroup j2_;
  TensorEnumerationStats stats_;
};

/**
 * Enumerates G (x) G over a conjugation-closed relator subset, then checks all
 * 2|G|^3 defining relations in the result, so the group is exactly the tensor
 * square. ResourceError from the enumeration propagates.
 */
TensorSquare tensor_square(const FiniteGroup &g, const EnumerationLimits &limits = {});

Elem tensor_pair(const TensorSquare &ts, Elem x, Elem y);

Subgroup tensor_centralizer(const TensorSquare &ts, Elem x);
Subgroup tensor_center(const TensorSquare &ts);

/**
 * @brief G ^ G = T / nabla(G).
 *
 * Elements are the cosets of nabla, numbered by their smallest T element.
 */
class ExteriorSquare {
public:
  explicit ExteriorSquare(const TensorSquare &ts);

  const TensorSquare &tensor() const noexcept { return *tensor_; }
  std::size_t order() const noexcept { return representatives_.size(); }
  Elem project(Elem t) const noexcept { return projection_[t]; }
  Elem representative(Elem c) const noexcept { return representatives_[c]; }
  Elem pair(Elem x, Elem y) const noexcept { return projection_[tensor_->pair(x, y)]; }
  Elem kappa_prime(Elem c) const noexcept { return kappa_prime_[c]; }
  /// M(G) = ker kappa', as a subgroup of G ^ G.
  const Subgroup &multiplier() const noexcept { return multiplier_; }

  /// Cayley table of G ^ G; ResourceError above `order_cap`.
  FiniteGroup group(std::size_t order_cap = TensorSquare::kTableCap) const;

private:
  const TensorSquare *tensor_;
  std::vector<Elem> projection_;
  std::vector<Elem> representatives_;
  std::vector<Elem> kappa_prime_;
  Subgroup multiplier_;
};

ExteriorSquare exterior_square(const TensorSquare &ts);

Subgroup exterior_centralizer(const ExteriorSquare &es, Elem x);
Subgroup exterior_center(const ExteriorSquare &es);

/// {"group", "order_G", "order_T", "order_nabla", "order_J2", "order_exterior",
///  "order_M", "Z_tensor_order", "Z_exterior_order", "T_abelian", "T_invariants"}
nlohmann::json summary_json(const TensorSquare &ts, const ExteriorSquare &es);

} // namespace tdeg
