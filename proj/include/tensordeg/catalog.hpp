#pragma once

/**
 * @file catalog.hpp
 * @brief Named group families and the group-spec mini language.
 *
 *     spec := atom ('x' atom)*
 *     atom := 'C'n | 'C'p'^'n | 'D'n | 'Q'n | 'ESp('p','m')' | 'ESm('p','m')'
 *           | 'S'n | 'A'n | 'SL(2,'q')'
 *
 * D and Q take the group order. Whitespace is ignored and family letters are
 * case-insensitive.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tensordeg/group.hpp"

namespace tdeg {

enum class Family {
  Cyclic,
  ElementaryAbelian,
  Dihedral,
  GeneralizedQuaternion,
  ExtraspecialPlus,
  ExtraspecialMinus,
  Symmetric,
  Alternating,
  SL2,
};

struct Atom {
  Family family;
  std::vector<std::uint64_t> params;

  friend bool operator==(const Atom &, const Atom &) = default;
};

/// A direct product of atoms, left to right. One factor is a plain atom.
struct GroupSpec {
  std::vector<Atom> factors;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// ParseError (with position) on bad syntax or a parameter outside its family's domain.
GroupSpec parse_spec(std::string_view text);

/// Canonical text: family letters as in the grammar, no spaces.
std::string render(const GroupSpec &spec);

/// Builds the group; its name is render(spec). ResourceError past `order_cap`.
FiniteGroup make(const GroupSpec &spec, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup make(std::string_view text, std::size_t order_cap = kDefaultOrderCap);

/// Central product identifying Z(A) and Z(B), both cyclic of prime order p,
/// via their smallest non-identity elements.
FiniteGroup central_product(const FiniteGroup &a, const FiniteGroup &b);

/// Spec strings of the verification sweep with group order <= max_order, in
/// sweep order.
std::vector<std::string> sweep_catalog(std::size_t max_order);

} // namespace tdeg
