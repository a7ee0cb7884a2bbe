#pragma once

/**
 * @file degrees.hpp
 * @brief Commutativity, exterior and tensor degrees, and the inequality
 *        checks that relate them.
 *
 * Every degree is computed twice, once by counting pairs and once from a
 * class-representative sum, and the two must agree exactly.
 */

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "tensordeg/fpgroup.hpp"
#include "tensordeg/group.hpp"
#include "tensordeg/tensor.hpp"

namespace tdeg {

using DegreeValue = boost::multiprecision::cpp_rational;

/// "n/d", always with a denominator.
std::string to_string(const DegreeValue &v);
/// Decimal rendering for display only.
std::string approximate(const DegreeValue &v, int places = 6);

DegreeValue commutativity_degree(const FiniteGroup &g);
DegreeValue tensor_degree(const TensorSquare &ts);
DegreeValue exterior_degree(const ExteriorSquare &es);

enum class CheckStatus { Holds, Fails, NotApplicable, Skipped };
const char *to_string(CheckStatus s);

struct Witness {
  std::string label;
  DegreeValue value;
  bool integer = false;

  std::string rendered() const;
};

struct CheckResult {
  std::string check_name;
  std::string group_name;
  CheckStatus status = CheckStatus::Holds;
  std::vector<Witness> witnesses;
  std::string notes;
  std::string lhs; ///< headline comparison, display only
  std::string rhs;

  bool holds() const noexcept { return status == CheckStatus::Holds; }
  void add(std::string label, const DegreeValue &v) { witnesses.push_back({std::move(label), v, false}); }
  void add_count(std::string label, std::size_t n) {
    witnesses.push_back({std::move(label), DegreeValue(n), true});
  }
  /// Records one relation; any false one turns the result into Fails.
  void require(bool ok, const std::string &what);
};

/// check,group,status,lhs,rhs,witnesses,notes
std::string csv_header();
std::string to_csv_row(const CheckResult &r);
nlohmann::json to_json(const CheckResult &r);

/// Pair count versus class sum for d, d^ and d(x).
CheckResult check_class_formula(const TensorSquare &ts, const ExteriorSquare &es);

/// |C(x) : C(x)(x)| <= |J2| and <= |M| |nabla| for every class representative.
CheckResult check_index_bounds(const TensorSquare &ts, const ExteriorSquare &es);

/// Sandwich bounds on d(x) in terms of d, J2, Z and the tensor center, plus
/// the variant with |M| |nabla| in place of |J2|. DomainError for |G| = 1.
CheckResult check_thm23_bounds(const TensorSquare &ts, const ExteriorSquare &es);

/// 1/|G| + (|G|-1)/(|G| |T|) <= d(x) <= 1/p + (p-1)/(p |G|). DomainError for
/// nonabelian or trivial G.
CheckResult check_abelian_bounds(const TensorSquare &ts);

/// d(x) <= d^ <= d, with strictness of each link in the witnesses.
CheckResult check_chain(const TensorSquare &ts, const ExteriorSquare &es);

/**
 * One row per normal subgroup N: d(x)(G) <= d(x)(G/N), equality exactly when
 * N lies in the tensor center, and |T(G)| = |T(G/N)| (with equal invariants
 * when abelian) exactly when the degrees agree. All normal subgroups are
 * tried when |G| <= full_lattice_order; above that only normal closures of
 * single elements, G' and Z(G). Rows whose quotient cannot be enumerated
 * within `limits` are Skipped.
 */
std::vector<CheckResult> check_quotient_monotonicity(const TensorSquare &ts,
                                                     const EnumerationLimits &limits = {},
                                                     std::size_t full_lattice_order = 24);

/// All normal subgroups, as joins of normal closures of single elements,
/// ordered by size then members.
std::vector<Subgroup> normal_subgroups(const FiniteGroup &g);

/// d(x) <= d - (1-1/p)(|Z| - |Z(x)| - 1)/|G| given some x outside Z with
/// C(x)(x) != C(x); NotApplicable otherwise.
CheckResult check_sharpened_upper(const TensorSquare &ts);

/// d(x) <= 1/p for nonabelian G with trivial tensor center; NotApplicable otherwise.
CheckResult check_thm35(const TensorSquare &ts);

struct UnidegreeClass {
  bool left = false;  ///< d(x) = d
  bool right = false; ///< d^ = d
  bool center_equals_tensor_center = false;
  bool unicentral = false; ///< Z^ = Z
};

UnidegreeClass classify_unidegree(const TensorSquare &ts, const ExteriorSquare &es);

/// left => Z = Z(x); left => right; right => unicentral.
CheckResult check_unidegree(const TensorSquare &ts, const ExteriorSquare &es);

/**
 * d(x)(G) = d(G*) for perfect G with claimed Schur cover G*. Both counting
 * identities (trivial pairs times |M| and times |M|^2 against commuting
 * pairs of G*) are recorded as witnesses; only the degree equality decides
 * the status. DomainError if G is not perfect.
 */
CheckResult check_perfect_schur_cover(const TensorSquare &ts, const ExteriorSquare &es,
                                      const FiniteGroup &cover);

/// The six calculus identities of the tensor square over all element tuples.
CheckResult check_calculus_rules(const TensorSquare &ts);

} // namespace tdeg
