#pragma once

/**
 * @file verify.hpp
 * @brief The verification sweep: which checks run on which groups, and the
 *        report that collects them.
 */

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tensordeg/catalog.hpp"
#include "tensordeg/degrees.hpp"

namespace tdeg {

inline constexpr const char *kToolVersion = "0.1.0";

/// Suite names accepted by run_verification, in report order.
const std::vector<std::string> &all_suites();

struct VerifyOptions {
  std::size_t max_order = 32;
  std::vector<std::string> suites; ///< empty = all
  EnumerationLimits limits;
  unsigned jobs = 0; ///< 0 = hardware concurrency
  /// Adds ESp(2,2) and ESm(2,2) closed-form rows even when max_order < 32.
  bool stretch = false;
};

/// Published closed forms for one group. Unset fields have no formula.
struct ClosedForm {
  std::optional<DegreeValue> tensor;
  std::optional<DegreeValue> exterior;
  std::optional<DegreeValue> commutativity;
  /// Expected strictness of d(x) < d^ and d^ < d.
  std::optional<bool> tensor_below_exterior;
  std::optional<bool> exterior_below_commutativity;
};

/// Closed forms for the quaternion, dihedral, extraspecial and elementary
/// abelian families; nullopt for groups outside them.
std::optional<ClosedForm> closed_form(const GroupSpec &spec);

/// Group specs carrying closed-form rows: the listed small cases plus the
/// order-32 extraspecials when `stretch`.
std::vector<std::string> closed_form_targets(bool stretch);

struct ReportSummary {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
  std::size_t skipped = 0;
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::string generated_at; ///< ISO 8601 UTC
  std::vector<CheckResult> rows;

  ReportSummary summary() const;
  std::string to_csv() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Runs the selected suites over the sweep catalog and the extra targets.
/// DomainError for an unknown suite name.
ReportDocument run_verification(const VerifyOptions &options);

} // namespace tdeg
