#include "tensordeg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <map>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

DegreeValue q(std::int64_t num, std::int64_t den) { return DegreeValue(num, den); }

std::int64_t ipow(std::int64_t b, std::uint64_t e) {
  std::int64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

std::optional<std::uint64_t> log2_exact(std::uint64_t n) {
  std::uint64_t k = 0;
  while (n > 1 && n % 2 == 0) {
    n /= 2;
    ++k;
  }
  if (n != 1)
    return std::nullopt;
  return k;
}

ClosedForm two_group_form(std::uint64_t order, bool quaternion) {
  const std::uint64_t n = *log2_exact(order);
  ClosedForm f;
  if (n == 3) {
    f.tensor = quaternion ? q(1, 4) : q(5, 16);
    f.exterior = q(5, 8);
    f.commutativity = q(5, 8);
  } else {
    const std::int64_t two_n = ipow(2, n);
    f.tensor = q(ipow(2, n - 3) + ipow(2, n - 4) + 1, two_n);
    f.exterior = q(ipow(2, n - 2) + 3, two_n);
    f.commutativity = q(ipow(2, n - 2) + 3, two_n);
  }
  f.tensor_below_exterior = true;
  f.exterior_below_commutativity = false;
  return f;
}

ClosedForm elementary_abelian_form(std::int64_t p, std::uint64_t n) {
  ClosedForm f;
  f.tensor = q(2 * ipow(p, n) - 1, ipow(p, 2 * n));
  f.exterior = q(ipow(p, n) + ipow(p, n - 1) - 1, ipow(p, 2 * n - 1));
  f.commutativity = q(1, 1);
  f.tensor_below_exterior = true;
  f.exterior_below_commutativity = true;
  return f;
}

struct Target {
  std::string spec;
  bool sweep = false;
  bool closed = false;
  bool tensor_center = false;
  std::optional<std::string> cover;
};

const std::vector<std::string> kClosedFormTargets = {
    "Q8",   "D8", "Q16",  "D16",  "Q32",  "D32",  "ESp(3,1)", "ESp(5,1)", "ESm(3,1)", "ESm(5,1)",
    "C2",   "C2^2", "C2^3", "C3", "C3^2", "C3^3", "C5",       "C5^2",     "C5^3",
};
const std::vector<std::string> kStretchTargets = {"ESp(2,2)", "ESm(2,2)"};
const std::vector<std::string> kTensorCenterTargets = {"D8",       "Q8",       "ESp(3,1)", "ESm(3,1)",
                                                       "ESp(5,1)", "ESm(5,1)", "ESp(2,2)", "ESm(2,2)"};

bool trivial_tensor_center_expected(const GroupSpec &s) {
  const Atom &a = s.factors[0];
  return a.params[1] == 1 && (a.params[0] == 2 || a.family == Family::ExtraspecialPlus);
}

CheckResult row(const std::string &check, const std::string &group) {
  CheckResult r;
  r.check_name = check;
  r.group_name = group;
  return r;
}

void closed_form_rows(const GroupSpec &spec, const TensorSquare &ts, const ExteriorSquare &es,
                      std::vector<CheckResult> &out) {
  const std::optional<ClosedForm> f = closed_form(spec);
  if (!f)
    return;
  const std::string name = ts.base().name();
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue de = exterior_degree(es);
  const DegreeValue d = commutativity_degree(ts.base());
  auto compare = [&](const char *kind, const DegreeValue &got, const std::optional<DegreeValue> &want) {
    if (!want)
      return;
    CheckResult r = row("closed_form", name);
    r.lhs = to_string(got);
    r.rhs = to_string(*want);
    r.add(kind, got);
    r.add("expected", *want);
    r.notes = std::string(kind) + "(" + name + ") = " + r.lhs + " expected " + r.rhs;
    r.require(got == *want, std::string(kind) + " matches the closed form");
    out.push_back(std::move(r));
  };
  compare("d_tensor", dt, f->tensor);
  compare("d_ext", de, f->exterior);
  compare("d", d, f->commutativity);
  if (f->tensor_below_exterior || f->exterior_below_commutativity) {
    CheckResult r = row("strictness", name);
    r.lhs = to_string(dt) + (dt < de ? " < " : " = ") + to_string(de) + (de < d ? " < " : " = ") +
            to_string(d);
    auto word = [](bool strict) { return strict ? "<" : "="; };
    r.rhs = std::string("d_tensor ") + word(*f->tensor_below_exterior) + " d_ext " +
            word(*f->exterior_below_commutativity) + " d";
    r.add_count("tensor_ext_strict", dt < de);
    r.add_count("ext_comm_strict", de < d);
    r.require((dt < de) == *f->tensor_below_exterior, "strictness of d_tensor against d_ext");
    r.require((de < d) == *f->exterior_below_commutativity, "strictness of d_ext against d");
    out.push_back(std::move(r));
  }
}

CheckResult tensor_center_row(const GroupSpec &spec, const TensorSquare &ts) {
  const FiniteGroup &g = ts.base();
  CheckResult r = row("tensor_center", g.name());
  const Subgroup zt = tensor_center(ts);
  const Subgroup z = center(g);
  const Subgroup dg = derived_subgroup(g);
  r.add_count("Z_tensor", zt.size());
  r.add_count("Z", z.size());
  r.add_count("derived", dg.size());
  r.lhs = "|Z_tensor| = " + std::to_string(zt.size());
  if (trivial_tensor_center_expected(spec)) {
    r.rhs = "1";
    r.require(zt.size() == 1, "tensor center is trivial");
  } else {
    r.rhs = "Z = G'";
    r.require(zt.members() == z.members(), "tensor center equals the center");
    r.require(z.members() == dg.members(), "center equals the derived subgroup");
  }
  return r;
}

std::vector<CheckResult> evaluate(const Target &t, const std::set<std::string> &suites,
                                  const EnumerationLimits &limits) {
  std::vector<CheckResult> out;
  const GroupSpec spec = parse_spec(t.spec);
  const FiniteGroup g = make(spec);
  auto selected = [&](const char *s) { return suites.count(s) > 0; };

  std::vector<std::string> applicable;
  for (const std::string &s : all_suites()) {
    const bool sweep_suite = s != "closed-forms" && s != "tensor-center" && s != "schur-cover";
    if (!selected(s.c_str()))
      continue;
    if ((sweep_suite && t.sweep) || (s == "closed-forms" && t.closed) ||
        (s == "tensor-center" && t.tensor_center) || (s == "schur-cover" && t.cover))
      applicable.push_back(s);
  }
  if (applicable.empty())
    return out;

  std::optional<TensorSquare> ts;
  try {
    ts.emplace(tensor_square(g, limits));
  } catch (const ResourceError &e) {
    for (const std::string &s : applicable) {
      CheckResult r = row(s, g.name());
      r.status = CheckStatus::Skipped;
      r.notes = "tensor square over limits after " + std::to_string(e.progress()) + " cosets";
      out.push_back(std::move(r));
    }
    return out;
  }
  const ExteriorSquare es(*ts);

  auto na = [&](const char *check, const std::string &why) {
    CheckResult r = row(check, g.name());
    r.status = CheckStatus::NotApplicable;
    r.notes = why;
    return r;
  };
  for (const std::string &s : applicable) {
    if (s == "class-formula") {
      out.push_back(check_class_formula(*ts, es));
    } else if (s == "index-bounds") {
      out.push_back(check_index_bounds(*ts, es));
    } else if (s == "thm23") {
      out.push_back(g.order() > 1 ? check_thm23_bounds(*ts, es) : na("thm23", "trivial group"));
    } else if (s == "abelian") {
      if (!g.is_abelian())
        out.push_back(na("abelian_bounds", "nonabelian group"));
      else if (g.order() == 1)
        out.push_back(na("abelian_bounds", "trivial group"));
      else
        out.push_back(check_abelian_bounds(*ts));
    } else if (s == "chain") {
      out.push_back(check_chain(*ts, es));
    } else if (s == "quotient") {
      for (CheckResult &r : check_quotient_monotonicity(*ts, limits))
        out.push_back(std::move(r));
    } else if (s == "sharpened") {
      out.push_back(check_sharpened_upper(*ts));
    } else if (s == "thm35") {
      out.push_back(check_thm35(*ts));
    } else if (s == "unidegree") {
      out.push_back(check_unidegree(*ts, es));
    } else if (s == "calculus") {
      out.push_back(g.order() <= 16 ? check_calculus_rules(*ts)
                                    : na("calculus_rules", "exhaustive only up to order 16"));
    } else if (s == "closed-forms") {
      closed_form_rows(spec, *ts, es, out);
    } else if (s == "tensor-center") {
      out.push_back(tensor_center_row(spec, *ts));
    } else if (s == "schur-cover") {
      const FiniteGroup cover = make(*t.cover);
      CheckResult r = check_perfect_schur_cover(*ts, es, cover);
      r.notes = "d_tensor(" + g.name() + ") = " + r.lhs + " = d(" + cover.name() + ")";
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

} // namespace

const std::vector<std::string> &all_suites() {
  static const std::vector<std::string> suites = {
      "class-formula", "index-bounds", "thm23",    "abelian",      "chain",
      "quotient",      "sharpened",    "thm35",    "unidegree",    "calculus",
      "closed-forms",  "tensor-center", "schur-cover"};
  return suites;
}

std::optional<ClosedForm> closed_form(const GroupSpec &spec) {
  if (spec.factors.empty())
    return std::nullopt;
  // Products of C_p for one prime p are elementary abelian.
  std::optional<std::uint64_t> prime;
  std::uint64_t rank = 0;
  for (const Atom &a : spec.factors) {
    std::uint64_t p = 0, n = 0;
    if (a.family == Family::Cyclic && is_prime(a.params[0])) {
      p = a.params[0];
      n = 1;
    } else if (a.family == Family::ElementaryAbelian) {
      p = a.params[0];
      n = a.params[1];
    } else {
      prime.reset();
      rank = 0;
      break;
    }
    if (prime && *prime != p) {
      prime.reset();
      rank = 0;
      break;
    }
    prime = p;
    rank += n;
  }
  if (prime)
    return elementary_abelian_form(static_cast<std::int64_t>(*prime), rank);
  if (spec.factors.size() != 1)
    return std::nullopt;

  const Atom &a = spec.factors[0];
  switch (a.family) {
  case Family::GeneralizedQuaternion:
    return two_group_form(a.params[0], true);
  case Family::Dihedral:
    if (!log2_exact(a.params[0]) || a.params[0] < 8)
      return std::nullopt;
    return two_group_form(a.params[0], false);
  case Family::ExtraspecialPlus:
  case Family::ExtraspecialMinus: {
    const std::int64_t p = static_cast<std::int64_t>(a.params[0]);
    const std::uint64_t m = a.params[1];
    if (p == 2 && m == 1)
      return two_group_form(8, a.family == Family::ExtraspecialMinus);
    ClosedForm f;
    if (m == 1 && a.family == Family::ExtraspecialPlus) {
      f.tensor = q(2 * p * p + p - 2, ipow(p, 5));
      f.exterior = q(p * p * p + p * p - 1, ipow(p, 5));
      f.commutativity = q(p * p + p - 1, ipow(p, 3));
      f.tensor_below_exterior = true;
      f.exterior_below_commutativity = true;
    } else {
      f.tensor = q(2 * ipow(p, m) - 1, ipow(p, 4 * m));
    }
    return f;
  }
  default:
    return std::nullopt;
  }
}

std::vector<std::string> closed_form_targets(bool stretch) {
  std::vector<std::string> out = kClosedFormTargets;
  if (stretch)
    out.insert(out.end(), kStretchTargets.begin(), kStretchTargets.end());
  return out;
}

ReportSummary ReportDocument::summary() const {
  ReportSummary s;
  for (const CheckResult &r : rows) {
    switch (r.status) {
    case CheckStatus::Holds:
      ++s.holds;
      break;
    case CheckStatus::Fails:
      ++s.fails;
      break;
    case CheckStatus::NotApplicable:
      ++s.not_applicable;
      break;
    case CheckStatus::Skipped:
      ++s.skipped;
      break;
    }
  }
  return s;
}

std::string ReportDocument::to_csv() const {
  std::string out = csv_header() + "\n";
  for (const CheckResult &r : rows)
    out += to_csv_row(r) + "\n";
  return out;
}

std::string ReportDocument::to_text() const {
  std::string out;
  for (const CheckResult &r : rows) {
    if (r.check_name == "closed_form" || r.check_name == "schur_cover") {
      out += r.notes.substr(0, r.notes.find("; violated")) + " " +
             (r.holds() ? "PASS" : r.status == CheckStatus::Skipped ? "SKIP" : "FAIL") + "\n";
      continue;
    }
    out += std::string(to_string(r.status)) + "  " + r.check_name + "  " + r.group_name;
    if (!r.lhs.empty() || !r.rhs.empty())
      out += "  " + r.lhs + " | " + r.rhs;
    if (!r.notes.empty())
      out += "  (" + r.notes + ")";
    out += "\n";
  }
  const ReportSummary s = summary();
  out += "summary: " + std::to_string(s.holds) + " holds, " + std::to_string(s.fails) + " fails, " +
         std::to_string(s.not_applicable) + " not applicable, " + std::to_string(s.skipped) +
         " skipped\n";
  return out;
}

nlohmann::json ReportDocument::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const CheckResult &r : rows)
    rows_json.push_back(tdeg::to_json(r));
  const ReportSummary s = summary();
  return {{"tool_version", tool_version},
          {"generated_at", generated_at},
          {"rows", rows_json},
          {"summary",
           {{"holds", s.holds}, {"fails", s.fails}, {"not_applicable", s.not_applicable}, {"skipped", s.skipped}}}};
}

ReportDocument run_verification(const VerifyOptions &options) {
  std::set<std::string> suites;
  if (options.suites.empty()) {
    suites.insert(all_suites().begin(), all_suites().end());
  } else {
    for (const std::string &s : options.suites) {
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
        throw DomainError("unknown suite '" + s + "'");
      suites.insert(s);
    }
  }

  std::vector<Target> targets;
  std::map<std::string, std::size_t> index;
  auto target = [&](const std::string &spec) -> Target & {
    const std::string key = render(parse_spec(spec));
    auto [it, inserted] = index.emplace(key, targets.size());
    if (inserted)
      targets.push_back(Target{key, false, false, false, std::nullopt});
    return targets[it->second];
  };
  for (const std::string &s : sweep_catalog(options.max_order))
    target(s).sweep = true;
  if (suites.count("closed-forms")) {
    for (const std::string &s : closed_form_targets(options.stretch))
      target(s).closed = true;
    // Order-32 extraspecials already in the sweep get their closed-form rows too.
    for (const std::string &s : kStretchTargets)
      if (index.count(s))
        targets[index.at(s)].closed = true;
  }
  if (suites.count("tensor-center"))
    for (const std::string &s : kTensorCenterTargets) {
      const bool big = std::find(kStretchTargets.begin(), kStretchTargets.end(), s) != kStretchTargets.end();
      if (!big || options.stretch || index.count(s))
        target(s).tensor_center = true;
    }
  if (suites.count("schur-cover")) {
    target("C1").cover = "C1";
    target("A5").cover = "SL(2,5)";
  }

  std::vector<std::vector<CheckResult>> results(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) {
      try {
        results[i] = evaluate(targets[i], suites, options.limits);
      } catch (const std::exception &e) {
        CheckResult r = row("error", targets[i].spec);
        r.status = CheckStatus::Fails;
        r.notes = e.what();
        results[i] = {std::move(r)};
      }
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(targets.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (std::thread &t : pool)
    t.join();

  ReportDocument doc;
  doc.generated_at = utc_now();
  for (auto &rs : results)
    for (CheckResult &r : rs)
      doc.rows.push_back(std::move(r));
  return doc;
}

} // namespace tdeg
