#include "tensordeg/degrees.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tensordeg/errors.hpp"

namespace tdeg {

namespace {

using boost::multiprecision::cpp_int;

struct TwoWay {
  DegreeValue pairs;
  DegreeValue classes;
};

DegreeValue ratio(std::size_t a, std::size_t b) { return DegreeValue(cpp_int(a), cpp_int(b)); }

DegreeValue square_ratio(std::size_t count, std::size_t n) {
  return DegreeValue(cpp_int(count), cpp_int(n) * n);
}

std::vector<std::size_t> centralizer_orders(const FiniteGroup &g, const ConjugacyClasses &cc) {
  std::vector<std::size_t> out;
  out.reserve(cc.count());
  for (std::size_t i = 0; i < cc.count(); ++i)
    out.push_back(g.order() / cc.sizes[i]);
  return out;
}

TwoWay commutativity_two_way(const FiniteGroup &g) {
  const std::size_t n = g.order();
  std::size_t commuting = 0;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      commuting += g.mul(a, b) == g.mul(b, a);
  return {square_ratio(commuting, n), ratio(conjugacy_classes(g).count(), n)};
}

// Class sum (1/|G|) sum_i |C*(x_i)| / |C(x_i)| for a pair table where
// trivial(a, x) says a * x = 1.
template <class Trivial>
TwoWay pairing_two_way(const FiniteGroup &g, Trivial trivial) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      count += trivial(a, b);
  const ConjugacyClasses cc = conjugacy_classes(g);
  const std::vector<std::size_t> cent = centralizer_orders(g, cc);
  DegreeValue sum = 0;
  for (std::size_t i = 0; i < cc.count(); ++i) {
    std::size_t c = 0;
    for (Elem a = 0; a < n; ++a)
      c += trivial(a, cc.representatives[i]);
    sum += ratio(c, cent[i]);
  }
  return {square_ratio(count, n), sum / n};
}

TwoWay tensor_two_way(const TensorSquare &ts) {
  return pairing_two_way(ts.base(), [&](Elem a, Elem b) { return ts.pair(a, b) == 0; });
}

TwoWay exterior_two_way(const ExteriorSquare &es) {
  return pairing_two_way(es.tensor().base(), [&](Elem a, Elem b) { return es.pair(a, b) == 0; });
}

DegreeValue agreed(const TwoWay &v, const char *what) {
  if (v.pairs != v.classes)
    throw InternalError(std::string(what) + ": pair count " + to_string(v.pairs) +
                        " disagrees with class sum " + to_string(v.classes));
  return v.pairs;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

CheckResult make_result(std::string check, const FiniteGroup &g) {
  CheckResult r;
  r.check_name = std::move(check);
  r.group_name = g.name();
  return r;
}

std::string le(const DegreeValue &a, const DegreeValue &b) { return to_string(a) + " <= " + to_string(b); }

} // namespace

std::string to_string(const DegreeValue &v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string approximate(const DegreeValue &v, int places) {
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i)
    scale *= 10;
  const cpp_int num = numerator(v), den = denominator(v);
  const bool negative = num < 0;
  cpp_int scaled = (abs(num) * scale * 2 + den) / (den * 2);
  const cpp_int whole = scaled / scale;
  std::string frac = cpp_int(scaled % scale).str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  return (negative ? "-" : "") + whole.str() + (places > 0 ? "." + frac : "");
}

DegreeValue commutativity_degree(const FiniteGroup &g) {
  return agreed(commutativity_two_way(g), "commutativity degree");
}

DegreeValue tensor_degree(const TensorSquare &ts) { return agreed(tensor_two_way(ts), "tensor degree"); }

DegreeValue exterior_degree(const ExteriorSquare &es) {
  return agreed(exterior_two_way(es), "exterior degree");
}

const char *to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Holds:
    return "holds";
  case CheckStatus::Fails:
    return "fails";
  case CheckStatus::NotApplicable:
    return "na";
  case CheckStatus::Skipped:
    return "skipped";
  }
  return "?";
}

std::string Witness::rendered() const {
  return integer ? numerator(value).str() : to_string(value);
}

void CheckResult::require(bool ok, const std::string &what) {
  if (ok)
    return;
  status = CheckStatus::Fails;
  if (!notes.empty())
    notes += "; ";
  notes += "violated: " + what;
}

std::string csv_header() { return "check,group,status,lhs,rhs,witnesses,notes"; }

std::string to_csv_row(const CheckResult &r) {
  std::string w;
  for (const Witness &x : r.witnesses) {
    if (!w.empty())
      w += ';';
    w += x.label + "=" + x.rendered();
  }
  return csv_field(r.check_name) + "," + csv_field(r.group_name) + "," + to_string(r.status) + "," +
         csv_field(r.lhs) + "," + csv_field(r.rhs) + "," + csv_field(w) + "," + csv_field(r.notes);
}

nlohmann::json to_json(const CheckResult &r) {
  nlohmann::json w = nlohmann::json::array();
  for (const Witness &x : r.witnesses)
    w.push_back({{"label", x.label}, {"value", x.rendered()}});
  return {{"check", r.check_name}, {"group", r.group_name}, {"status", to_string(r.status)},
          {"holds", r.holds()},    {"lhs", r.lhs},          {"rhs", r.rhs},
          {"witnesses", w},        {"notes", r.notes}};
}

CheckResult check_class_formula(const TensorSquare &ts, const ExteriorSquare &es) {
  CheckResult r = make_result("class_formula", ts.base());
  const TwoWay d = commutativity_two_way(ts.base());
  const TwoWay e = exterior_two_way(es);
  const TwoWay t = tensor_two_way(ts);
  r.add("d_pairs", d.pairs);
  r.add("d_classes", d.classes);
  r.add("d_ext_pairs", e.pairs);
  r.add("d_ext_classes", e.classes);
  r.add("d_tensor_pairs", t.pairs);
  r.add("d_tensor_classes", t.classes);
  r.require(d.pairs == d.classes, "d pair count = k(G)/|G|");
  r.require(e.pairs == e.classes, "d_ext pair count = class sum");
  r.require(t.pairs == t.classes, "d_tensor pair count = class sum");
  r.lhs = to_string(t.pairs);
  r.rhs = to_string(t.classes);
  return r;
}

CheckResult check_index_bounds(const TensorSquare &ts, const ExteriorSquare &es) {
  const FiniteGroup &g = ts.base();
  CheckResult r = make_result("index_bounds", g);
  const std::size_t j2 = ts.j2().size();
  const std::size_t mn = es.multiplier().size() * ts.nabla().size();
  const ConjugacyClasses cc = conjugacy_classes(g);
  const std::vector<std::size_t> cent = centralizer_orders(g, cc);
  std::size_t worst = 1;
  for (std::size_t i = 0; i < cc.count(); ++i) {
    const std::size_t c = tensor_centralizer(ts, cc.representatives[i]).size();
    if (cent[i] % c != 0) {
      r.require(false, "C_tensor(" + g.label(cc.representatives[i]) + ") divides C(x)");
      continue;
    }
    const std::size_t index = cent[i] / c;
    worst = std::max(worst, index);
    r.require(index <= j2, "|C(x):C_tensor(x)| <= |J2| at x = " + g.label(cc.representatives[i]));
    r.require(index <= mn, "|C(x):C_tensor(x)| <= |M||nabla| at x = " + g.label(cc.representatives[i]));
  }
  r.add_count("max_index", worst);
  r.add_count("J2", j2);
  r.add_count("M_times_nabla", mn);
  r.lhs = std::to_string(worst);
  r.rhs = std::to_string(std::min(j2, mn));
  return r;
}

CheckResult check_thm23_bounds(const TensorSquare &ts, const ExteriorSquare &es) {
  const FiniteGroup &g = ts.base();
  if (g.order() == 1)
    throw DomainError("sandwich bounds need a nontrivial group");
  CheckResult r = make_result("thm23", g);
  const std::size_t n = g.order();
  const DegreeValue p = smallest_prime_divisor(g);
  const DegreeValue d = commutativity_degree(g);
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue j2 = ts.j2().size();
  const DegreeValue mn = DegreeValue(es.multiplier().size()) * ts.nabla().size();
  const DegreeValue zt = tensor_center(ts).size();
  const DegreeValue z = center(g).size();

  const DegreeValue lower = d / j2 + zt / n * (1 - 1 / j2);
  const DegreeValue lower_m = d / mn + zt / n * (1 - 1 / mn);
  const DegreeValue upper = d - (1 - 1 / p) * (z - zt) / n;
  r.add("lower", lower);
  r.add("lower_M_nabla", lower_m);
  r.add("d_tensor", dt);
  r.add("upper", upper);
  r.add("d", d);
  r.add_count("J2", ts.j2().size());
  r.add_count("Z", center(g).size());
  r.add_count("Z_tensor", tensor_center(ts).size());
  r.add_count("p", smallest_prime_divisor(g));
  r.require(lower <= dt, "lower bound " + le(lower, dt));
  r.require(lower_m <= dt, "M.nabla lower bound " + le(lower_m, dt));
  r.require(dt <= upper, "upper bound " + le(dt, upper));
  r.lhs = to_string(dt);
  r.rhs = "[" + to_string(lower) + ", " + to_string(upper) + "]";
  return r;
}

CheckResult check_abelian_bounds(const TensorSquare &ts) {
  const FiniteGroup &g = ts.base();
  if (!g.is_abelian())
    throw DomainError("abelian bounds need an abelian group");
  if (g.order() == 1)
    throw DomainError("abelian bounds need a nontrivial group");
  CheckResult r = make_result("abelian_bounds", g);
  const DegreeValue n = g.order();
  const DegreeValue p = smallest_prime_divisor(g);
  const DegreeValue t = ts.order();
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue lower = 1 / n + (n - 1) / (n * t);
  const DegreeValue upper = 1 / p + (p - 1) / (p * n);
  r.add("lower", lower);
  r.add("d_tensor", dt);
  r.add("upper", upper);
  r.add_count("T", ts.order());
  r.require(lower <= dt, "lower bound " + le(lower, dt));
  r.require(dt <= upper, "upper bound " + le(dt, upper));
  r.lhs = to_string(dt);
  r.rhs = "[" + to_string(lower) + ", " + to_string(upper) + "]";
  return r;
}

CheckResult check_chain(const TensorSquare &ts, const ExteriorSquare &es) {
  CheckResult r = make_result("chain", ts.base());
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue de = exterior_degree(es);
  const DegreeValue d = commutativity_degree(ts.base());
  r.add("d_tensor", dt);
  r.add("d_ext", de);
  r.add("d", d);
  r.add_count("tensor_ext_strict", dt < de);
  r.add_count("ext_comm_strict", de < d);
  r.require(dt <= de, "d_tensor <= d_ext: " + le(dt, de));
  r.require(de <= d, "d_ext <= d: " + le(de, d));
  r.lhs = to_string(dt) + " " + (dt < de ? "<" : "=") + " " + to_string(de);
  r.rhs = to_string(d);
  return r;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup &g) {
  const std::size_t n = g.order();
  std::map<std::vector<Elem>, Subgroup> found;
  auto add = [&](const Subgroup &s) { return found.emplace(s.members(), s).second; };
  add(Subgroup::trivial(n));
  std::vector<Subgroup> minimal;
  for (Elem x = 0; x < n; ++x) {
    const Elem gen[] = {x};
    const Subgroup s = normal_closure(g, gen);
    if (add(s))
      minimal.push_back(s);
  }
  // Every normal subgroup is a product of normal closures of its elements.
  std::vector<Subgroup> frontier = minimal;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup &a : frontier)
      for (const Subgroup &b : minimal) {
        if (b.is_subset_of(a))
          continue;
        std::vector<Elem> gens = a.members();
        const std::vector<Elem> bm = b.members();
        gens.insert(gens.end(), bm.begin(), bm.end());
        const Subgroup j = generated_subgroup(g, gens);
        if (add(j))
          next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto &[members, s] : found)
    out.push_back(s);
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup &a, const Subgroup &b) { return a.size() < b.size(); });
  return out;
}

std::vector<CheckResult> check_quotient_monotonicity(const TensorSquare &ts,
                                                     const EnumerationLimits &limits,
                                                     std::size_t full_lattice_order) {
  const FiniteGroup &g = ts.base();
  const std::size_t n = g.order();
  std::vector<Subgroup> candidates;
  if (n <= full_lattice_order) {
    candidates = normal_subgroups(g);
  } else {
    std::set<std::vector<Elem>> seen;
    auto add = [&](const Subgroup &s) {
      if (seen.insert(s.members()).second)
        candidates.push_back(s);
    };
    for (Elem x = 0; x < n; ++x) {
      const Elem gen[] = {x};
      add(normal_closure(g, gen));
    }
    add(derived_subgroup(g));
    add(center(g));
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Subgroup &a, const Subgroup &b) { return a.size() < b.size(); });
  }

  const DegreeValue dg = tensor_degree(ts);
  const Subgroup zt = tensor_center(ts);
  const std::vector<std::uint64_t> g_inv =
      ts.is_abelian() ? ts.abelian_invariants() : std::vector<std::uint64_t>{};

  struct QuotientData {
    DegreeValue degree;
    std::size_t t_order;
    bool t_abelian;
    std::vector<std::uint64_t> t_invariants;
  };
  // Abelian quotients are determined by their invariants; reuse their data.
  std::map<std::vector<std::uint64_t>, QuotientData> abelian_cache;

  std::vector<CheckResult> rows;
  for (const Subgroup &nsub : candidates) {
    CheckResult r = make_result("quotient", g);
    const std::vector<Elem> nm = nsub.members();
    std::string label;
    for (std::size_t i = 0; i < nm.size() && i < 8; ++i)
      label += (i ? " " : "") + g.label(nm[i]);
    if (nm.size() > 8)
      label += " ...";
    r.notes = "N = {" + label + "}";
    r.add_count("N_order", nsub.size());

    QuotientData q;
    try {
      if (nsub.size() == 1) {
        q = {dg, ts.order(), ts.is_abelian(), g_inv};
      } else {
        const FiniteGroup h = quotient(g, nsub).group;
        std::optional<std::vector<std::uint64_t>> key;
        if (h.is_abelian())
          key = abelian_invariants(h);
        if (key && abelian_cache.count(*key)) {
          q = abelian_cache.at(*key);
        } else {
          const TensorSquare th = tensor_square(h, limits);
          q = {tensor_degree(th), th.order(), th.is_abelian(),
               th.is_abelian() ? th.abelian_invariants() : std::vector<std::uint64_t>{}};
          if (key)
            abelian_cache.emplace(*key, q);
        }
      }
    } catch (const ResourceError &e) {
      r.status = CheckStatus::Skipped;
      r.notes += "; quotient tensor square over limits after " + std::to_string(e.progress()) +
                 " cosets";
      rows.push_back(std::move(r));
      continue;
    }

    const bool inside = nsub.is_subset_of(zt);
    const bool equal = dg == q.degree;
    r.add("d_tensor_G", dg);
    r.add("d_tensor_quotient", q.degree);
    r.add_count("N_in_Z_tensor", inside);
    r.add_count("T_order", ts.order());
    r.add_count("T_quotient_order", q.t_order);
    r.require(dg <= q.degree, "monotonicity " + le(dg, q.degree));
    r.require(equal == inside, "equality iff N in Z_tensor");
    r.require(equal == (ts.order() == q.t_order), "equality iff |T(G)| = |T(G/N)|");
    if (equal && ts.is_abelian() && q.t_abelian)
      r.require(g_inv == q.t_invariants, "equal tensor squares have equal invariants");
    r.lhs = to_string(dg);
    r.rhs = to_string(q.degree);
    rows.push_back(std::move(r));
  }
  return rows;
}

CheckResult check_sharpened_upper(const TensorSquare &ts) {
  const FiniteGroup &g = ts.base();
  CheckResult r = make_result("sharpened_upper", g);
  if (g.is_abelian()) {
    r.status = CheckStatus::NotApplicable;
    r.notes = "abelian group";
    return r;
  }
  const Subgroup z = center(g);
  Elem witness = 0;
  bool found = false;
  for (Elem x = 0; x < g.order() && !found; ++x)
    if (!z.contains(x) && tensor_centralizer(ts, x).size() != centralizer(g, x).size()) {
      witness = x;
      found = true;
    }
  if (!found) {
    r.status = CheckStatus::NotApplicable;
    r.notes = "hypothesis void";
    return r;
  }
  const DegreeValue n = g.order();
  const DegreeValue p = smallest_prime_divisor(g);
  const DegreeValue d = commutativity_degree(g);
  const DegreeValue dt = tensor_degree(ts);
  const std::size_t zt = tensor_center(ts).size();
  const DegreeValue zs = z.size();
  const DegreeValue bound = d - (1 - 1 / p) * (zs - zt - 1) / n;
  r.notes = "x = " + g.label(witness);
  r.add("d_tensor", dt);
  r.add("bound", bound);
  r.add("d", d);
  r.add_count("Z", z.size());
  r.add_count("Z_tensor", zt);
  r.require(dt <= bound, "sharpened bound " + le(dt, bound));
  if (zt == 1) {
    const DegreeValue trivial_bound = d - (1 - 1 / p) * zs / n;
    r.add("bound_trivial_tensor_center", trivial_bound);
    r.require(dt <= trivial_bound, "trivial tensor center bound " + le(dt, trivial_bound));
  }
  r.lhs = to_string(dt);
  r.rhs = to_string(bound);
  return r;
}

CheckResult check_thm35(const TensorSquare &ts) {
  const FiniteGroup &g = ts.base();
  CheckResult r = make_result("thm35", g);
  const std::size_t zt = tensor_center(ts).size();
  if (g.is_abelian() || zt != 1) {
    r.status = CheckStatus::NotApplicable;
    r.notes = g.is_abelian() ? "abelian group" : "tensor center nontrivial";
    return r;
  }
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue bound = DegreeValue(1) / smallest_prime_divisor(g);
  r.add("d_tensor", dt);
  r.add("one_over_p", bound);
  r.require(dt <= bound, le(dt, bound));
  r.lhs = to_string(dt);
  r.rhs = to_string(bound);
  return r;
}

UnidegreeClass classify_unidegree(const TensorSquare &ts, const ExteriorSquare &es) {
  const FiniteGroup &g = ts.base();
  const DegreeValue d = commutativity_degree(g);
  const std::vector<Elem> z = center(g).members();
  return {tensor_degree(ts) == d, exterior_degree(es) == d, tensor_center(ts).members() == z,
          exterior_center(es).members() == z};
}

CheckResult check_unidegree(const TensorSquare &ts, const ExteriorSquare &es) {
  CheckResult r = make_result("unidegree", ts.base());
  const UnidegreeClass c = classify_unidegree(ts, es);
  r.add_count("left", c.left);
  r.add_count("right", c.right);
  r.add_count("Z_eq_Z_tensor", c.center_equals_tensor_center);
  r.add_count("unicentral", c.unicentral);
  r.require(!c.left || c.center_equals_tensor_center, "left unidegree implies Z = Z_tensor");
  r.require(!c.left || c.right, "left unidegree implies right unidegree");
  r.require(!(c.left && c.right) || c.unicentral, "left and right unidegree implies unicentral");
  r.require(!c.right || c.unicentral, "right unidegree implies unicentral");
  r.lhs = std::string(c.left ? "left" : "") + (c.left && c.right ? "+" : "") + (c.right ? "right" : "");
  r.rhs = c.unicentral ? "unicentral" : "";
  return r;
}

CheckResult check_perfect_schur_cover(const TensorSquare &ts, const ExteriorSquare &es,
                                      const FiniteGroup &cover) {
  const FiniteGroup &g = ts.base();
  if (derived_subgroup(g).size() != g.order())
    throw DomainError(g.name() + " is not perfect");
  CheckResult r = make_result("schur_cover", g);
  r.notes = "cover " + cover.name();
  const DegreeValue dt = tensor_degree(ts);
  const DegreeValue dc = commutativity_degree(cover);
  const std::size_t n = g.order();
  const std::size_t m = es.multiplier().size();
  const cpp_int trivial_pairs = numerator(DegreeValue(dt * n * n));
  const cpp_int commuting = numerator(DegreeValue(dc * cover.order() * cover.order()));
  r.add("d_tensor", dt);
  r.add("d_cover", dc);
  r.add_count("M", m);
  r.add_count("cover_order", cover.order());
  r.add("T_over_G", ratio(ts.order(), n));
  r.add("tensor_trivial_pairs", DegreeValue(trivial_pairs));
  r.add("cover_commuting_pairs", DegreeValue(commuting));
  r.add("trivial_pairs_times_M", DegreeValue(trivial_pairs * m));
  r.add("trivial_pairs_times_M_squared", DegreeValue(trivial_pairs * m * m));
  r.require(dt == dc, "d_tensor(G) = d(G*): " + to_string(dt) + " vs " + to_string(dc));
  r.lhs = to_string(dt);
  r.rhs = to_string(dc);
  return r;
}

CheckResult check_calculus_rules(const TensorSquare &ts) {
  const FiniteGroup &g = ts.base();
  CheckResult r = make_result("calculus_rules", g);
  const std::size_t n = g.order();
  auto P = [&](Elem a, Elem b) { return ts.pair(a, b); };
  auto lc = [&](Elem a, Elem b) { return g.left_conj(a, b); };
  auto M = [&](Elem a, Elem b) { return ts.mul(a, b); };
  auto I = [&](Elem a) { return ts.inv(a); };
  std::array<std::size_t, 6> failures{};
  std::array<std::string, 6> first;
  auto fail = [&](int rule, Elem x, Elem h, Elem y = 0, Elem k = 0) {
    if (failures[rule]++ == 0)
      first[rule] = "(" + g.label(x) + "," + g.label(h) + "," + g.label(y) + "," + g.label(k) + ")";
  };

  for (Elem x = 0; x < n; ++x)
    for (Elem h = 0; h < n; ++h) {
      const Elem t = P(x, h);
      const Elem ti = I(t);
      // ^x(x^-1 (x) h) = (x (x) h)^-1 = ^h(x (x) h^-1)
      if (P(g.inv(x), lc(x, h)) != ti || P(lc(h, x), g.inv(h)) != ti)
        fail(0, x, h);
      const Elem xh = g.mul(x, h), hx = g.mul(h, x);
      const Elem c = g.commutator(x, h);
      const Elem xconj = g.mul(x, lc(h, g.inv(x)));
      for (Elem y = 0; y < n; ++y) {
        // y (x) (^x h h^-1) = ^y(x (x) h) (x (x) h)^-1
        if (P(y, g.mul(lc(x, h), g.inv(h))) != M(P(lc(y, x), lc(y, h)), ti))
          fail(2, x, h, y);
        // (x ^h x^-1) (x) y = (x (x) h) ^y((x (x) h)^-1)
        if (P(xconj, y) != M(t, I(P(lc(y, x), lc(y, h)))))
          fail(3, x, h, y);
        for (Elem k = 0; k < n; ++k) {
          const Elem s = P(y, k);
          // ^{xh}(y (x) k) (x (x) h) = (x (x) h) ^{hx}(y (x) k)
          if (M(P(lc(xh, y), lc(xh, k)), t) != M(t, P(lc(hx, y), lc(hx, k))))
            fail(1, x, h, y, k);
          // ^{(x (x) h)}(y (x) k) = ^{[x,h]}(y (x) k)
          const Elem conj = M(M(t, s), ti);
          if (conj != P(lc(c, y), lc(c, k)))
            fail(4, x, h, y, k);
          // [x (x) h, y (x) k] = (x ^h x^-1) (x) (^y k k^-1)
          if (M(conj, I(s)) != P(xconj, g.mul(lc(y, k), g.inv(k))))
            fail(5, x, h, y, k);
        }
      }
    }
  for (int i = 0; i < 6; ++i) {
    r.add_count("rule" + std::to_string(i + 1) + "_failures", failures[i]);
    r.require(failures[i] == 0, "rule " + std::to_string(i + 1) + " at " + first[i]);
  }
  r.lhs = std::to_string(n) + "^4 tuples";
  return r;
}

} // namespace tdeg
