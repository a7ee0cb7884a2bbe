#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"

using namespace tdeg;
using fixtures::es;
using fixtures::ts;

namespace {

DegreeValue q(long n, long d) { return DegreeValue(n) / DegreeValue(d); }

const Witness *find(const CheckResult &r, const std::string &label) {
  for (const Witness &w : r.witnesses)
    if (w.label == label)
      return &w;
  return nullptr;
}

DegreeValue witness(const CheckResult &r, const std::string &label) {
  const Witness *w = find(r, label);
  if (!w) {
    ADD_FAILURE() << r.check_name << " has no witness " << label;
    return DegreeValue(-1);
  }
  return w->value;
}

/// Pairs with trivial image, counted straight from a pairing.
template <class Pair> DegreeValue pair_fraction(std::size_t n, Pair pair) {
  std::size_t k = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      k += pair(x, y) == 0;
  return DegreeValue(k) / DegreeValue(n * n);
}

} // namespace

TEST(DegreeValue, Rendering) {
  EXPECT_EQ(to_string(q(1, 4)), "1/4");
  EXPECT_EQ(to_string(DegreeValue(1)), "1/1");
  EXPECT_EQ(to_string(q(10, 16)), "5/8");
  EXPECT_EQ(approximate(q(1, 3)), "0.333333");
  EXPECT_EQ(approximate(q(2, 3)), "0.666667");
}

TEST(Commutativity, Examples) {
  EXPECT_EQ(commutativity_degree(make("C2xC4")), 1);
  EXPECT_EQ(commutativity_degree(make("Q8")), q(5, 8));
  for (std::uint64_t p : {3, 5}) {
    const auto P = static_cast<long>(p);
    EXPECT_EQ(commutativity_degree(make("ESp(" + std::to_string(p) + ",1)")),
              q(P * P + P - 1, P * P * P));
  }
}

TEST(Commutativity, MatchesCommutingPairOracle) {
  for (const std::string &spec : sweep_catalog(32)) {
    const FiniteGroup g = make(spec);
    EXPECT_EQ(commutativity_degree(g),
              DegreeValue(oracle::commuting_pairs(g)) / DegreeValue(g.order() * g.order()))
        << spec;
    EXPECT_EQ(commutativity_degree(g),
              DegreeValue(oracle::conjugation_orbits(g).size()) / DegreeValue(g.order()))
        << spec;
  }
}

TEST(TensorDegree, Examples) {
  EXPECT_EQ(tensor_degree(ts("C1")), 1);
  EXPECT_EQ(tensor_degree(ts("Q8")), q(1, 4));
  EXPECT_EQ(tensor_degree(ts("D8")), q(5, 16));
  EXPECT_EQ(tensor_degree(ts("C2^3")), q(15, 64));
}

TEST(TensorDegree, TrivialOnlyForTrivialGroup) {
  for (const std::string &spec : fixtures::quick_catalog())
    EXPECT_EQ(tensor_degree(ts(spec)) == 1, spec == "C1") << spec;
}

TEST(ExteriorDegree, Examples) {
  for (const char *spec : {"C1", "C2", "C5", "C12"})
    EXPECT_EQ(exterior_degree(es(spec)), 1) << spec;
  EXPECT_EQ(exterior_degree(es("ESp(3,1)")), q(35, 243));
  EXPECT_EQ(exterior_degree(es("C2^2")), q(5, 8));
}

TEST(Degrees, IndependentPairCounts) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const TensorSquare &t = ts(spec);
    const ExteriorSquare &e = es(spec);
    const std::size_t n = t.base().order();
    EXPECT_EQ(tensor_degree(t), pair_fraction(n, [&](Elem x, Elem y) { return t.pair(x, y); })) << spec;
    EXPECT_EQ(exterior_degree(e), pair_fraction(n, [&](Elem x, Elem y) { return e.pair(x, y); })) << spec;
  }
}

TEST(Degrees, ChainAndRangeOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const DegreeValue dt = tensor_degree(ts(spec)), de = exterior_degree(es(spec)),
                      d = commutativity_degree(make(spec));
    EXPECT_GT(dt, 0);
    EXPECT_LE(dt, de) << spec;
    EXPECT_LE(de, d) << spec;
    EXPECT_LE(d, 1);
  }
}

TEST(ClassFormula, HoldsOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog())
    EXPECT_TRUE(check_class_formula(ts(spec), es(spec)).holds()) << spec;
}

TEST(Thm23, CyclicOfOrderTwoIsTight) {
  const CheckResult r = check_thm23_bounds(ts("C2"), es("C2"));
  EXPECT_TRUE(r.holds()) << r.notes;
  EXPECT_EQ(witness(r, "lower"), q(3, 4));
  EXPECT_EQ(witness(r, "d_tensor"), q(3, 4));
  EXPECT_EQ(witness(r, "upper"), q(3, 4));
}

TEST(Thm23, QuaternionWithinBounds) {
  const CheckResult r = check_thm23_bounds(ts("Q8"), es("Q8"));
  EXPECT_TRUE(r.holds());
  EXPECT_LE(witness(r, "lower"), q(1, 4));
  EXPECT_GE(witness(r, "upper"), q(1, 4));
}

TEST(Thm23, TrivialGroupIsDomainError) {
  EXPECT_THROW(check_thm23_bounds(ts("C1"), es("C1")), DomainError);
}

TEST(Thm23, HoldsOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog())
    if (spec != "C1")
      EXPECT_TRUE(check_thm23_bounds(ts(spec), es(spec)).holds()) << spec;
}

TEST(AbelianBounds, Examples) {
  const CheckResult c2 = check_abelian_bounds(ts("C2"));
  EXPECT_TRUE(c2.holds());
  EXPECT_EQ(witness(c2, "lower"), q(3, 4));
  EXPECT_EQ(witness(c2, "upper"), q(3, 4));
  const CheckResult c3 = check_abelian_bounds(ts("C3"));
  EXPECT_EQ(witness(c3, "lower"), q(5, 9));
  EXPECT_EQ(witness(c3, "d_tensor"), q(5, 9));
  EXPECT_EQ(witness(c3, "upper"), q(5, 9));
  EXPECT_TRUE(check_abelian_bounds(ts("C2xC4")).holds());
  EXPECT_THROW(check_abelian_bounds(ts("S3")), DomainError);
  EXPECT_THROW(check_abelian_bounds(ts("C1")), DomainError);
}

TEST(Chain, Examples) {
  const CheckResult e1 = check_chain(ts("ESp(3,1)"), es("ESp(3,1)"));
  EXPECT_TRUE(e1.holds());
  EXPECT_EQ(witness(e1, "d_tensor"), q(19, 243));
  EXPECT_EQ(witness(e1, "d_ext"), q(35, 243));
  EXPECT_EQ(witness(e1, "d"), q(99, 243));
  const CheckResult q16 = check_chain(ts("Q16"), es("Q16"));
  EXPECT_EQ(witness(q16, "d_tensor"), q(1, 4));
  EXPECT_EQ(witness(q16, "d_ext"), q(7, 16));
  EXPECT_EQ(witness(q16, "d"), q(7, 16));
  EXPECT_TRUE(check_chain(ts("C1"), es("C1")).holds());
}

TEST(Quotients, QuaternionModCenter) {
  const std::vector<CheckResult> rows = check_quotient_monotonicity(ts("Q8"));
  // Q8 has six normal subgroups: 1, Z, three of order 4, Q8.
  ASSERT_EQ(rows.size(), 6u);
  bool saw_center = false;
  for (const CheckResult &r : rows) {
    EXPECT_TRUE(r.holds()) << r.notes;
    if (witness(r, "N_order") == 2) {
      saw_center = true;
      EXPECT_EQ(witness(r, "d_tensor_G"), q(1, 4));
      EXPECT_EQ(witness(r, "d_tensor_quotient"), q(7, 16));
    }
    if (witness(r, "N_order") == 1)
      EXPECT_EQ(witness(r, "d_tensor_G"), witness(r, "d_tensor_quotient"));
  }
  EXPECT_TRUE(saw_center);
}

TEST(Quotients, ExponentNineExtraspecialModDerived) {
  const TensorSquare &t = ts("ESm(3,1)");
  const std::vector<CheckResult> rows = check_quotient_monotonicity(t);
  bool saw = false;
  for (const CheckResult &r : rows) {
    EXPECT_TRUE(r.holds()) << r.notes;
    if (witness(r, "N_order") == 3) {
      saw = true;
      EXPECT_EQ(witness(r, "d_tensor_G"), witness(r, "d_tensor_quotient"));
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Quotients, HoldOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog())
    for (const CheckResult &r : check_quotient_monotonicity(ts(spec)))
      EXPECT_NE(r.status, CheckStatus::Fails) << spec << ": " << r.notes;
}

TEST(Quotients, TooLargeQuotientIsSkipped) {
  EnumerationLimits tiny;
  tiny.max_cosets = 40;
  bool skipped = false;
  for (const CheckResult &r : check_quotient_monotonicity(ts("D16"), tiny)) {
    EXPECT_NE(r.status, CheckStatus::Fails);
    skipped |= r.status == CheckStatus::Skipped;
  }
  EXPECT_TRUE(skipped);
}

TEST(NormalSubgroups, MatchBruteForce) {
  // Every subgroup of these groups is generated by three elements (order 8)
  // or by two (the rest), so closing all such tuples finds them all.
  for (const char *spec : {"Q8", "D8", "C2^3", "S4", "A4", "D12", "ESp(3,1)"}) {
    const FiniteGroup g = make(spec);
    const Elem n = static_cast<Elem>(g.order());
    const Elem third = n <= 8 ? n : 1;
    std::set<std::set<Elem>> want;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a; b < n; ++b)
        for (Elem c = 0; c < third; ++c) {
          const std::set<Elem> s = oracle::closure(g, {a, b, c});
          bool normal = true;
          for (Elem x : s)
            for (Elem y = 0; y < n && normal; ++y)
              normal = s.count(g.mul(g.mul(g.inv(y), x), y)) > 0;
          if (normal)
            want.insert(s);
        }
    std::set<std::set<Elem>> got;
    for (const Subgroup &sub : normal_subgroups(g)) {
      const std::vector<Elem> m = sub.members();
      got.insert(std::set<Elem>(m.begin(), m.end()));
    }
    EXPECT_EQ(got, want) << spec;
  }
}

TEST(Sharpened, Examples) {
  const CheckResult q8 = check_sharpened_upper(ts("Q8"));
  EXPECT_TRUE(q8.holds());
  EXPECT_EQ(witness(q8, "bound_trivial_tensor_center"), q(1, 2));
  const CheckResult d8 = check_sharpened_upper(ts("D8"));
  EXPECT_TRUE(d8.holds());
  EXPECT_EQ(witness(d8, "bound_trivial_tensor_center"), q(1, 2));
  EXPECT_EQ(check_sharpened_upper(ts("C4")).status, CheckStatus::NotApplicable);
}

TEST(Thm35, Examples) {
  const CheckResult q8 = check_thm35(ts("Q8"));
  EXPECT_TRUE(q8.holds());
  EXPECT_EQ(witness(q8, "one_over_p"), q(1, 2));
  EXPECT_TRUE(check_thm35(ts("D8")).holds());
  const CheckResult e1 = check_thm35(ts("ESp(3,1)"));
  EXPECT_TRUE(e1.holds());
  EXPECT_EQ(witness(e1, "one_over_p"), q(1, 3));
  EXPECT_EQ(check_thm35(ts("ESm(3,1)")).status, CheckStatus::NotApplicable);
  EXPECT_EQ(check_thm35(ts("C6")).status, CheckStatus::NotApplicable);
}

TEST(SharpenedAndThm35, HoldOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    EXPECT_NE(check_sharpened_upper(ts(spec)).status, CheckStatus::Fails) << spec;
    EXPECT_NE(check_thm35(ts(spec)).status, CheckStatus::Fails) << spec;
  }
}

TEST(Unidegree, Examples) {
  const UnidegreeClass c = classify_unidegree(ts("C5"), es("C5"));
  EXPECT_TRUE(c.right);
  const UnidegreeClass q8 = classify_unidegree(ts("Q8"), es("Q8"));
  EXPECT_TRUE(q8.right);
  EXPECT_FALSE(q8.left);
  EXPECT_TRUE(q8.unicentral);
  const UnidegreeClass one = classify_unidegree(ts("C1"), es("C1"));
  EXPECT_TRUE(one.left);
  EXPECT_TRUE(one.right);
}

TEST(Unidegree, ImplicationsOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    EXPECT_TRUE(check_unidegree(ts(spec), es(spec)).holds()) << spec;
    const UnidegreeClass c = classify_unidegree(ts(spec), es(spec));
    if (c.left) {
      EXPECT_TRUE(c.right) << spec;
      EXPECT_TRUE(c.center_equals_tensor_center) << spec;
    }
  }
}

TEST(SchurCover, TrivialGroup) {
  const CheckResult r = check_perfect_schur_cover(ts("C1"), es("C1"), make("C1"));
  EXPECT_TRUE(r.holds());
}

TEST(SchurCover, NonPerfectIsDomainError) {
  EXPECT_THROW(check_perfect_schur_cover(ts("S3"), es("S3"), make("S3")), DomainError);
}

TEST(CalculusRules, ReportedPerRule) {
  const CheckResult r = check_calculus_rules(ts("S3"));
  EXPECT_TRUE(r.holds());
  for (int i = 1; i <= 6; ++i)
    EXPECT_EQ(witness(r, "rule" + std::to_string(i) + "_failures"), 0);
}

TEST(CheckResult, RequireTurnsIntoFails) {
  CheckResult r;
  r.require(true, "fine");
  EXPECT_TRUE(r.holds());
  r.require(false, "a < b");
  EXPECT_EQ(r.status, CheckStatus::Fails);
  EXPECT_NE(r.notes.find("a < b"), std::string::npos);
}

TEST(CheckResult, CsvAndJsonShape) {
  EXPECT_EQ(csv_header(), "check,group,status,lhs,rhs,witnesses,notes");
  CheckResult r;
  r.check_name = "chain";
  r.group_name = "Q8";
  r.add("d_tensor", q(1, 4));
  r.add_count("order", 8);
  r.notes = "has, comma and \"quote\"";
  const std::string row = to_csv_row(r);
  EXPECT_EQ(row.rfind("chain,Q8,holds,", 0), 0u) << row;
  EXPECT_NE(row.find("d_tensor=1/4;order=8"), std::string::npos) << row;
  EXPECT_NE(row.find("\"has, comma and \"\"quote\"\"\""), std::string::npos) << row;
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["check"], "chain");
  EXPECT_EQ(j["group"], "Q8");
  EXPECT_EQ(j["status"], "holds");
  EXPECT_TRUE(j["holds"].get<bool>());
  ASSERT_EQ(j["witnesses"].size(), 2u);
  EXPECT_EQ(j["witnesses"][0]["label"], "d_tensor");
  EXPECT_EQ(j["witnesses"][0]["value"], "1/4");
  EXPECT_EQ(j["witnesses"][1]["value"], "8");
  for (const char *k : {"check", "group", "status", "holds", "lhs", "rhs", "witnesses", "notes"})
    EXPECT_TRUE(j.contains(k)) << k;
}
