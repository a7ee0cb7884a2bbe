#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tensordeg/degrees.hpp"
#include "tensordeg/errors.hpp"
#include "tensordeg/tensor.hpp"

using namespace tdeg;
using fixtures::es;
using fixtures::ts;

namespace {

/// a of order |G|/2 generating the cyclic maximal subgroup, b outside it.
std::pair<Elem, Elem> cyclic_pair(const FiniteGroup &g) {
  Elem a = 0, b = 0;
  for (Elem x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order() / 2) {
      a = x;
      break;
    }
  const std::vector<Elem> gen{a};
  const Subgroup ca = generated_subgroup(g, gen);
  for (Elem x = 0; x < g.order(); ++x)
    if (!ca.contains(x)) {
      b = x;
      break;
    }
  return {a, b};
}

Elem power(const FiniteGroup &g, Elem x, std::size_t k) {
  Elem r = 0;
  while (k--)
    r = g.mul(r, x);
  return r;
}

} // namespace

TEST(PresentTensorSquare, Counts) {
  const Presentation c1 = present_tensor_square(make("C1"));
  EXPECT_EQ(c1.generator_count(), 1u);
  EXPECT_EQ(c1.relators().size(), 2u);
  const Presentation c2 = present_tensor_square(make("C2"));
  EXPECT_EQ(c2.generator_count(), 4u);
  EXPECT_EQ(c2.relators().size(), 16u);
  const Presentation e1 = present_tensor_square(make("ESp(3,1)"));
  EXPECT_EQ(e1.generator_count(), 729u);
  EXPECT_EQ(e1.relators().size(), 39366u);
}

TEST(PresentTensorSquare, FullPresentationEnumeratesToSameOrder) {
  for (const char *spec : {"C1", "C2", "C3", "S3", "Q8", "D8", "C2^2"}) {
    const CosetTable ct = coset_enumerate(present_tensor_square(make(spec)));
    EXPECT_EQ(ct.coset_count, ts(spec).order()) << spec;
  }
}

TEST(TensorSquare, TrivialGroup) {
  EXPECT_EQ(ts("C1").order(), 1u);
}

TEST(TensorSquare, CyclicOfOrderTwo) {
  const TensorSquare &t = ts("C2");
  ASSERT_EQ(t.order(), 2u);
  EXPECT_NE(t.pair(1, 1), 0u);
  EXPECT_EQ(t.realized().element_order(tensor_pair(t, 1, 1)), 2u);
}

TEST(TensorSquare, ExtraspecialOfOrder27) {
  const TensorSquare &t = ts("ESp(3,1)");
  ASSERT_EQ(t.order(), 729u);
  ASSERT_TRUE(t.is_abelian());
  EXPECT_EQ(t.abelian_invariants(), (std::vector<std::uint64_t>(6, 3)));
}

TEST(TensorSquare, IdentityPairsAreTrivial) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const TensorSquare &t = ts(spec);
    for (Elem y = 0; y < t.base().order(); ++y) {
      ASSERT_EQ(t.pair(0, y), 0u) << spec;
      ASSERT_EQ(t.pair(y, 0), 0u) << spec;
    }
  }
}

TEST(TensorSquare, KappaOnQuaternionGenerators) {
  const TensorSquare &t = ts("Q8");
  const FiniteGroup &g = t.base();
  const auto [a, b] = cyclic_pair(g);
  EXPECT_EQ(t.kappa(t.pair(a, b)), g.commutator(a, b));
  EXPECT_EQ(g.commutator(a, b), g.mul(a, a));
}

TEST(TensorSquare, AbelianGroupsMatchBilinearOracle) {
  for (const std::string &spec : tdeg::sweep_catalog(16)) {
    const FiniteGroup g = make(spec);
    if (!g.is_abelian())
      continue;
    const TensorSquare &t = ts(spec);
    const std::vector<std::uint64_t> m = abelian_invariants(g);
    std::size_t want = 1;
    for (std::uint64_t q : oracle::abelian_tensor_invariants(m))
      want *= q;
    EXPECT_EQ(t.order(), want) << spec;
    ASSERT_TRUE(t.is_abelian()) << spec;
    EXPECT_EQ(t.abelian_invariants(), oracle::abelian_tensor_invariants(m)) << spec;
    EXPECT_EQ(tensor_degree(t), oracle::abelian_tensor_degree(m)) << spec;
  }
}

TEST(TensorSquare, AbelianizationOracle) {
  // When T is abelian the Smith form of the abelianized presentation is T.
  for (const char *spec : {"C2", "C3", "C4", "C2^2", "S3", "Q8", "D8", "C2xC4", "D10"}) {
    const TensorSquare &t = ts(spec);
    const auto ab = oracle::abelianized_tensor_square(make(spec));
    ASSERT_TRUE(ab.has_value()) << spec;
    ASSERT_TRUE(t.is_abelian()) << spec;
    EXPECT_EQ(t.abelian_invariants(), *ab) << spec;
  }
}

TEST(TensorSquare, FrozenSmallValues) {
  // Orders cross-checked against the abelianization oracle above.
  EXPECT_EQ(ts("Q8").abelian_invariants(), (std::vector<std::uint64_t>{2, 2, 4, 4}));
  EXPECT_EQ(ts("D8").abelian_invariants(), (std::vector<std::uint64_t>{2, 2, 2, 4}));
  EXPECT_EQ(ts("S3").abelian_invariants(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(TensorSquare, StructuralInvariants) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const TensorSquare &t = ts(spec);
    const FiniteGroup &g = t.base();
    const std::size_t n = g.order();

    // kappa(x (x) y) = [x, y], kappa a homomorphism onto G'.
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        ASSERT_EQ(t.kappa(t.pair(x, y)), g.commutator(x, y)) << spec;
    Subgroup image(n);
    for (Elem a = 0; a < t.order(); ++a) {
      image.insert(t.kappa(a));
      for (Elem b = 0; b < t.order(); b += 3)
        ASSERT_EQ(t.kappa(t.mul(a, b)), g.mul(t.kappa(a), t.kappa(b))) << spec;
    }
    EXPECT_EQ(image, derived_subgroup(g)) << spec;

    // Pairs generate T.
    EXPECT_EQ(t.realized().generated_by(t.pairing()).size(), t.order()) << spec;

    // J2 = ker kappa, central; nabla inside J2; |T| = |J2| |G'|.
    for (Elem a = 0; a < t.order(); ++a)
      ASSERT_EQ(t.j2().contains(a), t.kappa(a) == 0) << spec;
    for (Elem j : t.j2().members())
      for (Elem a = 0; a < t.order(); ++a)
        ASSERT_EQ(t.mul(j, a), t.mul(a, j)) << spec;
    EXPECT_TRUE(t.nabla().is_subset_of(t.j2())) << spec;
    EXPECT_EQ(t.order(), t.j2().size() * derived_subgroup(g).size()) << spec;
    std::vector<Elem> d;
    for (Elem x = 0; x < n; ++x)
      d.push_back(t.pair(x, x));
    EXPECT_EQ(t.realized().generated_by(d), t.nabla()) << spec;
  }
}

TEST(ExteriorSquare, StructuralInvariants) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const TensorSquare &t = ts(spec);
    const ExteriorSquare &e = es(spec);
    const FiniteGroup &g = t.base();
    const std::size_t n = g.order();
    EXPECT_EQ(e.order() * t.nabla().size(), t.order()) << spec;
    EXPECT_EQ(e.multiplier().size() * derived_subgroup(g).size(), e.order()) << spec;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        ASSERT_EQ(e.pair(x, y), e.project(t.pair(x, y)));
        ASSERT_EQ(e.kappa_prime(e.pair(x, y)), g.commutator(x, y));
      }
    // Projection is constant exactly on cosets of nabla.
    for (Elem a = 0; a < t.order(); ++a)
      for (Elem v : t.nabla().members())
        ASSERT_EQ(e.project(t.mul(a, v)), e.project(a)) << spec;
    if (e.order() <= 512) {
      const FiniteGroup te = e.group();
      for (Elem a = 0; a < e.order(); ++a)
        for (Elem b = 0; b < e.order(); ++b)
          ASSERT_EQ(e.kappa_prime(te.mul(a, b)), g.mul(e.kappa_prime(a), e.kappa_prime(b))) << spec;
    }
  }
}

TEST(ExteriorSquare, CyclicGroupsCollapse) {
  for (const char *spec : {"C2", "C3", "C4", "C5", "C6", "C7", "C8"}) {
    const ExteriorSquare &e = es(spec);
    EXPECT_EQ(e.order(), 1u) << spec;
    EXPECT_EQ(e.multiplier().size(), 1u) << spec;
    EXPECT_EQ(exterior_center(e).size(), make(spec).order()) << spec;
  }
}

TEST(ExteriorSquare, Multipliers) {
  EXPECT_EQ(es("C2^2").multiplier().size(), 2u);
  EXPECT_EQ(es("C2^2").order(), 2u);
  EXPECT_EQ(es("Q8").multiplier().size(), 1u);
  EXPECT_EQ(es("D8").multiplier().size(), 2u);
  EXPECT_EQ(es("C2^3").multiplier().size(), 8u);
  EXPECT_EQ(es("A4").multiplier().size(), 2u);
  EXPECT_EQ(es("SL(2,3)").multiplier().size(), 1u);
  const ExteriorSquare &e1 = es("ESp(3,1)");
  EXPECT_EQ(e1.multiplier().size(), e1.order() / 3);
  EXPECT_EQ(e1.multiplier().size(), 9u);
}

TEST(Centralizers, ChainOfInclusions) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const TensorSquare &t = ts(spec);
    const ExteriorSquare &e = es(spec);
    const FiniteGroup &g = t.base();
    for (Elem x = 0; x < g.order(); ++x) {
      const Subgroup ct = tensor_centralizer(t, x), ce = exterior_centralizer(e, x), c = centralizer(g, x);
      EXPECT_TRUE(ct.is_subset_of(ce)) << spec;
      EXPECT_TRUE(ce.is_subset_of(c)) << spec;
      EXPECT_TRUE(is_subgroup(g, ct)) << spec;
      for (Elem a = 0; a < g.order(); ++a)
        ASSERT_EQ(ct.contains(a), t.pair(a, x) == 0);
      // |C(x) : C(x)(x)| <= |J2| and <= |M| |nabla|.
      EXPECT_LE(c.size(), ct.size() * t.j2().size()) << spec;
      EXPECT_LE(c.size(), ct.size() * e.multiplier().size() * t.nabla().size()) << spec;
    }
    const Subgroup zt = tensor_center(t), ze = exterior_center(e);
    EXPECT_TRUE(zt.is_subset_of(ze)) << spec;
    EXPECT_TRUE(ze.is_subset_of(center(g))) << spec;
  }
}

TEST(Centralizers, TensorCenters) {
  for (const char *spec : {"C2", "C3", "C2^2", "C4xC4", "C2xC6"})
    EXPECT_EQ(tensor_center(ts(spec)).size(), 1u) << spec;
  for (const char *spec : {"Q8", "D8", "ESp(3,1)"})
    EXPECT_EQ(tensor_center(ts(spec)).size(), 1u) << spec;
  const TensorSquare &h = ts("ESm(3,1)");
  EXPECT_EQ(tensor_center(h), center(h.base()));
  EXPECT_EQ(tensor_center(h), derived_subgroup(h.base()));
  EXPECT_EQ(exterior_center(es("Q8")), center(make("Q8")));
  EXPECT_EQ(exterior_center(es("Q8")).size(), 2u);
}

TEST(Centralizers, GeneralizedQuaternionShapes) {
  for (const char *spec : {"Q16", "Q32"}) {
    const TensorSquare &t = ts(spec);
    const FiniteGroup &g = t.base();
    const auto [a, b] = cyclic_pair(g);
    const std::size_t m = g.order() / 2;
    const std::vector<Elem> ga{a}, ga2{g.mul(a, a)};
    const Subgroup A = generated_subgroup(g, ga), A2 = generated_subgroup(g, ga2);
    for (std::size_t i = 1; i < m; ++i) {
      const Elem x = power(g, a, i);
      EXPECT_EQ(tensor_centralizer(t, x), i % 2 ? A2 : A) << spec << " a^" << i;
    }
    for (std::size_t i = 0; i < m; ++i)
      EXPECT_EQ(tensor_centralizer(t, g.mul(power(g, a, i), b)).size(), 1u) << spec << " a^" << i << "b";
  }
}

TEST(Centralizers, ExtraspecialCenterGenerator) {
  const TensorSquare &t = ts("ESp(3,1)");
  const FiniteGroup &g = t.base();
  const Subgroup z = center(g);
  for (Elem c : z.members())
    if (c != 0)
      EXPECT_EQ(tensor_centralizer(t, c), z);
}

TEST(Action, IsAnAutomorphismCompatibleWithPairs) {
  for (const char *spec : {"S3", "Q8", "D8", "A4", "D12", "Q16"}) {
    const TensorSquare &t = ts(spec);
    const FiniteGroup &g = t.base();
    for (Elem h = 0; h < g.order(); ++h) {
      const std::vector<Elem> act = t.action(h);
      std::vector<bool> hit(t.order());
      for (Elem a = 0; a < t.order(); ++a)
        hit[act[a]] = true;
      EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(t.order()));
      for (Elem a = 0; a < t.order(); ++a)
        for (Elem b = 0; b < t.order(); ++b)
          ASSERT_EQ(act[t.mul(a, b)], t.mul(act[a], act[b])) << spec;
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
          ASSERT_EQ(act[t.pair(x, y)], t.pair(g.left_conj(h, x), g.left_conj(h, y))) << spec;
    }
  }
}

TEST(Action, FirstAndFifthRulesThroughTheAction) {
  for (const char *spec : {"S3", "Q8", "D8", "D10", "A4"}) {
    const TensorSquare &t = ts(spec);
    const FiniteGroup &g = t.base();
    for (Elem x = 0; x < g.order(); ++x) {
      const std::vector<Elem> ax = t.action(x);
      for (Elem h = 0; h < g.order(); ++h) {
        const Elem inv = t.inv(t.pair(x, h));
        EXPECT_EQ(ax[t.pair(g.inv(x), h)], inv) << spec;
        EXPECT_EQ(t.action(h)[t.pair(x, g.inv(h))], inv) << spec;
        const std::vector<Elem> ac = t.action(g.commutator(x, h));
        for (Elem s = 0; s < t.order(); ++s)
          ASSERT_EQ(t.mul(t.mul(t.pair(x, h), s), inv), ac[s]) << spec;
      }
    }
  }
}

TEST(Calculus, AllRulesOnSmallCatalog) {
  for (const std::string &spec : fixtures::quick_catalog()) {
    const CheckResult r = check_calculus_rules(ts(spec));
    EXPECT_TRUE(r.holds()) << spec << ": " << r.notes;
  }
}

TEST(Calculus, ElementaryAbelianOfOrder16) {
  const TensorSquare &t = ts("C2^4");
  EXPECT_EQ(t.order(), 65536u);
  EXPECT_TRUE(check_calculus_rules(t).holds());
  EXPECT_EQ(tensor_degree(t), oracle::abelian_tensor_degree({2, 2, 2, 2}));
}

TEST(Limits, ResourceErrorPropagates) {
  EnumerationLimits tiny;
  tiny.max_cosets = 16;
  EXPECT_THROW(tensor_square(make("C2^3"), tiny), ResourceError);
}

TEST(Summary, JsonFields) {
  const nlohmann::json j = summary_json(ts("ESp(3,1)"), es("ESp(3,1)"));
  for (const char *k : {"group", "order_G", "order_T", "order_nabla", "order_J2", "order_exterior",
                        "order_M", "Z_tensor_order", "Z_exterior_order", "T_abelian", "T_invariants"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["order_T"], 729);
  EXPECT_EQ(j["T_invariants"], nlohmann::json({3, 3, 3, 3, 3, 3}));
  EXPECT_TRUE(j["T_abelian"].get<bool>());
  const nlohmann::json s3 = summary_json(ts("SL(2,3)"), es("SL(2,3)"));
  EXPECT_FALSE(s3["T_abelian"].get<bool>());
  EXPECT_FALSE(s3.contains("T_invariants"));
}

TEST(Group, TableOnlyForSmallSquares) {
  EXPECT_TRUE(ts("Q8").has_table());
  EXPECT_EQ(ts("Q8").group().order(), 64u);
  EXPECT_FALSE(ts("C2^4").has_table());
  EXPECT_THROW(ts("C2^4").group(), DomainError);
}
