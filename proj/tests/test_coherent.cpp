#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hcc/cochain.hpp"
#include "hcc/coherent.hpp"
#include "oracles.hpp"
#include "random_fixtures.hpp"
#include "shipped.hpp"

using namespace hcc;

namespace {

CoherentFamily from_oracle(const oracle::Family& f) { return {f.phi0, f.phi1}; }
oracle::Family to_oracle(const CoherentFamily& f) { return {f.phi0, f.phi1}; }

std::optional<oracle::Pi0> oracle_pi0(const EnrichedCategory& c) {
  try {
    return oracle::pi0(c);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

// every 1-cell has a two-sided inverse up to a 2-cell
bool one_cells_invertible(const EnrichedCategory& c) {
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f = 0; f < c.hom(x, y).object_count(); ++f) {
        bool found = false;
        for (int g = 0; g < c.hom(y, x).object_count() && !found; ++g)
          found = c.hom(x, x).component_of(c.comp(x, y, x, g, f)) == c.hom(x, x).component_of(c.unit(x)) &&
                  c.hom(y, y).component_of(c.comp(y, x, y, f, g)) == c.hom(y, y).component_of(c.unit(y));
        if (!found) return false;
      }
  return true;
}

bool is_group_table(const std::vector<std::vector<int>>& t) {
  for (const auto& row : t) {
    std::vector<int> r = row;
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != static_cast<int>(i)) return false;
  }
  return true;
}

std::vector<int> random_two_cells(std::mt19937& rng, const EnrichedCategory& c, const CoherentFamily& phi) {
  std::vector<int> h;
  for (int x = 0; x < c.object_count(); ++x) {
    const auto& g = c.hom(x, x);
    std::vector<int> out;
    for (int k = 0; k < g.morphism_count(); ++k)
      if (g.src(k) == phi.phi0[x]) out.push_back(k);
    std::uniform_int_distribution<std::size_t> d(0, out.size() - 1);
    h.push_back(out[d(rng)]);
  }
  return h;
}

}  // namespace

TEST(Coherent, MatchesBruteForceOnShipped) {
  int checked = 0;
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto ref = oracle_pi0(c);
    if (!ref) continue;
    ++checked;
    auto z = enumerate_coherent_families(c);
    std::vector<CoherentFamily> expect;
    for (const auto& f : ref->families) expect.push_back(from_oracle(f));
    EXPECT_EQ(z.objects(), expect) << sh.name;
    auto p = pi0_monoid(z);
    ASSERT_EQ(p.size(), ref->classes) << sh.name;
    // same partition, same product
    std::vector<int> cls(p.size());
    for (int a = 0; a < p.size(); ++a) cls[a] = ref->class_of[p.representatives[a]];
    for (int i = 0; i < z.object_count(); ++i) EXPECT_EQ(cls[z.component_of(i)], ref->class_of[i]) << sh.name;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) EXPECT_EQ(cls[p.table[a][b]], ref->table[cls[a]][cls[b]]) << sh.name;
    EXPECT_EQ(cls[p.identity], ref->identity);
    auto pi1 = pi1_at_identity(z);
    EXPECT_EQ(pi1.order(), oracle::automorphisms(c, to_oracle(z.object(z.basepoint()))).size()) << sh.name;
  }
  EXPECT_GE(checked, 8);
}

TEST(Coherent, DiscreteCentersAreStrict) {
  for (const auto& sh : samples::shipped_categories()) {
    if (sh.entry.kind != "discrete") continue;
    const auto& c = *sh.entry.category;
    auto z = enumerate_coherent_families(c);
    auto strict = strict_center_objects(c);
    ASSERT_EQ(z.object_count(), static_cast<int>(strict.size())) << sh.name;
    for (int i = 0; i < z.object_count(); ++i) {
      EXPECT_EQ(z.object(i).phi0, strict[i]) << sh.name;
      EXPECT_EQ(z.object(i), strict_to_coherent(c, strict[i])) << sh.name;
      for (int j = 0; j < z.object_count(); ++j) {
        auto ms = z.modifications(i, j);
        if (i != j) {
          EXPECT_TRUE(ms.empty()) << sh.name;
          continue;
        }
        ASSERT_EQ(ms.size(), 1u) << sh.name;
        for (int x = 0; x < c.object_count(); ++x) EXPECT_EQ(ms[0].component[x], c.hom(x, x).identity(strict[i][x]));
      }
    }
  }
}

TEST(Coherent, PointWithCoefficients) {
  for (auto [label, factors] : std::vector<std::pair<std::string, std::vector<std::uint64_t>>>{
           {"point_Z2", {2}}, {"point_Z4", {4}}, {"point_Z2xZ2", {2, 2}}, {"point_Z6", {6}}}) {
    const auto& c = samples::shipped("coefficients", label);
    auto z = enumerate_coherent_families(c);
    EXPECT_EQ(pi0_monoid(z).size(), 1) << label;
    EXPECT_EQ(pi1_at_identity(z).invariants.factors, factors) << label;
  }
}

TEST(Coherent, Pi0IsCommutativeAndDuplicateInvariant) {
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto z = enumerate_coherent_families(c);
    auto p = pi0_monoid(z);
    auto pi1 = pi1_at_identity(z);
    EXPECT_TRUE(p.commutative()) << sh.name;
    for (int x = 0; x < c.object_count(); ++x) {
      auto d = duplicate_object(c, x);
      auto zd = enumerate_coherent_families(d);
      auto pd = pi0_monoid(zd);
      EXPECT_EQ(pd.size(), p.size()) << sh.name << " dup " << x;
      EXPECT_EQ(pi1_at_identity(zd).invariants, pi1.invariants) << sh.name << " dup " << x;
    }
  }
}

TEST(Coherent, Pi0IsAGroupWhenOneCellsInvert) {
  int seen = 0;
  auto check = [&](const EnrichedCategory& c, const std::string& name) {
    if (!one_cells_invertible(c)) return;
    ++seen;
    auto p = pi0_monoid(enumerate_coherent_families(c));
    EXPECT_TRUE(is_group_table(p.table)) << name;
  };
  for (const auto& sh : samples::shipped_categories()) check(*sh.entry.category, sh.name);
  samples::FixtureGenerator gen(101);
  for (int i = 0; i < 60; ++i) {
    auto f = gen.next();
    check(f.category, f.description);
  }
  EXPECT_GE(seen, 6);
}

TEST(Coherent, GaugeTransportAndProductsStayCoherent) {
  std::mt19937 rng(29);
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto z = enumerate_coherent_families(c);
    for (int i = 0; i < z.object_count(); i += 1 + z.object_count() / 6) {
      const auto& phi = z.object(i);
      EXPECT_EQ(coherence_violation(c, phi), "") << sh.name;
      auto psi = gauge_transport(c, phi, random_two_cells(rng, c, phi));
      EXPECT_EQ(coherence_violation(c, psi), "") << sh.name;
      EXPECT_EQ(z.component_of(z.index_of(psi)), z.component_of(i)) << sh.name;
      for (int j = 0; j < z.object_count(); j += 1 + z.object_count() / 4)
        EXPECT_EQ(coherence_violation(c, multiply_families(c, phi, z.object(j))), "") << sh.name;
    }
  }
}

TEST(Coherent, StrictFamiliesFactorThroughPi0) {
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto z = enumerate_coherent_families(c);
    auto p = pi0_monoid(z);
    auto sc = strict_center(c);
    for (std::size_t i = 0; i < sc.objects.size(); ++i) {
      auto phi = strict_to_coherent(c, sc.objects[i]);
      const bool coherent = coherence_violation(c, phi).empty();
      // identity Φ¹ is natural exactly when the family commutes with 2-cells
      EXPECT_EQ(coherent, sc.simplicial[i] != 0) << sh.name;
      if (!coherent) continue;
      int k = z.index_of(phi);
      ASSERT_GE(k, 0) << sh.name;
      EXPECT_EQ(p.ho_image[z.component_of(k)], ho_class(c, sc.objects[i])) << sh.name;
    }
  }
}

TEST(Coherent, ViolationsAreReported) {
  const auto& c = samples::shipped("coefficients", "point_Z2");
  auto id = identity_family(c);
  EXPECT_EQ(coherence_violation(c, id), "");
  auto bad = id;
  bad.phi1[0][0] = 1;  // normalization broken
  EXPECT_NE(coherence_violation(c, bad), "");
  bad.phi0.push_back(0);
  EXPECT_EQ(coherence_violation(c, bad), "wrong shape");
}

TEST(Coherent, LiftsAgreeWithPi0Image) {
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto z = enumerate_coherent_families(c);
    auto p = pi0_monoid(z);
    auto ho = ho_center(c);
    std::set<std::vector<int>> image(p.ho_image.begin(), p.ho_image.end());
    EXPECT_TRUE(lift_element(c, ho.elements[ho.identity]).liftable) << sh.name;
    for (const auto& e : ho.elements) {
      auto r = lift_element(c, e);
      EXPECT_EQ(r.liftable, image.count(e) == 1) << sh.name;
      if (r.liftable) {
        EXPECT_EQ(coherence_violation(c, *r.witness), "");
        EXPECT_EQ(ho_class(c, r.witness->phi0), e);
      } else {
        EXPECT_FALSE(r.trace.empty());
      }
    }
  }
}

TEST(Coherent, SpectralComparisonOnShipped) {
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    auto page = e2_page(c, 3);
    auto z = enumerate_coherent_families(c);
    auto p = pi0_monoid(z);
    auto r = compare_with_spectral(c, page, z, p, pi1_at_identity(z));
    EXPECT_TRUE(r.ok()) << sh.name << ": " << (r.messages.empty() ? "" : r.messages.front());
  }
}

TEST(Coherent, Budgets) {
  const auto& c = samples::shipped("band_four", "band_four");
  Budget tiny;
  tiny.families = 3;
  EXPECT_THROW(enumerate_coherent_families(c, tiny), BudgetExceeded);
  Budget few;
  few.center_objects = 1;
  EXPECT_THROW(enumerate_coherent_families(c, few), BudgetExceeded);
}

TEST(Coherent, ThreadCountDoesNotChangeTheResult) {
  const auto& c = samples::shipped("band_four", "band_four");
  Budget one, four;
  one.threads = 1;
  four.threads = 4;
  EXPECT_EQ(enumerate_coherent_families(c, one).objects(), enumerate_coherent_families(c, four).objects());
}
