#pragma once
// Random small groupoid-enriched categories for property and oracle tests.

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hcc/band.hpp"
#include "hcc/enriched.hpp"
#include "hcc/group.hpp"
#include "hcc/groupoid.hpp"

namespace hcc::samples {

// A morphism of a concrete category: a map between finite sets tagged with a
// unit-or-not multiplier u in Z_m; composition multiplies tags.
struct ConcreteMorphism {
  int src, dst;
  std::vector<int> map;
  int tag;
  auto key() const { return std::tie(src, dst, map, tag); }
  bool operator<(const ConcreteMorphism& o) const { return key() < o.key(); }
  bool operator==(const ConcreteMorphism& o) const { return key() == o.key(); }
};

struct ConcreteCategory {
  int objects = 0;
  std::vector<int> sizes;
  int modulus = 1;
  std::vector<ConcreteMorphism> morphisms;  // sorted
  std::vector<int> identity;

  int index(const ConcreteMorphism& m) const {
    return static_cast<int>(std::lower_bound(morphisms.begin(), morphisms.end(), m) - morphisms.begin());
  }
  int compose(int g, int f) const {
    const auto &mg = morphisms[g], &mf = morphisms[f];
    ConcreteMorphism h{mf.src, mg.dst, std::vector<int>(mf.map.size()), mg.tag * mf.tag % modulus};
    for (std::size_t i = 0; i < mf.map.size(); ++i) h.map[i] = mg.map[mf.map[i]];
    return index(h);
  }
  int hom_size(int x, int y) const {
    int k = 0;
    for (const auto& m : morphisms) k += m.src == x && m.dst == y;
    return k;
  }
  OrdinaryCategory ordinary(const std::string& label) const {
    std::vector<Arrow> arrows;
    for (const auto& m : morphisms) arrows.push_back({m.src, m.dst});
    return OrdinaryCategory::make(objects, arrows, identity, [this](int g, int f) { return compose(g, f); }, label);
  }
};

/// Closure of random generators; empty result when a hom exceeds `cap`.
inline std::optional<ConcreteCategory> random_concrete(std::mt19937& rng, int objects, int modulus, int cap) {
  ConcreteCategory c;
  c.objects = objects;
  c.modulus = modulus;
  std::uniform_int_distribution<int> size_d(1, 3);
  for (int x = 0; x < objects; ++x) c.sizes.push_back(size_d(rng));
  std::set<ConcreteMorphism> all;
  for (int x = 0; x < objects; ++x) {
    std::vector<int> id(c.sizes[x]);
    for (int i = 0; i < c.sizes[x]; ++i) id[i] = i;
    all.insert({x, x, id, 1 % modulus});
  }
  std::uniform_int_distribution<int> gens_d(0, 3), obj_d(0, objects - 1), tag_d(0, modulus - 1);
  const int gens = gens_d(rng);
  std::vector<ConcreteMorphism> gen;
  for (int k = 0; k < gens; ++k) {
    int s = obj_d(rng), t = obj_d(rng);
    std::uniform_int_distribution<int> pt(0, c.sizes[t] - 1);
    std::vector<int> m(c.sizes[s]);
    for (int& v : m) v = pt(rng);
    gen.push_back({s, t, m, tag_d(rng)});
    all.insert(gen.back());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ConcreteMorphism> cur(all.begin(), all.end());
    for (const auto& g : cur)
      for (const auto& f : cur) {
        if (f.dst != g.src) continue;
        ConcreteMorphism h{f.src, g.dst, std::vector<int>(f.map.size()), g.tag * f.tag % modulus};
        for (std::size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
        if (all.insert(h).second) grew = true;
      }
    if (all.size() > static_cast<std::size_t>(cap * objects * objects)) return std::nullopt;
  }
  c.morphisms.assign(all.begin(), all.end());
  for (int x = 0; x < objects; ++x) {
    std::vector<int> id(c.sizes[x]);
    for (int i = 0; i < c.sizes[x]; ++i) id[i] = i;
    c.identity.push_back(c.index({x, x, id, 1 % modulus}));
  }
  for (int x = 0; x < objects; ++x)
    for (int y = 0; y < objects; ++y)
      if (c.hom_size(x, y) > cap) return std::nullopt;
  return c;
}

/// 1-cells of the concrete category, every 1-cell with vertex group Z_m,
/// and (k on g, h on f) composing to k + tag(g) * h.
inline EnrichedCategory twisted_coefficients(const ConcreteCategory& cc, const std::string& label) {
  const int n = cc.objects, m = cc.modulus;
  std::vector<std::vector<int>> cells(n * n);  // global morphism ids per pair
  std::vector<int> local(cc.morphisms.size());
  for (std::size_t i = 0; i < cc.morphisms.size(); ++i) {
    auto& v = cells[cc.morphisms[i].src * n + cc.morphisms[i].dst];
    local[i] = static_cast<int>(v.size());
    v.push_back(static_cast<int>(i));
  }
  std::vector<GroupoidPtr> homs;
  for (int p = 0; p < n * n; ++p) {
    const int k = static_cast<int>(cells[p].size());
    std::vector<Arrow> arrows;
    std::vector<int> ids;
    for (int a = 0; a < k; ++a) {
      ids.push_back(a * m);
      for (int r = 0; r < m; ++r) arrows.push_back({a, a});
    }
    homs.push_back(share(FiniteGroupoid::make(
        k, arrows, ids, [m](int g, int f) { return (f / m) * m + (g % m + f % m) % m; }, label + "/hom")));
  }
  std::vector<int> units;
  for (int x = 0; x < n; ++x) units.push_back(local[cc.identity[x]]);
  std::vector<CompositionTable> comps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto &outer = cells[y * n + z], &inner = cells[x * n + y];
        CompositionTable t;
        for (int g : outer)
          for (int f : inner) t.cells.push_back(local[cc.compose(g, f)]);
        const int mi = static_cast<int>(inner.size());
        for (std::size_t gi = 0; gi < outer.size(); ++gi)
          for (int kk = 0; kk < m; ++kk)
            for (int fi = 0; fi < mi; ++fi)
              for (int hh = 0; hh < m; ++hh) {
                int cell = t.cells[gi * mi + fi];
                t.two_cells.push_back(cell * m + (kk + cc.morphisms[outer[gi]].tag * hh) % m);
              }
        comps.push_back(std::move(t));
      }
  return EnrichedCategory::make(n, std::move(homs), std::move(units), std::move(comps), label);
}

/// Restriction to the 1-cells in `keep` (per pair, a union of components
/// closed under composition and containing units).
inline EnrichedCategory restrict_one_cells(const EnrichedCategory& c, const std::vector<std::set<int>>& keep,
                                           const std::string& label) {
  const int n = c.object_count();
  std::vector<std::vector<int>> obj_new(n * n), mor_new(n * n), mor_old(n * n);
  std::vector<GroupoidPtr> homs;
  for (int p = 0; p < n * n; ++p) {
    const auto& a = c.hom(p / n, p % n);
    obj_new[p].assign(a.object_count(), -1);
    mor_new[p].assign(a.morphism_count(), -1);
    int k = 0;
    for (int o : keep[p]) obj_new[p][o] = k++;
    std::vector<Arrow> arrows;
    for (int f = 0; f < a.morphism_count(); ++f)
      if (keep[p].count(a.src(f))) {
        mor_new[p][f] = static_cast<int>(mor_old[p].size());
        mor_old[p].push_back(f);
        arrows.push_back({obj_new[p][a.src(f)], obj_new[p][a.dst(f)]});
      }
    std::vector<int> ids;
    for (int o : keep[p]) ids.push_back(mor_new[p][a.identity(o)]);
    const auto& mn = mor_new[p];
    const auto& mo = mor_old[p];
    homs.push_back(share(FiniteGroupoid::make(
        k, arrows, ids, [&a, &mn, &mo](int g, int f) { return mn[a.compose(mo[g], mo[f])]; }, a.label())));
  }
  std::vector<int> units;
  for (int x = 0; x < n; ++x) units.push_back(obj_new[x * n + x][c.unit(x)]);
  std::vector<CompositionTable> comps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int po = y * n + z, pi = x * n + y, pr = x * n + z;
        CompositionTable t;
        for (int g : keep[po])
          for (int f : keep[pi]) t.cells.push_back(obj_new[pr][c.comp(x, y, z, g, f)]);
        for (int k : mor_old[po])
          for (int h : mor_old[pi]) t.two_cells.push_back(mor_new[pr][c.comp2(x, y, z, k, h)]);
        comps.push_back(std::move(t));
      }
  return EnrichedCategory::make(n, std::move(homs), std::move(units), std::move(comps), label, c.object_labels());
}

/// Random closed sub-2-category of a band; empty when over `cap`.
inline std::optional<EnrichedCategory> random_sub_band(std::mt19937& rng, const std::vector<GroupPtr>& groups, int cap,
                                                        const std::string& label) {
  EnrichedCategory band = build_band_category(groups);
  const int n = band.object_count();
  std::vector<std::set<int>> keep(n * n);
  std::bernoulli_distribution coin(0.35);
  for (int x = 0; x < n; ++x) keep[x * n + x].insert(band.unit(x));
  for (int p = 0; p < n * n; ++p)
    for (int o = 0; o < band.hom(p / n, p % n).object_count(); ++o)
      if (coin(rng)) keep[p].insert(o);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int p = 0; p < n * n; ++p) {
      const auto& a = band.hom(p / n, p % n);
      std::set<int> add;
      for (int o : keep[p])
        for (int q : a.component_objects(a.component_of(o))) add.insert(q);
      if (add.size() != keep[p].size()) grew = true;
      keep[p] = add;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int g : std::set<int>(keep[y * n + z]))
            for (int f : std::set<int>(keep[x * n + y]))
              if (keep[x * n + z].insert(band.comp(x, y, z, g, f)).second) grew = true;
  }
  for (int p = 0; p < n * n; ++p) {
    const auto& a = band.hom(p / n, p % n);
    int m = 0;
    for (int o : keep[p]) m += static_cast<int>(a.out(o).size());
    if (m > cap) return std::nullopt;
  }
  return restrict_one_cells(band, keep, label);
}

struct RandomFixture {
  std::string description;
  EnrichedCategory category;
};

/// Deterministic stream of valid categories with at most 3 objects and at
/// most `cap` 2-cells per hom-groupoid.
class FixtureGenerator {
 public:
  explicit FixtureGenerator(std::uint32_t seed, int cap = 12) : rng_(seed), cap_(cap) {
    for (auto g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                   FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))})
      pool_.push_back(share(g));
  }

  RandomFixture next() {
    for (;;) {
      ++count_;
      const std::string tag = "rand" + std::to_string(count_);
      std::uniform_int_distribution<int> kind_d(0, 3), obj_d(1, 3);
      const int kind = kind_d(rng_);
      std::optional<RandomFixture> out;
      if (kind == 0) {
        auto cc = random_concrete(rng_, obj_d(rng_), 1, cap_);
        if (cc) out = RandomFixture{tag + ":discrete", discrete_enrichment(cc->ordinary(tag))};
      } else if (kind == 1) {
        std::uniform_int_distribution<int> mod_d(2, 6);
        const int m = mod_d(rng_);
        const int objs = obj_d(rng_);
        auto cc = random_concrete(rng_, objs, m, cap_ / m);
        if (cc) out = RandomFixture{tag + ":twisted Z" + std::to_string(m), twisted_coefficients(*cc, tag)};
      } else if (kind == 2) {
        std::uniform_int_distribution<int> g_d(0, static_cast<int>(pool_.size()) - 1);
        std::vector<GroupPtr> gs;
        std::string d;
        for (int i = obj_d(rng_); i > 0; --i) {
          gs.push_back(pool_[g_d(rng_)]);
          d += (d.empty() ? "" : ",") + gs.back()->label();
        }
        auto sb = random_sub_band(rng_, gs, cap_, tag);
        if (sb) out = RandomFixture{tag + ":subband(" + d + ")", std::move(*sb)};
      } else {
        std::uniform_int_distribution<int> a_d(2, 4);
        const int a = a_d(rng_);
        auto cc = random_concrete(rng_, obj_d(rng_), 1, cap_ / a);
        if (cc)
          out = RandomFixture{tag + ":coefficients Z" + std::to_string(a),
                              with_coefficients(discrete_enrichment(cc->ordinary(tag)), FiniteGroup::cyclic(a), tag)};
      }
      if (!out) continue;
      std::bernoulli_distribution dup(0.2);
      if (out->category.object_count() < 3 && dup(rng_)) {
        std::uniform_int_distribution<int> x_d(0, out->category.object_count() - 1);
        out->category = duplicate_object(out->category, x_d(rng_));
        out->description += "+dup";
      }
      return std::move(*out);
    }
  }

 private:
  std::mt19937 rng_;
  int cap_;
  int count_ = 0;
  std::vector<GroupPtr> pool_;
};

}  // namespace hcc::samples
