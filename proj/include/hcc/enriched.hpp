#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcc/budget.hpp"
#include "hcc/error.hpp"
#include "hcc/group.hpp"
#include "hcc/groupoid.hpp"
#include "hcc/parallel.hpp"

namespace hcc {

/// Composition H(y,z) x H(x,y) -> H(x,z) for one triple of objects, stored
/// as full tables. `cells[g * n_f + f]` is comp(g, f) on 1-cells and
/// `two_cells[k * m_h + h]` is comp(k, h) on 2-cells.
struct CompositionTable {
  std::vector<int> cells;
  std::vector<int> two_cells;
};

/// A commutative monoid of families (one entry per object) with its table.
struct FamilyMonoid {
  std::vector<std::vector<int>> elements;  // ascending
  std::vector<std::vector<int>> table;
  int identity = 0;

  int size() const { return static_cast<int>(elements.size()); }

  int index_of(const std::vector<int>& family) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), family);
    if (it == elements.end() || *it != family) return -1;
    return static_cast<int>(it - elements.begin());
  }

  bool commutative() const {
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < a; ++b)
        if (table[a][b] != table[b][a]) return false;
    return true;
  }

  /// Builds the table under a componentwise product and asserts
  /// closure and commutativity.
  static FamilyMonoid build(std::vector<std::vector<int>> elements, const std::vector<int>& unit,
                            const std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>& mul,
                            const char* what) {
    FamilyMonoid m;
    std::sort(elements.begin(), elements.end());
    m.elements = std::move(elements);
    m.identity = m.index_of(unit);
    if (m.identity < 0) detail::fail(ErrorKind::InconsistencyDetected, what, ": unit family missing");
    m.table.assign(m.size(), std::vector<int>(m.size()));
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b) {
        int c = m.index_of(mul(m.elements[a], m.elements[b]));
        if (c < 0) detail::fail(ErrorKind::InconsistencyDetected, what, ": product of elements ", a, " and ", b, " left the set");
        m.table[a][b] = c;
      }
    if (!m.commutative()) detail::fail(ErrorKind::NotCommutative, what, " is not commutative");
    return m;
  }
};

/// An ordinary finite category with globally numbered morphisms.
class OrdinaryCategory {
 public:
  /// Validates raw tables; triples {g, f, h} state g∘f = h.
  static OrdinaryCategory from_tables(int objects, std::vector<Arrow> arrows,
                                      const std::vector<std::array<int, 3>>& compose, std::string label = {}) {
    OrdinaryCategory c;
    c.label_ = std::move(label);
    c.init(objects, std::move(arrows));
    const int m = c.morphism_count();
    for (const auto& a : c.arrows_)
      if (a.src < 0 || a.src >= objects || a.dst < 0 || a.dst >= objects)
        detail::fail(ErrorKind::NotComposable, "category '", c.label_, "': morphism endpoint out of range");
    for (const auto& [g, f, h] : compose) {
      if (g < 0 || g >= m || f < 0 || f >= m || h < 0 || h >= m)
        detail::fail(ErrorKind::NotComposable, "category '", c.label_, "': composition entry out of range");
      if (c.arrows_[f].dst != c.arrows_[g].src || c.arrows_[h].src != c.arrows_[f].src ||
          c.arrows_[h].dst != c.arrows_[g].dst)
        detail::fail(ErrorKind::NotComposable, "category '", c.label_, "': ", g, "∘", f, " = ", h, " has wrong endpoints");
      c.table_[{g, f}] = h;
    }
    for (int f = 0; f < m; ++f)
      for (int g : c.out_[c.arrows_[f].dst])
        if (!c.table_.count({g, f}))
          detail::fail(ErrorKind::NotComposable, "category '", c.label_, "': composite ", g, "∘", f, " missing");
    c.identity_.assign(objects, -1);
    for (int x = 0; x < objects; ++x) {
      for (int e : c.hom(x, x)) {
        bool unit = true;
        for (int f = 0; f < m && unit; ++f) {
          if (c.arrows_[f].src == x && c.compose(f, e) != f) unit = false;
          if (c.arrows_[f].dst == x && c.compose(e, f) != f) unit = false;
        }
        if (unit) {
          c.identity_[x] = e;
          break;
        }
      }
      if (c.identity_[x] < 0)
        detail::fail(ErrorKind::MissingIdentity, "category '", c.label_, "': object ", x, " has no identity");
    }
    for (int f = 0; f < m; ++f)
      for (int g : c.out_[c.arrows_[f].dst])
        for (int h : c.out_[c.arrows_[g].dst])
          if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
            detail::fail(ErrorKind::NotAssociative, "category '", c.label_, "': (", h, "∘", g, ")∘", f, " != ", h, "∘(",
                         g, "∘", f, ")");
    return c;
  }

  /// One object; morphisms are the monoid elements, g∘f = table[g][f].
  static OrdinaryCategory from_monoid(const std::vector<std::vector<int>>& table, int identity, std::string label = {}) {
    const int n = static_cast<int>(table.size());
    std::vector<Arrow> arrows(n, Arrow{0, 0});
    std::vector<std::array<int, 3>> triples;
    for (int g = 0; g < n; ++g) {
      if (static_cast<int>(table[g].size()) != n)
        detail::fail(ErrorKind::MalformedTable, "monoid '", label, "' table is not square");
      for (int f = 0; f < n; ++f) triples.push_back({g, f, table[g][f]});
    }
    OrdinaryCategory c = from_tables(1, std::move(arrows), triples, std::move(label));
    if (identity < 0 || identity >= n || c.identity_[0] != identity)
      detail::fail(ErrorKind::NoIdentity, "monoid '", c.label_, "': element ", identity, " is not the identity");
    return c;
  }

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& label() const { return label_; }
  int src(int f) const { return arrows_[f].src; }
  int dst(int f) const { return arrows_[f].dst; }
  int identity(int x) const { return identity_[x]; }
  int compose(int g, int f) const { return table_.at({g, f}); }
  const std::vector<int>& out(int x) const { return out_[x]; }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> r;
    for (int f : out_[a])
      if (arrows_[f].dst == b) r.push_back(f);
    return r;
  }

  /// Families (m_x ∈ End(x)) with f∘m_x = m_y∘f for every f: x -> y,
  /// in lexicographic order.
  std::vector<std::vector<int>> center(const Budget& budget = {}) const {
    std::uint64_t space = 1;
    for (int x = 0; x < objects_; ++x) space = detail::sat_mul(space, hom(x, x).size());
    budget.check("category center families", space, budget.families);
    std::vector<std::vector<int>> out;
    std::vector<int> fam(objects_, -1);
    std::function<void(int)> dfs = [&](int x) {
      if (x == objects_) {
        out.push_back(fam);
        return;
      }
      for (int e : hom(x, x)) {
        fam[x] = e;
        bool ok = true;
        for (int f = 0; f < morphism_count() && ok; ++f) {
          int a = arrows_[f].src, b = arrows_[f].dst;
          if (a > x || b > x || (a != x && b != x)) continue;
          if (compose(f, fam[a]) != compose(fam[b], f)) ok = false;
        }
        if (ok) dfs(x + 1);
      }
      fam[x] = -1;
    };
    dfs(0);
    return out;
  }

  FamilyMonoid center_monoid(const Budget& budget = {}) const {
    std::vector<int> unit(identity_);
    return FamilyMonoid::build(
        center(budget), unit,
        [&](const std::vector<int>& a, const std::vector<int>& b) {
          std::vector<int> r(a.size());
          for (std::size_t x = 0; x < a.size(); ++x) r[x] = compose(a[x], b[x]);
          return r;
        },
        "center");
  }

  /// Trusted construction from a composition function.
  static OrdinaryCategory make(int objects, std::vector<Arrow> arrows, std::vector<int> identity_of,
                               const std::function<int(int, int)>& compose, std::string label = {}) {
    OrdinaryCategory c;
    c.label_ = std::move(label);
    c.init(objects, std::move(arrows));
    c.identity_ = std::move(identity_of);
    for (int f = 0; f < c.morphism_count(); ++f)
      for (int g : c.out_[c.arrows_[f].dst]) c.table_[{g, f}] = compose(g, f);
    return c;
  }

 private:
  void init(int objects, std::vector<Arrow> arrows) {
    objects_ = objects;
    arrows_ = std::move(arrows);
    out_.assign(objects, {});
    for (std::size_t f = 0; f < arrows_.size(); ++f)
      if (arrows_[f].src >= 0 && arrows_[f].src < objects) out_[arrows_[f].src].push_back(static_cast<int>(f));
  }

  int objects_ = 0;
  std::vector<Arrow> arrows_;
  std::string label_;
  std::vector<std::vector<int>> out_;
  std::map<std::pair<int, int>, int> table_;
  std::vector<int> identity_;
};

/// A category enriched in finite groupoids with strict composition.
/// H(x, y) holds the 1-cells x -> y; comp(g, f) is "g after f".
class EnrichedCategory {
 public:
  EnrichedCategory() = default;

  /// Validates and returns. Throws BadFunctor, NotAssociative or NotUnital.
  static EnrichedCategory make(int objects, std::vector<GroupoidPtr> homs, std::vector<int> units,
                               std::vector<CompositionTable> comps, std::string label = {},
                               std::vector<std::string> object_labels = {}, bool validate = true) {
    EnrichedCategory c;
    c.n_ = objects;
    c.homs_ = std::move(homs);
    c.units_ = std::move(units);
    c.comps_ = std::move(comps);
    c.label_ = std::move(label);
    c.object_labels_ = std::move(object_labels);
    if (c.object_labels_.empty())
      for (int x = 0; x < objects; ++x) c.object_labels_.push_back(std::to_string(x));
    c.check_shapes();
    if (validate) c.validate();
    return c;
  }

  int object_count() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const std::string& object_label(int x) const { return object_labels_[x]; }
  const std::vector<std::string>& object_labels() const { return object_labels_; }

  const FiniteGroupoid& hom(int x, int y) const { return *homs_[x * n_ + y]; }
  const GroupoidPtr& hom_ptr(int x, int y) const { return homs_[x * n_ + y]; }
  int unit(int x) const { return units_[x]; }
  const std::vector<int>& units() const { return units_; }
  const CompositionTable& table(int x, int y, int z) const { return comps_[(x * n_ + y) * n_ + z]; }

  /// 1-cells g: y -> z, f: x -> y.
  int comp(int x, int y, int z, int g, int f) const {
    return table(x, y, z).cells[static_cast<std::size_t>(g) * hom(x, y).object_count() + f];
  }

  /// 2-cells k in H(y,z), h in H(x,y).
  int comp2(int x, int y, int z, int k, int h) const {
    return table(x, y, z).two_cells[static_cast<std::size_t>(k) * hom(x, y).morphism_count() + h];
  }

  /// Runs every axiom check; the first violation is thrown with witnesses.
  void validate() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) check_functor(x, y, z);
    check_units();
    check_associativity();
  }

 private:
  void check_shapes() const {
    const std::size_t n = static_cast<std::size_t>(n_);
    if (homs_.size() != n * n || units_.size() != n || comps_.size() != n * n * n)
      detail::fail(ErrorKind::BadFunctor, "enriched category '", label_, "': table counts do not match ", n_, " objects");
    for (int x = 0; x < n_; ++x)
      if (units_[x] < 0 || units_[x] >= hom(x, x).object_count())
        detail::fail(ErrorKind::NotUnital, "enriched category '", label_, "': unit of object ", x, " out of range");
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          const auto& t = table(x, y, z);
          const auto &a = hom(y, z), &b = hom(x, y), &c = hom(x, z);
          if (t.cells.size() != static_cast<std::size_t>(a.object_count()) * b.object_count() ||
              t.two_cells.size() != static_cast<std::size_t>(a.morphism_count()) * b.morphism_count())
            detail::fail(ErrorKind::BadFunctor, "composition (", x, ",", y, ",", z, ") has the wrong table size");
          for (int v : t.cells)
            if (v < 0 || v >= c.object_count())
              detail::fail(ErrorKind::BadFunctor, "composition (", x, ",", y, ",", z, ") 1-cell entry out of range");
          for (int v : t.two_cells)
            if (v < 0 || v >= c.morphism_count())
              detail::fail(ErrorKind::BadFunctor, "composition (", x, ",", y, ",", z, ") 2-cell entry out of range");
        }
  }

  void check_functor(int x, int y, int z) const {
    const auto &a = hom(y, z), &b = hom(x, y), &c = hom(x, z);
    auto where = [&] { return detail::concat("composition (", x, ",", y, ",", z, ")"); };
    for (int g = 0; g < a.object_count(); ++g)
      for (int f = 0; f < b.object_count(); ++f)
        if (comp2(x, y, z, a.identity(g), b.identity(f)) != c.identity(comp(x, y, z, g, f)))
          detail::fail(ErrorKind::BadFunctor, where(), ": identity 2-cell of (", g, ",", f, ") not preserved");
    for (int k = 0; k < a.morphism_count(); ++k)
      for (int h = 0; h < b.morphism_count(); ++h) {
        int v = comp2(x, y, z, k, h);
        if (c.src(v) != comp(x, y, z, a.src(k), b.src(h)) || c.dst(v) != comp(x, y, z, a.dst(k), b.dst(h)))
          detail::fail(ErrorKind::BadFunctor, where(), ": 2-cell (", k, ",", h, ") has wrong endpoints");
        // (k, h) = (k, id)(id, h) = (id, h)(k, id)
        int k_then = c.compose(comp2(x, y, z, k, b.identity(b.dst(h))), comp2(x, y, z, a.identity(a.src(k)), h));
        int h_then = c.compose(comp2(x, y, z, a.identity(a.dst(k)), h), comp2(x, y, z, k, b.identity(b.src(h))));
        if (k_then != v || h_then != v)
          detail::fail(ErrorKind::BadFunctor, where(), ": interchange fails at 2-cells (", k, ",", h, ")");
      }
    for (int g = 0; g < a.object_count(); ++g)
      for (int h = 0; h < b.morphism_count(); ++h)
        for (int h2 : b.out(b.dst(h)))
          if (comp2(x, y, z, a.identity(g), b.compose(h2, h)) !=
              c.compose(comp2(x, y, z, a.identity(g), h2), comp2(x, y, z, a.identity(g), h)))
            detail::fail(ErrorKind::BadFunctor, where(), ": not functorial in the inner variable at (", g, ";", h2, "∘", h, ")");
    for (int f = 0; f < b.object_count(); ++f)
      for (int k = 0; k < a.morphism_count(); ++k)
        for (int k2 : a.out(a.dst(k)))
          if (comp2(x, y, z, a.compose(k2, k), b.identity(f)) !=
              c.compose(comp2(x, y, z, k2, b.identity(f)), comp2(x, y, z, k, b.identity(f))))
            detail::fail(ErrorKind::BadFunctor, where(), ": not functorial in the outer variable at (", k2, "∘", k, ";", f, ")");
  }

  void check_units() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        const auto& a = hom(x, y);
        const int ex = unit(x), ey = unit(y);
        const int idx = hom(x, x).identity(ex), idy = hom(y, y).identity(ey);
        for (int f = 0; f < a.object_count(); ++f)
          if (comp(x, y, y, ey, f) != f || comp(x, x, y, f, ex) != f)
            detail::fail(ErrorKind::NotUnital, "enriched category '", label_, "': unit law fails for 1-cell ", f, " in H(",
                         x, ",", y, ")");
        for (int h = 0; h < a.morphism_count(); ++h)
          if (comp2(x, y, y, idy, h) != h || comp2(x, x, y, h, idx) != h)
            detail::fail(ErrorKind::NotUnital, "enriched category '", label_, "': unit law fails for 2-cell ", h, " in H(",
                         x, ",", y, ")");
      }
  }

  void check_associativity() const {
    for (int w = 0; w < n_; ++w)
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          for (int z = 0; z < n_; ++z) {
            const auto &c = hom(y, z), &b = hom(x, y), &a = hom(w, x);
            for (int l = 0; l < c.object_count(); ++l)
              for (int k = 0; k < b.object_count(); ++k)
                for (int h = 0; h < a.object_count(); ++h)
                  if (comp(w, y, z, l, comp(w, x, y, k, h)) != comp(w, x, z, comp(x, y, z, l, k), h))
                    detail::fail(ErrorKind::NotAssociative, "enriched category '", label_, "': 1-cells (", l, ",", k, ",",
                                 h, ") over objects (", w, ",", x, ",", y, ",", z, ")");
            for (int l = 0; l < c.morphism_count(); ++l)
              for (int k = 0; k < b.morphism_count(); ++k)
                for (int h = 0; h < a.morphism_count(); ++h)
                  if (comp2(w, y, z, l, comp2(w, x, y, k, h)) != comp2(w, x, z, comp2(x, y, z, l, k), h))
                    detail::fail(ErrorKind::NotAssociative, "enriched category '", label_, "': 2-cells (", l, ",", k, ",",
                                 h, ") over objects (", w, ",", x, ",", y, ",", z, ")");
          }
  }

  int n_ = 0;
  std::vector<GroupoidPtr> homs_;
  std::vector<int> units_;
  std::vector<CompositionTable> comps_;
  std::string label_;
  std::vector<std::string> object_labels_;
};

using EnrichedPtr = std::shared_ptr<const EnrichedCategory>;

/// Global numbering of per-pair cells: pairs (x, y) in row-major order,
/// then the local index inside the pair.
struct PairIndex {
  std::vector<int> offset;  // size n*n + 1
  int n = 0;
  int global(int x, int y, int local) const { return offset[x * n + y] + local; }
};

/// Ordinary category of 1-cells. Morphism ids follow PairIndex order.
inline OrdinaryCategory underlying_category(const EnrichedCategory& c, PairIndex* index = nullptr) {
  const int n = c.object_count();
  PairIndex pi{{0}, n};
  std::vector<Arrow> arrows;
  std::vector<std::array<int, 2>> local;  // (pair, 1-cell)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int f = 0; f < c.hom(x, y).object_count(); ++f) {
        arrows.push_back({x, y});
        local.push_back({x * n + y, f});
      }
      pi.offset.push_back(static_cast<int>(arrows.size()));
    }
  std::vector<int> ids;
  for (int x = 0; x < n; ++x) ids.push_back(pi.global(x, x, c.unit(x)));
  auto result = OrdinaryCategory::make(
      n, std::move(arrows), std::move(ids),
      [&](int g, int f) {
        int y = local[g][0] / n, z = local[g][0] % n, x = local[f][0] / n;
        return pi.global(x, z, c.comp(x, y, z, local[g][1], local[f][1]));
      },
      c.label() + "_0");
  if (index) *index = pi;
  return result;
}

/// Ordinary category of components. Morphism ids follow PairIndex order
/// over component indices. Throws IllDefinedComposition if composition of
/// components depends on the chosen representatives.
inline OrdinaryCategory homotopy_category(const EnrichedCategory& c, PairIndex* index = nullptr) {
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto &a = c.hom(y, z), &b = c.hom(x, y), &t = c.hom(x, z);
        for (int g = 0; g < a.object_count(); ++g)
          for (int f = 0; f < b.object_count(); ++f) {
            int expect = t.component_of(
                c.comp(x, y, z, a.representative(a.component_of(g)), b.representative(b.component_of(f))));
            if (t.component_of(c.comp(x, y, z, g, f)) != expect)
              detail::fail(ErrorKind::IllDefinedComposition, "composition of components (", x, ",", y, ",", z,
                           ") depends on representatives (", g, ",", f, ")");
          }
      }
  PairIndex pi{{0}, n};
  std::vector<Arrow> arrows;
  std::vector<std::array<int, 2>> local;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int k = 0; k < c.hom(x, y).component_count(); ++k) {
        arrows.push_back({x, y});
        local.push_back({x * n + y, k});
      }
      pi.offset.push_back(static_cast<int>(arrows.size()));
    }
  std::vector<int> ids;
  for (int x = 0; x < n; ++x) ids.push_back(pi.global(x, x, c.hom(x, x).component_of(c.unit(x))));
  auto result = OrdinaryCategory::make(
      n, std::move(arrows), std::move(ids),
      [&](int g, int f) {
        int y = local[g][0] / n, z = local[g][0] % n, x = local[f][0] / n;
        const auto &a = c.hom(y, z), &b = c.hom(x, y);
        int v = c.comp(x, y, z, a.representative(local[g][1]), b.representative(local[f][1]));
        return pi.global(x, z, c.hom(x, z).component_of(v));
      },
      "Ho(" + c.label() + ")");
  if (index) *index = pi;
  return result;
}

/// Every hom-groupoid discrete on the hom-set of `cat`.
inline EnrichedCategory discrete_enrichment(const OrdinaryCategory& cat) {
  const int n = cat.object_count();
  std::vector<std::vector<int>> homs(n * n);
  std::vector<GroupoidPtr> gs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      homs[x * n + y] = cat.hom(x, y);
      gs.push_back(share(FiniteGroupoid::discrete(static_cast<int>(homs[x * n + y].size()))));
    }
  auto local = [&](int x, int y, int f) {
    const auto& h = homs[x * n + y];
    return static_cast<int>(std::lower_bound(h.begin(), h.end(), f) - h.begin());
  };
  std::vector<int> units;
  for (int x = 0; x < n; ++x) units.push_back(local(x, x, cat.identity(x)));
  std::vector<CompositionTable> comps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        CompositionTable t;
        for (int g : homs[y * n + z])
          for (int f : homs[x * n + y]) t.cells.push_back(local(x, z, cat.compose(g, f)));
        t.two_cells = t.cells;  // discrete: 2-cells are identities, numbered like 1-cells
        comps.push_back(std::move(t));
      }
  return EnrichedCategory::make(n, std::move(gs), std::move(units), std::move(comps), cat.label());
}

/// C x BA: every 2-cell gains an A-coordinate that adds under both
/// compositions. A must be abelian.
inline EnrichedCategory with_coefficients(const EnrichedCategory& c, const FiniteGroup& a, std::string label = {}) {
  if (!a.is_abelian())
    detail::fail(ErrorKind::ValidationError, "coefficient group '", a.label(), "' is not abelian");
  const int n = c.object_count();
  const int na = a.order();
  auto ba = share(FiniteGroupoid::from_group(a));
  std::vector<GroupoidPtr> homs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) homs.push_back(share(product_groupoid({c.hom_ptr(x, y), ba})));
  std::vector<CompositionTable> comps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        CompositionTable t;
        t.cells = c.table(x, y, z).cells;
        const int mk = c.hom(y, z).morphism_count(), mh = c.hom(x, y).morphism_count();
        t.two_cells.resize(static_cast<std::size_t>(mk) * na * mh * na);
        for (int k = 0; k < mk * na; ++k)
          for (int h = 0; h < mh * na; ++h)
            t.two_cells[static_cast<std::size_t>(k) * mh * na + h] =
                c.comp2(x, y, z, k / na, h / na) * na + a.mul(k % na, h % na);
        comps.push_back(std::move(t));
      }
  if (label.empty()) label = c.label() + "x" + a.label();
  return EnrichedCategory::make(n, std::move(homs), c.units(), std::move(comps), std::move(label), c.object_labels());
}

/// Adds a copy of object `x` as the last object; the inclusion of the
/// original is an equivalence.
inline EnrichedCategory duplicate_object(const EnrichedCategory& c, int x) {
  const int n = c.object_count();
  auto orig = [&](int o) { return o == n ? x : o; };
  std::vector<GroupoidPtr> homs;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) homs.push_back(c.hom_ptr(orig(a), orig(b)));
  std::vector<int> units = c.units();
  units.push_back(c.unit(x));
  std::vector<CompositionTable> comps;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int d = 0; d <= n; ++d) comps.push_back(c.table(orig(a), orig(b), orig(d)));
  auto labels = c.object_labels();
  labels.push_back(c.object_label(x) + "'");
  return EnrichedCategory::make(n + 1, std::move(homs), std::move(units), std::move(comps), c.label() + "+dup",
                                std::move(labels));
}

/// The terminal enriched category.
inline EnrichedCategory terminal_category() {
  return EnrichedCategory::make(1, {share(FiniteGroupoid::trivial())}, {0}, {CompositionTable{{0}, {0}}}, "terminal");
}

/// Objects are families Φ_x with comp(Φ_y, f) = comp(f, Φ_x) for every
/// 1-cell f; morphisms are 2-cell families α_x: Φ_x -> Φ'_x with
/// comp(α_y, id_f) = comp(id_f, α_x). `simplicial[i]` records whether object
/// i also commutes with every 2-cell.
struct StrictCenter {
  struct Morphism {
    int source;
    int target;
    std::vector<int> cells;
  };
  std::vector<std::vector<int>> objects;
  std::vector<char> simplicial;
  std::vector<Morphism> morphisms;
  FamilyMonoid monoid;
};

namespace detail {

// Families over objects 0..n-1 chosen from `domain[x]`, pruned by `ok(x, fam)`
// which may inspect fam[0..x]. Lexicographic output.
inline std::vector<std::vector<int>> backtrack_families(const std::vector<std::vector<int>>& domain,
                                                        const std::function<bool(int, const std::vector<int>&)>& ok) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(domain.size());
  std::vector<int> fam(n, -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.push_back(fam);
      return;
    }
    for (int v : domain[x]) {
      fam[x] = v;
      if (ok(x, fam)) rec(x + 1);
    }
    fam[x] = -1;
  };
  rec(0);
  return out;
}

}  // namespace detail

/// 1-cell families commuting strictly with every 1-cell. Lexicographic.
inline std::vector<std::vector<int>> strict_center_objects(const EnrichedCategory& c, const Budget& budget = {}) {
  const int n = c.object_count();
  std::vector<std::vector<int>> domain(n);
  std::uint64_t space = 1;
  for (int x = 0; x < n; ++x) {
    for (int f = 0; f < c.hom(x, x).object_count(); ++f) domain[x].push_back(f);
    space = detail::sat_mul(space, domain[x].size());
  }
  budget.check("strict center families", space, budget.families);
  return detail::backtrack_families(domain, [&](int x, const std::vector<int>& fam) {
    for (int y = 0; y <= x; ++y) {
      // f: y -> x and f: x -> y
      for (int f = 0; f < c.hom(y, x).object_count(); ++f)
        if (c.comp(y, x, x, fam[x], f) != c.comp(y, y, x, f, fam[y])) return false;
      for (int f = 0; f < c.hom(x, y).object_count(); ++f)
        if (c.comp(x, y, y, fam[y], f) != c.comp(x, x, y, f, fam[x])) return false;
    }
    return true;
  });
}

/// Whether comp(k, id_Φx) = comp(id_Φy, k) for every 2-cell k.
inline bool commutes_with_two_cells(const EnrichedCategory& c, const std::vector<int>& phi) {
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& a = c.hom(x, y);
      const int ix = c.hom(x, x).identity(phi[x]), iy = c.hom(y, y).identity(phi[y]);
      for (int k = 0; k < a.morphism_count(); ++k)
        if (c.comp2(x, x, y, k, ix) != c.comp2(x, y, y, iy, k)) return false;
    }
  return true;
}

inline std::vector<int> compose_families(const EnrichedCategory& c, const std::vector<int>& phi,
                                         const std::vector<int>& psi) {
  std::vector<int> r(phi.size());
  for (int x = 0; x < c.object_count(); ++x) r[x] = c.comp(x, x, x, phi[x], psi[x]);
  return r;
}

inline StrictCenter strict_center(const EnrichedCategory& c, const Budget& budget = {}) {
  const int n = c.object_count();
  StrictCenter z;
  z.objects = strict_center_objects(c, budget);
  for (const auto& phi : z.objects) z.simplicial.push_back(commutes_with_two_cells(c, phi) ? 1 : 0);
  z.monoid = FamilyMonoid::build(
      z.objects, c.units(), [&](const auto& a, const auto& b) { return compose_families(c, a, b); }, "strict center");
  std::uint64_t cells = 0;
  for (std::size_t i = 0; i < z.objects.size(); ++i)
    for (std::size_t j = 0; j < z.objects.size(); ++j) {
      const auto& phi = z.objects[i];
      const auto& psi = z.objects[j];
      std::vector<std::vector<int>> domain(n);
      for (int x = 0; x < n; ++x) domain[x] = c.hom(x, x).hom(phi[x], psi[x]);
      auto fams = detail::backtrack_families(domain, [&](int x, const std::vector<int>& al) {
        for (int y = 0; y <= x; ++y) {
          const auto& yx = c.hom(y, x);
          for (int f = 0; f < yx.object_count(); ++f)
            if (c.comp2(y, x, x, al[x], yx.identity(f)) != c.comp2(y, y, x, yx.identity(f), al[y])) return false;
          const auto& xy = c.hom(x, y);
          for (int f = 0; f < xy.object_count(); ++f)
            if (c.comp2(x, y, y, al[y], xy.identity(f)) != c.comp2(x, x, y, xy.identity(f), al[x])) return false;
        }
        return true;
      });
      cells += fams.size();
      budget.check("strict center 2-cell families", cells, budget.groupoid_cells);
      for (auto& f : fams) z.morphisms.push_back({static_cast<int>(i), static_cast<int>(j), std::move(f)});
    }
  return z;
}

/// Families of component classes commuting with every Ho-morphism.
inline FamilyMonoid ho_center(const EnrichedCategory& c, const Budget& budget = {}) {
  const int n = c.object_count();
  PairIndex pi;
  OrdinaryCategory ho = homotopy_category(c, &pi);
  auto fams = ho.center(budget);
  // translate global ids back to component indices
  for (auto& f : fams)
    for (int x = 0; x < n; ++x) f[x] -= pi.offset[x * n + x];
  std::vector<int> unit(n);
  for (int x = 0; x < n; ++x) unit[x] = c.hom(x, x).component_of(c.unit(x));
  return FamilyMonoid::build(
      std::move(fams), unit,
      [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(n);
        for (int x = 0; x < n; ++x) {
          const auto& h = c.hom(x, x);
          r[x] = h.component_of(c.comp(x, x, x, h.representative(a[x]), h.representative(b[x])));
        }
        return r;
      },
      "homotopy category center");
}

/// Class of a 1-cell family in Ho.
inline std::vector<int> ho_class(const EnrichedCategory& c, const std::vector<int>& phi) {
  std::vector<int> r(phi.size());
  for (int x = 0; x < c.object_count(); ++x) r[x] = c.hom(x, x).component_of(phi[x]);
  return r;
}

/// Values at the representative r of component `comp` of H(x,y) that extend
/// to a natural transformation comp(-, Φx) => comp(Φy, -) on that component:
/// 2-cells t with t∘comp(l, id) = comp(id, l)∘t for every loop l at r.
inline std::vector<int> whisker_candidates(const EnrichedCategory& c, int x, int y, int phix, int phiy, int comp) {
  const auto& a = c.hom(x, y);
  const int r = a.representative(comp);
  const int ix = c.hom(x, x).identity(phix), iy = c.hom(y, y).identity(phiy);
  const int lr = c.comp(x, x, y, r, phix), rr = c.comp(x, y, y, phiy, r);
  std::vector<int> out;
  const auto loops = a.loops(r);
  for (int t : a.hom(lr, rr)) {
    bool ok = true;
    for (int l : loops)
      if (a.compose(t, c.comp2(x, x, y, l, ix)) != a.compose(c.comp2(x, y, y, iy, l), t)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(t);
  }
  return out;
}

/// Whether comp(-, Φx) and comp(Φy, -) are naturally isomorphic on every
/// H(x,y), i.e. the two whiskerings agree in π0 of the mapping spaces.
inline bool whiskerings_isomorphic(const EnrichedCategory& c, const std::vector<int>& phi) {
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y)
      for (int k = 0; k < c.hom(x, y).component_count(); ++k)
        if (whisker_candidates(c, x, y, phi[x], phi[y], k).empty()) return false;
  return true;
}

}  // namespace hcc
