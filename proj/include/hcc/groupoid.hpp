#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hcc/budget.hpp"
#include "hcc/error.hpp"
#include "hcc/group.hpp"

namespace hcc {

struct Arrow {
  int src;
  int dst;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite groupoid with its full composition table. `compose(g, f)` is
/// g after f and needs dst(f) == src(g).
class FiniteGroupoid {
 public:
  using ComposeFn = std::function<int(int g, int f)>;

  FiniteGroupoid() : FiniteGroupoid(trivial()) {}

  /// Trusted construction for internally generated groupoids: identities are
  /// given, composites come from `compose`, inverses are searched for.
  static FiniteGroupoid make(int objects, std::vector<Arrow> arrows, std::vector<int> identity_of,
                             const ComposeFn& compose, std::string label = {}) {
    FiniteGroupoid a(0);
    a.init(objects, std::move(arrows), std::move(label));
    a.identity_ = std::move(identity_of);
    for (std::size_t f = 0; f < a.arrows_.size(); ++f)
      for (int g : a.out_[a.arrows_[f].dst]) a.table_[a.slot(g, static_cast<int>(f))] = compose(g, static_cast<int>(f));
    a.finish();
    return a;
  }

  /// Validates raw tables. Each triple {g, f, h} states g∘f = h.
  /// Throws NotComposable, MissingIdentity, NotAssociative or NotInvertible.
  static FiniteGroupoid from_tables(int objects, std::vector<Arrow> arrows,
                                    const std::vector<std::array<int, 3>>& compose, std::string label = {}) {
    if (objects < 0) detail::fail(ErrorKind::NotComposable, "groupoid '", label, "': negative object count");
    const int m = static_cast<int>(arrows.size());
    for (int f = 0; f < m; ++f)
      if (arrows[f].src < 0 || arrows[f].src >= objects || arrows[f].dst < 0 || arrows[f].dst >= objects)
        detail::fail(ErrorKind::NotComposable, "groupoid '", label, "': morphism ", f, " has an endpoint out of range");
    FiniteGroupoid a(0);
    a.init(objects, std::move(arrows), std::move(label));
    for (const auto& [g, f, h] : compose) {
      if (g < 0 || g >= m || f < 0 || f >= m || h < 0 || h >= m)
        detail::fail(ErrorKind::NotComposable, "groupoid '", a.label_, "': composition entry (", g, ",", f, ",", h,
                     ") out of range");
      if (a.arrows_[f].dst != a.arrows_[g].src)
        detail::fail(ErrorKind::NotComposable, "groupoid '", a.label_, "': ", g, "∘", f, " is not composable");
      if (a.arrows_[h].src != a.arrows_[f].src || a.arrows_[h].dst != a.arrows_[g].dst)
        detail::fail(ErrorKind::NotComposable, "groupoid '", a.label_, "': ", g, "∘", f, " = ", h,
                     " has wrong endpoints");
      int& cell = a.table_[a.slot(g, f)];
      if (cell >= 0 && cell != h)
        detail::fail(ErrorKind::NotComposable, "groupoid '", a.label_, "': ", g, "∘", f, " defined twice");
      cell = h;
    }
    for (int f = 0; f < m; ++f)
      for (int g : a.out_[a.arrows_[f].dst])
        if (a.table_[a.slot(g, f)] < 0)
          detail::fail(ErrorKind::NotComposable, "groupoid '", a.label_, "': composite ", g, "∘", f, " missing");
    a.identity_.assign(objects, -1);
    for (int x = 0; x < objects; ++x) {
      for (int e : a.out_[x]) {
        if (a.arrows_[e].dst != x) continue;
        bool unit = true;
        for (int g : a.out_[x])
          if (a.compose(g, e) != g) unit = false;
        for (int f = 0; f < m && unit; ++f)
          if (a.arrows_[f].dst == x && a.compose(e, f) != f) unit = false;
        if (unit) {
          a.identity_[x] = e;
          break;
        }
      }
      if (a.identity_[x] < 0)
        detail::fail(ErrorKind::MissingIdentity, "groupoid '", a.label_, "': object ", x, " has no identity");
    }
    for (int f = 0; f < m; ++f)
      for (int g : a.out_[a.arrows_[f].dst])
        for (int h : a.out_[a.arrows_[g].dst])
          if (a.compose(h, a.compose(g, f)) != a.compose(a.compose(h, g), f))
            detail::fail(ErrorKind::NotAssociative, "groupoid '", a.label_, "': (", h, "∘", g, ")∘", f, " != ", h,
                         "∘(", g, "∘", f, ")");
    a.finish();
    return a;
  }

  static FiniteGroupoid from_group(const FiniteGroup& g) {
    std::vector<Arrow> arrows(g.order(), Arrow{0, 0});
    return make(1, std::move(arrows), {g.identity()}, [&](int x, int y) { return g.mul(x, y); }, g.label());
  }

  static FiniteGroupoid discrete(int n) {
    std::vector<Arrow> arrows;
    std::vector<int> ids;
    for (int x = 0; x < n; ++x) {
      arrows.push_back({x, x});
      ids.push_back(x);
    }
    return make(n, std::move(arrows), std::move(ids), [](int g, int) { return g; });
  }

  static FiniteGroupoid trivial() {
    FiniteGroupoid a(0);
    a.init(1, {Arrow{0, 0}}, "1");
    a.identity_ = {0};
    a.table_[0] = 0;
    a.finish();
    return a;
  }

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  int src(int f) const { return arrows_[f].src; }
  int dst(int f) const { return arrows_[f].dst; }
  const Arrow& arrow(int f) const { return arrows_[f]; }
  int identity(int x) const { return identity_[x]; }
  bool is_identity(int f) const { return identity_[arrows_[f].src] == f; }
  int inverse(int f) const { return inverse_[f]; }

  int compose(int g, int f) const {
    if (arrows_[f].dst != arrows_[g].src)
      detail::fail(ErrorKind::NotComposable, "groupoid '", label_, "': ", g, "∘", f, " is not composable");
    return table_[slot(g, f)];
  }

  /// Morphisms with source x, ascending.
  const std::vector<int>& out(int x) const { return out_[x]; }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> r;
    for (int f : out_[a])
      if (arrows_[f].dst == b) r.push_back(f);
    return r;
  }

  std::vector<int> loops(int a) const { return hom(a, a); }

  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of(int x) const { return component_[x]; }
  /// Objects of component c, ascending; the first is the representative.
  const std::vector<int>& component_objects(int c) const { return components_[c]; }
  int representative(int c) const { return components_[c].front(); }
  /// A fixed morphism from the representative of x's component to x.
  int transport(int x) const { return transport_[x]; }

  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  explicit FiniteGroupoid(int) {}

  void init(int objects, std::vector<Arrow> arrows, std::string label) {
    objects_ = objects;
    arrows_ = std::move(arrows);
    label_ = std::move(label);
    out_.assign(objects, {});
    pos_.assign(arrows_.size(), 0);
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      pos_[f] = static_cast<int>(out_[arrows_[f].src].size());
      out_[arrows_[f].src].push_back(static_cast<int>(f));
    }
    offset_.assign(arrows_.size(), 0);
    std::size_t total = 0;
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      offset_[f] = total;
      total += out_[arrows_[f].dst].size();
    }
    table_.assign(total, -1);
  }

  std::size_t slot(int g, int f) const { return offset_[f] + pos_[g]; }

  void finish() {
    const int m = morphism_count();
    inverse_.assign(m, -1);
    for (int f = 0; f < m; ++f) {
      if (inverse_[f] >= 0) continue;
      for (int g : out_[arrows_[f].dst]) {
        if (arrows_[g].dst != arrows_[f].src) continue;
        if (compose(g, f) == identity_[arrows_[f].src] && compose(f, g) == identity_[arrows_[f].dst]) {
          inverse_[f] = g;
          inverse_[g] = f;
          break;
        }
      }
      if (inverse_[f] < 0)
        detail::fail(ErrorKind::NotInvertible, "groupoid '", label_, "': morphism ", f, " (", arrows_[f].src, "->",
                     arrows_[f].dst, ") has no inverse");
    }
    component_.assign(objects_, -1);
    transport_.assign(objects_, -1);
    components_.clear();
    for (int x = 0; x < objects_; ++x) {
      if (component_[x] >= 0) continue;
      const int c = static_cast<int>(components_.size());
      std::vector<int> members{x};
      component_[x] = c;
      transport_[x] = identity_[x];
      for (std::size_t i = 0; i < members.size(); ++i) {
        int y = members[i];
        for (int f : out_[y]) {
          int z = arrows_[f].dst;
          if (component_[z] >= 0) continue;
          component_[z] = c;
          transport_[z] = compose(f, transport_[y]);
          members.push_back(z);
        }
      }
      std::sort(members.begin(), members.end());
      components_.push_back(std::move(members));
    }
  }

  int objects_ = 0;
  std::vector<Arrow> arrows_;
  std::string label_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_;
  std::vector<std::size_t> offset_;
  std::vector<int> table_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::vector<int> component_;
  std::vector<int> transport_;
  std::vector<std::vector<int>> components_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid a) { return std::make_shared<const FiniteGroupoid>(std::move(a)); }

/// Connected components, each sorted, listed by least object.
inline std::vector<std::vector<int>> pi0(const FiniteGroupoid& a) { return a.components(); }

/// Automorphism group of x. Element i of the result is the i-th loop at x
/// in ascending morphism order.
inline FiniteGroup vertex_group(const FiniteGroupoid& a, int x, std::string label = {}) {
  const std::vector<int> loops = a.loops(x);
  std::map<int, int> index;
  for (std::size_t i = 0; i < loops.size(); ++i) index[loops[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(loops.size(), std::vector<int>(loops.size()));
  for (std::size_t i = 0; i < loops.size(); ++i)
    for (std::size_t j = 0; j < loops.size(); ++j) table[i][j] = index.at(a.compose(loops[i], loops[j]));
  return FiniteGroup::from_table(table, index.at(a.identity(x)), std::move(label));
}

struct GroupoidFunctor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<int> obj;
  std::vector<int> mor;

  /// Throws BadFunctor naming the first violated law.
  void validate() const {
    const FiniteGroupoid& a = *source;
    const FiniteGroupoid& b = *target;
    if (static_cast<int>(obj.size()) != a.object_count() || static_cast<int>(mor.size()) != a.morphism_count())
      detail::fail(ErrorKind::BadFunctor, "functor map sizes do not match the source");
    for (int x : obj)
      if (x < 0 || x >= b.object_count()) detail::fail(ErrorKind::BadFunctor, "object image out of range");
    for (int f = 0; f < a.morphism_count(); ++f) {
      int g = mor[f];
      if (g < 0 || g >= b.morphism_count()) detail::fail(ErrorKind::BadFunctor, "morphism image out of range");
      if (b.src(g) != obj[a.src(f)] || b.dst(g) != obj[a.dst(f)])
        detail::fail(ErrorKind::BadFunctor, "morphism ", f, " is sent to a morphism with wrong endpoints");
    }
    for (int x = 0; x < a.object_count(); ++x)
      if (mor[a.identity(x)] != b.identity(obj[x]))
        detail::fail(ErrorKind::BadFunctor, "identity of object ", x, " is not preserved");
    for (int f = 0; f < a.morphism_count(); ++f)
      for (int g : a.out(a.dst(f)))
        if (mor[a.compose(g, f)] != b.compose(mor[g], mor[f]))
          detail::fail(ErrorKind::BadFunctor, "composite ", g, "∘", f, " is not preserved");
  }

  friend bool operator==(const GroupoidFunctor& x, const GroupoidFunctor& y) {
    return x.obj == y.obj && x.mor == y.mor;
  }
};

inline GroupoidFunctor identity_functor(const GroupoidPtr& a) {
  GroupoidFunctor f{a, a, {}, {}};
  for (int x = 0; x < a->object_count(); ++x) f.obj.push_back(x);
  for (int m = 0; m < a->morphism_count(); ++m) f.mor.push_back(m);
  return f;
}

/// g after f.
inline GroupoidFunctor compose_functors(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  GroupoidFunctor h{f.source, g.target, {}, {}};
  for (int x : f.obj) h.obj.push_back(g.obj[x]);
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

/// A family of target morphisms τ_a: F(a) -> G(a), one per source object.
struct NatTransformation {
  std::vector<int> component;
  friend auto operator<=>(const NatTransformation&, const NatTransformation&) = default;
};

inline bool is_natural(const GroupoidFunctor& f, const GroupoidFunctor& g, const NatTransformation& tau) {
  const FiniteGroupoid& a = *f.source;
  const FiniteGroupoid& b = *f.target;
  if (static_cast<int>(tau.component.size()) != a.object_count()) return false;
  for (int x = 0; x < a.object_count(); ++x) {
    int t = tau.component[x];
    if (t < 0 || t >= b.morphism_count() || b.src(t) != f.obj[x] || b.dst(t) != g.obj[x]) return false;
  }
  for (int m = 0; m < a.morphism_count(); ++m)
    if (b.compose(g.mor[m], tau.component[a.src(m)]) != b.compose(tau.component[a.dst(m)], f.mor[m])) return false;
  return true;
}

/// All τ: F => G in ascending lexicographic order of component arrays. The
/// value at each component representative determines the rest by transport.
inline std::vector<NatTransformation> natural_transformations(const GroupoidFunctor& f, const GroupoidFunctor& g,
                                                              const Budget& budget = {}) {
  const FiniteGroupoid& a = *f.source;
  const FiniteGroupoid& b = *f.target;
  // per component: every consistent assignment on its objects
  std::vector<std::vector<std::vector<int>>> options(a.component_count());
  std::uint64_t total = 1;
  for (int c = 0; c < a.component_count(); ++c) {
    const auto& objs = a.component_objects(c);
    const int r = a.representative(c);
    for (int t : b.hom(f.obj[r], g.obj[r])) {
      std::map<int, int> value;
      for (int x : objs) {
        int p = a.transport(x);
        value[x] = b.compose(b.compose(g.mor[p], t), b.inverse(f.mor[p]));
      }
      bool ok = true;
      for (int x : objs) {
        for (int m : a.out(x))
          if (b.compose(g.mor[m], value[x]) != b.compose(value[a.dst(m)], f.mor[m])) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) continue;
      std::vector<int> v;
      for (int x : objs) v.push_back(value[x]);
      options[c].push_back(std::move(v));
    }
    total = detail::sat_mul(total, options[c].size());
  }
  budget.check("natural transformations", total, budget.groupoid_cells);
  std::vector<NatTransformation> out;
  if (total == 0) return out;
  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    NatTransformation tau{std::vector<int>(a.object_count())};
    for (std::size_t c = 0; c < options.size(); ++c) {
      const auto& objs = a.component_objects(static_cast<int>(c));
      for (std::size_t i = 0; i < objs.size(); ++i) tau.component[objs[i]] = options[c][pick[c]][i];
    }
    out.push_back(std::move(tau));
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (σ∘τ)_a = σ_a ∘ τ_a.
inline NatTransformation vertical(const FiniteGroupoid& target, const NatTransformation& sigma,
                                  const NatTransformation& tau) {
  NatTransformation r;
  for (std::size_t i = 0; i < tau.component.size(); ++i)
    r.component.push_back(target.compose(sigma.component[i], tau.component[i]));
  return r;
}

/// τK: FK => GK.
inline NatTransformation whisker_right(const NatTransformation& tau, const GroupoidFunctor& k) {
  NatTransformation r;
  for (int x : k.obj) r.component.push_back(tau.component[x]);
  return r;
}

/// Lτ: LF => LG.
inline NatTransformation whisker_left(const GroupoidFunctor& l, const NatTransformation& tau) {
  NatTransformation r;
  for (int m : tau.component) r.component.push_back(l.mor[m]);
  return r;
}

/// Natural automorphisms of F as a group under vertical composition.
/// Element i corresponds to natural_transformations(F, F)[i].
inline FiniteGroup aut_group_of_functor(const GroupoidFunctor& f, const Budget& budget = {}) {
  const auto auts = natural_transformations(f, f, budget);
  std::map<NatTransformation, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(auts.size(), std::vector<int>(auts.size()));
  for (std::size_t i = 0; i < auts.size(); ++i)
    for (std::size_t j = 0; j < auts.size(); ++j) table[i][j] = index.at(vertical(*f.target, auts[i], auts[j]));
  NatTransformation id;
  for (int x : f.obj) id.component.push_back(f.target->identity(x));
  return FiniteGroup::from_table(table, index.at(id), "Aut(F)");
}

/// Componentwise product. Objects and morphisms are mixed-radix tuples
/// with the first factor varying slowest.
inline FiniteGroupoid product_groupoid(const std::vector<GroupoidPtr>& factors, const Budget& budget = {}) {
  if (factors.empty()) return FiniteGroupoid::trivial();
  std::uint64_t objs = 1, mors = 1, cells = 1;
  for (const auto& a : factors) {
    objs = detail::sat_mul(objs, a->object_count());
    mors = detail::sat_mul(mors, a->morphism_count());
  }
  // composition table size is sum over objects of |in|·|out|, bounded by mors^2 / objs
  cells = objs == 0 ? 0 : detail::sat_mul(mors, mors / std::max<std::uint64_t>(objs, 1) + 1);
  budget.check("product groupoid", std::max(mors, cells), budget.groupoid_cells);
  const std::size_t k = factors.size();
  auto decode = [&](std::uint64_t i, bool morphisms) {
    std::vector<int> t(k);
    for (std::size_t j = k; j-- > 0;) {
      std::uint64_t n = morphisms ? factors[j]->morphism_count() : factors[j]->object_count();
      t[j] = static_cast<int>(i % n);
      i /= n;
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t, bool morphisms) {
    std::uint64_t i = 0;
    for (std::size_t j = 0; j < k; ++j)
      i = i * (morphisms ? factors[j]->morphism_count() : factors[j]->object_count()) + t[j];
    return static_cast<int>(i);
  };
  std::vector<Arrow> arrows(mors);
  std::vector<std::vector<int>> tuples(mors);
  for (std::uint64_t m = 0; m < mors; ++m) {
    tuples[m] = decode(m, true);
    std::vector<int> s(k), d(k);
    for (std::size_t j = 0; j < k; ++j) {
      s[j] = factors[j]->src(tuples[m][j]);
      d[j] = factors[j]->dst(tuples[m][j]);
    }
    arrows[m] = {encode(s, false), encode(d, false)};
  }
  std::vector<int> ids(objs);
  for (std::uint64_t x = 0; x < objs; ++x) {
    auto t = decode(x, false);
    for (std::size_t j = 0; j < k; ++j) t[j] = factors[j]->identity(t[j]);
    ids[x] = encode(t, true);
  }
  std::string label;
  for (const auto& a : factors) label += (label.empty() ? "" : " x ") + a->label();
  return FiniteGroupoid::make(
      static_cast<int>(objs), std::move(arrows), std::move(ids),
      [&](int g, int f) {
        std::vector<int> t(k);
        for (std::size_t j = 0; j < k; ++j) t[j] = factors[j]->compose(tuples[g][j], tuples[f][j]);
        return encode(t, true);
      },
      label);
}

/// Every functor A -> B, sorted by (obj, mor). Per source component the
/// functor is fixed by the image of the representative, a hom between vertex
/// groups and an arbitrary image for each transport morphism.
inline std::vector<GroupoidFunctor> enumerate_functors(const GroupoidPtr& a, const GroupoidPtr& b,
                                                       const Budget& budget = {}) {
  struct Local {
    std::vector<int> obj;  // images of the component's objects
    std::vector<int> mor;  // images of the component's morphisms, keyed by morphism id
  };
  std::vector<std::vector<Local>> options(a->component_count());
  std::uint64_t total = 1;
  for (int c = 0; c < a->component_count(); ++c) {
    const auto& objs = a->component_objects(c);
    const int r = a->representative(c);
    const auto loops_a = a->loops(r);
    auto ga = share(vertex_group(*a, r));
    for (int y = 0; y < b->object_count(); ++y) {
      const auto loops_b = b->loops(y);
      auto gb = share(vertex_group(*b, y));
      auto homs = enumerate_homs(ga, gb, budget);
      // transport images: one outgoing morphism of y per non-representative object
      std::vector<int> others(objs.begin() + 1, objs.end());
      std::uint64_t count = homs.size();
      for (std::size_t i = 0; i < others.size(); ++i) count = detail::sat_mul(count, b->out(y).size());
      budget.check("functor enumeration", detail::sat_mul(total, count + options[c].size()), budget.groupoid_cells);
      std::vector<std::size_t> pick(others.size(), 0);
      for (const auto& phi : homs) {
        std::fill(pick.begin(), pick.end(), 0);
        for (;;) {
          std::map<int, int> tmor;  // object -> image of transport(object)
          tmor[r] = b->identity(y);
          for (std::size_t i = 0; i < others.size(); ++i) tmor[others[i]] = b->out(y)[pick[i]];
          Local loc;
          for (int x : objs) loc.obj.push_back(b->dst(tmor[x]));
          for (int x : objs)
            for (int m : a->out(x)) {
              int tx = a->transport(x), ty = a->transport(a->dst(m));
              int loop = a->compose(a->inverse(ty), a->compose(m, tx));
              int li = static_cast<int>(std::lower_bound(loops_a.begin(), loops_a.end(), loop) - loops_a.begin());
              int image_loop = loops_b[phi.image[li]];
              loc.mor.push_back(b->compose(tmor[a->dst(m)], b->compose(image_loop, b->inverse(tmor[x]))));
            }
          options[c].push_back(std::move(loc));
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == b->out(y).size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
      }
    }
    total = detail::sat_mul(total, options[c].size());
  }
  budget.check("functor enumeration", total, budget.groupoid_cells);
  std::vector<GroupoidFunctor> out;
  if (total == 0) return out;
  std::vector<std::size_t> pick(options.size(), 0);
  for (;;) {
    GroupoidFunctor f{a, b, std::vector<int>(a->object_count()), std::vector<int>(a->morphism_count())};
    for (std::size_t c = 0; c < options.size(); ++c) {
      const auto& objs = a->component_objects(static_cast<int>(c));
      const Local& loc = options[c][pick[c]];
      std::size_t k = 0;
      for (std::size_t i = 0; i < objs.size(); ++i) {
        f.obj[objs[i]] = loc.obj[i];
        for (int m : a->out(objs[i])) f.mor[m] = loc.mor[k++];
      }
    }
    out.push_back(std::move(f));
    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == options[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const GroupoidFunctor& x, const GroupoidFunctor& y) { return std::tie(x.obj, x.mor) < std::tie(y.obj, y.mor); });
  return out;
}

struct ComponentCenter {
  std::vector<int> component;
  FiniteGroup center;
};

namespace detail {

inline std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> o;
  for (int a = 0; a < g.order(); ++a) o.push_back(g.element_order(a));
  std::sort(o.begin(), o.end());
  return o;
}

}  // namespace detail

/// Per component, the center of the vertex group at its representative.
/// Cross-checked against the natural automorphisms of the identity functor.
inline std::vector<ComponentCenter> groupoid_center_splitting(const GroupoidPtr& a, const Budget& budget = {}) {
  std::vector<ComponentCenter> parts;
  FiniteGroup product = FiniteGroup::trivial();
  for (int c = 0; c < a->component_count(); ++c) {
    FiniteGroup v = vertex_group(*a, a->representative(c));
    FiniteGroup z = FiniteGroup::subgroup(v, center_of_group(v), "Z");
    product = FiniteGroup::direct_product(product, z);
    parts.push_back({a->component_objects(c), std::move(z)});
  }
  FiniteGroup aut = aut_group_of_functor(identity_functor(a), budget);
  if (aut.order() != product.order() || detail::order_profile(aut) != detail::order_profile(product))
    detail::fail(ErrorKind::SplittingMismatch, "natural automorphisms of the identity have order ", aut.order(),
                 " but the product of vertex centers has order ", product.order());
  return parts;
}

}  // namespace hcc
