#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hcc/abelian.hpp"
#include "hcc/budget.hpp"
#include "hcc/cochain.hpp"
#include "hcc/enriched.hpp"
#include "hcc/error.hpp"
#include "hcc/parallel.hpp"

namespace hcc {

/// Φ⁰ gives a 1-cell of H(x,x) per object; Φ¹ gives, per pair (x,y) in
/// row-major order and per 1-cell f of H(x,y), a 2-cell
/// comp(f, Φx) -> comp(Φy, f).
struct CoherentFamily {
  std::vector<int> phi0;
  std::vector<std::vector<int>> phi1;
  friend auto operator<=>(const CoherentFamily&, const CoherentFamily&) = default;
};

/// Checks normalization, 2-cell naturality and the composition cocycle.
/// Returns an empty string when coherent, otherwise the first violation.
inline std::string coherence_violation(const EnrichedCategory& c, const CoherentFamily& phi) {
  const int n = c.object_count();
  if (static_cast<int>(phi.phi0.size()) != n || static_cast<int>(phi.phi1.size()) != n * n) return "wrong shape";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& a = c.hom(x, y);
      const auto& v = phi.phi1[x * n + y];
      if (static_cast<int>(v.size()) != a.object_count()) return "wrong shape";
      for (int f = 0; f < a.object_count(); ++f) {
        if (v[f] < 0 || v[f] >= a.morphism_count()) return "2-cell out of range";
        if (a.src(v[f]) != c.comp(x, x, y, f, phi.phi0[x]) || a.dst(v[f]) != c.comp(x, y, y, phi.phi0[y], f))
          return detail::concat("Φ at 1-cell ", f, " of H(", x, ",", y, ") has wrong endpoints");
      }
      const int ix = c.hom(x, x).identity(phi.phi0[x]), iy = c.hom(y, y).identity(phi.phi0[y]);
      for (int k = 0; k < a.morphism_count(); ++k)
        if (a.compose(v[a.dst(k)], c.comp2(x, x, y, k, ix)) != a.compose(c.comp2(x, y, y, iy, k), v[a.src(k)]))
          return detail::concat("naturality fails at 2-cell ", k, " of H(", x, ",", y, ")");
    }
  for (int x = 0; x < n; ++x)
    if (phi.phi1[x * n + x][c.unit(x)] != c.hom(x, x).identity(phi.phi0[x]))
      return detail::concat("not normalized at object ", x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto &gz = c.hom(y, z), &fy = c.hom(x, y), &t = c.hom(x, z);
        for (int g = 0; g < gz.object_count(); ++g)
          for (int f = 0; f < fy.object_count(); ++f) {
            int lhs = phi.phi1[x * n + z][c.comp(x, y, z, g, f)];
            int rhs = t.compose(c.comp2(x, y, z, phi.phi1[y * n + z][g], fy.identity(f)),
                                c.comp2(x, y, z, gz.identity(g), phi.phi1[x * n + y][f]));
            if (lhs != rhs) return detail::concat("cocycle fails at (", g, ",", f, ") over (", x, ",", y, ",", z, ")");
          }
      }
  return {};
}

/// Solves for every Φ¹ completing a fixed Φ⁰. Unknowns are the values at
/// component representatives; each ranges over the 2-cells natural on loops.
/// Normalization pins the unit component, cocycle equations prune by
/// forward checking.
class Phi1Solver {
 public:
  Phi1Solver(const EnrichedCategory& c, std::vector<int> phi0) : c_(c), phi0_(std::move(phi0)) {
    const int n = c.object_count();
    var_offset_.assign(n * n + 1, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) var_offset_[x * n + y + 1] = var_offset_[x * n + y] + c.hom(x, y).component_count();
    const int nv = var_offset_.back();
    domain_.resize(nv);
    value_.resize(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto& a = c.hom(x, y);
        const int ix = c.hom(x, x).identity(phi0_[x]), iy = c.hom(y, y).identity(phi0_[y]);
        auto& vals = value_[x * n + y];
        vals.resize(a.object_count());
        for (int k = 0; k < a.component_count(); ++k) {
          auto& dom = domain_[var_offset_[x * n + y] + k];
          dom = whisker_candidates(c, x, y, phi0_[x], phi0_[y], k);
          for (int f : a.component_objects(k)) {
            int tr = a.transport(f);
            int lt = c.comp2(x, x, y, tr, ix), rt = c.comp2(x, y, y, iy, tr);
            for (int t : dom) vals[f].push_back(a.compose(a.compose(rt, t), a.inverse(lt)));
          }
        }
        if (x == y) {
          // normalization at the unit
          const int e = c.unit(x);
          const int v = var_offset_[x * n + x] + a.component_of(e);
          std::vector<std::size_t> keep_idx;
          for (std::size_t d = 0; d < domain_[v].size(); ++d)
            if (vals[e][d] == ix) keep_idx.push_back(d);
          filter_values(x, x, a.component_of(e), keep_idx);
        }
      }
    for (int v = nv - 1; v >= 0; --v)
      if (domain_[v].empty()) empty_var_ = v;
    watch_.resize(nv);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const auto &gz = c.hom(y, z), &fy = c.hom(x, y);
          for (int g = 0; g < gz.object_count(); ++g)
            for (int f = 0; f < fy.object_count(); ++f) {
              Constraint k{x, y, z, g, f, c.comp(x, y, z, g, f)};
              k.vars = {var(y, z, g), var(x, y, f), var(x, z, k.gf)};
              const int id = static_cast<int>(constraints_.size());
              std::vector<int> distinct = k.vars;
              std::sort(distinct.begin(), distinct.end());
              distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
              for (int v : distinct) watch_[v].push_back(id);
              constraints_.push_back(std::move(k));
            }
        }
  }

  int variable_count() const { return var_offset_.back(); }
  std::uint64_t nodes() const { return nodes_; }

  /// All solutions in lexicographic order, at most `limit` of them.
  std::vector<CoherentFamily> solve(std::size_t limit = SIZE_MAX) {
    solutions_.clear();
    trace_.clear();
    nodes_ = 0;
    limit_ = limit;
    if (empty_var_ >= 0) {
      trace_ = detail::concat("no natural transformation on ", describe(empty_var_));
      return {};
    }
    const int nv = variable_count();
    alive_.assign(nv, {});
    alive_count_.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
      alive_[v].assign(domain_[v].size(), 1);
      alive_count_[v] = static_cast<int>(domain_[v].size());
    }
    assign_.assign(nv, -1);
    deepest_fail_.clear();
    search(0);
    std::sort(solutions_.begin(), solutions_.end());
    if (solutions_.empty() && trace_.empty())
      trace_ = detail::concat("search exhausted after ", nodes_, " nodes; ", deepest_fail_);
    return solutions_;
  }

  /// Why the last solve found nothing.
  const std::string& trace() const { return trace_; }

 private:
  struct Constraint {
    int x, y, z, g, f, gf;
    std::vector<int> vars;  // (g), (f), (gf)
  };

  int var(int x, int y, int cell) const {
    const int n = c_.object_count();
    return var_offset_[x * n + y] + c_.hom(x, y).component_of(cell);
  }

  std::string describe(int v) const {
    const int n = c_.object_count();
    int p = static_cast<int>(std::upper_bound(var_offset_.begin(), var_offset_.end(), v) - var_offset_.begin()) - 1;
    return detail::concat("component ", v - var_offset_[p], " of H(", p / n, ",", p % n, ")");
  }

  void filter_values(int x, int y, int comp, const std::vector<std::size_t>& keep) {
    const int n = c_.object_count();
    const int v = var_offset_[x * n + y] + comp;
    std::vector<int> dom;
    for (auto d : keep) dom.push_back(domain_[v][d]);
    domain_[v] = dom;
    auto& vals = value_[x * n + y];
    for (int f : c_.hom(x, y).component_objects(comp)) {
      std::vector<int> nv;
      for (auto d : keep) nv.push_back(vals[f][d]);
      vals[f] = nv;
    }
  }

  // Φ_cell under domain index d of its variable
  int val(int x, int y, int cell, int d) const { return value_[x * c_.object_count() + y][cell][d]; }

  bool holds(const Constraint& k, const std::vector<int>& a) const {
    int pg = val(k.y, k.z, k.g, a[k.vars[0]]);
    int pf = val(k.x, k.y, k.f, a[k.vars[1]]);
    int pgf = val(k.x, k.z, k.gf, a[k.vars[2]]);
    const auto& t = c_.hom(k.x, k.z);
    int rhs = t.compose(c_.comp2(k.x, k.y, k.z, pg, c_.hom(k.x, k.y).identity(k.f)),
                        c_.comp2(k.x, k.y, k.z, c_.hom(k.y, k.z).identity(k.g), pf));
    return pgf == rhs;
  }

  // Returns false on a wipe-out; removed values are pushed on `trail`.
  bool propagate(int v, std::vector<std::pair<int, int>>& trail) {
    for (int ci : watch_[v]) {
      const Constraint& k = constraints_[ci];
      int open = -1, nopen = 0;
      for (int u : k.vars)
        if (assign_[u] < 0 && u != open) {
          open = u;
          ++nopen;
        }
      if (nopen == 0) {
        if (!holds(k, assign_)) {
          note_fail(k);
          return false;
        }
      } else if (nopen == 1) {
        std::vector<int> a = assign_;
        for (std::size_t d = 0; d < domain_[open].size(); ++d) {
          if (!alive_[open][d]) continue;
          a[open] = static_cast<int>(d);
          if (!holds(k, a)) {
            alive_[open][d] = 0;
            --alive_count_[open];
            trail.push_back({open, static_cast<int>(d)});
          }
        }
        if (alive_count_[open] == 0) {
          note_fail(k);
          return false;
        }
      }
    }
    return true;
  }

  void note_fail(const Constraint& k) {
    deepest_fail_ = detail::concat("cocycle (", k.g, ",", k.f, ") over objects (", k.x, ",", k.y, ",", k.z,
                                   ") has no consistent value");
  }

  void search(int depth) {
    if (solutions_.size() >= limit_) return;
    ++nodes_;
    const int nv = variable_count();
    int best = -1;
    for (int v = 0; v < nv; ++v)
      if (assign_[v] < 0 && (best < 0 || alive_count_[v] < alive_count_[best])) best = v;
    if (best < 0) {
      solutions_.push_back(materialize());
      return;
    }
    for (std::size_t d = 0; d < domain_[best].size(); ++d) {
      if (!alive_[best][d]) continue;
      assign_[best] = static_cast<int>(d);
      std::vector<std::pair<int, int>> trail;
      if (propagate(best, trail)) search(depth + 1);
      for (auto [u, e] : trail) {
        alive_[u][e] = 1;
        ++alive_count_[u];
      }
      assign_[best] = -1;
      if (solutions_.size() >= limit_) return;
    }
  }

  CoherentFamily materialize() const {
    const int n = c_.object_count();
    CoherentFamily phi{phi0_, std::vector<std::vector<int>>(n * n)};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto& a = c_.hom(x, y);
        for (int f = 0; f < a.object_count(); ++f) phi.phi1[x * n + y].push_back(val(x, y, f, assign_[var(x, y, f)]));
      }
    return phi;
  }

  const EnrichedCategory& c_;
  std::vector<int> phi0_;
  std::vector<int> var_offset_;
  std::vector<std::vector<int>> domain_;
  std::vector<std::vector<std::vector<int>>> value_;  // pair -> 1-cell -> per domain index
  std::vector<Constraint> constraints_;
  std::vector<std::vector<int>> watch_;
  int empty_var_ = -1;

  std::vector<std::vector<char>> alive_;
  std::vector<int> alive_count_;
  std::vector<int> assign_;
  std::vector<CoherentFamily> solutions_;
  std::size_t limit_ = SIZE_MAX;
  std::uint64_t nodes_ = 0;
  std::string trace_;
  std::string deepest_fail_;
};

/// Ψ = the target of the modification with components H out of Φ:
/// Ψx = dst(Hx), Ψf = comp(Hy, id_f) ∘ Φf ∘ comp(id_f, Hx)^-1.
inline CoherentFamily gauge_transport(const EnrichedCategory& c, const CoherentFamily& phi, const std::vector<int>& h) {
  const int n = c.object_count();
  CoherentFamily psi{std::vector<int>(n), std::vector<std::vector<int>>(n * n)};
  for (int x = 0; x < n; ++x) psi.phi0[x] = c.hom(x, x).dst(h[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& a = c.hom(x, y);
      for (int f = 0; f < a.object_count(); ++f) {
        int left = c.comp2(x, x, y, a.identity(f), h[x]);
        int right = c.comp2(x, y, y, h[y], a.identity(f));
        psi.phi1[x * n + y].push_back(a.compose(a.compose(right, phi.phi1[x * n + y][f]), a.inverse(left)));
      }
    }
  return psi;
}

/// Componentwise product: (ΦΨ)x = comp(Φx, Ψx) and
/// (ΦΨ)f = comp(id_Φy, Ψf) ∘ comp(Φf, id_Ψx).
inline CoherentFamily multiply_families(const EnrichedCategory& c, const CoherentFamily& phi, const CoherentFamily& psi) {
  const int n = c.object_count();
  CoherentFamily r{std::vector<int>(n), std::vector<std::vector<int>>(n * n)};
  for (int x = 0; x < n; ++x) r.phi0[x] = c.comp(x, x, x, phi.phi0[x], psi.phi0[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& a = c.hom(x, y);
      const int ipsi = c.hom(x, x).identity(psi.phi0[x]), iphi = c.hom(y, y).identity(phi.phi0[y]);
      for (int f = 0; f < a.object_count(); ++f) {
        int first = c.comp2(x, x, y, phi.phi1[x * n + y][f], ipsi);
        int second = c.comp2(x, y, y, iphi, psi.phi1[x * n + y][f]);
        r.phi1[x * n + y].push_back(a.compose(second, first));
      }
    }
  return r;
}

/// Strict family with identity Φ¹ (coherent exactly when it also commutes
/// with all 2-cells).
inline CoherentFamily strict_to_coherent(const EnrichedCategory& c, const std::vector<int>& phi0) {
  const int n = c.object_count();
  CoherentFamily phi{phi0, std::vector<std::vector<int>>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& a = c.hom(x, y);
      for (int f = 0; f < a.object_count(); ++f) phi.phi1[x * n + y].push_back(a.identity(c.comp(x, x, y, f, phi0[x])));
    }
  return phi;
}

inline CoherentFamily identity_family(const EnrichedCategory& c) { return strict_to_coherent(c, c.units()); }

struct Modification {
  int source;
  int target;
  std::vector<int> component;  // per object, a 2-cell of H(x,x)
};

/// The groupoid of coherent families and modifications. Morphisms are
/// produced on demand from the objects.
class CenterGroupoid {
 public:
  CenterGroupoid(const EnrichedCategory& c, std::vector<CoherentFamily> objects) : c_(c), objects_(std::move(objects)) {
    std::sort(objects_.begin(), objects_.end());
    for (std::size_t i = 0; i < objects_.size(); ++i) index_[objects_[i]] = static_cast<int>(i);
    auto it = index_.find(identity_family(c));
    if (it == index_.end()) detail::fail(ErrorKind::InconsistencyDetected, "identity family is not coherent");
    basepoint_ = it->second;
    build_components();
  }

  const EnrichedCategory& category() const { return c_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const CoherentFamily& object(int i) const { return objects_[i]; }
  const std::vector<CoherentFamily>& objects() const { return objects_; }
  int basepoint() const { return basepoint_; }

  int index_of(const CoherentFamily& phi) const {
    auto it = index_.find(phi);
    return it == index_.end() ? -1 : it->second;
  }

  int component_count() const { return static_cast<int>(components_.size()); }
  int component_of(int i) const { return component_[i]; }
  /// Members of component k ascending; the first is the canonical representative.
  const std::vector<int>& component_objects(int k) const { return components_[k]; }

  /// Modifications i -> j, lexicographic in components.
  std::vector<Modification> modifications(int i, int j, const Budget& budget = {}) const {
    const int n = c_.object_count();
    const auto &phi = objects_[i], &psi = objects_[j];
    std::vector<std::vector<int>> domain(n);
    std::uint64_t space = 1;
    for (int x = 0; x < n; ++x) {
      domain[x] = c_.hom(x, x).hom(phi.phi0[x], psi.phi0[x]);
      space = detail::sat_mul(space, domain[x].size());
    }
    budget.check("modification search", space, budget.groupoid_cells);
    auto fams = detail::backtrack_families(domain, [&](int x, const std::vector<int>& h) {
      for (int y = 0; y <= x; ++y) {
        if (!square_commutes(phi, psi, h, y, x) || !square_commutes(phi, psi, h, x, y)) return false;
      }
      return true;
    });
    std::vector<Modification> out;
    for (auto& f : fams) out.push_back({i, j, std::move(f)});
    return out;
  }

  /// Automorphism group of object i under componentwise vertical composition.
  FiniteGroup automorphism_group(int i, const Budget& budget = {}) const {
    auto mods = modifications(i, i, budget);
    std::map<std::vector<int>, int> idx;
    for (std::size_t a = 0; a < mods.size(); ++a) idx[mods[a].component] = static_cast<int>(a);
    const int n = c_.object_count();
    std::vector<std::vector<int>> table(mods.size(), std::vector<int>(mods.size()));
    for (std::size_t a = 0; a < mods.size(); ++a)
      for (std::size_t b = 0; b < mods.size(); ++b) {
        std::vector<int> v(n);
        for (int x = 0; x < n; ++x) v[x] = c_.hom(x, x).compose(mods[a].component[x], mods[b].component[x]);
        table[a][b] = idx.at(v);
      }
    std::vector<int> id(n);
    for (int x = 0; x < n; ++x) id[x] = c_.hom(x, x).identity(objects_[i].phi0[x]);
    return FiniteGroup::from_table(table, idx.at(id), "Aut");
  }

 private:
  // Ψf ∘ comp(id_f, Hx) = comp(Hy, id_f) ∘ Φf for every 1-cell f: x -> y
  bool square_commutes(const CoherentFamily& phi, const CoherentFamily& psi, const std::vector<int>& h, int x,
                       int y) const {
    const int n = c_.object_count();
    const auto& a = c_.hom(x, y);
    for (int f = 0; f < a.object_count(); ++f) {
      int lhs = a.compose(psi.phi1[x * n + y][f], c_.comp2(x, x, y, a.identity(f), h[x]));
      int rhs = a.compose(c_.comp2(x, y, y, h[y], a.identity(f)), phi.phi1[x * n + y][f]);
      if (lhs != rhs) return false;
    }
    return true;
  }

  void build_components() {
    const int m = object_count();
    const int n = c_.object_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (int i = 0; i < m; ++i) {
      const auto& phi = objects_[i];
      std::vector<int> h(n);
      for (int x = 0; x < n; ++x) h[x] = c_.hom(x, x).identity(phi.phi0[x]);
      for (int x = 0; x < n; ++x) {
        const auto& hx = c_.hom(x, x);
        for (int k : hx.out(phi.phi0[x])) {
          if (hx.is_identity(k)) continue;
          std::vector<int> move = h;
          move[x] = k;
          int j = index_of(gauge_transport(c_, phi, move));
          if (j < 0)
            detail::fail(ErrorKind::InconsistencyDetected, "gauge transport of coherent family ", i,
                         " left the set of coherent families");
          int a = find(i), b = find(j);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
    component_.assign(m, -1);
    std::map<int, int> root_to_comp;
    for (int i = 0; i < m; ++i) {
      int r = find(i);
      auto it = root_to_comp.find(r);
      if (it == root_to_comp.end()) {
        it = root_to_comp.emplace(r, static_cast<int>(components_.size())).first;
        components_.push_back({});
      }
      component_[i] = it->second;
      components_[it->second].push_back(i);
    }
  }

  const EnrichedCategory& c_;
  std::vector<CoherentFamily> objects_;
  std::map<CoherentFamily, int> index_;
  int basepoint_ = 0;
  std::vector<int> component_;
  std::vector<std::vector<int>> components_;
};

/// Every coherent family, by brute force over Φ⁰ and constraint search for Φ¹.
inline CenterGroupoid enumerate_coherent_families(const EnrichedCategory& c, const Budget& budget = {}) {
  const int n = c.object_count();
  std::vector<std::vector<int>> domain(n);
  std::uint64_t space = 1;
  for (int x = 0; x < n; ++x) {
    for (int f = 0; f < c.hom(x, x).object_count(); ++f) domain[x].push_back(f);
    space = detail::sat_mul(space, domain[x].size());
  }
  budget.check("coherent family Φ⁰ search", space, budget.families);
  auto phi0s = detail::backtrack_families(domain, [](int, const std::vector<int>&) { return true; });
  std::vector<std::vector<CoherentFamily>> found(phi0s.size());
  detail::parallel_for(phi0s.size(), budget.threads, [&](std::size_t i) {
    if (!whiskerings_isomorphic(c, phi0s[i])) return;
    Phi1Solver solver(c, phi0s[i]);
    found[i] = solver.solve(budget.center_objects + 1);
  });
  std::vector<CoherentFamily> all;
  for (auto& v : found) {
    for (auto& f : v) all.push_back(std::move(f));
    budget.check("coherent families", all.size(), budget.center_objects);
  }
  return CenterGroupoid(c, std::move(all));
}

/// π₀ of the center with the multiplication induced by multiply_families.
struct Pi0Monoid {
  std::vector<int> representatives;          // least object of each class
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<std::vector<int>> ho_image;    // Ho class family of each element

  int size() const { return static_cast<int>(representatives.size()); }
  bool commutative() const {
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < a; ++b)
        if (table[a][b] != table[b][a]) return false;
    return true;
  }
};

inline Pi0Monoid pi0_monoid(const CenterGroupoid& z) {
  const auto& c = z.category();
  Pi0Monoid m;
  const int k = z.component_count();
  for (int i = 0; i < k; ++i) {
    m.representatives.push_back(z.component_objects(i).front());
    m.ho_image.push_back(ho_class(c, z.object(m.representatives.back()).phi0));
  }
  m.identity = z.component_of(z.basepoint());
  m.table.assign(k, std::vector<int>(k, -1));
  auto product_class = [&](int i, int j) {
    int p = z.index_of(multiply_families(c, z.object(i), z.object(j)));
    if (p < 0)
      detail::fail(ErrorKind::NotWellDefined, "product of coherent families ", i, " and ", j, " is not coherent");
    return z.component_of(p);
  };
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) m.table[a][b] = product_class(m.representatives[a], m.representatives[b]);
  // independence of representatives, one variable at a time
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < z.object_count(); ++j) {
      int b = z.component_of(j);
      if (product_class(m.representatives[a], j) != m.table[a][b] || product_class(j, m.representatives[a]) != m.table[b][a])
        detail::fail(ErrorKind::NotWellDefined, "π0 product depends on the representative of class ", b);
    }
  if (!m.commutative()) detail::fail(ErrorKind::NotCommutative, "π0 of the center is not commutative");
  return m;
}

/// Natural automorphisms of the identity family; must be abelian.
inline FinAbGroup pi1_at_identity(const CenterGroupoid& z, const Budget& budget = {}) {
  FiniteGroup g = z.automorphism_group(z.basepoint(), budget);
  if (!g.is_abelian()) detail::fail(ErrorKind::NonAbelianEntry, "automorphisms of the identity family do not commute");
  return FinAbGroup{abelian_invariants(g), {}};
}

struct LiftResult {
  bool liftable = false;
  std::optional<CoherentFamily> witness;
  std::string trace;
};

/// Decides whether a Ho-center family lifts to a coherent family. Any lift
/// can be gauge-moved onto the component representatives, so only those
/// 1-cells are tried.
inline LiftResult lift_element(const EnrichedCategory& c, const std::vector<int>& ho_family) {
  const int n = c.object_count();
  std::vector<int> phi0(n);
  for (int x = 0; x < n; ++x) phi0[x] = c.hom(x, x).representative(ho_family[x]);
  Phi1Solver solver(c, phi0);
  auto sol = solver.solve(1);
  LiftResult r;
  if (!sol.empty()) {
    r.liftable = true;
    r.witness = sol.front();
  } else {
    r.trace = solver.trace();
  }
  return r;
}

struct ConsistencyReport {
  bool pi1_matches = false;           // (a)
  bool lifts_when_unobstructed = false;  // (b)
  bool fiber_matches = false;         // (c)
  bool image_is_liftable = false;     // (d)
  std::vector<std::string> messages;
  bool ok() const { return pi1_matches && lifts_when_unobstructed && fiber_matches && image_is_liftable; }
};

/// Cross-checks the exact center against the spectral computation.
inline ConsistencyReport compare_with_spectral(const EnrichedCategory& c, const SpectralPage& page,
                                               const CenterGroupoid& z, const Pi0Monoid& pi0, const FinAbGroup& pi1) {
  ConsistencyReport r;
  // (a)
  r.pi1_matches = page.e2_01 && pi1.invariants == page.e2_01->invariants;
  if (!r.pi1_matches)
    r.messages.push_back("(a) π1 at the identity is " + pi1.invariants.str() + " but E2^{0,1} is " +
                         (page.e2_01 ? page.e2_01->invariants.str() : std::string("unavailable")));
  // liftability of every Ho-center element
  std::vector<char> liftable(page.ho_center.size(), 0);
  for (int i = 0; i < page.ho_center.size(); ++i) liftable[i] = lift_element(c, page.ho_center.elements[i]).liftable;
  // (b)
  r.lifts_when_unobstructed = true;
  if (page.e2_21 && page.e2_21->trivial())
    for (const auto& e : page.e2_00.elements)
      if (!liftable[page.ho_center.index_of(e)]) {
        r.lifts_when_unobstructed = false;
        r.messages.push_back("(b) E2^{2,1} vanishes but an element of E2^{0,0} does not lift");
        break;
      }
  if (!page.e2_21) r.messages.push_back("(b) skipped: E2^{2,1} unavailable");
  // (c)
  std::map<std::vector<int>, int> fiber;
  for (const auto& img : pi0.ho_image) ++fiber[img];
  const auto& unit = page.ho_center.elements[page.ho_center.identity];
  r.fiber_matches = page.e2_11.has_value();
  if (page.e2_11) {
    if (static_cast<std::uint64_t>(fiber[unit]) != page.e2_11->order()) {
      r.fiber_matches = false;
      r.messages.push_back(detail::concat("(c) fiber over the identity has ", fiber[unit], " classes but E2^{1,1} has order ",
                                          page.e2_11->order()));
    }
    if (page.e2_11->trivial())
      for (const auto& [img, count] : fiber)
        if (count > 1) {
          r.fiber_matches = false;
          r.messages.push_back("(c) E2^{1,1} vanishes but π0 does not inject into the Ho center");
          break;
        }
  } else {
    r.messages.push_back("(c) skipped: E2^{1,1} unavailable");
  }
  // (d)
  std::set<std::vector<int>> image(pi0.ho_image.begin(), pi0.ho_image.end());
  std::set<std::vector<int>> lifts;
  for (int i = 0; i < page.ho_center.size(); ++i)
    if (liftable[i]) lifts.insert(page.ho_center.elements[i]);
  r.image_is_liftable = image == lifts;
  if (!r.image_is_liftable) r.messages.push_back("(d) image of π0 differs from the liftable Ho-center elements");
  for (const auto& img : image)
    if (page.e2_00.index_of(img) < 0) {
      r.image_is_liftable = false;
      r.messages.push_back("(d) a coherent family maps outside the π0 equalizer");
      break;
    }
  return r;
}

}  // namespace hcc
