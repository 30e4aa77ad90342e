#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hcc/budget.hpp"
#include "hcc/error.hpp"

namespace hcc {

/// A finite group stored as its full Cayley table. Elements are 0..order-1
/// and `mul(a, b)` is a·b. Instances are only produced by the validating
/// factories, so every live FiniteGroup satisfies the group axioms.
class FiniteGroup {
 public:
  /// Validates a square table with a designated identity.
  /// Throws MalformedTable, NoIdentity, NoInverse or NotAssociative.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table, int identity,
                                std::string label = {}) {
    const int n = static_cast<int>(table.size());
    if (n == 0) detail::fail(ErrorKind::MalformedTable, "group '", label, "' has an empty table");
    FiniteGroup g;
    g.order_ = n;
    g.label_ = std::move(label);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table[a].size()) != n)
        detail::fail(ErrorKind::MalformedTable, "group '", g.label_, "' row ", a, " has length ",
                     table[a].size(), ", expected ", n);
      for (int b = 0; b < n; ++b) {
        int v = table[a][b];
        if (v < 0 || v >= n)
          detail::fail(ErrorKind::MalformedTable, "group '", g.label_, "' entry [", a, "][", b,
                       "] = ", v, " out of range");
        g.table_[a * n + b] = v;
      }
    }
    if (identity < 0 || identity >= n)
      detail::fail(ErrorKind::NoIdentity, "group '", g.label_, "' identity index ", identity,
                   " out of range");
    g.identity_ = identity;
    for (int a = 0; a < n; ++a)
      if (g.mul(identity, a) != a || g.mul(a, identity) != a)
        detail::fail(ErrorKind::NoIdentity, "group '", g.label_, "': element ", identity,
                     " is not a two-sided identity (fails at ", a, ")");
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
          g.inverse_[a] = b;
          break;
        }
      if (g.inverse_[a] < 0)
        detail::fail(ErrorKind::NoInverse, "group '", g.label_, "': element ", a,
                     " has no two-sided inverse");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            detail::fail(ErrorKind::NotAssociative, "group '", g.label_, "': (", a, "*", b, ")*", c,
                         " != ", a, "*(", b, "*", c, ")");
    return g;
  }

  /// Closes a set of permutations (0-based one-line notation) under
  /// composition. Element 0 is the identity; the remaining elements are
  /// ordered lexicographically by one-line notation. Product convention:
  /// (p*q)(i) = p(q(i)).
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                       std::string label = {}, std::size_t max_order = 100000) {
    std::size_t degree = generators.empty() ? 0 : generators.front().size();
    for (const auto& p : generators) {
      if (p.size() != degree)
        detail::fail(ErrorKind::MalformedTable, "group '", label, "': permutations of mixed degree");
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < degree; ++i)
        if (sorted[i] != static_cast<int>(i))
          detail::fail(ErrorKind::MalformedTable, "group '", label, "': not a permutation");
    }
    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elements{id};
    std::vector<std::vector<int>> frontier{id};
    auto compose = [](const std::vector<int>& p, const std::vector<int>& q) {
      std::vector<int> r(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
      return r;
    };
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& x : frontier)
        for (const auto& s : generators) {
          auto y = compose(x, s);
          if (elements.insert(y).second) {
            if (elements.size() > max_order)
              throw BudgetExceeded("permutation closure", elements.size(), max_order);
            next.push_back(std::move(y));
          }
        }
      frontier = std::move(next);
    }
    std::vector<std::vector<int>> ordered(elements.begin(), elements.end());
    // identity is the lexicographically least permutation, so it is index 0
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < ordered.size(); ++i) index[ordered[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(ordered.size(), std::vector<int>(ordered.size()));
    for (std::size_t a = 0; a < ordered.size(); ++a)
      for (std::size_t b = 0; b < ordered.size(); ++b) table[a][b] = index.at(compose(ordered[a], ordered[b]));
    return from_table(table, 0, std::move(label));
  }

  static FiniteGroup trivial() { return from_table({{0}}, 0, "1"); }

  static FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(t, 0, n == 1 ? "1" : "Z" + std::to_string(n));
  }

  /// Symmetric group on `degree` points via the transposition and long cycle.
  static FiniteGroup symmetric(int degree) {
    if (degree <= 1) return trivial();
    std::vector<int> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
    return from_permutations({swap, cycle}, "S" + std::to_string(degree));
  }

  /// Dihedral group of order 2n acting on the n-gon.
  static FiniteGroup dihedral(int n) {
    std::vector<int> rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      ref[i] = (n - i) % n;
    }
    return from_permutations({rot, ref}, "D" + std::to_string(n));
  }

  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order() * b.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    return from_table(t, a.identity() * b.order() + b.identity(), a.label() + "x" + b.label());
  }

  /// The subgroup on `elements` (must be closed), re-indexed in the given order.
  static FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elements, std::string label = {}) {
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(elements.size(), std::vector<int>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a)
      for (std::size_t b = 0; b < elements.size(); ++b) {
        int p = pos[g.mul(elements[a], elements[b])];
        if (p < 0) detail::fail(ErrorKind::MalformedTable, "subset is not closed under multiplication");
        t[a][b] = p;
      }
    int id = pos[g.identity()];
    if (id < 0) detail::fail(ErrorKind::NoIdentity, "subset does not contain the identity");
    return from_table(t, id, std::move(label));
  }

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int h, int a) const { return mul(mul(h, a), inv(h)); }  // h a h^-1
  const std::string& label() const { return label_; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  int power(int a, long long k) const {
    int m = element_order(a);
    k %= m;
    if (k < 0) k += m;
    int r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool same_table(const FiniteGroup& o) const { return identity_ == o.identity_ && table_ == o.table_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A homomorphism given by the image of every source element.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  int operator()(int g) const { return image[g]; }

  bool is_valid() const {
    if (static_cast<int>(image.size()) != source->order()) return false;
    if (image[source->identity()] != target->identity()) return false;
    for (int a = 0; a < source->order(); ++a)
      for (int b = 0; b < source->order(); ++b)
        if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
    return true;
  }
};

/// Subgroup generated by `generators` as a sorted element list.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : generators) {
      int x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/// Greedy generating set: scan elements in index order and keep each one that
/// lies outside the subgroup generated so far.
inline std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  in[g.identity()] = 1;
  for (int a = 0; a < g.order(); ++a) {
    if (in[a]) continue;
    gens.push_back(a);
    for (int x : subgroup_closure(g, gens)) in[x] = 1;
  }
  return gens;
}

inline std::vector<int> center_of_group(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

/// Conjugacy classes, each sorted, listed by least element.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> cls(g.order(), -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> c;
    for (int h = 0; h < g.order(); ++h) {
      int x = g.conj(h, a);
      if (cls[x] < 0) {
        cls[x] = static_cast<int>(classes.size());
        c.push_back(x);
      }
    }
    std::sort(c.begin(), c.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

/// All homomorphisms source -> target, sorted lexicographically by image.
/// Candidates are generator-image tuples for the greedy generators of the
/// source; the budget bounds |target|^(#generators).
inline std::vector<GroupHom> enumerate_homs(const GroupPtr& source, const GroupPtr& target,
                                            const Budget& budget = {}) {
  const FiniteGroup& g = *source;
  const FiniteGroup& h = *target;
  const std::vector<int> gens = greedy_generators(g);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) space = detail::sat_mul(space, h.order());
  budget.check("Hom(" + g.label() + "," + h.label() + ")", space, budget.hom_candidates);

  std::vector<std::vector<int>> found;
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> image(g.order());
  std::vector<int> queue;
  queue.reserve(g.order());
  for (;;) {
    std::fill(image.begin(), image.end(), -1);
    image[g.identity()] = h.identity();
    queue.assign(1, g.identity());
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int x = queue[qi];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int y = g.mul(x, gens[i]);
        int v = h.mul(image[x], choice[i]);
        if (image[y] < 0) {
          image[y] = v;
          queue.push_back(y);
        } else if (image[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) found.push_back(image);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == h.order()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<GroupHom> homs;
  homs.reserve(found.size());
  for (auto& img : found) homs.push_back(GroupHom{source, target, std::move(img)});
  return homs;
}

struct RepClass {
  int representative;        // index into the Hom list (least image array)
  std::vector<int> members;  // sorted Hom indices
};

/// Orbits of Hom(G,H) under conjugation in H, listed by representative.
inline std::vector<RepClass> rep_classes(const std::vector<GroupHom>& homs) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index[homs[i].image] = static_cast<int>(i);
  std::vector<int> cls(homs.size(), -1);
  std::vector<RepClass> out;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (cls[i] >= 0) continue;
    const FiniteGroup& h = *homs[i].target;
    RepClass rc{static_cast<int>(i), {}};
    for (int k = 0; k < h.order(); ++k) {
      std::vector<int> img = homs[i].image;
      for (int& v : img) v = h.conj(k, v);
      int j = index.at(img);
      if (cls[j] < 0) {
        cls[j] = static_cast<int>(out.size());
        rc.members.push_back(j);
      }
    }
    std::sort(rc.members.begin(), rc.members.end());
    out.push_back(std::move(rc));
  }
  return out;
}

inline std::vector<RepClass> rep_classes(const GroupPtr& g, const GroupPtr& h, const Budget& budget = {}) {
  return rep_classes(enumerate_homs(g, h, budget));
}

/// C(alpha) = { h : h alpha(g) h^-1 = alpha(g) for all g }.
inline std::vector<int> centralizer(const GroupHom& alpha) {
  const FiniteGroup& h = *alpha.target;
  std::vector<int> out;
  for (int k = 0; k < h.order(); ++k) {
    bool fixes = true;
    for (int v : alpha.image)
      if (h.conj(k, v) != v) {
        fixes = false;
        break;
      }
    if (fixes) out.push_back(k);
  }
  return out;
}

}  // namespace hcc
