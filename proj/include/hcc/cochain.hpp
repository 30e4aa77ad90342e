#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcc/abelian.hpp"
#include "hcc/budget.hpp"
#include "hcc/enriched.hpp"
#include "hcc/error.hpp"

namespace hcc {

/// One component of the source product groupoid at one object tuple.
/// Natural automorphisms of the composition functor on this component are
/// determined by their value at the representative, which ranges over
/// `elements`: the loops of μ(rep) commuting with μ of every factor loop.
struct PiBlock {
  int tuple = 0;
  std::vector<int> comps;  // component of each factor, slot i is H(x_{i+1}, x_i)
  std::vector<int> rep;    // representative 1-cell of each factor
  int mu_rep = 0;          // μ(rep) in H(x_s, x_0)
  std::vector<int> elements;
  int identity = 0;  // identity 2-cell of μ(rep)
  bool degenerate = false;
};

struct PiLevel {
  int s = 0;
  std::vector<std::vector<int>> tuples;  // lexicographic
  std::vector<PiBlock> blocks;           // by tuple, then lexicographic comps
  std::map<std::vector<int>, int> block_index;  // tuple id followed by comps
  std::vector<int> first_block;                 // per tuple, size tuples+1
};

/// A π₁ cochain: one 2-cell per block, the value at the block representative.
using Cochain = std::vector<int>;

/// Cosimplicial replacement restricted to π₁ at the composition basepoints,
/// levels 0..smax.
class CosimplicialPi1 {
 public:
  CosimplicialPi1(const EnrichedCategory& c, int smax, const Budget& budget = {}) : c_(c) {
    if (smax < 0) detail::fail(ErrorKind::ValidationError, "smax must be non-negative");
    for (int s = 0; s <= smax; ++s) levels_.push_back(build_level(s, budget));
  }

  const EnrichedCategory& category() const { return c_; }
  int smax() const { return static_cast<int>(levels_.size()) - 1; }
  const PiLevel& level(int s) const { return levels_[s]; }

  /// Target groupoid H(x_s, x_0) of a tuple.
  const FiniteGroupoid& target(const std::vector<int>& t) const { return c_.hom(t.back(), t.front()); }

  /// μ on 1-cells; left-nested composite f1 f2 ... fs.
  int mu(const std::vector<int>& t, const std::vector<int>& cells) const {
    const int s = static_cast<int>(t.size()) - 1;
    if (s == 0) return c_.unit(t[0]);
    int acc = cells[0];
    for (int i = 2; i <= s; ++i) acc = c_.comp(t[i], t[i - 1], t[0], acc, cells[i - 1]);
    return acc;
  }

  /// μ on 2-cells.
  int mu2(const std::vector<int>& t, const std::vector<int>& two_cells) const {
    const int s = static_cast<int>(t.size()) - 1;
    if (s == 0) return c_.hom(t[0], t[0]).identity(c_.unit(t[0]));
    int acc = two_cells[0];
    for (int i = 2; i <= s; ++i) acc = c_.comp2(t[i], t[i - 1], t[0], acc, two_cells[i - 1]);
    return acc;
  }

  /// Right-nested μ, used to confirm that bracketing is immaterial.
  int mu_right(const std::vector<int>& t, const std::vector<int>& cells) const {
    const int s = static_cast<int>(t.size()) - 1;
    if (s == 0) return c_.unit(t[0]);
    int acc = cells[s - 1];
    for (int i = s - 1; i >= 1; --i) acc = c_.comp(t[s], t[i], t[i - 1], cells[i - 1], acc);
    return acc;
  }

  /// Block containing the object `cells` of tuple `t`.
  int block_of(int s, const std::vector<int>& t, const std::vector<int>& cells) const {
    std::vector<int> key{tuple_id(s, t)};
    for (int i = 0; i < s; ++i) key.push_back(c_.hom(t[i + 1], t[i]).component_of(cells[i]));
    return levels_[s].block_index.at(key);
  }

  int tuple_id(int s, const std::vector<int>& t) const {
    const auto& ts = levels_[s].tuples;
    return static_cast<int>(std::lower_bound(ts.begin(), ts.end(), t) - ts.begin());
  }

  /// Value of a natural automorphism at an arbitrary object, given its
  /// value `a` at the block representative: M a M^-1 with M = μ(transport).
  int transport_value(int s, const std::vector<int>& t, const std::vector<int>& cells, int a) const {
    if (s == 0) return a;
    std::vector<int> path(s);
    for (int i = 0; i < s; ++i) path[i] = c_.hom(t[i + 1], t[i]).transport(cells[i]);
    const int m = mu2(t, path);
    const auto& tg = target(t);
    return tg.compose(tg.compose(m, a), tg.inverse(m));
  }

  /// Inverse of transport_value: brings a value at `cells` back to the representative.
  int transport_back(int s, const std::vector<int>& t, const std::vector<int>& cells, int v) const {
    if (s == 0) return v;
    std::vector<int> path(s);
    for (int i = 0; i < s; ++i) path[i] = c_.hom(t[i + 1], t[i]).transport(cells[i]);
    const int m = mu2(t, path);
    const auto& tg = target(t);
    return tg.compose(tg.compose(tg.inverse(m), v), m);
  }

  /// Source block read by the k-th coface (level s-1 -> s) at target block b.
  int coface_source(int s, int k, int b) const {
    auto [t, cells] = coface_source_object(s, k, b);
    return block_of(s - 1, t, cells);
  }

  /// Value at block b of d^k applied to a cochain, reading block values via
  /// `value(block)`.
  int coface_component(int s, int k, int b, const std::function<int(int)>& value) const {
    const PiBlock& blk = levels_[s].blocks[b];
    const auto& t = levels_[s].tuples[blk.tuple];
    auto [st, sc] = coface_source_object(s, k, b);
    const int src_block = block_of(s - 1, st, sc);
    const int v = transport_value(s - 1, st, sc, value(src_block));
    const auto& f = blk.rep;
    if (k == 0) {
      // id_{f1} whiskered on the left
      return c_.comp2(t[s], t[1], t[0], c_.hom(t[1], t[0]).identity(f[0]), v);
    }
    if (k == s) {
      // id_{fs} whiskered on the right
      return c_.comp2(t[s], t[s - 1], t[0], v, c_.hom(t[s], t[s - 1]).identity(f[s - 1]));
    }
    return v;
  }

  /// Source block read by the k-th codegeneracy (level s+1 -> s) at block b.
  int codegeneracy_component(int s, int k, int b, const std::function<int(int)>& value) const {
    auto [st, sc] = codegeneracy_source_object(s, k, b);
    const int src_block = block_of(s + 1, st, sc);
    return transport_value(s + 1, st, sc, value(src_block));
  }

  int codegeneracy_source(int s, int k, int b) const {
    auto [st, sc] = codegeneracy_source_object(s, k, b);
    return block_of(s + 1, st, sc);
  }

  Cochain coface(int s, int k, const Cochain& tau) const {
    Cochain out(levels_[s].blocks.size());
    for (std::size_t b = 0; b < out.size(); ++b)
      out[b] = coface_component(s, k, static_cast<int>(b), [&](int i) { return tau[i]; });
    return out;
  }

  Cochain codegeneracy(int s, int k, const Cochain& tau) const {
    Cochain out(levels_[s].blocks.size());
    for (std::size_t b = 0; b < out.size(); ++b)
      out[b] = codegeneracy_component(s, k, static_cast<int>(b), [&](int i) { return tau[i]; });
    return out;
  }

  Cochain identity(int s) const {
    Cochain out;
    for (const auto& b : levels_[s].blocks) out.push_back(b.identity);
    return out;
  }

  Cochain multiply(int s, const Cochain& a, const Cochain& b) const {
    Cochain out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = block_target(s, static_cast<int>(i)).compose(a[i], b[i]);
    return out;
  }

  Cochain inverse(int s, const Cochain& a) const {
    Cochain out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = block_target(s, static_cast<int>(i)).inverse(a[i]);
    return out;
  }

  /// Alternating product d^0 (d^1)^-1 d^2 ... from level s-1 to level s.
  Cochain delta(int s, const Cochain& tau) const {
    Cochain out = identity(s);
    for (int k = 0; k <= s; ++k) {
      Cochain d = coface(s, k, tau);
      out = multiply(s, out, k % 2 ? inverse(s, d) : d);
    }
    return out;
  }

  const FiniteGroupoid& block_target(int s, int b) const {
    return target(levels_[s].tuples[levels_[s].blocks[b].tuple]);
  }

  /// Whether every block value lies in its automorphism set.
  bool is_cochain(int s, const Cochain& tau) const {
    if (tau.size() != levels_[s].blocks.size()) return false;
    for (std::size_t b = 0; b < tau.size(); ++b) {
      const auto& el = levels_[s].blocks[b].elements;
      if (!std::binary_search(el.begin(), el.end(), tau[b])) return false;
    }
    return true;
  }

  bool is_normalized(int s, const Cochain& tau) const {
    for (std::size_t b = 0; b < tau.size(); ++b)
      if (levels_[s].blocks[b].degenerate && tau[b] != levels_[s].blocks[b].identity) return false;
    return true;
  }

 private:
  std::pair<std::vector<int>, std::vector<int>> coface_source_object(int s, int k, int b) const {
    const PiBlock& blk = levels_[s].blocks[b];
    const auto& t = levels_[s].tuples[blk.tuple];
    const auto& f = blk.rep;
    std::vector<int> st, sc;
    if (k == 0) {
      st.assign(t.begin() + 1, t.end());
      sc.assign(f.begin() + 1, f.end());
    } else if (k == s) {
      st.assign(t.begin(), t.end() - 1);
      sc.assign(f.begin(), f.end() - 1);
    } else {
      for (int i = 0; i <= s; ++i)
        if (i != k) st.push_back(t[i]);
      for (int i = 1; i <= s; ++i) {
        if (i == k) {
          sc.push_back(c_.comp(t[k + 1], t[k], t[k - 1], f[k - 1], f[k]));
          ++i;
        } else {
          sc.push_back(f[i - 1]);
        }
      }
    }
    return {st, sc};
  }

  std::pair<std::vector<int>, std::vector<int>> codegeneracy_source_object(int s, int k, int b) const {
    const PiBlock& blk = levels_[s].blocks[b];
    const auto& t = levels_[s].tuples[blk.tuple];
    std::vector<int> st(t.begin(), t.begin() + k + 1);
    st.push_back(t[k]);
    st.insert(st.end(), t.begin() + k + 1, t.end());
    std::vector<int> sc(blk.rep.begin(), blk.rep.begin() + k);
    sc.push_back(c_.unit(t[k]));
    sc.insert(sc.end(), blk.rep.begin() + k, blk.rep.end());
    return {st, sc};
  }

  PiLevel build_level(int s, const Budget& budget) {
    const int n = c_.object_count();
    PiLevel lv;
    lv.s = s;
    std::uint64_t ntuples = 1;
    for (int i = 0; i <= s; ++i) ntuples = detail::sat_mul(ntuples, n);
    budget.check("level " + std::to_string(s) + " tuples", ntuples, budget.groupoid_cells);
    std::vector<int> t(s + 1, 0);
    if (n > 0)
      for (;;) {
        lv.tuples.push_back(t);
        int i = s;
        while (i >= 0 && ++t[i] == n) t[i--] = 0;
        if (i < 0) break;
      }
    std::uint64_t cells = 0;
    for (std::size_t ti = 0; ti < lv.tuples.size(); ++ti) {
      lv.first_block.push_back(static_cast<int>(lv.blocks.size()));
      const auto& tu = lv.tuples[ti];
      std::vector<const FiniteGroupoid*> factors;
      for (int i = 0; i < s; ++i) factors.push_back(&c_.hom(tu[i + 1], tu[i]));
      std::vector<int> comps(s, 0);
      bool empty = false;
      for (auto* a : factors)
        if (a->component_count() == 0) empty = true;
      if (empty) continue;
      const FiniteGroupoid& tg = target(tu);
      for (;;) {
        PiBlock blk;
        blk.tuple = static_cast<int>(ti);
        blk.comps = comps;
        for (int i = 0; i < s; ++i) blk.rep.push_back(factors[i]->representative(comps[i]));
        blk.mu_rep = mu(tu, blk.rep);
        if (s >= 2 && mu_right(tu, blk.rep) != blk.mu_rep)
          detail::fail(ErrorKind::NotAssociative, "iterated composite depends on bracketing at tuple ", ti);
        blk.identity = tg.identity(blk.mu_rep);
        // μ of factor loops, identities elsewhere
        std::vector<int> gens;
        for (int i = 0; i < s; ++i)
          for (int l : factors[i]->loops(blk.rep[i])) {
            std::vector<int> cell(s);
            for (int j = 0; j < s; ++j) cell[j] = factors[j]->identity(blk.rep[j]);
            cell[i] = l;
            gens.push_back(mu2(tu, cell));
          }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (int a : tg.loops(blk.mu_rep)) {
          bool central = true;
          for (int g : gens)
            if (tg.compose(a, g) != tg.compose(g, a)) {
              central = false;
              break;
            }
          if (central) blk.elements.push_back(a);
        }
        for (int i = 0; i < s; ++i)
          if (tu[i] == tu[i + 1] && comps[i] == factors[i]->component_of(c_.unit(tu[i]))) blk.degenerate = true;
        cells += blk.elements.size();
        budget.check("π1 cochain cells", cells, budget.groupoid_cells);
        std::vector<int> key{static_cast<int>(ti)};
        key.insert(key.end(), comps.begin(), comps.end());
        lv.block_index[key] = static_cast<int>(lv.blocks.size());
        lv.blocks.push_back(std::move(blk));
        int i = s - 1;
        while (i >= 0 && ++comps[i] == factors[i]->component_count()) comps[i--] = 0;
        if (i < 0) break;
      }
    }
    lv.first_block.push_back(static_cast<int>(lv.blocks.size()));
    return lv;
  }

  const EnrichedCategory& c_;
  std::vector<PiLevel> levels_;
};

/// A finite abelian group reported by invariant factors, with
/// representing cochains (nontrivial block values only) for its generators.
struct FinAbGroup {
  AbelianInvariants invariants;
  std::vector<std::vector<std::pair<int, int>>> representatives;  // (block, 2-cell)
  std::uint64_t order() const { return invariants.order(); }
  bool trivial() const { return invariants.trivial(); }
};

namespace detail {

inline void require_abelian(const CosimplicialPi1& cx, int s, int b) {
  const PiBlock& blk = cx.level(s).blocks[b];
  const auto& tg = cx.block_target(s, b);
  for (std::size_t i = 0; i < blk.elements.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      int a = blk.elements[i], c = blk.elements[j];
      if (tg.compose(a, c) != tg.compose(c, a)) {
        std::string tuple;
        for (int x : cx.level(s).tuples[blk.tuple]) tuple += (tuple.empty() ? "" : ",") + std::to_string(x);
        fail(ErrorKind::NonAbelianEntry, "natural automorphisms at level ", s, " tuple (", tuple, ") block ", b,
             " do not commute: 2-cells ", a, " and ", c);
      }
    }
}

}  // namespace detail

/// Product over all blocks of a level, as an abelian group.
inline FinAbGroup pi1_entry(const CosimplicialPi1& cx, int s) {
  std::vector<PrimaryFactor> factors;
  const auto& lv = cx.level(s);
  for (std::size_t b = 0; b < lv.blocks.size(); ++b) {
    detail::require_abelian(cx, s, static_cast<int>(b));
    const auto& tg = cx.block_target(s, static_cast<int>(b));
    auto basis = cyclic_basis(lv.blocks[b].elements, lv.blocks[b].identity,
                              [&](int x, int y) { return tg.compose(x, y); });
    for (auto f : basis.factors()) factors.push_back(f);
  }
  return FinAbGroup{AbelianInvariants::from_primary(factors), {}};
}

/// The normalized π₁ cochain complex with its differentials, decomposed
/// prime by prime into coordinates on cyclic generators.
class NormalizedComplex {
 public:
  struct Coordinate {
    int block;
    int generator;  // index into the block's cyclic basis
  };
  struct PrimePart {
    int p;
    std::vector<std::vector<Coordinate>> coords;  // per level
    std::vector<std::vector<int>> exponents;      // per level
    // delta[s][i] = image of the i-th generator of N^s in N^{s+1} coordinates
    std::vector<std::vector<PrimeLattice::Vec>> delta;
  };

  NormalizedComplex(const CosimplicialPi1& cx) : cx_(cx) {
    const int smax = cx.smax();
    bases_.resize(smax + 1);
    std::vector<int> primes;
    for (int s = 0; s <= smax; ++s) {
      const auto& lv = cx.level(s);
      bases_[s].resize(lv.blocks.size());
      for (std::size_t b = 0; b < lv.blocks.size(); ++b) {
        if (lv.blocks[b].degenerate) continue;
        detail::require_abelian(cx, s, static_cast<int>(b));
        const auto& tg = cx.block_target(s, static_cast<int>(b));
        bases_[s][b] = cyclic_basis(lv.blocks[b].elements, lv.blocks[b].identity,
                                    [&tg](int x, int y) { return tg.compose(x, y); });
        for (const auto& g : bases_[s][b].generators) primes.push_back(g.factor.p);
      }
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (int p : primes) parts_.push_back(build_prime(p));
  }

  const CosimplicialPi1& cosimplicial() const { return cx_; }
  const std::vector<PrimePart>& primes() const { return parts_; }
  const CyclicBasis& basis(int s, int b) const { return bases_[s][b]; }

  /// Invariant factors of N^s.
  AbelianInvariants group(int s) const {
    std::vector<PrimaryFactor> f;
    for (const auto& part : parts_)
      for (int e : part.exponents[s]) f.push_back({part.p, e});
    return AbelianInvariants::from_primary(f);
  }

  /// Checks δ_{s+1} δ_s = 0 on generators; throws InconsistencyDetected.
  void check_delta_squared() const {
    for (const auto& part : parts_)
      for (int s = 0; s + 2 <= cx_.smax(); ++s)
        for (std::size_t i = 0; i < part.delta[s].size(); ++i) {
          const auto& v = part.delta[s][i];
          const auto& exps = part.exponents[s + 2];
          PrimeLattice::Vec acc(exps.size(), 0);
          for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t r = 0; r < exps.size(); ++r) {
              const std::int64_t m = ipow(part.p, exps[r]);
              acc[r] = (acc[r] + v[j] % m * (part.delta[s + 1][j][r] % m)) % m;
            }
          for (auto x : acc)
            if (x != 0)
              detail::fail(ErrorKind::InconsistencyDetected, "δδ is nonzero at level ", s, " generator ", i, " (p=", part.p,
                           ")");
        }
  }

  /// ker δ_s / im δ_{s-1} (im taken as 0 for s = 0).
  FinAbGroup cohomology(int s) const {
    if (s + 1 > cx_.smax())
      detail::fail(ErrorKind::ValidationError, "cohomology at level ", s, " needs levels through ", s + 1);
    std::vector<PrimaryFactor> factors;
    FinAbGroup out;
    for (const auto& part : parts_) {
      const auto& exps = part.exponents[s];
      auto ker = prime_kernel(part.p, exps, part.exponents[s + 1], part.delta[s]);
      std::vector<PrimeLattice::Vec> im;
      if (s > 0) im = part.delta[s - 1];
      auto q = prime_subquotient(part.p, exps, ker, im);
      for (auto f : q.factors()) factors.push_back(f);
      for (const auto& rep : q.representatives) out.representatives.push_back(to_cochain(s, part, rep));
    }
    out.invariants = AbelianInvariants::from_primary(factors);
    return out;
  }

  /// Block values of a coordinate vector, nontrivial entries only.
  std::vector<std::pair<int, int>> to_cochain(int s, const PrimePart& part, const PrimeLattice::Vec& v) const {
    std::map<int, int> values;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const auto& co = part.coords[s][j];
      const auto& tg = cx_.block_target(s, co.block);
      const auto& gen = bases_[s][co.block].generators[co.generator];
      auto it = values.find(co.block);
      int x = it == values.end() ? cx_.level(s).blocks[co.block].identity : it->second;
      const std::int64_t reps = v[j] % gen.factor.order();
      for (std::int64_t r = 0; r < reps; ++r) x = tg.compose(x, gen.element);
      values[co.block] = x;
    }
    std::vector<std::pair<int, int>> out;
    for (auto [b, x] : values)
      if (x != cx_.level(s).blocks[b].identity) out.push_back({b, x});
    return out;
  }

 private:
  PrimePart build_prime(int p) {
    PrimePart part;
    part.p = p;
    const int smax = cx_.smax();
    part.coords.resize(smax + 1);
    part.exponents.resize(smax + 1);
    std::vector<std::map<int, std::vector<int>>> position(smax + 1);  // block -> coordinate index per generator
    for (int s = 0; s <= smax; ++s) {
      const auto& lv = cx_.level(s);
      for (std::size_t b = 0; b < lv.blocks.size(); ++b) {
        if (lv.blocks[b].degenerate) continue;
        const auto& gens = bases_[s][b].generators;
        auto& pos = position[s][static_cast<int>(b)];
        pos.assign(gens.size(), -1);
        for (std::size_t g = 0; g < gens.size(); ++g)
          if (gens[g].factor.p == p) {
            pos[g] = static_cast<int>(part.coords[s].size());
            part.coords[s].push_back({static_cast<int>(b), static_cast<int>(g)});
            part.exponents[s].push_back(gens[g].factor.exponent);
          }
      }
    }
    part.delta.resize(smax);
    for (int s = 0; s < smax; ++s) {
      // which (target block, k) read each source block
      std::map<int, std::vector<std::pair<int, int>>> readers;
      const auto& tl = cx_.level(s + 1);
      for (std::size_t b = 0; b < tl.blocks.size(); ++b)
        for (int k = 0; k <= s + 1; ++k)
          readers[cx_.coface_source(s + 1, k, static_cast<int>(b))].push_back({static_cast<int>(b), k});
      for (const auto& co : part.coords[s]) {
        const int gen = bases_[s][co.block].generators[co.generator].element;
        std::map<int, int> image;  // target block -> accumulated value
        for (auto [tb, k] : readers[co.block]) {
          int v = cx_.coface_component(s + 1, k, tb, [&](int blk) {
            return blk == co.block ? gen : cx_.level(s).blocks[blk].identity;
          });
          const auto& tg = cx_.block_target(s + 1, tb);
          if (k % 2) v = tg.inverse(v);
          auto it = image.find(tb);
          image[tb] = it == image.end() ? v : tg.compose(it->second, v);
        }
        PrimeLattice::Vec row(part.coords[s + 1].size(), 0);
        for (auto [tb, v] : image) {
          const auto& blk = tl.blocks[tb];
          if (v == blk.identity) continue;
          if (blk.degenerate)
            detail::fail(ErrorKind::InconsistencyDetected, "δ of a normalized cochain is nonzero on degenerate block ", tb,
                         " at level ", s + 1);
          if (!std::binary_search(blk.elements.begin(), blk.elements.end(), v))
            detail::fail(ErrorKind::InconsistencyDetected, "coface value is not a natural automorphism at level ", s + 1,
                         " block ", tb);
          const auto& basis = bases_[s + 1][tb];
          const auto& c = basis.coords.at(v);
          const auto& pos = position[s + 1].at(tb);
          for (std::size_t g = 0; g < c.size(); ++g) {
            if (c[g] == 0) continue;
            if (pos[g] < 0)
              detail::fail(ErrorKind::InconsistencyDetected, "δ does not preserve the ", p, "-primary part");
            row[pos[g]] = c[g];
          }
        }
        part.delta[s].push_back(std::move(row));
      }
    }
    return part;
  }

  const CosimplicialPi1& cx_;
  std::vector<std::vector<CyclicBasis>> bases_;
  std::vector<PrimePart> parts_;
};

/// E₂ entries in total degrees 0 and 1. `e2_00` is the equalizer of the two
/// π₀-level cofaces (families whose left and right whiskerings are
/// naturally isomorphic on every hom-groupoid); `ho_center` is Z(Ho C).
struct SpectralPage {
  FamilyMonoid ho_center;
  FamilyMonoid e2_00;
  std::optional<FinAbGroup> e2_01;
  std::optional<FinAbGroup> e2_11;
  std::optional<FinAbGroup> e2_21;
  std::vector<AbelianInvariants> normalized;  // N^0..N^smax
};

inline FamilyMonoid pi0_equalizer(const EnrichedCategory& c, const FamilyMonoid& ho) {
  std::vector<std::vector<int>> keep;
  for (const auto& z : ho.elements) {
    std::vector<int> phi(z.size());
    for (int x = 0; x < c.object_count(); ++x) phi[x] = c.hom(x, x).representative(z[x]);
    if (whiskerings_isomorphic(c, phi)) keep.push_back(z);
  }
  return FamilyMonoid::build(
      std::move(keep), ho.elements[ho.identity],
      [&](const std::vector<int>& a, const std::vector<int>& b) { return ho.elements[ho.table[ho.index_of(a)][ho.index_of(b)]]; },
      "π0 equalizer");
}

inline SpectralPage e2_page(const EnrichedCategory& c, int smax = 3, const Budget& budget = {}) {
  SpectralPage page;
  page.ho_center = ho_center(c, budget);
  page.e2_00 = pi0_equalizer(c, page.ho_center);
  CosimplicialPi1 cx(c, smax, budget);
  NormalizedComplex nc(cx);
  nc.check_delta_squared();
  for (int s = 0; s <= smax; ++s) page.normalized.push_back(nc.group(s));
  if (smax >= 1) page.e2_01 = nc.cohomology(0);
  if (smax >= 2) page.e2_11 = nc.cohomology(1);
  if (smax >= 3) page.e2_21 = nc.cohomology(2);
  return page;
}

}  // namespace hcc
