// Acceptance checks, one line per criterion:
//   acceptance [--criterion k]
// Exit status is 0 only when every requested criterion passes.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hcc/band.hpp"
#include "hcc/cochain.hpp"
#include "hcc/coherent.hpp"
#include "oracles.hpp"
#include "random_fixtures.hpp"
#include "shipped.hpp"

using namespace hcc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string factors(const AbelianInvariants& a) { return a.str(); }

GroupPtr g(FiniteGroup x) { return share(std::move(x)); }

// π₀ → Z(Ho): which Ho-center elements are hit, and how often
std::map<std::vector<int>, int> fibers(const Pi0Monoid& p) {
  std::map<std::vector<int>, int> m;
  for (const auto& img : p.ho_image) ++m[img];
  return m;
}

void criterion1(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto c = build_band_category({g(FiniteGroup::trivial()), g(FiniteGroup::cyclic(2)), g(FiniteGroup::cyclic(3)),
                                g(FiniteGroup::symmetric(3))});
  auto page = e2_page(c, 3);
  auto z = enumerate_coherent_families(c);
  auto p0 = pi0_monoid(z);
  auto p1 = pi1_at_identity(z);
  const double t = seconds_since(t0);
  auto fib = fibers(p0);
  bool injective = true;
  for (const auto& [img, k] : fib) injective = injective && k == 1;
  const bool surjective = static_cast<int>(fib.size()) == page.ho_center.size();
  o.detail << "band{1,Z2,Z3,S3}: E2^{0,1}=" << factors(page.e2_01->invariants)
           << " E2^{1,1}=" << factors(page.e2_11->invariants) << " pi1=" << factors(p1.invariants)
           << " |pi0|=" << p0.size() << " |Z(Ho)|=" << page.ho_center.size() << " |E2^{0,0}|=" << page.e2_00.size()
           << " time=" << t << "s";
  o.require(page.e2_01->trivial(), "E2^{0,1} = 0");
  o.require(page.e2_11->trivial(), "E2^{1,1} = 0");
  o.require(p1.trivial(), "pi1 = 0");
  o.require(injective && surjective, "pi0 -> Z(Ho) bijective");
  o.require(t < 60, "runtime < 60 s");
}

void criterion2(Outcome& o) {
  auto c = build_band_category({g(FiniteGroup::trivial()), g(FiniteGroup::cyclic(2))});
  auto ref = oracle::pi0(c);
  auto z = enumerate_coherent_families(c);
  auto p0 = pi0_monoid(z);
  auto page = e2_page(c, 3);
  // spectral side: liftable elements of E2^{0,0}, each with fiber E2^{1,1}
  std::uint64_t assembled = 0;
  for (const auto& e : page.e2_00.elements)
    if (lift_element(c, e).liftable) assembled += page.e2_11->order();
  auto idempotent_pair = [](const std::vector<std::vector<int>>& t, int id) {
    if (t.size() != 2) return false;
    const int e = 1 - id;
    return t[e][e] == e && t[id][e] == e && t[e][id] == e;
  };
  o.detail << "band{1,Z2}: brute |pi0|=" << ref.classes << " exact |pi0|=" << p0.size() << " spectral |pi0|=" << assembled
           << " (|Z(Ho)|=" << page.ho_center.size() << " |E2^{0,0}|=" << page.e2_00.size() << ")";
  o.require(ref.classes == p0.size() && assembled == static_cast<std::uint64_t>(p0.size()),
            "brute force, exact and spectral agree");
  o.require(idempotent_pair(ref.table, ref.identity), "brute-force pi0 is the order-2 idempotent monoid");
  o.require(idempotent_pair(p0.table, p0.identity), "exact pi0 is the order-2 idempotent monoid");
}

void criterion3(Outcome& o) {
  int count = 0;
  bool saw_monoid = false;
  for (const auto& sh : samples::shipped_categories()) {
    if (sh.entry.kind != "discrete") continue;
    const auto& c = *sh.entry.category;
    ++count;
    saw_monoid = saw_monoid || c.object_count() == 1;
    auto z = enumerate_coherent_families(c);
    auto strict = strict_center_objects(c);
    bool same = z.object_count() == static_cast<int>(strict.size());
    for (int i = 0; same && i < z.object_count(); ++i) same = z.object(i).phi0 == strict[i];
    bool only_ids = true;
    for (int i = 0; i < z.object_count(); ++i)
      for (int j = 0; j < z.object_count(); ++j) {
        auto ms = z.modifications(i, j);
        if (i != j) only_ids = only_ids && ms.empty();
        else {
          only_ids = only_ids && ms.size() == 1;
          for (int x = 0; only_ids && x < c.object_count(); ++x)
            only_ids = ms[0].component[x] == c.hom(x, x).identity(strict[i][x]);
        }
      }
    o.detail << sh.name << ":" << z.object_count() << "=" << strict.size() << " ";
    o.require(same, sh.name + " objects = strict center");
    o.require(only_ids, sh.name + " identity morphisms only");
  }
  o.require(count >= 3 && saw_monoid, "at least 3 discrete fixtures including a monoid");
}

void criterion4(Outcome& o) {
  for (auto [label, expect] : std::vector<std::pair<std::string, std::vector<std::uint64_t>>>{
           {"point_Z2", {2}}, {"point_Z4", {4}}, {"point_Z2xZ2", {2, 2}}, {"point_Z6", {6}}}) {
    const auto& c = samples::shipped("coefficients", label);
    auto z = enumerate_coherent_families(c);
    auto p0 = pi0_monoid(z);
    auto p1 = pi1_at_identity(z);
    auto page = e2_page(c, 3);
    o.detail << label << ": |pi0|=" << p0.size() << " pi1=" << factors(p1.invariants)
             << " E2^{0,1}=" << factors(page.e2_01->invariants) << "  ";
    o.require(p0.size() == 1, label + " pi0 trivial");
    o.require(p1.invariants.factors == expect, label + " pi1 = A");
    o.require(page.e2_01->invariants.factors == expect, label + " E2^{0,1} = A");
  }
}

void criterion5(Outcome& o) {
  std::vector<FiniteGroup> groups{FiniteGroup::cyclic(4), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)};
  std::vector<Arrow> arrows;
  std::vector<int> ids, offset;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    offset.push_back(static_cast<int>(arrows.size()));
    ids.push_back(offset.back() + groups[i].identity());
    for (int a = 0; a < groups[i].order(); ++a) arrows.push_back({static_cast<int>(i), static_cast<int>(i)});
  }
  auto u = share(FiniteGroupoid::make(
      3, arrows, ids,
      [&](int x, int y) {
        int i = arrows[y].src;
        return offset[i] + groups[i].mul(x - offset[i], y - offset[i]);
      },
      "Z4+S3+D4"));
  auto parts = groupoid_center_splitting(u);
  std::size_t product = 1;
  bool each = parts.size() == groups.size();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::size_t zi = oracle::center(groups[i]).size();
    product *= zi;
    if (each) each = static_cast<std::size_t>(parts[i].center.order()) == zi;
  }
  FiniteGroup aut = aut_group_of_functor(identity_functor(u));
  o.detail << "Z4+S3+D4: |Aut(id)|=" << aut.order() << " prod |Z(G_i)|=" << product
           << " Aut(id)=" << abelian_invariants(aut).str();
  o.require(each, "per-component centers");
  o.require(static_cast<std::size_t>(aut.order()) == product, "Aut(id) = product of centers");
  o.require(abelian_invariants(aut).factors == std::vector<std::uint64_t>{2, 4}, "Aut(id) = Z2 x Z4");
}

void criterion6(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  samples::FixtureGenerator gen(20240601u);
  int bad = 0, objects = 0, cells = 0;
  for (int i = 0; i < 50; ++i) {
    auto f = gen.next();
    const auto& c = f.category;
    objects = std::max(objects, c.object_count());
    for (int x = 0; x < c.object_count(); ++x)
      for (int y = 0; y < c.object_count(); ++y) cells = std::max(cells, c.hom(x, y).morphism_count());
    try {
      auto z = enumerate_coherent_families(c);
      auto p0 = pi0_monoid(z);
      auto r = compare_with_spectral(c, e2_page(c, 3), z, p0, pi1_at_identity(z));
      if (!r.ok()) {
        ++bad;
        o.detail << " " << f.description << ": " << r.messages.front();
      }
    } catch (const Error& e) {
      ++bad;
      o.detail << " " << f.description << ": " << e.what();
    }
  }
  const double t = seconds_since(t0);
  o.detail << "50 random categories, max objects " << objects << ", max 2-cells per hom " << cells << ", inconsistent "
           << bad << ", time=" << t << "s";
  o.require(bad == 0, "no inconsistency");
  o.require(objects <= 3 && cells <= 12, "size limits");
  o.require(t < 600, "runtime < 10 min");
}

// criterion 7 pieces

bool cosimplicial_identities(const CosimplicialPi1& cx) {
  // spanning cochains: identity except one block set to one element
  auto spanning = [&](int s) {
    std::vector<Cochain> out;
    for (std::size_t b = 0; b < cx.level(s).blocks.size(); ++b)
      for (int v : cx.level(s).blocks[b].elements) {
        Cochain t = cx.identity(s);
        t[b] = v;
        out.push_back(t);
      }
    return out;
  };
  const int smax = cx.smax();
  for (int s = 1; s + 1 <= smax; ++s)
    for (const auto& t : spanning(s - 1))
      for (int j = 0; j <= s + 1; ++j)
        for (int i = 0; i < j; ++i)
          if (cx.coface(s + 1, j, cx.coface(s, i, t)) != cx.coface(s + 1, i, cx.coface(s, j - 1, t))) return false;
  for (int s = 0; s + 1 <= smax; ++s)
    for (const auto& t : spanning(s))
      for (int j = 0; j <= s; ++j)
        for (int i = 0; i <= s + 1; ++i) {
          Cochain lhs = cx.codegeneracy(s, j, cx.coface(s + 1, i, t));
          Cochain rhs = (i == j || i == j + 1) ? t
                        : i < j                ? cx.coface(s, i, cx.codegeneracy(s - 1, j - 1, t))
                                               : cx.coface(s, i - 1, cx.codegeneracy(s - 1, j, t));
          if (lhs != rhs) return false;
        }
  for (int s = 0; s + 2 <= smax; ++s)
    for (const auto& t : spanning(s + 2))
      for (int j = 0; j <= s; ++j)
        for (int i = 0; i <= j; ++i)
          if (cx.codegeneracy(s, j, cx.codegeneracy(s + 1, i, t)) !=
              cx.codegeneracy(s, i, cx.codegeneracy(s + 1, j + 1, t)))
            return false;
  // multiplicativity on pairs of spanning cochains
  for (int s = 1; s <= smax; ++s) {
    auto sp = spanning(s - 1);
    for (std::size_t a = 0; a < sp.size(); ++a)
      for (std::size_t b = a; b < sp.size() && b < a + 8; ++b)
        for (int k = 0; k <= s; ++k)
          if (cx.coface(s, k, cx.multiply(s - 1, sp[a], sp[b])) !=
              cx.multiply(s, cx.coface(s, k, sp[a]), cx.coface(s, k, sp[b])))
            return false;
  }
  return true;
}

bool abelian_levels(const CosimplicialPi1& cx) {
  try {
    for (int s = 0; s <= cx.smax(); ++s) pi1_entry(cx, s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonAbelianEntry) throw;
    return false;
  }
  return true;
}

bool delta_squared(const CosimplicialPi1& cx) {
  if (!abelian_levels(cx)) return true;  // δ is only a differential on abelian entries
  for (int s = 1; s + 1 <= cx.smax(); ++s)
    for (std::size_t b = 0; b < cx.level(s - 1).blocks.size(); ++b)
      for (int v : cx.level(s - 1).blocks[b].elements) {
        Cochain t = cx.identity(s - 1);
        t[b] = v;
        if (cx.delta(s + 1, cx.delta(s, t)) != cx.identity(s + 1)) return false;
      }
  NormalizedComplex nc(cx);
  nc.check_delta_squared();
  return true;
}

bool one_cells_invertible(const EnrichedCategory& c) {
  const int n = c.object_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int f = 0; f < c.hom(x, y).object_count(); ++f) {
        bool found = false;
        for (int h = 0; h < c.hom(y, x).object_count() && !found; ++h)
          found = c.hom(x, x).component_of(c.comp(x, y, x, h, f)) == c.hom(x, x).component_of(c.unit(x)) &&
                  c.hom(y, y).component_of(c.comp(y, x, y, f, h)) == c.hom(y, y).component_of(c.unit(y));
        if (!found) return false;
      }
  return true;
}

bool group_table(const std::vector<std::vector<int>>& t) {
  for (const auto& row : t) {
    std::set<int> s(row.begin(), row.end());
    if (s.size() != t.size()) return false;
  }
  return true;
}

bool group_core(const FiniteGroup& gr) {
  int total = 0;
  for (const auto& cls : conjugacy_classes(gr)) {
    int stab = 0;
    for (int k = 0; k < gr.order(); ++k) stab += gr.conj(k, cls.front()) == cls.front();
    if (static_cast<int>(cls.size()) * stab != gr.order()) return false;
    total += static_cast<int>(cls.size());
  }
  return total == gr.order();
}

bool hom_enumeration(const GroupPtr& a, const GroupPtr& b) {
  auto homs = enumerate_homs(a, b);
  auto brute = oracle::all_homs(*a, *b);
  std::vector<std::vector<int>> images;
  for (const auto& f : homs) images.push_back(f.image);
  std::sort(images.begin(), images.end());
  std::sort(brute.begin(), brute.end());
  if (images != brute) return false;
  std::size_t total = 0;
  for (const auto& rc : rep_classes(homs)) {
    if (rc.members.size() * centralizer(homs[rc.representative]).size() != static_cast<std::size_t>(b->order()))
      return false;
    total += rc.members.size();
  }
  return total == homs.size();
}

void criterion7(Outcome& o) {
  int cats = 0, invertible = 0;
  std::set<std::string> groups_seen;
  std::vector<GroupPtr> groups;
  for (const auto& f : samples::shipped_files())
    for (const auto& [label, gp] : samples::load_shipped(f).groups)
      if (groups_seen.insert(gp->label()).second) groups.push_back(gp);
  for (const auto& gp : groups) o.require(group_core(*gp), "orbit-stabilizer on " + gp->label());
  for (const auto& a : groups)
    for (const auto& b : groups)
      if (std::pow(static_cast<double>(b->order()), a->order()) <= 1e5)
        o.require(hom_enumeration(a, b), "hom enumeration " + a->label() + "->" + b->label());
  for (const auto& sh : samples::shipped_categories()) {
    const auto& c = *sh.entry.category;
    ++cats;
    CosimplicialPi1 cx(c, 3);
    o.require(cosimplicial_identities(cx), sh.name + " cosimplicial identities");
    try {
      o.require(delta_squared(cx), sh.name + " delta squared");
    } catch (const Error& e) {
      o.require(false, sh.name + " delta squared: " + e.what());
    }
    o.require(strict_center(c).monoid.commutative(), sh.name + " strict center commutative");
    auto z = enumerate_coherent_families(c);
    auto p0 = pi0_monoid(z);
    auto p1 = pi1_at_identity(z);
    o.require(p0.commutative(), sh.name + " pi0 commutative");
    if (one_cells_invertible(c)) {
      ++invertible;
      o.require(group_table(p0.table), sh.name + " pi0 is a group");
    }
    for (int x = 0; x < c.object_count(); ++x) {
      auto d = duplicate_object(c, x);
      auto zd = enumerate_coherent_families(d);
      o.require(pi0_monoid(zd).size() == p0.size(), sh.name + " duplicate pi0");
      o.require(pi1_at_identity(zd).invariants == p1.invariants, sh.name + " duplicate pi1");
    }
  }
  o.detail << cats << " shipped categories, " << groups.size() << " shipped groups, " << invertible
           << " with invertible 1-cells";
  o.require(invertible > 0, "some fixture with invertible 1-cells");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: acceptance [--criterion k]\n";
      return 2;
    }
  }
  const std::vector<std::function<void(Outcome&)>> checks{criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7};
  if (only < 0 || only > static_cast<int>(checks.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (int k = 1; k <= static_cast<int>(checks.size()); ++k) {
    if (only && k != only) continue;
    Outcome o;
    try {
      checks[k - 1](o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
