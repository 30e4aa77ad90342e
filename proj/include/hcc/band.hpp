#pragma once

#include <map>
#include <string>
#include <vector>

#include "hcc/budget.hpp"
#include "hcc/enriched.hpp"
#include "hcc/group.hpp"
#include "hcc/groupoid.hpp"

namespace hcc {

/// Hom-groupoid data for one pair of groups: 1-cells are Hom(G,H) in
/// canonical order, the 2-cell (alpha, h) has id alpha * |H| + h and goes
/// alpha -> h alpha h^-1.
struct BandHom {
  std::vector<GroupHom> homs;
  std::map<std::vector<int>, int> index;
  GroupoidPtr groupoid;
};

inline BandHom band_hom(const GroupPtr& g, const GroupPtr& h, const Budget& budget = {}) {
  BandHom b;
  b.homs = enumerate_homs(g, h, budget);
  for (std::size_t i = 0; i < b.homs.size(); ++i) b.index[b.homs[i].image] = static_cast<int>(i);
  const int nh = h->order();
  const int n = static_cast<int>(b.homs.size());
  std::vector<Arrow> arrows;
  std::vector<int> ids;
  for (int a = 0; a < n; ++a) {
    ids.push_back(a * nh + h->identity());
    for (int k = 0; k < nh; ++k) {
      std::vector<int> img = b.homs[a].image;
      for (int& v : img) v = h->conj(k, v);
      arrows.push_back({a, b.index.at(img)});
    }
  }
  b.groupoid = share(FiniteGroupoid::make(
      n, std::move(arrows), std::move(ids),
      [&](int second, int first) { return (first / nh) * nh + h->mul(second % nh, first % nh); },
      "B(" + g->label() + "," + h->label() + ")"));
  return b;
}

/// The full sub-2-category of groups on `groups`: 1-cells are
/// homomorphisms, 2-cells are conjugating elements, and composition sends
/// (k: beta -> beta', h: alpha -> alpha') to k * beta(h).
inline EnrichedCategory build_band_category(const std::vector<GroupPtr>& groups, const Budget& budget = {},
                                            std::string label = {}) {
  const int n = static_cast<int>(groups.size());
  std::vector<BandHom> bh(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) bh[x * n + y] = band_hom(groups[x], groups[y], budget);
  std::vector<GroupoidPtr> homs;
  for (const auto& b : bh) homs.push_back(b.groupoid);
  std::vector<int> units;
  for (int x = 0; x < n; ++x) {
    std::vector<int> id(groups[x]->order());
    for (int i = 0; i < groups[x]->order(); ++i) id[i] = i;
    units.push_back(bh[x * n + x].index.at(id));
  }
  std::vector<CompositionTable> comps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const BandHom &outer = bh[y * n + z], &inner = bh[x * n + y], &res = bh[x * n + z];
        const FiniteGroup& gz = *groups[z];
        const FiniteGroup& gy = *groups[y];
        const int nz = gz.order(), ny = gy.order();
        CompositionTable t;
        std::vector<int> cells;
        for (const auto& beta : outer.homs)
          for (const auto& alpha : inner.homs) {
            std::vector<int> img(alpha.image.size());
            for (std::size_t i = 0; i < img.size(); ++i) img[i] = beta.image[alpha.image[i]];
            t.cells.push_back(res.index.at(img));
          }
        const int na = static_cast<int>(inner.homs.size());
        t.two_cells.reserve(outer.homs.size() * nz * na * ny);
        for (std::size_t bi = 0; bi < outer.homs.size(); ++bi)
          for (int k = 0; k < nz; ++k)
            for (int ai = 0; ai < na; ++ai)
              for (int hh = 0; hh < ny; ++hh) {
                int comp_cell = t.cells[bi * na + ai];
                t.two_cells.push_back(comp_cell * nz + gz.mul(k, outer.homs[bi].image[hh]));
              }
        comps.push_back(std::move(t));
      }
  std::vector<std::string> labels;
  for (const auto& g : groups) labels.push_back(g->label());
  if (label.empty()) {
    label = "band(";
    for (int x = 0; x < n; ++x) label += (x ? "," : "") + labels[x];
    label += ")";
  }
  return EnrichedCategory::make(n, std::move(homs), std::move(units), std::move(comps), std::move(label),
                                std::move(labels));
}

}  // namespace hcc
