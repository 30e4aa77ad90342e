#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hcc/coherent.hpp"
#include "hcc/cochain.hpp"
#include "hcc/enriched.hpp"
#include "hcc/fixture.hpp"

namespace hcc {

inline constexpr int kSchemaVersion = 1;

struct ReportOptions {
  int smax = 3;
  bool verbose_cocycles = false;
  Budget budget;
};

inline json monoid_json(const FamilyMonoid& m) {
  return json{{"elements", m.elements}, {"identity", m.identity}, {"table", m.table}};
}

inline json abelian_json(const AbelianInvariants& a) {
  return json{{"invariantFactors", a.factors}, {"order", a.order()}};
}

inline json abelian_json(const std::optional<FinAbGroup>& g, bool verbose) {
  if (!g) return nullptr;
  json j = abelian_json(g->invariants);
  if (verbose) {
    json gens = json::array();
    for (const auto& r : g->representatives) {
      json cells = json::array();
      for (auto [block, cell] : r) cells.push_back({block, cell});
      gens.push_back(cells);
    }
    j["generators"] = gens;
  }
  return j;
}

inline json family_json(const CoherentFamily& phi, bool verbose) {
  json j{{"phi0", phi.phi0}};
  if (verbose) j["phi1"] = phi.phi1;
  return j;
}

/// Everything computed about one category, filled on demand.
class Analysis {
 public:
  Analysis(const CategoryEntry& entry, const ReportOptions& opts) : entry_(entry), opts_(opts) {}

  const EnrichedCategory& category() const { return *entry_.category; }

  const SpectralPage& page() {
    if (!page_) page_ = e2_page(category(), opts_.smax, opts_.budget);
    return *page_;
  }
  const CenterGroupoid& center() {
    if (!center_) center_.emplace(enumerate_coherent_families(category(), opts_.budget));
    return *center_;
  }
  const Pi0Monoid& pi0() {
    if (!pi0_) pi0_ = pi0_monoid(center());
    return *pi0_;
  }
  const FinAbGroup& pi1() {
    if (!pi1_) pi1_ = pi1_at_identity(center(), opts_.budget);
    return *pi1_;
  }

  json validate() const {
    const auto& c = category();
    const int n = c.object_count();
    json homs = json::array();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const auto& a = c.hom(x, y);
        homs.push_back({{"source", x},
                        {"target", y},
                        {"oneCells", a.object_count()},
                        {"twoCells", a.morphism_count()},
                        {"components", a.component_count()}});
      }
    return json{{"kind", entry_.kind}, {"objects", c.object_labels()}, {"homs", homs}, {"valid", true}};
  }

  json centers() {
    const auto& c = category();
    StrictCenter sc = strict_center(c, opts_.budget);
    json strict{{"objects", sc.objects},
                {"simplicial", std::vector<bool>(sc.simplicial.begin(), sc.simplicial.end())},
                {"morphisms", sc.morphisms.size()},
                {"monoid", monoid_json(sc.monoid)}};
    const auto& z = center();
    const auto& m = pi0();
    json reps = json::array();
    for (int r : m.representatives) reps.push_back(family_json(z.object(r), opts_.verbose_cocycles));
    json coherent{{"objects", z.object_count()},
                  {"components", z.component_count()},
                  {"pi0",
                   {{"elements", reps},
                    {"identity", m.identity},
                    {"table", m.table},
                    {"hoImage", m.ho_image},
                    {"isGroup", is_group(m)}}},
                  {"pi1", abelian_json(pi1().invariants)}};
    return json{{"strictCenter", strict}, {"hoCenter", monoid_json(page().ho_center)}, {"coherent", coherent}};
  }

  json e2() {
    const auto& p = page();
    json norm = json::array();
    for (const auto& a : p.normalized) norm.push_back(abelian_json(a));
    const bool v = opts_.verbose_cocycles;
    return json{{"smax", opts_.smax},
                {"E2_00", monoid_json(p.e2_00)},
                {"E2_01", abelian_json(p.e2_01, v)},
                {"E2_11", abelian_json(p.e2_11, v)},
                {"E2_21", abelian_json(p.e2_21, v)},
                {"normalizedCochains", norm}};
  }

  json lift() {
    json rows = json::array();
    for (const auto& e : page().ho_center.elements) {
      LiftResult r = lift_element(category(), e);
      json row{{"element", e}, {"liftable", r.liftable}};
      if (r.liftable) row["witness"] = family_json(*r.witness, opts_.verbose_cocycles);
      else row["trace"] = r.trace;
      rows.push_back(row);
    }
    return rows;
  }

  json oracle(bool& consistent) {
    ConsistencyReport r = compare_with_spectral(category(), page(), center(), pi0(), pi1());
    consistent = r.ok();
    return json{{"verdict", r.ok() ? "ok" : "inconsistent"},
                {"pi1MatchesE2_01", r.pi1_matches},
                {"liftsWhenUnobstructed", r.lifts_when_unobstructed},
                {"fiberMatchesE2_11", r.fiber_matches},
                {"imageIsLiftable", r.image_is_liftable},
                {"messages", r.messages}};
  }

  static bool is_group(const Pi0Monoid& m) {
    for (int a = 0; a < m.size(); ++a) {
      bool inv = false;
      for (int b = 0; b < m.size() && !inv; ++b) inv = m.table[a][b] == m.identity;
      if (!inv) return false;
    }
    return true;
  }

 private:
  const CategoryEntry& entry_;
  const ReportOptions& opts_;
  std::optional<SpectralPage> page_;
  std::optional<CenterGroupoid> center_;
  std::optional<Pi0Monoid> pi0_;
  std::optional<FinAbGroup> pi1_;
};

struct CommandResult {
  json document;
  bool consistent = true;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "centers", "e2", "lift", "oracle", "report"};
  return names;
}

inline CommandResult run_command(const std::string& command, const Fixture& fx, const ReportOptions& opts) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end())
    detail::fail(ErrorKind::ValidationError, "unknown command '", command, "'");
  CommandResult out;
  json cats = json::object();
  for (const auto& [label, entry] : fx.categories) {
    Analysis an(entry, opts);
    json block = json::object();
    const bool all = command == "report";
    if (command == "validate" || all) block["validate"] = an.validate();
    if (command == "centers" || all) block["centers"] = an.centers();
    if (command == "e2" || all) block["e2"] = an.e2();
    if (command == "lift" || all) block["lift"] = an.lift();
    if (command == "oracle" || all) {
      bool ok = true;
      block["oracle"] = an.oracle(ok);
      out.consistent = out.consistent && ok;
    }
    cats[label] = block;
  }
  json groups = json::object();
  for (const auto& [label, g] : fx.groups) groups[label] = {{"order", g->order()}, {"abelian", g->is_abelian()}};
  out.document = json{{"schemaVersion", kSchemaVersion}, {"command", command}, {"groups", groups}, {"categories", cats}};
  return out;
}

}  // namespace hcc
