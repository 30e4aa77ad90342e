#pragma once

#include <array>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hcc/band.hpp"
#include "hcc/budget.hpp"
#include "hcc/enriched.hpp"
#include "hcc/error.hpp"
#include "hcc/group.hpp"
#include "hcc/groupoid.hpp"

namespace hcc {

using json = nlohmann::json;

struct CategoryEntry {
  EnrichedPtr category;
  std::string kind;                         // band | discrete | withCoefficients | duplicate | enriched
  std::optional<OrdinaryCategory> ordinary;  // set for discrete entries
};

/// Groups and categories keyed by label, both in label order.
struct Fixture {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, CategoryEntry> categories;
};

namespace detail {

// "Zn", "Sn", "Dn" or "1"
inline FiniteGroup builtin_group(const std::string& name) {
  auto number = [&](std::size_t from) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(name.substr(from), &used);
    } catch (const std::exception&) {
    }
    if (v < 1 || used + from != name.size()) fail(ErrorKind::ValidationError, "unknown builtin group '", name, "'");
    return v;
  };
  if (name == "1") return FiniteGroup::trivial();
  if (name.size() > 1 && name[0] == 'Z') return FiniteGroup::cyclic(number(1));
  if (name.size() > 1 && name[0] == 'S') return FiniteGroup::symmetric(number(1));
  if (name.size() > 1 && name[0] == 'D') return FiniteGroup::dihedral(number(1));
  fail(ErrorKind::ValidationError, "unknown builtin group '", name, "'");
}

inline std::vector<std::array<int, 3>> read_triples(const json& j) {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::ValidationError, "composition entries must be [g, f, g∘f]");
    out.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  return out;
}

inline std::vector<Arrow> read_arrows(const json& j) {
  std::vector<Arrow> out;
  for (const auto& a : j) {
    if (!a.is_array() || a.size() != 2) fail(ErrorKind::ValidationError, "arrows must be [source, target]");
    out.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return out;
}

class FixtureParser {
 public:
  FixtureParser(const json& doc, const Budget& budget) : doc_(doc), budget_(budget) {}

  Fixture run() {
    if (!doc_.is_object()) fail(ErrorKind::ParseError, "fixture must be a JSON object");
    for (const auto& [key, _] : doc_.items())
      if (key != "groups" && key != "categories" && key != "schemaVersion" && key != "description")
        errors_.push_back("top level: unknown key '" + key + "'");
    if (doc_.contains("groups")) {
      if (!doc_["groups"].is_object()) errors_.push_back("groups: must be an object");
      else
        for (const auto& [label, _] : doc_["groups"].items()) group(label);
    }
    if (doc_.contains("categories")) {
      if (!doc_["categories"].is_object()) errors_.push_back("categories: must be an object");
      else
        for (const auto& [label, _] : doc_["categories"].items()) category(label);
    }
    if (!errors_.empty()) {
      std::string msg = std::to_string(errors_.size()) + " problem(s)";
      for (const auto& e : errors_) msg += "\n  " + e;
      fail(ErrorKind::ValidationError, msg);
    }
    return std::move(out_);
  }

 private:
  GroupPtr group(const std::string& label) {
    if (auto it = out_.groups.find(label); it != out_.groups.end()) return it->second;
    if (failed_.count("g:" + label)) return nullptr;
    if (!doc_.contains("groups") || !doc_["groups"].is_object() || !doc_["groups"].contains(label)) {
      // builtin names may be used without a declaration
      try {
        return out_.groups[label] = share(builtin_group(label));
      } catch (const Error&) {
        return nullptr;
      }
    }
    if (!visiting_.insert("g:" + label).second) {
      errors_.push_back("groups." + label + ": cyclic definition");
      failed_.insert("g:" + label);
      return nullptr;
    }
    const json& j = doc_["groups"][label];
    try {
      GroupPtr g;
      if (j.contains("table")) {
        g = share(FiniteGroup::from_table(j["table"].get<std::vector<std::vector<int>>>(), j.value("identity", 0), label));
      } else if (j.contains("permutations")) {
        g = share(FiniteGroup::from_permutations(j["permutations"].get<std::vector<std::vector<int>>>(), label));
      } else if (j.contains("builtin")) {
        FiniteGroup b = builtin_group(j["builtin"].get<std::string>());
        g = share(FiniteGroup::from_table(table_of(b), b.identity(), label));
      } else if (j.contains("product")) {
        auto parts = j["product"].get<std::vector<std::string>>();
        FiniteGroup p = FiniteGroup::trivial();
        for (const auto& part : parts) {
          GroupPtr q = group(part);
          if (!q) fail(ErrorKind::ValidationError, "unknown group '", part, "'");
          p = FiniteGroup::direct_product(p, *q);
        }
        g = share(FiniteGroup::from_table(table_of(p), p.identity(), label));
      } else {
        fail(ErrorKind::ValidationError, "expected one of table, permutations, builtin, product");
      }
      visiting_.erase("g:" + label);
      return out_.groups[label] = g;
    } catch (const Error& e) {
      errors_.push_back("groups." + label + ": " + e.what());
    } catch (const json::exception& e) {
      errors_.push_back("groups." + label + ": " + e.what());
    }
    visiting_.erase("g:" + label);
    failed_.insert("g:" + label);
    return nullptr;
  }

  static std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
    return t;
  }

  const CategoryEntry* category(const std::string& label) {
    if (auto it = out_.categories.find(label); it != out_.categories.end()) return &it->second;
    if (failed_.count("c:" + label)) return nullptr;
    if (!doc_["categories"].contains(label)) return nullptr;
    if (!visiting_.insert("c:" + label).second) {
      errors_.push_back("categories." + label + ": cyclic definition");
      failed_.insert("c:" + label);
      return nullptr;
    }
    const json& j = doc_["categories"][label];
    try {
      CategoryEntry e = build(label, j);
      visiting_.erase("c:" + label);
      return &(out_.categories[label] = std::move(e));
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const Error& e) {
      errors_.push_back("categories." + label + ": " + e.what());
    } catch (const json::exception& e) {
      errors_.push_back("categories." + label + ": " + e.what());
    }
    visiting_.erase("c:" + label);
    failed_.insert("c:" + label);
    return nullptr;
  }

  CategoryEntry build(const std::string& label, const json& j) {
    if (!j.is_object() || j.size() != 1)
      fail(ErrorKind::ValidationError, "expected exactly one of band, discrete, withCoefficients, duplicate, enriched");
    const std::string kind = j.begin().key();
    const json& body = j.begin().value();
    CategoryEntry e;
    e.kind = kind;
    if (kind == "band") {
      std::vector<GroupPtr> gs;
      for (const auto& name : body.get<std::vector<std::string>>()) {
        GroupPtr g = group(name);
        if (!g) fail(ErrorKind::ValidationError, "unknown group '", name, "'");
        gs.push_back(g);
      }
      e.category = std::make_shared<const EnrichedCategory>(build_band_category(gs, budget_, label));
    } else if (kind == "discrete") {
      OrdinaryCategory cat = body.contains("monoid")
                                 ? OrdinaryCategory::from_monoid(body["monoid"].get<std::vector<std::vector<int>>>(),
                                                                 body.value("identity", 0), label)
                                 : OrdinaryCategory::from_tables(body.at("objects").get<int>(), read_arrows(body.at("arrows")),
                                                                 read_triples(body.at("compose")), label);
      e.category = std::make_shared<const EnrichedCategory>(discrete_enrichment(cat));
      e.ordinary = std::move(cat);
    } else if (kind == "withCoefficients") {
      const CategoryEntry* base = category(body.at("category").get<std::string>());
      if (!base) fail(ErrorKind::ValidationError, "unknown or invalid category '", body["category"].get<std::string>(), "'");
      GroupPtr a = group(body.at("coefficients").get<std::string>());
      if (!a) fail(ErrorKind::ValidationError, "unknown group '", body["coefficients"].get<std::string>(), "'");
      e.category = std::make_shared<const EnrichedCategory>(with_coefficients(*base->category, *a, label));
    } else if (kind == "duplicate") {
      const CategoryEntry* base = category(body.at("category").get<std::string>());
      if (!base) fail(ErrorKind::ValidationError, "unknown or invalid category '", body["category"].get<std::string>(), "'");
      int x = body.at("object").get<int>();
      if (x < 0 || x >= base->category->object_count()) fail(ErrorKind::ValidationError, "object ", x, " out of range");
      EnrichedCategory d = duplicate_object(*base->category, x);
      e.category = std::make_shared<const EnrichedCategory>(relabel(d, label));
    } else if (kind == "enriched") {
      e.category = std::make_shared<const EnrichedCategory>(explicit_category(label, body));
    } else {
      fail(ErrorKind::ValidationError, "unknown category kind '", kind, "'");
    }
    return e;
  }

  static EnrichedCategory relabel(const EnrichedCategory& c, const std::string& label) {
    const int n = c.object_count();
    std::vector<GroupoidPtr> homs;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) homs.push_back(c.hom_ptr(x, y));
    std::vector<CompositionTable> comps;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) comps.push_back(c.table(x, y, z));
    return EnrichedCategory::make(n, std::move(homs), c.units(), std::move(comps), label, c.object_labels(), false);
  }

  // {"objects": n, "homs": [n*n groupoids, row-major over (x,y)], "units": [...],
  //  "compositions": [n^3 {"cells": [...], "twoCells": [...]}, index (x*n+y)*n+z]}
  static EnrichedCategory explicit_category(const std::string& label, const json& body) {
    const int n = body.at("objects").get<int>();
    if (n < 0) fail(ErrorKind::ValidationError, "negative object count");
    const json& hs = body.at("homs");
    if (!hs.is_array() || static_cast<int>(hs.size()) != n * n) fail(ErrorKind::ValidationError, "expected ", n * n, " homs");
    std::vector<GroupoidPtr> homs;
    for (int i = 0; i < n * n; ++i) {
      const json& h = hs[i];
      homs.push_back(share(FiniteGroupoid::from_tables(h.at("objects").get<int>(), read_arrows(h.at("arrows")),
                                                       read_triples(h.at("compose")),
                                                       detail::concat("H(", i / n, ",", i % n, ")"))));
    }
    auto units = body.at("units").get<std::vector<int>>();
    const json& cs = body.at("compositions");
    if (!cs.is_array() || static_cast<int>(cs.size()) != n * n * n)
      fail(ErrorKind::ValidationError, "expected ", n * n * n, " composition tables");
    std::vector<CompositionTable> comps;
    for (const auto& t : cs)
      comps.push_back({t.at("cells").get<std::vector<int>>(), t.at("twoCells").get<std::vector<int>>()});
    std::vector<std::string> labels;
    if (body.contains("objectLabels")) labels = body["objectLabels"].get<std::vector<std::string>>();
    return EnrichedCategory::make(n, std::move(homs), std::move(units), std::move(comps), label, std::move(labels));
  }

  const json& doc_;
  const Budget& budget_;
  Fixture out_;
  std::vector<std::string> errors_;
  std::set<std::string> visiting_;
  std::set<std::string> failed_;
};

}  // namespace detail

inline Fixture parse_fixture_json(const json& doc, const Budget& budget = {}) {
  return detail::FixtureParser(doc, budget).run();
}

inline Fixture parse_fixture_text(const std::string& text, const Budget& budget = {}) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    detail::fail(ErrorKind::ParseError, e.what());
  }
  return parse_fixture_json(doc, budget);
}

inline Fixture parse_fixture(const std::string& path, const Budget& budget = {}) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::ParseError, "cannot open '", path, "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture_text(ss.str(), budget);
}

}  // namespace hcc
