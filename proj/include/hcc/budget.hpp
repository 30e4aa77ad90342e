#pragma once

#include <cstdint>
#include <string>

#include "hcc/error.hpp"

namespace hcc {

// Search caps. Defaults keep every shipped fixture in the seconds range.
struct Budget {
  std::uint64_t hom_candidates = 10'000'000;   // generator-image tuples per Hom(G,H)
  std::uint64_t families = 1'000'000;          // 1-cell / class families per center search
  std::uint64_t groupoid_cells = 1'000'000;    // materialized product/functor/aut sizes
  std::uint64_t center_objects = 1'000'000;    // coherent families kept in memory
  unsigned threads = 1;

  void check(const std::string& what, std::uint64_t requested, std::uint64_t limit) const {
    if (requested > limit) throw BudgetExceeded(what, requested, limit);
  }
};

}  // namespace hcc
