#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/element_set.hpp"

namespace ordalg {

class Formula;

// Variable name -> element, in declaration order of the quantified variables.
using Assignment = std::vector<std::pair<std::string, Element>>;

// Verdict of a universally quantified check.
//
// When `holds` is false, `witness` is the first falsifying assignment in
// canonical order (row-major over variables, element index order).  Checks
// that come from a Formula keep it in `formula` so the witness can be
// re-evaluated independently.
struct Report {
  std::string name;
  bool holds = true;
  std::optional<Assignment> witness;
  std::uint64_t checked_count = 0;
  std::string detail;
  std::shared_ptr<const Formula> formula;

  explicit operator bool() const noexcept { return holds; }
};

// A conjunction of named checks.
struct ReportSet {
  std::vector<Report> items;

  bool holds() const noexcept {
    for (const auto& r : items)
      if (!r.holds) return false;
    return true;
  }
  const Report* first_failure() const noexcept {
    for (const auto& r : items)
      if (!r.holds) return &r;
    return nullptr;
  }
  const Report* find(const std::string& name) const noexcept {
    for (const auto& r : items)
      if (r.name == name) return &r;
    return nullptr;
  }
};

}  // namespace ordalg
