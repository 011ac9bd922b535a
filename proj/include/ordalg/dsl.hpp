#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/assignment.hpp"
#include "ordalg/poset.hpp"

namespace ordalg {

// Text format (.ord), one statement per line, `#` starts a comment:
//
//   poset NAME
//   elements: l1 l2 ...
//   order: a<b b<c<d ...
//
//   algebra NAME on POSET
//   profile pc|stone|rpc|spc|spc1|sspc
//   choice meet {x,y}=z
//   unary * : a->b ...
//   binary ∘ : (a,b)->c ...
//   row a: c1 c2 ...
//   constant 1: l
//
// `row` lines fill the table of the preceding `binary` line, one row per
// element in declaration order.  ASCII aliases: meet ⊓, join ⊔, o ∘.

struct PosetDef {
  std::string name;
  Poset poset;

  friend bool operator==(const PosetDef&, const PosetDef&) = default;
};

struct AlgebraDef {
  std::string name;
  std::string poset;
  std::optional<Profile> profile;
  std::optional<ConeChoice> meet_choice;
  std::optional<ConeChoice> join_choice;
  // Explicit tables in the order they were given.
  std::vector<Operation> tables;

  const Operation* table(std::string_view symbol) const;

  friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

struct Document {
  std::vector<PosetDef> posets;
  std::vector<AlgebraDef> algebras;

  const PosetDef* find_poset(std::string_view name) const;
  const AlgebraDef* find_algebra(std::string_view name) const;

  friend bool operator==(const Document&, const Document&) = default;
};

// Errors carry "line L, column C: " prefixes.  Syntax problems throw
// syntax_error; semantic ones keep their specific code (unknown_label,
// non_total_table, bad_choice, cycle_detected, ...), or semantic_error for
// duplicate or dangling names.
Document parse(std::string_view text);
std::string serialize(const Document& doc);
std::string serialize(const PosetDef& def);
std::string serialize(const AlgebraDef& def, const Poset& poset);

// Canonical spelling of a symbol alias.
std::string canonical_symbol(std::string_view s);

// The algebra described by `def`: ⊓ and ⊔ from its choices (canonical
// choice for pairs it leaves open) when the profile needs them or choices
// are given, then the explicit tables, then any profile symbol still
// missing, computed from the poset.  Throws missing_structure, not_directed.
Algebra materialize(const Document& doc, const AlgebraDef& def);
Algebra materialize(const Document& doc, std::string_view algebra_name);

// Writes `a` (whose ⊓, or else ⊔, induces the order) as a poset definition
// and an algebra definition with every table explicit.
Document document_of(const Algebra& a, const std::string& name, std::optional<Profile> profile = std::nullopt);

}  // namespace ordalg
