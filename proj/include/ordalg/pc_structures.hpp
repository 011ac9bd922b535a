#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/report.hpp"

namespace ordalg {

// Maximum of a candidate set, if there is one.  `maximal` lists the maximal
// candidates either way, so a failure shows which elements compete.
struct Greatest {
  std::optional<Element> value;
  ElementSet candidates;
  ElementSet maximal;
};

Greatest greatest_of(const Poset& p, const ElementSet& candidates);

// {y : L(x,y) = {zero}}
ElementSet pseudocomplement_candidates(const Poset& p, Element x, Element zero);
// {z : L(x,z) ⊆ L(y)}
ElementSet relative_candidates(const Poset& p, Element x, Element y);
// {z : L(U(x,y),z) = L(y)}
ElementSet sectional_candidates(const Poset& p, Element x, Element y);

// Greatest y with L(x,y) = {0}.  Throws no_bottom.
Greatest pseudocomplement(const Poset& p, Element x);
Greatest relative_pseudocomplement(const Poset& p, Element x, Element y);
Greatest sectional_pseudocomplement(const Poset& p, Element x, Element y);

enum class PcKind {
  pseudocomplemented,
  stone,
  relatively_pc,
  sectionally_pc,
  sectionally_pc_with_1,
  strongly_sectionally_pc,
};

std::string_view to_string(PcKind k);
std::optional<PcKind> parse_pc_kind(std::string_view name);

struct PcWitness {
  std::vector<Element> elements;
  std::string reason;
};

struct PcClassification {
  PcKind kind = PcKind::pseudocomplemented;
  // False when the class needs a top element and there is none.
  bool applicable = true;
  bool holds = false;
  // The computed operation: unary * for pseudocomplemented/stone, binary *
  // for relatively_pc, binary ∘ for the sectional kinds.  Present whenever
  // the operation is total, even if a further condition (Stone, strong)
  // fails.
  std::optional<Operation> table;
  std::optional<PcWitness> witness;
};

// Classification never throws on structural absence; failures come back as
// data with the first failing element (or pair) in index order.
PcClassification classify(const Poset& p, PcKind kind);

inline PcClassification classify_pseudocomplemented(const Poset& p) {
  return classify(p, PcKind::pseudocomplemented);
}
inline PcClassification classify_stone(const Poset& p) { return classify(p, PcKind::stone); }
inline PcClassification classify_relative(const Poset& p) { return classify(p, PcKind::relatively_pc); }
inline PcClassification classify_sectional(const Poset& p, PcKind kind = PcKind::sectionally_pc) {
  return classify(p, kind);
}

// For a bounded poset with a unary `star` table: the side conditions
// "bounded", "U(x,x*)={1}" and "distributive", then the equalities
// "L(x,x*)={0}" and "U(x*,L(x,y))=U(x*,y)".
ReportSet check_distributive_pc_equalities(const Poset& p, const Operation& star);

}  // namespace ordalg
