#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordalg/element_set.hpp"
#include "ordalg/report.hpp"

namespace ordalg {

struct PosetOptions {
  // One machine word per relation row by default; raise for larger carriers.
  std::size_t max_size = 64;
};

using LabelPair = std::pair<std::string, std::string>;
using ElementPair = std::pair<Element, Element>;

// A finite partial order.  Immutable once built; the relation is validated
// (reflexive, antisymmetric, transitive) on construction.
class Poset {
 public:
  // Takes the reflexive-transitive closure of `pairs` (covers or arbitrary
  // order pairs, each meaning first <= second).
  static Poset build(std::vector<std::string> labels,
                     const std::vector<LabelPair>& pairs,
                     const PosetOptions& options = {});
  static Poset build(std::vector<std::string> labels,
                     const std::vector<ElementPair>& pairs,
                     const PosetOptions& options = {});
  // `leq[i]` is the set of elements j with i <= j.  Throws
  // not_a_partial_order when the relation is not a partial order.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<ElementSet>& leq,
                             const PosetOptions& options = {});

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  std::optional<Element> find(std::string_view label) const;
  Element index_of(std::string_view label) const;

  bool leq(Element a, Element b) const noexcept { return up_[a].contains(b); }
  bool less(Element a, Element b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const noexcept {
    return leq(a, b) || leq(b, a);
  }

  // L(a) and U(a).
  const ElementSet& down(Element a) const noexcept { return down_[a]; }
  const ElementSet& up(Element a) const noexcept { return up_[a]; }

  ElementSet lower(const ElementSet& s) const;
  ElementSet upper(const ElementSet& s) const;
  ElementSet lower(Element a, Element b) const { return down_[a] & down_[b]; }
  ElementSet upper(Element a, Element b) const { return up_[a] & up_[b]; }

  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet set_of(std::initializer_list<Element> members) const {
    return ElementSet(size(), members);
  }
  ElementSet set_of_labels(const std::vector<std::string>& labels) const;
  std::string format(const ElementSet& s) const;

  // Hasse diagram edges (a covered by b), sorted.
  std::vector<ElementPair> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  Poset(std::vector<std::string> labels, std::vector<ElementSet> up);

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

inline Poset build_poset(std::vector<std::string> labels,
                         const std::vector<LabelPair>& pairs,
                         const PosetOptions& options = {}) {
  return Poset::build(std::move(labels), pairs, options);
}

struct ConeResult {
  ElementSet members;
  ElementSet generator;
};

// L(S): elements below every member of S.  L(empty) is the whole carrier.
ConeResult lower_cone(const Poset& p, const ElementSet& s);
// U(S): elements above every member of S.
ConeResult upper_cone(const Poset& p, const ElementSet& s);

enum class Directedness { neither, down, up, both };

struct DirectednessResult {
  Directedness kind = Directedness::neither;
  // First pair (index order) with L(x,y) empty, resp. U(x,y) empty.
  std::optional<ElementPair> down_witness;
  std::optional<ElementPair> up_witness;

  bool down_directed() const noexcept { return !down_witness; }
  bool up_directed() const noexcept { return !up_witness; }
};

DirectednessResult directedness(const Poset& p);
std::string_view to_string(Directedness d);

struct Extremes {
  std::optional<Element> bottom;
  std::optional<Element> top;
};

Extremes extremes(const Poset& p);

// Distributivity in the lower-cone form
//   L(U(x,y),z) = LU(L(x,z),L(y,z))   for all x, y, z.
// The witness is the first failing triple; `detail` shows both sides.
Report is_distributive(const Poset& p);
// The upper-cone form U(L(x,y),z) = UL(U(x,z),U(y,z)), computed separately.
Report is_distributive_upper(const Poset& p);

// Every pair has a supremum and an infimum.  Witness: first pair lacking one.
Report is_lattice(const Poset& p);

}  // namespace ordalg
