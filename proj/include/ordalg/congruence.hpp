#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/assignment.hpp"
#include "ordalg/report.hpp"

namespace ordalg {

// An equivalence on {0..n-1} stored as a canonical block assignment: every
// element maps to the least element of its block.
class Congruence {
 public:
  // Throws bad_partition unless the blocks are disjoint and cover 0..n-1.
  static Congruence from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);
  // Any map whose fibres are the blocks; leaders are recomputed.
  static Congruence from_classes(const std::vector<Element>& class_of);
  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);

  std::size_t size() const noexcept { return leader_.size(); }
  Element leader(Element a) const { return leader_.at(a); }
  const std::vector<Element>& leaders() const noexcept { return leader_; }
  bool related(Element a, Element b) const { return leader_.at(a) == leader_.at(b); }
  std::size_t block_count() const;
  std::vector<std::vector<Element>> blocks() const;
  // The block of a.
  std::vector<Element> block_of(Element a) const;
  bool is_identity() const { return block_count() == size(); }
  bool is_total() const { return block_count() <= 1; }
  // Refinement order: every pair related here is related in `other`.
  bool refines(const Congruence& other) const;

  std::string to_string(const std::vector<std::string>& labels) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  explicit Congruence(std::vector<Element> leader) : leader_(std::move(leader)) {}
  std::vector<Element> leader_;
};

Congruence meet(const Congruence& a, const Congruence& b);
// Transitive closure of the union.
Congruence join(const Congruence& a, const Congruence& b);
// Relational product a∘b as an n×n boolean matrix (row-major).
std::vector<bool> compose(const Congruence& a, const Congruence& b);

struct CompatibilityResult {
  bool holds = true;
  // Violating tuple: f(args) and f(other_args) lie in different blocks
  // although the argument tuples are related componentwise.
  std::string symbol;
  std::vector<Element> args;
  std::vector<Element> other_args;

  explicit operator bool() const noexcept { return holds; }
};

CompatibilityResult is_congruence(const Algebra& a, const Congruence& theta);
// Throws bad_partition.
CompatibilityResult is_congruence(const Algebra& a, const std::vector<std::vector<Element>>& blocks);

// Least congruence containing every given pair.
Congruence generated_congruence(const Algebra& a, const std::vector<ElementPair>& pairs);
inline Congruence principal_congruence(const Algebra& a, Element x, Element y) {
  return generated_congruence(a, {{x, y}});
}

struct CongruenceOptions {
  // Exhaustive partition-scan validation runs only for n ≤ guard.
  std::size_t guard = 12;
  // congruence_properties refuses lattices larger than this.
  std::size_t max_congruences = 2048;
};

struct CongruenceLattice {
  // Sorted: block count descending, then by leader vector; Δ first, ∇ last.
  std::vector<Congruence> elements;
  std::vector<std::size_t> join_table;
  std::vector<std::size_t> meet_table;
  // Covering pairs (lower, upper) of the refinement order.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  // Partition scan confirmed the list is complete.
  bool validated = false;
  // n exceeded the guard: validation skipped.
  bool guard_exceeded = false;

  std::size_t size() const noexcept { return elements.size(); }
  std::optional<std::size_t> index_of(const Congruence& c) const;
  std::size_t join(std::size_t i, std::size_t j) const { return join_table[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_table[i * size() + j]; }
};

// Joins of principal congruences closed to a fixpoint; cross-checked by the
// partition scan under the guard (a mismatch throws).
CongruenceLattice congruence_lattice(const Algebra& a, const CongruenceOptions& options = {});

// Every compatible partition, by a pruned restricted-growth scan.
std::vector<Congruence> scan_congruences(const Algebra& a);

struct CongruenceProperties {
  bool permutable = true;
  bool distributive = true;
  bool arithmetical = true;
  // Absent when no unit was designated.
  std::optional<bool> weakly_regular;
  // First failure of each property, if any.
  std::string permutable_witness;
  std::string distributive_witness;
  std::string weakly_regular_witness;
  std::size_t congruence_count = 0;
};

// Throws size_guard_exceeded when the lattice is larger than
// options.max_congruences.
CongruenceProperties congruence_properties(const Algebra& a, std::optional<Element> unit,
                                           const CongruenceOptions& options = {});
CongruenceProperties congruence_properties(const CongruenceLattice& lattice, const std::vector<std::string>& labels,
                                           std::optional<Element> unit);

// The element named 1, or 0* for the pc and stone profiles; absent for spc.
std::optional<Element> designated_unit(const Algebra& a, Profile profile);

enum class TermScheme { majority, maltsev, weak_regularity };
std::string_view to_string(TermScheme s);

// Schemes checked for each profile:
//   stone, spc: majority   rpc: Maltsev + weak regularity
//   spc1: majority + weak regularity   sspc: all three   pc: none
std::vector<TermScheme> term_schemes(Profile p);
std::vector<Formula> scheme_identities(TermScheme s, Profile p);

struct TermConditionReport {
  TermScheme scheme;
  ReportSet identities;
  bool holds() const { return identities.holds(); }
};

// Throws missing_symbol.
std::vector<TermConditionReport> verify_term_conditions(const Algebra& a, Profile p,
                                                        const CheckOptions& options = {});

}  // namespace ordalg
