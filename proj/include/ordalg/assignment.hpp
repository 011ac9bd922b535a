#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/axioms.hpp"
#include "ordalg/formula.hpp"
#include "ordalg/pc_structures.hpp"
#include "ordalg/poset.hpp"

namespace ordalg {

// The six kinds of assigned algebra:
//   pc    (P,⊓,*,0)      stone (P,⊔,⊓,*,0)     rpc  (P,⊓,*,1)
//   spc   (P,⊔,⊓,∘)      spc1  (P,⊔,⊓,∘,1)     sspc (P,⊔,⊓,∘,1)
enum class Profile { pc, stone, rpc, spc, spc1, sspc };

inline constexpr Profile all_profiles[] = {Profile::pc,  Profile::stone, Profile::rpc,
                                           Profile::spc, Profile::spc1,  Profile::sspc};

std::string_view to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view name);
PcKind profile_class(Profile p);
Signature profile_signature(Profile p);
bool needs_join(Profile p);
// Symbol of the pseudocomplement-like operation (* or ∘).
std::string_view profile_operation(Profile p);

// Values chosen for x⊓y (or x⊔y) on incomparable pairs.  Stored once per
// unordered pair and applied symmetrically.
class ConeChoice {
 public:
  explicit ConeChoice(OrderKind kind) : kind_(kind) {}

  OrderKind kind() const noexcept { return kind_; }
  void set(Element a, Element b, Element value) { values_[key(a, b)] = value; }
  std::optional<Element> get(Element a, Element b) const;
  const std::map<ElementPair, Element>& entries() const noexcept { return values_; }
  // Throws bad_choice unless every entry is an incomparable pair whose value
  // lies in L(a,b) (meet) or U(a,b) (join).
  void validate(const Poset& p) const;

  friend bool operator==(const ConeChoice&, const ConeChoice&) = default;

 private:
  static ElementPair key(Element a, Element b) { return a < b ? ElementPair{a, b} : ElementPair{b, a}; }

  OrderKind kind_;
  std::map<ElementPair, Element> values_;
};

struct ChoicePair {
  std::optional<ConeChoice> meet;
  std::optional<ConeChoice> join;
};

enum class ChoiceFamily { meet, join, lambda };

// One incomparable pair and the cone elements it may be sent to.
struct ChoicePoint {
  OrderKind kind;
  Element a, b;
  std::vector<Element> candidates;
};

// All assignments of one family for a poset.  Pairs are in lexicographic
// order (meet pairs before join pairs for lambda), candidates ascending; the
// enumeration is the mixed-radix count over them with the first pair most
// significant.
class ChoiceSpace {
 public:
  // Throws not_directed with the offending pair.
  ChoiceSpace(const Poset& p, ChoiceFamily family);

  ChoiceFamily family() const noexcept { return family_; }
  const std::vector<ChoicePoint>& points() const noexcept { return points_; }
  // Number of assignments, saturating at UINT64_MAX.
  std::uint64_t count() const noexcept { return count_; }
  bool count_saturated() const noexcept { return saturated_; }

  ChoicePair at(const std::vector<std::size_t>& digits) const;
  ChoicePair decode(std::uint64_t index) const;
  ChoicePair sample(std::mt19937_64& rng) const;

  // Calls f(index, choice) in enumeration order until f returns false.
  void for_each(const std::function<bool(std::uint64_t, const ChoicePair&)>& f) const;

 private:
  const Poset* poset_;
  ChoiceFamily family_;
  std::vector<ChoicePoint> points_;
  std::uint64_t count_ = 1;
  bool saturated_ = false;
};

inline ChoiceSpace enumerate_choices(const Poset& p, ChoiceFamily family) { return ChoiceSpace(p, family); }

// Smallest-index element of each cone.
ConeChoice canonical_choice(const Poset& p, OrderKind kind);
ChoicePair canonical_choices(const Poset& p, Profile profile);

// x⊓y = min(x,y) on comparable pairs and the choice otherwise (dually ⊔).
// Throws missing_choice.
Operation directoid_table(const Poset& p, const ConeChoice& choice);

// The algebra assigned to `p`.  Throws missing_structure when `p` is not in
// the profile's class, missing_choice when a required choice is absent.
Algebra assign_algebra(const Poset& p, Profile profile, const std::optional<ConeChoice>& meet,
                       const std::optional<ConeChoice>& join = std::nullopt);
inline Algebra assign_algebra(const Poset& p, Profile profile, const ChoicePair& choice) {
  return assign_algebra(p, profile, choice.meet, choice.join);
}

// Like assign_algebra but total for any suitably directed poset: where the
// defining maximum is missing it uses the first maximal candidate (or the
// first element), and a non-existent 0 or 1 becomes the first minimal or
// maximal element.  The audit needs this to test the "only if" side.
Algebra assign_candidate_algebra(const Poset& p, Profile profile, const ChoicePair& choice);

// {(a⊓x)⊓(b⊓x) : x} or {(a⊔x)⊔(b⊔x) : x}.
ElementSet cone_via_directoid(const Algebra& a, Element x, Element y, OrderKind kind);

std::vector<Formula> assigned_conditions(Profile p);
ReportSet verify_assigned_conditions(const Algebra& a, Profile p, const CheckOptions& options = {});

// rpc: x*x≈1, 1*x≈x, x⊓((x*y)*y)≈x.   spc1/sspc: x∘x≈1, 1∘x≈x.
std::vector<Formula> derived_identities(Profile p);
ReportSet verify_derived_identities(const Algebra& a, Profile p, const CheckOptions& options = {});

struct AuditOptions {
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 0x5eed'0bad'cafeULL;
  CheckOptions check;
  // Called for every algebra examined, with its condition reports.
  std::function<void(const Algebra&, const ReportSet&)> observer;
};

struct Divergence {
  std::uint64_t index = 0;
  bool poset_verdict = false;
  bool algebra_verdict = false;
  std::string detail;
};

struct AuditReport {
  Profile profile = Profile::pc;
  // False when the poset lacks the directedness the profile needs.
  bool applicable = true;
  std::string skipped_reason;
  bool poset_verdict = false;
  std::uint64_t total = 0;
  bool total_saturated = false;
  std::uint64_t checked = 0;
  bool sampled = false;
  std::vector<Divergence> divergences;

  bool consistent() const noexcept { return divergences.empty(); }
};

// For each assignment (all of them up to the budget, else a seeded uniform
// sample of `budget` of them), compare the poset-level classification with
// the verdict of the algebra-level conditions.
AuditReport theorem_equivalence_audit(const Poset& p, Profile profile, const AuditOptions& options = {});

}  // namespace ordalg
