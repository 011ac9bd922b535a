#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ordalg/poset.hpp"

namespace ordalg {

struct CanonicalForm {
  // Upper-triangle bits of the relation in canonical order, row by column:
  // for k = 1..n-1, for i < k: [order[i] ≤ order[k]].
  std::string key;
  // order[k] is the element placed at canonical position k.  The order is a
  // linear extension.
  std::vector<Element> order;
};

// Equal keys exactly for isomorphic posets.  Colour refinement by cone
// sizes, then a search over permutations inside colour classes for the
// least key.
CanonicalForm canonical_form(const Poset& p);

// The poset relabelled into canonical order with labels a, b, c, ...
Poset canonical_poset(const Poset& p);

std::vector<std::string> default_labels(std::size_t n);

inline constexpr std::size_t enumeration_guard = 7;

// One representative per isomorphism class, in canonical labelling and
// sorted by key.  Throws size_limit above enumeration_guard.
const std::vector<Poset>& posets_of_size(std::size_t n);

// Reflexive-transitive closure of a random relation on a random linear
// order; each pair i<j is related with probability `density`.
Poset random_poset(std::size_t n, std::mt19937_64& rng, double density = 0.35);

}  // namespace ordalg
