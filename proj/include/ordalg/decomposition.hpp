#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/congruence.hpp"

namespace ordalg {

// Componentwise operations on A1×A2.  Element (i,j) has index i*|A2|+j and
// label "a.b".  Throws signature_mismatch.
Algebra direct_product(const Algebra& a1, const Algebra& a2);

// A/θ with blocks ordered by leader and labelled "[leader]".  Throws
// not_a_congruence.
Algebra quotient(const Algebra& a, const Congruence& theta);

// Congruences with Θ∨Φ=∇, Θ∩Φ=Δ and Θ∘Φ=Φ∘Θ.
class FactorPair {
 public:
  // Throws invalid_argument naming the first condition that fails.
  FactorPair(Congruence theta, Congruence phi);

  static bool valid(const Congruence& theta, const Congruence& phi);

  const Congruence& theta() const noexcept { return theta_; }
  const Congruence& phi() const noexcept { return phi_; }
  bool trivial() const { return theta_.is_identity() || phi_.is_identity(); }

  friend bool operator==(const FactorPair&, const FactorPair&) = default;

 private:
  Congruence theta_;
  Congruence phi_;
};

// All unordered factor pairs, (Δ,∇) first.  Each pair is oriented so that
// |A/Θ| ≤ |A/Φ|.  Throws size_guard_exceeded when the congruence lattice is
// larger than options.max_congruences.
std::vector<FactorPair> factor_pairs(const Algebra& a, const CongruenceOptions& options = {});

struct Factorization {
  bool decomposable = false;
  std::optional<FactorPair> pair;
  std::optional<Algebra> first;   // A/Θ
  std::optional<Algebra> second;  // A/Φ
  // a ↦ ([a]Θ,[a]Φ) as indices into first and second.
  std::vector<ElementPair> map;
};

// Uses the nontrivial factor pair minimizing |A/Θ|, ties broken
// lexicographically.  The natural map is checked to be an isomorphism onto
// first×second.
Factorization decompose(const Algebra& a, const CongruenceOptions& options = {});

struct IsomorphismOptions {
  std::size_t guard = 12;
};

// Lexicographically first isomorphism a1→a2 as an image vector.  Throws
// signature_mismatch, or size_guard_exceeded above the guard.
std::optional<std::vector<Element>> find_isomorphism(const Algebra& a1, const Algebra& a2,
                                                     const IsomorphismOptions& options = {});

// True when `map` is a bijection commuting with every operation.
bool is_isomorphism(const Algebra& a1, const Algebra& a2, const std::vector<Element>& map);

// θ1×θ2: (a1,a2) ~ (b1,b2) iff a1 θ1 b1 and a2 θ2 b2, on the carrier of
// direct_product.
Congruence product_congruence(const Congruence& t1, const Congruence& t2);

// A pair (θ1,θ2) with θ1×θ2=θ, if one exists.  Throws not_a_congruence.
std::optional<std::pair<Congruence, Congruence>> is_directly_decomposable_congruence(
    const Algebra& a1, const Algebra& a2, const Congruence& theta, const CongruenceOptions& options = {});

}  // namespace ordalg
