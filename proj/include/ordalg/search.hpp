#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/poset.hpp"

namespace ordalg {

// Names usable in predicates: pc pseudocomplemented stone rpc relatively_pc
// spc sectionally_pc spc1 sectionally_pc_with_1 sspc strongly_sectionally_pc
// distributive lattice bounded has_top has_bottom directed down_directed
// up_directed.
const std::vector<std::string_view>& predicate_atoms();

// Throws invalid_argument for an unknown name.
bool evaluate_atom(const Poset& p, std::string_view atom);

// Boolean combination of atoms with `and`, `or`, `not` and parentheses.
class Predicate {
 public:
  // Throws syntax_error.
  static Predicate parse(std::string_view text);

  bool operator()(const Poset& p) const;
  std::string to_string() const;

  struct Node;

 private:
  explicit Predicate(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

struct SearchSpec {
  enum class Mode { exhaustive, random };

  std::size_t min_size = 1;
  std::size_t max_size = 4;
  Predicate where = Predicate::parse("pc");
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 1;
  // Random mode: number of sampled posets.
  std::uint64_t count = 1000;
  // Stop after this many hits; 0 means no limit.
  std::size_t limit = 0;
};

struct SearchResult {
  std::vector<Poset> hits;
  std::uint64_t examined = 0;
};

// Exhaustive mode visits one poset per isomorphism class of each size, in
// canonical order, and throws size_limit above the enumeration guard.
// Random mode keeps hits in sampling order, duplicates removed.
SearchResult search(const SearchSpec& spec);

}  // namespace ordalg
