#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/element_set.hpp"

namespace ordalg {

// Operation symbols used by the assigned algebras.
namespace sym {
inline constexpr std::string_view meet = "⊓";
inline constexpr std::string_view join = "⊔";
inline constexpr std::string_view star = "*";  // unary pseudocomplement or binary relative one
inline constexpr std::string_view circ = "∘";
inline constexpr std::string_view zero = "0";
inline constexpr std::string_view one = "1";
}  // namespace sym

struct Symbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol* find(std::string_view name) const noexcept;
  // Same symbols with the same arities, regardless of order.
  bool same_as(const Signature& other) const;

 private:
  std::vector<Symbol> symbols_;
};

// A total operation table.  Entry for (a1,...,ak) sits at a1*n^(k-1)+...+ak.
class Operation {
 public:
  Operation(std::string symbol, int arity, std::size_t carrier, std::vector<Element> table);

  static Operation constant(std::string symbol, std::size_t carrier, Element value) {
    return Operation(std::move(symbol), 0, carrier, {value});
  }

  const std::string& symbol() const noexcept { return symbol_; }
  int arity() const noexcept { return arity_; }
  std::size_t carrier() const noexcept { return n_; }
  const std::vector<Element>& table() const noexcept { return table_; }

  Element operator()() const noexcept { return table_[0]; }
  Element operator()(Element a) const noexcept { return table_[a]; }
  Element operator()(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element apply(const std::vector<Element>& args) const;

  friend bool operator==(const Operation&, const Operation&) = default;

 private:
  std::string symbol_;
  int arity_;
  std::size_t n_;
  std::vector<Element> table_;
};

// A finite algebra: carrier {0..n-1} with display labels and operation
// tables of arity 0, 1 or 2.
class Algebra {
 public:
  Algebra(std::vector<std::string> labels, std::vector<Operation> operations);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  std::optional<Element> find_label(std::string_view label) const;
  Element index_of(std::string_view label) const;

  const std::vector<Operation>& operations() const noexcept { return operations_; }
  Signature signature() const;
  bool has(std::string_view symbol) const noexcept { return find(symbol) != nullptr; }
  const Operation* find(std::string_view symbol) const noexcept;
  // Throws missing_symbol.
  const Operation& op(std::string_view symbol) const;

  // Copy with `op` added, or replacing the operation of the same symbol.
  Algebra with(Operation op) const;
  Algebra relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Operation> operations_;
};

}  // namespace ordalg
