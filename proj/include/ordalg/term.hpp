#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

// Term over variables, constants and operation symbols.  Cheap to copy:
// nodes are shared and immutable.
class Term {
 public:
  enum class Kind { variable, constant, apply };

  static Term variable(std::string name);
  static Term constant(std::string symbol);
  static Term apply(std::string symbol, std::vector<Term> children);

  Kind kind() const noexcept { return node_->kind; }
  // Variable name or operation symbol.
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Term>& children() const noexcept { return node_->children; }

  // Distinct variables in order of first appearance (left to right).
  std::vector<std::string> variables() const;
  void collect_variables(std::vector<std::string>& out) const;
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Environment = std::map<std::string, Element, std::less<>>;

// Bottom-up evaluation through the operation tables.  Throws
// unbound_variable, unknown_symbol or arity_mismatch.
Element eval_term(const Algebra& a, const Term& t, const Environment& env);

// Builders for the symbols of the assigned algebras.
namespace terms {
inline Term var(std::string name) { return Term::variable(std::move(name)); }
inline Term cst(std::string_view symbol) { return Term::constant(std::string(symbol)); }
inline Term meet(Term a, Term b) { return Term::apply(std::string(sym::meet), {std::move(a), std::move(b)}); }
inline Term join(Term a, Term b) { return Term::apply(std::string(sym::join), {std::move(a), std::move(b)}); }
inline Term star(Term a) { return Term::apply(std::string(sym::star), {std::move(a)}); }
inline Term rel(Term a, Term b) { return Term::apply(std::string(sym::star), {std::move(a), std::move(b)}); }
inline Term circ(Term a, Term b) { return Term::apply(std::string(sym::circ), {std::move(a), std::move(b)}); }
inline Term zero() { return cst(sym::zero); }
inline Term one() { return cst(sym::one); }
}  // namespace terms

}  // namespace ordalg
