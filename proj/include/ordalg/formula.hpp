#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ordalg/report.hpp"
#include "ordalg/term.hpp"

namespace ordalg {

struct Equation {
  Term lhs;
  Term rhs;

  std::string to_string() const { return lhs.to_string() + "=" + rhs.to_string(); }
};

// Quantified body of a formula: atomic equations combined by inner universal
// quantifiers, implication and biconditional.  This covers identities,
// quasi-identities with a universally quantified premise, and premises that
// are themselves biconditionals of such blocks.
class Prop {
 public:
  enum class Kind { equation, forall, implies, iff };

  static Prop eq(Term lhs, Term rhs);
  static Prop forall(std::vector<std::string> variables, Prop body);
  static Prop implies(Prop premise, Prop conclusion);
  static Prop iff(Prop left, Prop right);

  Kind kind() const noexcept { return node_->kind; }
  const Equation& equation() const noexcept { return node_->equation; }
  const std::vector<std::string>& bound() const noexcept { return node_->bound; }
  const Prop& left() const noexcept { return *node_->left; }
  const Prop& right() const noexcept { return *node_->right; }

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Equation equation;
    std::vector<std::string> bound;
    std::shared_ptr<const Prop> left;
    std::shared_ptr<const Prop> right;
  };
  explicit Prop(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A closed formula: a universally quantified prefix over a Prop body.
class Formula {
 public:
  // Every variable occurring in `body` must be bound by `outer` or an inner
  // quantifier; throws unbound_variable otherwise.
  Formula(std::string name, std::vector<std::string> outer, Prop body);

  // s = t with variables quantified in order of first appearance.
  static Formula identity(std::string name, Term lhs, Term rhs);
  // forall outer: (forall inner: premise) => conclusion
  static Formula implication(std::string name, std::vector<std::string> outer,
                             std::vector<std::string> inner, Equation premise, Equation conclusion);
  // forall outer: (forall s: ((forall inner: block) <=> atomic)) => conclusion
  static Formula iff_implication(std::string name, std::vector<std::string> outer, std::string s,
                                 std::vector<std::string> inner, Equation block, Equation atomic,
                                 Equation conclusion);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& outer() const noexcept { return outer_; }
  const Prop& body() const noexcept { return body_; }
  std::string to_string() const;

  // Assignments the checker examines on a carrier of size n, counting inner
  // quantifier blocks (saturates at +inf).
  double cost(std::size_t n) const;

 private:
  std::string name_;
  std::vector<std::string> outer_;
  Prop body_;
};

struct CheckOptions {
  // Refuse formulas whose cost exceeds this.  Defaults to ORDALG_BUDGET when
  // set, else 1e9.
  double budget = default_budget();

  static double default_budget();
};

// Exhaustive check over all assignments of the outer variables in row-major
// order, stopping at the first counterexample.  Throws unknown_symbol or
// arity_mismatch when the formula does not fit the signature, and
// budget_exceeded when the estimated cost is above the budget.
Report check_formula(const Algebra& a, const Formula& f, const CheckOptions& options = {});

// Truth of the body at one outer assignment, evaluated by walking terms with
// eval_term.  Independent of the compiled path used by check_formula.
bool holds_at(const Algebra& a, const Formula& f, const Assignment& assignment);

// Re-evaluates a failed report's witness.  True when the report is
// consistent: it holds, or its witness falsifies its formula.
bool witness_consistent(const Algebra& a, const Report& r);

std::string format_assignment(const Assignment& assignment, const std::vector<std::string>& labels);

}  // namespace ordalg
