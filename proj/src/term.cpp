#include "ordalg/term.hpp"

#include <algorithm>

#include "ordalg/error.hpp"

namespace ordalg {

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}}));
}

Term Term::constant(std::string symbol) {
  return Term(std::make_shared<const Node>(Node{Kind::constant, std::move(symbol), {}}));
}

Term Term::apply(std::string symbol, std::vector<Term> children) {
  if (children.empty() || children.size() > 2)
    throw Error(ErrorCode::arity_mismatch, "'" + symbol + "' applied to " + std::to_string(children.size()) +
                                               " arguments");
  return Term(std::make_shared<const Node>(Node{Kind::apply, std::move(symbol), std::move(children)}));
}

void Term::collect_variables(std::vector<std::string>& out) const {
  if (kind() == Kind::variable) {
    if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
    return;
  }
  for (const auto& c : children()) c.collect_variables(out);
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  collect_variables(out);
  return out;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::variable:
    case Kind::constant:
      return name();
    case Kind::apply:
      break;
  }
  const auto& c = children();
  if (c.size() == 1) {
    // Postfix for unary operations: x*, x**.
    const bool atomic = c[0].kind() != Kind::apply || c[0].children().size() == 1;
    return (atomic ? c[0].to_string() : "(" + c[0].to_string() + ")") + name();
  }
  auto side = [](const Term& t) {
    return t.kind() == Kind::apply && t.children().size() == 2 ? "(" + t.to_string() + ")" : t.to_string();
  };
  return side(c[0]) + name() + side(c[1]);
}

Element eval_term(const Algebra& a, const Term& t, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = env.find(t.name());
      if (it == env.end()) throw Error(ErrorCode::unbound_variable, "'" + t.name() + "'");
      if (it->second >= a.size()) throw Error(ErrorCode::invalid_argument, "'" + t.name() + "' outside carrier");
      return it->second;
    }
    case Term::Kind::constant: {
      const Operation* op = a.find(t.name());
      if (!op) throw Error(ErrorCode::unknown_symbol, "'" + t.name() + "'");
      if (op->arity() != 0) throw Error(ErrorCode::arity_mismatch, "'" + t.name() + "' is not a constant");
      return (*op)();
    }
    case Term::Kind::apply:
      break;
  }
  const Operation* op = a.find(t.name());
  if (!op) throw Error(ErrorCode::unknown_symbol, "'" + t.name() + "'");
  if (op->arity() != static_cast<int>(t.children().size()))
    throw Error(ErrorCode::arity_mismatch, "'" + t.name() + "' has arity " + std::to_string(op->arity()));
  std::vector<Element> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(eval_term(a, c, env));
  return op->apply(args);
}

}  // namespace ordalg
