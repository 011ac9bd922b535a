#include "ordalg/axioms.hpp"

#include <algorithm>

#include "ordalg/error.hpp"

namespace ordalg {

std::string_view to_string(OrderKind k) { return k == OrderKind::meet ? "meet" : "join"; }

std::string_view to_string(AxiomClass c) {
  switch (c) {
    case AxiomClass::meet_directoid: return "meet_directoid";
    case AxiomClass::join_directoid: return "join_directoid";
    case AxiomClass::lambda_lattice: return "lambda_lattice";
  }
  return "";
}

Poset induced_order(const Algebra& a, OrderKind kind) {
  const Operation& op = a.op(kind == OrderKind::meet ? sym::meet : sym::join);
  if (op.arity() != 2) throw Error(ErrorCode::arity_mismatch, "'" + op.symbol() + "' is not binary");
  const auto n = static_cast<Element>(a.size());
  std::vector<ElementSet> leq(n, ElementSet(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (kind == OrderKind::meet ? op(x, y) == x : op(x, y) == y) leq[x].insert(y);
  return Poset::from_relation(a.labels(), leq, PosetOptions{std::max<std::size_t>(n, 64)});
}

namespace {

std::vector<Formula> directoid(std::string_view s, const std::string& prefix) {
  using namespace terms;
  auto op = [&](Term l, Term r) { return Term::apply(std::string(s), {std::move(l), std::move(r)}); };
  auto x = var("x"), y = var("y"), z = var("z");
  return {
      Formula::identity(prefix + " idempotent", op(x, x), x),
      Formula::identity(prefix + " weak associativity", op(x, op(op(x, y), z)), op(op(x, y), z)),
      Formula::identity(prefix + " commutative", op(x, y), op(y, x)),
  };
}

}  // namespace

std::vector<Formula> axioms(AxiomClass c) {
  using namespace terms;
  switch (c) {
    case AxiomClass::meet_directoid:
      return directoid(sym::meet, "⊓");
    case AxiomClass::join_directoid:
      return directoid(sym::join, "⊔");
    case AxiomClass::lambda_lattice: {
      auto out = directoid(sym::join, "⊔");
      auto meets = directoid(sym::meet, "⊓");
      out.insert(out.end(), meets.begin(), meets.end());
      auto x = var("x"), y = var("y");
      out.push_back(Formula::identity("absorption (x⊔y)⊓x=x", meet(join(x, y), x), x));
      out.push_back(Formula::identity("absorption (x⊓y)⊔x=x", join(meet(x, y), x), x));
      return out;
    }
  }
  return {};
}

ReportSet verify_axioms(const Algebra& a, AxiomClass c, const CheckOptions& options) {
  if (c != AxiomClass::join_directoid && !a.has(sym::meet))
    throw Error(ErrorCode::missing_symbol, "'⊓' required for " + std::string(to_string(c)));
  if (c != AxiomClass::meet_directoid && !a.has(sym::join))
    throw Error(ErrorCode::missing_symbol, "'⊔' required for " + std::string(to_string(c)));
  ReportSet out;
  for (const auto& f : axioms(c)) out.items.push_back(check_formula(a, f, options));
  return out;
}

}  // namespace ordalg
