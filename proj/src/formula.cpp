#include "ordalg/formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "ordalg/error.hpp"

namespace ordalg {

Prop Prop::eq(Term lhs, Term rhs) {
  return Prop(std::make_shared<const Node>(Node{Kind::equation, {std::move(lhs), std::move(rhs)}, {}, {}, {}}));
}

Prop Prop::forall(std::vector<std::string> variables, Prop body) {
  auto dummy = Term::variable("_");
  return Prop(std::make_shared<const Node>(
      Node{Kind::forall, {dummy, dummy}, std::move(variables), std::make_shared<const Prop>(std::move(body)), {}}));
}

Prop Prop::implies(Prop premise, Prop conclusion) {
  auto dummy = Term::variable("_");
  return Prop(std::make_shared<const Node>(Node{Kind::implies, {dummy, dummy}, {},
                                                std::make_shared<const Prop>(std::move(premise)),
                                                std::make_shared<const Prop>(std::move(conclusion))}));
}

Prop Prop::iff(Prop left, Prop right) {
  auto dummy = Term::variable("_");
  return Prop(std::make_shared<const Node>(Node{Kind::iff, {dummy, dummy}, {},
                                                std::make_shared<const Prop>(std::move(left)),
                                                std::make_shared<const Prop>(std::move(right))}));
}

std::string Prop::to_string() const {
  switch (kind()) {
    case Kind::equation:
      return equation().to_string();
    case Kind::forall: {
      std::string vars;
      for (const auto& v : bound()) vars += (vars.empty() ? "" : ",") + v;
      return "(∀" + vars + ": " + left().to_string() + ")";
    }
    case Kind::implies:
      return left().to_string() + " ⇒ " + right().to_string();
    case Kind::iff:
      return "(" + left().to_string() + " ⇔ " + right().to_string() + ")";
  }
  return {};
}

namespace {

void check_bound(const Prop& p, std::vector<std::string>& scope) {
  switch (p.kind()) {
    case Prop::Kind::equation: {
      std::vector<std::string> vars;
      p.equation().lhs.collect_variables(vars);
      p.equation().rhs.collect_variables(vars);
      for (const auto& v : vars)
        if (std::find(scope.begin(), scope.end(), v) == scope.end())
          throw Error(ErrorCode::unbound_variable, "'" + v + "' is not bound by any quantifier");
      return;
    }
    case Prop::Kind::forall: {
      const auto mark = scope.size();
      scope.insert(scope.end(), p.bound().begin(), p.bound().end());
      check_bound(p.left(), scope);
      scope.resize(mark);
      return;
    }
    case Prop::Kind::implies:
    case Prop::Kind::iff:
      check_bound(p.left(), scope);
      check_bound(p.right(), scope);
      return;
  }
}

double prop_cost(const Prop& p, double n) {
  switch (p.kind()) {
    case Prop::Kind::equation:
      return 1.0;
    case Prop::Kind::forall:
      return std::pow(n, static_cast<double>(p.bound().size())) * prop_cost(p.left(), n);
    case Prop::Kind::implies:
    case Prop::Kind::iff:
      return prop_cost(p.left(), n) + prop_cost(p.right(), n);
  }
  return 1.0;
}

}  // namespace

Formula::Formula(std::string name, std::vector<std::string> outer, Prop body)
    : name_(std::move(name)), outer_(std::move(outer)), body_(std::move(body)) {
  std::vector<std::string> scope = outer_;
  check_bound(body_, scope);
}

Formula Formula::identity(std::string name, Term lhs, Term rhs) {
  std::vector<std::string> vars;
  lhs.collect_variables(vars);
  rhs.collect_variables(vars);
  return Formula(std::move(name), std::move(vars), Prop::eq(std::move(lhs), std::move(rhs)));
}

Formula Formula::implication(std::string name, std::vector<std::string> outer, std::vector<std::string> inner,
                             Equation premise, Equation conclusion) {
  Prop pre = Prop::eq(std::move(premise.lhs), std::move(premise.rhs));
  if (!inner.empty()) pre = Prop::forall(std::move(inner), std::move(pre));
  return Formula(std::move(name), std::move(outer),
                 Prop::implies(std::move(pre), Prop::eq(std::move(conclusion.lhs), std::move(conclusion.rhs))));
}

Formula Formula::iff_implication(std::string name, std::vector<std::string> outer, std::string s,
                                 std::vector<std::string> inner, Equation block, Equation atomic,
                                 Equation conclusion) {
  Prop blk = Prop::eq(std::move(block.lhs), std::move(block.rhs));
  if (!inner.empty()) blk = Prop::forall(std::move(inner), std::move(blk));
  Prop premise = Prop::forall({std::move(s)}, Prop::iff(std::move(blk), Prop::eq(std::move(atomic.lhs),
                                                                                 std::move(atomic.rhs))));
  return Formula(std::move(name), std::move(outer),
                 Prop::implies(std::move(premise), Prop::eq(std::move(conclusion.lhs), std::move(conclusion.rhs))));
}

std::string Formula::to_string() const {
  std::string vars;
  for (const auto& v : outer_) vars += (vars.empty() ? "" : ",") + v;
  return "∀" + vars + ": " + body_.to_string();
}

double Formula::cost(std::size_t n) const {
  const double c = std::pow(static_cast<double>(n), static_cast<double>(outer_.size())) *
                   prop_cost(body_, static_cast<double>(n));
  return std::isfinite(c) ? c : std::numeric_limits<double>::infinity();
}

double CheckOptions::default_budget() {
  if (const char* env = std::getenv("ORDALG_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e9;
}

namespace {

// Terms compiled to postfix code over a slot-addressed environment.
struct Instr {
  enum class Op : std::uint8_t { variable, constant, unary, binary };
  Op op;
  Element arg;  // slot or constant value
  const Element* table;
};

struct Code {
  std::vector<Instr> instrs;
  std::size_t depth = 0;
};

struct CompiledProp {
  Prop::Kind kind;
  Code lhs, rhs;
  std::vector<std::uint32_t> slots;
  std::unique_ptr<CompiledProp> left, right;
};

class Compiler {
 public:
  explicit Compiler(const Algebra& a) : algebra_(a) {}

  std::uint32_t bind(const std::string& name) {
    scope_.emplace_back(name, slot_count_);
    return slot_count_++;
  }
  void unbind(std::size_t count) { scope_.resize(scope_.size() - count); }
  std::uint32_t slot_count() const { return slot_count_; }

  std::unique_ptr<CompiledProp> compile(const Prop& p) {
    auto c = std::make_unique<CompiledProp>();
    c->kind = p.kind();
    switch (p.kind()) {
      case Prop::Kind::equation:
        c->lhs = compile_term(p.equation().lhs);
        c->rhs = compile_term(p.equation().rhs);
        break;
      case Prop::Kind::forall:
        for (const auto& v : p.bound()) c->slots.push_back(bind(v));
        c->left = compile(p.left());
        unbind(p.bound().size());
        break;
      case Prop::Kind::implies:
      case Prop::Kind::iff:
        c->left = compile(p.left());
        c->right = compile(p.right());
        break;
    }
    return c;
  }

  Code compile_term(const Term& t) {
    Code code;
    std::size_t depth = 0;
    emit(t, code, depth);
    return code;
  }

 private:
  void emit(const Term& t, Code& code, std::size_t& depth) {
    switch (t.kind()) {
      case Term::Kind::variable: {
        auto it = std::find_if(scope_.rbegin(), scope_.rend(), [&](const auto& e) { return e.first == t.name(); });
        if (it == scope_.rend()) throw Error(ErrorCode::unbound_variable, "'" + t.name() + "'");
        code.instrs.push_back({Instr::Op::variable, it->second, nullptr});
        code.depth = std::max(code.depth, ++depth);
        return;
      }
      case Term::Kind::constant: {
        const Operation& op = lookup(t.name(), 0);
        code.instrs.push_back({Instr::Op::constant, op(), nullptr});
        code.depth = std::max(code.depth, ++depth);
        return;
      }
      case Term::Kind::apply:
        break;
    }
    const auto arity = static_cast<int>(t.children().size());
    const Operation& op = lookup(t.name(), arity);
    for (const auto& c : t.children()) emit(c, code, depth);
    code.instrs.push_back({arity == 1 ? Instr::Op::unary : Instr::Op::binary, 0, op.table().data()});
    if (arity == 2) --depth;
  }

  const Operation& lookup(const std::string& symbol, int arity) {
    const Operation* op = algebra_.find(symbol);
    if (!op) throw Error(ErrorCode::unknown_symbol, "'" + symbol + "' is not in the signature");
    if (op->arity() != arity)
      throw Error(ErrorCode::arity_mismatch, "'" + symbol + "' has arity " + std::to_string(op->arity()) +
                                                 ", used with " + std::to_string(arity));
    return *op;
  }

  const Algebra& algebra_;
  std::vector<std::pair<std::string, std::uint32_t>> scope_;
  std::uint32_t slot_count_ = 0;
};

class Machine {
 public:
  Machine(std::size_t n, std::size_t slots) : n_(static_cast<Element>(n)), env_(slots, 0), stack_(64) {}

  std::vector<Element>& env() { return env_; }

  bool eval(const CompiledProp& p) {
    switch (p.kind) {
      case Prop::Kind::equation:
        return run(p.lhs) == run(p.rhs);
      case Prop::Kind::forall: {
        for (auto s : p.slots) env_[s] = 0;
        while (true) {
          if (!eval(*p.left)) return false;
          if (!advance(p.slots)) return true;
        }
      }
      case Prop::Kind::implies:
        return !eval(*p.left) || eval(*p.right);
      case Prop::Kind::iff:
        return eval(*p.left) == eval(*p.right);
    }
    return false;
  }

  // Row-major odometer: the last slot varies fastest.
  bool advance(const std::vector<std::uint32_t>& slots) {
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
      if (++env_[*it] < n_) return true;
      env_[*it] = 0;
    }
    return false;
  }

 private:
  Element run(const Code& code) {
    if (code.depth > stack_.size()) stack_.resize(code.depth);
    Element* sp = stack_.data();
    for (const auto& in : code.instrs) {
      switch (in.op) {
        case Instr::Op::variable: *sp++ = env_[in.arg]; break;
        case Instr::Op::constant: *sp++ = in.arg; break;
        case Instr::Op::unary: sp[-1] = in.table[sp[-1]]; break;
        case Instr::Op::binary:
          --sp;
          sp[-1] = in.table[sp[-1] * n_ + sp[0]];
          break;
      }
    }
    return stack_[0];
  }

  Element n_;
  std::vector<Element> env_;
  std::vector<Element> stack_;
};

}  // namespace

Report check_formula(const Algebra& a, const Formula& f, const CheckOptions& options) {
  Report r;
  r.name = f.name();
  r.formula = std::make_shared<const Formula>(f);

  Compiler compiler(a);
  std::vector<std::uint32_t> outer;
  for (const auto& v : f.outer()) outer.push_back(compiler.bind(v));
  auto body = compiler.compile(f.body());

  const double cost = f.cost(a.size());
  if (cost > options.budget) {
    std::ostringstream msg;
    msg << "'" << f.name() << "' needs about " << cost << " evaluations on " << a.size()
        << " elements; budget is " << options.budget;
    throw Error(ErrorCode::budget_exceeded, msg.str());
  }
  if (a.size() == 0) return r;

  Machine m(a.size(), compiler.slot_count());
  while (true) {
    ++r.checked_count;
    if (!m.eval(*body)) {
      r.holds = false;
      Assignment w;
      for (std::size_t i = 0; i < outer.size(); ++i) w.emplace_back(f.outer()[i], m.env()[outer[i]]);
      r.witness = std::move(w);
      return r;
    }
    if (!m.advance(outer)) break;
  }
  return r;
}

namespace {

// Tree-walking evaluation with named environments.
bool eval_prop(const Algebra& a, const Prop& p, Environment& env) {
  switch (p.kind()) {
    case Prop::Kind::equation:
      return eval_term(a, p.equation().lhs, env) == eval_term(a, p.equation().rhs, env);
    case Prop::Kind::forall: {
      const auto& vars = p.bound();
      Environment saved = env;
      std::vector<Element> values(vars.size(), 0);
      bool result = true;
      while (result) {
        for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = values[i];
        result = eval_prop(a, p.left(), env);
        std::size_t i = vars.size();
        while (i > 0 && ++values[i - 1] == a.size()) values[--i] = 0;
        if (i == 0) break;
      }
      env = std::move(saved);
      return result;
    }
    case Prop::Kind::implies:
      return !eval_prop(a, p.left(), env) || eval_prop(a, p.right(), env);
    case Prop::Kind::iff:
      return eval_prop(a, p.left(), env) == eval_prop(a, p.right(), env);
  }
  return false;
}

}  // namespace

bool holds_at(const Algebra& a, const Formula& f, const Assignment& assignment) {
  Environment env;
  for (const auto& [name, value] : assignment) env[name] = value;
  for (const auto& v : f.outer())
    if (!env.contains(v)) throw Error(ErrorCode::unbound_variable, "'" + v + "' missing from assignment");
  return eval_prop(a, f.body(), env);
}

bool witness_consistent(const Algebra& a, const Report& r) {
  if (r.holds) return !r.witness.has_value();
  if (!r.witness || !r.formula) return false;
  return !holds_at(a, *r.formula, *r.witness);
}

std::string format_assignment(const Assignment& assignment, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i) out += ", ";
    out += assignment[i].first + "=" + labels.at(assignment[i].second);
  }
  return out + "}";
}

}  // namespace ordalg
