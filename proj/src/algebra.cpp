#include "ordalg/algebra.hpp"

#include <algorithm>
#include <set>

#include "ordalg/error.hpp"

namespace ordalg {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.arity < 0 || s.arity > 2)
      throw Error(ErrorCode::arity_mismatch, "symbol '" + s.name + "' has unsupported arity");
    if (!seen.insert(s.name).second)
      throw Error(ErrorCode::duplicate_label, "symbol '" + s.name + "' declared twice");
  }
}

const Symbol* Signature::find(std::string_view name) const noexcept {
  for (const auto& s : symbols_)
    if (s.name == name) return &s;
  return nullptr;
}

bool Signature::same_as(const Signature& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (const auto& s : symbols_) {
    const Symbol* o = other.find(s.name);
    if (!o || o->arity != s.arity) return false;
  }
  return true;
}

Operation::Operation(std::string symbol, int arity, std::size_t carrier, std::vector<Element> table)
    : symbol_(std::move(symbol)), arity_(arity), n_(carrier), table_(std::move(table)) {
  if (arity_ < 0 || arity_ > 2)
    throw Error(ErrorCode::arity_mismatch, "operation '" + symbol_ + "' has unsupported arity");
  std::size_t expected = 1;
  for (int i = 0; i < arity_; ++i) expected *= n_;
  if (table_.size() != expected)
    throw Error(ErrorCode::non_total_table, "operation '" + symbol_ + "' has " +
                                                std::to_string(table_.size()) + " entries, expected " +
                                                std::to_string(expected));
  for (Element v : table_)
    if (v >= n_) throw Error(ErrorCode::non_total_table, "operation '" + symbol_ + "' leaves the carrier");
}

Element Operation::apply(const std::vector<Element>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw Error(ErrorCode::arity_mismatch, "operation '" + symbol_ + "' takes " + std::to_string(arity_) +
                                               " arguments");
  std::size_t index = 0;
  for (Element a : args) index = index * n_ + a;
  return table_[index];
}

Algebra::Algebra(std::vector<std::string> labels, std::vector<Operation> operations)
    : labels_(std::move(labels)), operations_(std::move(operations)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::duplicate_label, "label '" + l + "' repeated");
  std::set<std::string_view> names;
  for (const auto& op : operations_) {
    if (op.carrier() != labels_.size())
      throw Error(ErrorCode::non_total_table, "operation '" + op.symbol() + "' built for another carrier");
    if (!names.insert(op.symbol()).second)
      throw Error(ErrorCode::duplicate_label, "symbol '" + op.symbol() + "' declared twice");
  }
}

std::optional<Element> Algebra::find_label(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element Algebra::index_of(std::string_view label) const {
  if (auto e = find_label(label)) return *e;
  throw Error(ErrorCode::unknown_label, "'" + std::string(label) + "'");
}

Signature Algebra::signature() const {
  std::vector<Symbol> out;
  for (const auto& op : operations_) out.push_back({op.symbol(), op.arity()});
  return Signature(std::move(out));
}

const Operation* Algebra::find(std::string_view symbol) const noexcept {
  for (const auto& op : operations_)
    if (op.symbol() == symbol) return &op;
  return nullptr;
}

const Operation& Algebra::op(std::string_view symbol) const {
  if (const auto* o = find(symbol)) return *o;
  throw Error(ErrorCode::missing_symbol, "algebra has no operation '" + std::string(symbol) + "'");
}

Algebra Algebra::with(Operation op) const {
  auto ops = operations_;
  auto it = std::find_if(ops.begin(), ops.end(), [&](const Operation& o) { return o.symbol() == op.symbol(); });
  if (it != ops.end())
    *it = std::move(op);
  else
    ops.push_back(std::move(op));
  return Algebra(labels_, std::move(ops));
}

Algebra Algebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size())
    throw Error(ErrorCode::invalid_argument, "relabeling must keep the carrier size");
  return Algebra(std::move(labels), operations_);
}

}  // namespace ordalg
