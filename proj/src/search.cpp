#include "ordalg/search.hpp"

#include <cctype>
#include <random>
#include <set>

#include "ordalg/enumerate.hpp"
#include "ordalg/error.hpp"
#include "ordalg/pc_structures.hpp"

namespace ordalg {

const std::vector<std::string_view>& predicate_atoms() {
  static const std::vector<std::string_view> atoms{
      "pc",           "pseudocomplemented", "stone",         "rpc",           "relatively_pc",
      "spc",          "sectionally_pc",     "spc1",          "sectionally_pc_with_1",
      "sspc",         "strongly_sectionally_pc",             "distributive",  "lattice",
      "bounded",      "has_top",            "has_bottom",    "directed",      "down_directed",
      "up_directed"};
  return atoms;
}

bool evaluate_atom(const Poset& p, std::string_view atom) {
  if (auto k = parse_pc_kind(atom)) return classify(p, *k).holds;
  if (atom == "distributive") return is_distributive(p).holds;
  if (atom == "lattice") return is_lattice(p).holds;
  auto ext = extremes(p);
  if (atom == "bounded") return ext.bottom && ext.top;
  if (atom == "has_top") return ext.top.has_value();
  if (atom == "has_bottom") return ext.bottom.has_value();
  auto dir = directedness(p);
  if (atom == "directed") return dir.down_directed() && dir.up_directed();
  if (atom == "down_directed") return dir.down_directed();
  if (atom == "up_directed") return dir.up_directed();
  throw Error(ErrorCode::invalid_argument, "unknown predicate '" + std::string(atom) + "'");
}

struct Predicate::Node {
  enum class Kind { atom, negation, conjunction, disjunction } kind;
  std::string atom;
  std::shared_ptr<const Node> left, right;
};

namespace {

using NodePtr = std::shared_ptr<const Predicate::Node>;
using Kind = Predicate::Node::Kind;

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  NodePtr run() {
    auto n = disjunction();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_)) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::syntax_error, "predicate, column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string word() {
    skip();
    std::size_t e = pos_;
    while (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) ++e;
    return std::string(s_.substr(pos_, e - pos_));
  }
  bool take(std::string_view w) {
    skip();
    if (w == "(" || w == ")") {
      if (pos_ < s_.size() && s_[pos_] == w[0]) {
        ++pos_;
        return true;
      }
      return false;
    }
    if (word() == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  NodePtr disjunction() {
    auto n = conjunction();
    while (take("or")) n = std::make_shared<Predicate::Node>(Predicate::Node{Kind::disjunction, {}, n, conjunction()});
    return n;
  }
  NodePtr conjunction() {
    auto n = negation();
    while (take("and")) n = std::make_shared<Predicate::Node>(Predicate::Node{Kind::conjunction, {}, n, negation()});
    return n;
  }
  NodePtr negation() {
    if (take("not")) return std::make_shared<Predicate::Node>(Predicate::Node{Kind::negation, {}, negation(), {}});
    if (take("(")) {
      auto n = disjunction();
      if (!take(")")) fail("expected ')'");
      return n;
    }
    auto w = word();
    if (w.empty()) fail("expected a predicate name");
    bool known = false;
    for (auto a : predicate_atoms()) known = known || a == w;
    if (!known) fail("unknown predicate '" + w + "'");
    pos_ += w.size();
    return std::make_shared<Predicate::Node>(Predicate::Node{Kind::atom, w, {}, {}});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool eval(const Predicate::Node& n, const Poset& p) {
  switch (n.kind) {
    case Kind::atom: return evaluate_atom(p, n.atom);
    case Kind::negation: return !eval(*n.left, p);
    case Kind::conjunction: return eval(*n.left, p) && eval(*n.right, p);
    case Kind::disjunction: return eval(*n.left, p) || eval(*n.right, p);
  }
  return false;
}

std::string show(const Predicate::Node& n) {
  switch (n.kind) {
    case Kind::atom: return n.atom;
    case Kind::negation: return "not " + show(*n.left);
    case Kind::conjunction: return "(" + show(*n.left) + " and " + show(*n.right) + ")";
    case Kind::disjunction: return "(" + show(*n.left) + " or " + show(*n.right) + ")";
  }
  return "";
}

}  // namespace

Predicate Predicate::parse(std::string_view text) { return Predicate(ExprParser(text).run()); }

bool Predicate::operator()(const Poset& p) const { return eval(*root_, p); }

std::string Predicate::to_string() const { return show(*root_); }

SearchResult search(const SearchSpec& spec) {
  if (spec.min_size > spec.max_size) throw Error(ErrorCode::invalid_argument, "empty size range");
  SearchResult r;
  auto full = [&] { return spec.limit != 0 && r.hits.size() >= spec.limit; };
  if (spec.mode == SearchSpec::Mode::exhaustive) {
    if (spec.max_size > enumeration_guard)
      throw Error(ErrorCode::size_limit,
                  "exhaustive search is limited to " + std::to_string(enumeration_guard) + " elements");
    for (std::size_t n = spec.min_size; n <= spec.max_size && !full(); ++n)
      for (const Poset& p : posets_of_size(n)) {
        ++r.examined;
        if (spec.where(p)) r.hits.push_back(p);
        if (full()) break;
      }
    return r;
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::size_t> size(spec.min_size, spec.max_size);
  std::set<std::pair<std::size_t, std::string>> seen;
  for (std::uint64_t i = 0; i < spec.count && !full(); ++i) {
    Poset p = random_poset(size(rng), rng);
    ++r.examined;
    if (!spec.where(p)) continue;
    auto form = canonical_form(p);
    if (seen.emplace(p.size(), form.key).second) r.hits.push_back(canonical_poset(p));
  }
  return r;
}

}  // namespace ordalg
