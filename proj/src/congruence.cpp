#include "ordalg/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ordalg/error.hpp"

namespace ordalg {

namespace {

struct UnionFind {
  std::vector<Element> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }

  Element find(Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // True when two classes were merged.
  bool unite(Element a, Element b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<Element> classes() {
    std::vector<Element> out(parent.size());
    for (Element i = 0; i < parent.size(); ++i) out[i] = find(i);
    return out;
  }
};

}  // namespace

Congruence Congruence::from_classes(const std::vector<Element>& class_of) {
  std::map<Element, Element> first;
  std::vector<Element> leader(class_of.size());
  for (Element i = 0; i < class_of.size(); ++i) leader[i] = first.try_emplace(class_of[i], i).first->second;
  return Congruence(std::move(leader));
}

Congruence Congruence::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> class_of(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::bad_partition, "empty block");
    for (Element e : blocks[b]) {
      if (e >= n) throw Error(ErrorCode::bad_partition, "element " + std::to_string(e) + " outside the carrier");
      if (class_of[e] != unset)
        throw Error(ErrorCode::bad_partition, "element " + std::to_string(e) + " lies in two blocks");
      class_of[e] = static_cast<Element>(b);
    }
  }
  for (Element e = 0; e < n; ++e)
    if (class_of[e] == unset) throw Error(ErrorCode::bad_partition, "element " + std::to_string(e) + " is in no block");
  return from_classes(class_of);
}

Congruence Congruence::identity(std::size_t n) {
  std::vector<Element> leader(n);
  std::iota(leader.begin(), leader.end(), Element{0});
  return Congruence(std::move(leader));
}

Congruence Congruence::total(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

std::size_t Congruence::block_count() const {
  std::size_t k = 0;
  for (Element i = 0; i < leader_.size(); ++i) k += leader_[i] == i;
  return k;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(leader_.size());
  for (Element i = 0; i < leader_.size(); ++i) {
    if (leader_[i] == i) {
      slot[i] = out.size();
      out.emplace_back();
    }
    out[slot[leader_[i]]].push_back(i);
  }
  return out;
}

std::vector<Element> Congruence::block_of(Element a) const {
  std::vector<Element> out;
  for (Element i = 0; i < leader_.size(); ++i)
    if (leader_[i] == leader_.at(a)) out.push_back(i);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  for (Element i = 0; i < leader_.size(); ++i)
    if (!other.related(i, leader_[i])) return false;
  return true;
}

std::string Congruence::to_string(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  os << "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    os << (first_block ? "" : ",") << "{";
    first_block = false;
    for (std::size_t k = 0; k < block.size(); ++k) os << (k ? "," : "") << labels.at(block[k]);
    os << "}";
  }
  os << "}";
  return os.str();
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "congruences on different carriers");
  std::map<ElementPair, Element> ids;
  std::vector<Element> cls(a.size());
  for (Element i = 0; i < a.size(); ++i)
    cls[i] = ids.try_emplace({a.leader(i), b.leader(i)}, i).first->second;
  return Congruence::from_classes(cls);
}

Congruence join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::invalid_argument, "congruences on different carriers");
  UnionFind uf(a.size());
  for (Element i = 0; i < a.size(); ++i) {
    uf.unite(i, a.leader(i));
    uf.unite(i, b.leader(i));
  }
  return Congruence::from_classes(uf.classes());
}

std::vector<bool> compose(const Congruence& a, const Congruence& b) {
  const std::size_t n = a.size();
  std::vector<bool> out(n * n, false);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!a.related(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (b.related(y, z)) out[x * n + z] = true;
    }
  return out;
}

CompatibilityResult is_congruence(const Algebra& a, const Congruence& theta) {
  if (theta.size() != a.size()) throw Error(ErrorCode::bad_partition, "partition does not cover the carrier");
  CompatibilityResult r;
  const auto n = static_cast<Element>(a.size());
  auto fail = [&](const Operation& op, std::vector<Element> lhs, std::vector<Element> rhs) {
    r.holds = false;
    r.symbol = op.symbol();
    r.args = std::move(lhs);
    r.other_args = std::move(rhs);
    return r;
  };
  // Varying one argument at a time suffices by transitivity.
  for (const Operation& op : a.operations()) {
    for (Element x = 0; x < n; ++x) {
      const Element x2 = theta.leader(x);
      if (x2 == x) continue;
      if (op.arity() == 1 && !theta.related(op(x), op(x2))) return fail(op, {x}, {x2});
      if (op.arity() == 2)
        for (Element y = 0; y < n; ++y) {
          if (!theta.related(op(x, y), op(x2, y))) return fail(op, {x, y}, {x2, y});
          if (!theta.related(op(y, x), op(y, x2))) return fail(op, {y, x}, {y, x2});
        }
    }
  }
  return r;
}

CompatibilityResult is_congruence(const Algebra& a, const std::vector<std::vector<Element>>& blocks) {
  return is_congruence(a, Congruence::from_blocks(a.size(), blocks));
}

Congruence generated_congruence(const Algebra& a, const std::vector<ElementPair>& pairs) {
  const auto n = static_cast<Element>(a.size());
  UnionFind uf(n);
  std::vector<ElementPair> work;
  auto merge = [&](Element u, Element v) {
    if (uf.unite(u, v)) work.emplace_back(u, v);
  };
  for (auto [u, v] : pairs) {
    if (u >= n || v >= n) throw Error(ErrorCode::invalid_argument, "element outside the carrier");
    merge(u, v);
  }
  // The partition is generated by the pairs in `work`; closing each of
  // them under the basic translations gives the congruence.
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    for (const Operation& op : a.operations()) {
      if (op.arity() == 1) merge(op(u), op(v));
      if (op.arity() == 2)
        for (Element y = 0; y < n; ++y) {
          merge(op(u, y), op(v, y));
          merge(op(y, u), op(y, v));
        }
    }
  }
  return Congruence::from_classes(uf.classes());
}

std::optional<std::size_t> CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::find(elements.begin(), elements.end(), c);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<Congruence> scan_congruences(const Algebra& a) {
  const auto n = static_cast<Element>(a.size());
  std::vector<Congruence> out;
  if (n == 0) {
    out.push_back(Congruence::identity(0));
    return out;
  }
  std::vector<Element> cls(n, 0);
  // Checks every constraint whose elements are all among 0..i.
  auto consistent = [&](Element i) {
    auto same = [&](Element p, Element q) { return p > i || q > i || cls[p] == cls[q]; };
    for (const Operation& op : a.operations()) {
      for (Element x = 0; x <= i; ++x)
        for (Element x2 = x + 1; x2 <= i; ++x2) {
          if (cls[x] != cls[x2]) continue;
          if (op.arity() == 1 && !same(op(x), op(x2))) return false;
          if (op.arity() == 2)
            for (Element y = 0; y <= i; ++y)
              if (!same(op(x, y), op(x2, y)) || !same(op(y, x), op(y, x2))) return false;
        }
    }
    return true;
  };
  auto rec = [&](auto&& self, Element i, Element blocks) -> void {
    if (i == n) {
      out.push_back(Congruence::from_classes(cls));
      return;
    }
    for (Element b = 0; b <= blocks; ++b) {
      cls[i] = b;
      if (consistent(i)) self(self, i + 1, std::max<Element>(blocks, b + 1));
    }
  };
  cls[0] = 0;
  rec(rec, 1, 1);
  return out;
}

namespace {

bool lattice_order(const Congruence& a, const Congruence& b) {
  const auto ka = a.block_count(), kb = b.block_count();
  if (ka != kb) return ka > kb;
  return a.leaders() < b.leaders();
}

}  // namespace

CongruenceLattice congruence_lattice(const Algebra& a, const CongruenceOptions& options) {
  const auto n = static_cast<Element>(a.size());
  CongruenceLattice lat;
  std::set<std::vector<Element>> seen;
  std::vector<Congruence> principals;
  std::vector<Congruence> found;
  auto add = [&](const Congruence& c) {
    if (seen.insert(c.leaders()).second) {
      found.push_back(c);
      return true;
    }
    return false;
  };
  add(Congruence::identity(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      Congruence c = principal_congruence(a, x, y);
      if (add(c)) principals.push_back(c);
    }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < principals.size(); ++j) add(join(found[i], principals[j]));

  std::sort(found.begin(), found.end(), lattice_order);
  lat.elements = std::move(found);

  if (n <= options.guard) {
    auto scanned = scan_congruences(a);
    std::sort(scanned.begin(), scanned.end(), lattice_order);
    if (scanned != lat.elements)
      throw Error(ErrorCode::not_a_congruence, "principal-closure generation disagrees with the partition scan (" +
                                                   std::to_string(lat.elements.size()) + " vs " +
                                                   std::to_string(scanned.size()) + " congruences)");
    lat.validated = true;
  } else {
    lat.guard_exceeded = true;
  }

  const std::size_t k = lat.elements.size();
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[lat.elements[i].leaders()] = i;
  lat.join_table.assign(k * k, 0);
  lat.meet_table.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const auto jn = index.at(join(lat.elements[i], lat.elements[j]).leaders());
      const auto mt = index.at(meet(lat.elements[i], lat.elements[j]).leaders());
      lat.join_table[i * k + j] = lat.join_table[j * k + i] = jn;
      lat.meet_table[i * k + j] = lat.meet_table[j * k + i] = mt;
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !lat.elements[i].refines(lat.elements[j])) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k && cover; ++m)
        if (m != i && m != j && lat.elements[i].refines(lat.elements[m]) && lat.elements[m].refines(lat.elements[j]))
          cover = false;
      if (cover) lat.hasse.emplace_back(i, j);
    }
  return lat;
}

CongruenceProperties congruence_properties(const CongruenceLattice& lat, const std::vector<std::string>& labels,
                                           std::optional<Element> unit) {
  CongruenceProperties r;
  const std::size_t k = lat.size();
  r.congruence_count = k;
  auto name = [&](std::size_t i) { return lat.elements[i].to_string(labels); };

  for (std::size_t i = 0; i < k && r.permutable; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (compose(lat.elements[i], lat.elements[j]) != compose(lat.elements[j], lat.elements[i])) {
        r.permutable = false;
        r.permutable_witness = "Θ∘Φ≠Φ∘Θ for Θ=" + name(i) + ", Φ=" + name(j);
        break;
      }

  for (std::size_t i = 0; i < k && r.distributive; ++i)
    for (std::size_t j = 0; j < k && r.distributive; ++j)
      for (std::size_t m = 0; m < k; ++m)
        if (lat.meet(i, lat.join(j, m)) != lat.join(lat.meet(i, j), lat.meet(i, m))) {
          r.distributive = false;
          r.distributive_witness = "Θ∧(Φ∨Ψ)≠(Θ∧Φ)∨(Θ∧Ψ) for Θ=" + name(i) + ", Φ=" + name(j) + ", Ψ=" + name(m);
          break;
        }
  r.arithmetical = r.permutable && r.distributive;

  if (unit) {
    r.weakly_regular = true;
    for (std::size_t i = 0; i < k && *r.weakly_regular; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (lat.elements[i].block_of(*unit) == lat.elements[j].block_of(*unit)) {
          r.weakly_regular = false;
          r.weakly_regular_witness = "[" + labels.at(*unit) + "]Θ=[" + labels.at(*unit) + "]Φ for Θ=" + name(i) +
                                     ", Φ=" + name(j);
          break;
        }
  }
  return r;
}

CongruenceProperties congruence_properties(const Algebra& a, std::optional<Element> unit,
                                           const CongruenceOptions& options) {
  auto lat = congruence_lattice(a, options);
  if (lat.size() > options.max_congruences)
    throw Error(ErrorCode::size_guard_exceeded, std::to_string(lat.size()) + " congruences exceed the limit of " +
                                                    std::to_string(options.max_congruences));
  return congruence_properties(lat, a.labels(), unit);
}

std::optional<Element> designated_unit(const Algebra& a, Profile profile) {
  switch (profile) {
    case Profile::pc:
    case Profile::stone: return a.op(sym::star)(a.op(sym::zero)());
    case Profile::spc: return std::nullopt;
    default: return a.op(sym::one)();
  }
}

std::string_view to_string(TermScheme s) {
  switch (s) {
    case TermScheme::majority: return "majority";
    case TermScheme::maltsev: return "maltsev";
    case TermScheme::weak_regularity: return "weak_regularity";
  }
  return "";
}

std::vector<TermScheme> term_schemes(Profile p) {
  switch (p) {
    case Profile::pc: return {};
    case Profile::stone:
    case Profile::spc: return {TermScheme::majority};
    case Profile::rpc: return {TermScheme::maltsev, TermScheme::weak_regularity};
    case Profile::spc1: return {TermScheme::majority, TermScheme::weak_regularity};
    case Profile::sspc: return {TermScheme::majority, TermScheme::maltsev, TermScheme::weak_regularity};
  }
  return {};
}

std::vector<Formula> scheme_identities(TermScheme s, Profile p) {
  using namespace terms;
  auto x = var("x"), y = var("y");
  const std::string o(profile_operation(p));
  auto op = [&](Term l, Term r) { return Term::apply(o, {std::move(l), std::move(r)}); };
  auto eq = [](std::string name, std::vector<std::string> vars, Term l, Term r) {
    return Formula(std::move(name), std::move(vars), Prop::eq(std::move(l), std::move(r)));
  };
  switch (s) {
    case TermScheme::majority: {
      auto m = [](Term a, Term b, Term c) { return meet(meet(join(a, b), join(b, c)), join(c, a)); };
      return {eq("m(x,x,y)≈x", {"x", "y"}, m(x, x, y), x), eq("m(x,y,x)≈x", {"x", "y"}, m(x, y, x), x),
              eq("m(y,x,x)≈x", {"x", "y"}, m(y, x, x), x)};
    }
    case TermScheme::maltsev: {
      auto pt = [&](Term a, Term b, Term c) { return meet(op(op(a, b), c), op(op(c, b), a)); };
      return {eq("p(x,x,y)≈y", {"x", "y"}, pt(x, x, y), y), eq("p(y,x,x)≈y", {"x", "y"}, pt(y, x, x), y)};
    }
    case TermScheme::weak_regularity: {
      auto t1 = [&](Term a, Term b) { return op(a, b); };
      auto t2 = [&](Term a, Term b) { return op(b, a); };
      auto s1 = [&](Term a, Term, Term c, Term d) { return meet(op(a, d), c); };
      auto s2 = [&](Term, Term b, Term c, Term d) { return meet(op(b, c), d); };
      return {eq("t1(x,x)≈1", {"x"}, t1(x, x), one()), eq("t2(x,x)≈1", {"x"}, t2(x, x), one()),
              eq("s1(t1(x,y),1,x,y)≈x", {"x", "y"}, s1(t1(x, y), one(), x, y), x),
              eq("s1(1,t1(x,y),x,y)≈s2(t2(x,y),1,x,y)", {"x", "y"}, s1(one(), t1(x, y), x, y),
                 s2(t2(x, y), one(), x, y)),
              eq("s2(1,t2(x,y),x,y)≈y", {"x", "y"}, s2(one(), t2(x, y), x, y), y)};
    }
  }
  return {};
}

std::vector<TermConditionReport> verify_term_conditions(const Algebra& a, Profile p, const CheckOptions& options) {
  std::vector<TermConditionReport> out;
  for (TermScheme s : term_schemes(p)) {
    std::vector<std::string_view> needed{sym::meet};
    if (s == TermScheme::majority) needed.push_back(sym::join);
    if (s != TermScheme::majority) needed.push_back(profile_operation(p));
    if (s == TermScheme::weak_regularity) needed.push_back(sym::one);
    for (auto n : needed)
      if (!a.has(n))
        throw Error(ErrorCode::missing_symbol,
                    "'" + std::string(n) + "' required by the " + std::string(to_string(s)) + " scheme");
    TermConditionReport r{s, {}};
    for (const auto& f : scheme_identities(s, p)) r.identities.items.push_back(check_formula(a, f, options));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ordalg
