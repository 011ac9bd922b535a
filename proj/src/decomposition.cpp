#include "ordalg/decomposition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

#include "ordalg/error.hpp"

namespace ordalg {

Algebra direct_product(const Algebra& a1, const Algebra& a2) {
  if (!a1.signature().same_as(a2.signature()))
    throw Error(ErrorCode::signature_mismatch, "direct product needs equal signatures");
  const std::size_t n1 = a1.size(), n2 = a2.size(), n = n1 * n2;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j) labels.push_back(a1.label(i) + "." + a2.label(j));
  auto pack = [&](Element i, Element j) { return static_cast<Element>(i * n2 + j); };

  std::vector<Operation> ops;
  for (const Operation& f : a1.operations()) {
    const Operation& g = a2.op(f.symbol());
    std::vector<Element> table;
    switch (f.arity()) {
      case 0: table = {pack(f(), g())}; break;
      case 1:
        for (Element x = 0; x < n; ++x) table.push_back(pack(f(x / n2), g(x % n2)));
        break;
      default:
        table.resize(n * n);
        for (Element x = 0; x < n; ++x)
          for (Element y = 0; y < n; ++y) table[x * n + y] = pack(f(x / n2, y / n2), g(x % n2, y % n2));
    }
    ops.emplace_back(f.symbol(), f.arity(), n, std::move(table));
  }
  return Algebra(std::move(labels), std::move(ops));
}

Algebra quotient(const Algebra& a, const Congruence& theta) {
  if (auto r = is_congruence(a, theta); !r)
    throw Error(ErrorCode::not_a_congruence, "partition is not compatible with '" + r.symbol + "'");
  std::vector<Element> block(a.size());
  std::vector<std::string> labels;
  std::map<Element, Element> index;
  for (Element i = 0; i < a.size(); ++i)
    if (theta.leader(i) == i) {
      index[i] = static_cast<Element>(labels.size());
      labels.push_back("[" + a.label(i) + "]");
    }
  for (Element i = 0; i < a.size(); ++i) block[i] = index.at(theta.leader(i));
  const std::size_t m = labels.size();

  std::vector<Operation> ops;
  for (const Operation& f : a.operations()) {
    std::vector<Element> table;
    switch (f.arity()) {
      case 0: table = {block[f()]}; break;
      case 1:
        for (const auto& [leader, _] : index) table.push_back(block[f(leader)]);
        break;
      default:
        for (const auto& [x, _] : index)
          for (const auto& [y, __] : index) table.push_back(block[f(x, y)]);
    }
    ops.emplace_back(f.symbol(), f.arity(), m, std::move(table));
  }
  return Algebra(std::move(labels), std::move(ops));
}

bool FactorPair::valid(const Congruence& theta, const Congruence& phi) {
  return theta.size() == phi.size() && join(theta, phi).is_total() && meet(theta, phi).is_identity() &&
         compose(theta, phi) == compose(phi, theta);
}

FactorPair::FactorPair(Congruence theta, Congruence phi) : theta_(std::move(theta)), phi_(std::move(phi)) {
  if (theta_.size() != phi_.size()) throw Error(ErrorCode::invalid_argument, "congruences on different carriers");
  if (!join(theta_, phi_).is_total()) throw Error(ErrorCode::invalid_argument, "Θ∨Φ≠∇");
  if (!meet(theta_, phi_).is_identity()) throw Error(ErrorCode::invalid_argument, "Θ∩Φ≠Δ");
  if (compose(theta_, phi_) != compose(phi_, theta_)) throw Error(ErrorCode::invalid_argument, "Θ∘Φ≠Φ∘Θ");
}

std::vector<FactorPair> factor_pairs(const Algebra& a, const CongruenceOptions& options) {
  auto lat = congruence_lattice(a, options);
  if (lat.size() > options.max_congruences)
    throw Error(ErrorCode::size_guard_exceeded, std::to_string(lat.size()) + " congruences exceed the limit of " +
                                                    std::to_string(options.max_congruences));
  std::vector<FactorPair> out;
  const auto& c = lat.elements;
  // Lattice order puts finer congruences (more blocks) first, so the later
  // member of a pair is the one with the smaller quotient.
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + (c.size() > 1 ? 1 : 0); j < c.size(); ++j)
      if (FactorPair::valid(c[j], c[i])) {
        const bool swap = c[j].block_count() > c[i].block_count();
        out.emplace_back(swap ? c[i] : c[j], swap ? c[j] : c[i]);
      }
  return out;
}

Factorization decompose(const Algebra& a, const CongruenceOptions& options) {
  Factorization f;
  const FactorPair* best = nullptr;
  auto pairs = factor_pairs(a, options);
  for (const auto& p : pairs) {
    if (p.trivial()) continue;
    if (!best) {
      best = &p;
      continue;
    }
    auto key = [](const FactorPair& q) {
      return std::tuple(q.theta().block_count(), q.theta().leaders(), q.phi().leaders());
    };
    if (key(p) < key(*best)) best = &p;
  }
  if (!best) return f;

  f.decomposable = true;
  f.pair = *best;
  f.first = quotient(a, best->theta());
  f.second = quotient(a, best->phi());
  auto position = [](const Congruence& c) {
    std::map<Element, Element> idx;
    for (Element i = 0; i < c.size(); ++i)
      if (c.leader(i) == i) idx.emplace(i, static_cast<Element>(idx.size()));
    return idx;
  };
  auto p1 = position(best->theta()), p2 = position(best->phi());
  std::vector<Element> image(a.size());
  const std::size_t n2 = f.second->size();
  for (Element i = 0; i < a.size(); ++i) {
    ElementPair e{p1.at(best->theta().leader(i)), p2.at(best->phi().leader(i))};
    f.map.push_back(e);
    image[i] = static_cast<Element>(e.first * n2 + e.second);
  }
  if (!is_isomorphism(a, direct_product(*f.first, *f.second), image))
    throw Error(ErrorCode::invalid_argument, "natural map of a factor pair is not an isomorphism");
  return f;
}

bool is_isomorphism(const Algebra& a1, const Algebra& a2, const std::vector<Element>& map) {
  const std::size_t n = a1.size();
  if (a2.size() != n || map.size() != n || !a1.signature().same_as(a2.signature())) return false;
  std::vector<bool> hit(n, false);
  for (Element m : map) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (const Operation& f : a1.operations()) {
    const Operation& g = a2.op(f.symbol());
    if (f.arity() == 0 && map[f()] != g()) return false;
    if (f.arity() == 1)
      for (Element x = 0; x < n; ++x)
        if (map[f(x)] != g(map[x])) return false;
    if (f.arity() == 2)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (map[f(x, y)] != g(map[x], map[y])) return false;
  }
  return true;
}

namespace {

// Joint colour refinement of both carriers; equal colours are necessary for
// an element to be mapped onto another.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colours(const Algebra& a1, const Algebra& a2,
                                                                             const std::vector<std::string>& order) {
  using Key = std::vector<std::size_t>;
  auto initial = [&](const Algebra& a, Element x) {
    Key k;
    for (const auto& s : order) {
      const Operation& f = a.op(s);
      if (f.arity() == 0) k.push_back(f() == x);
      if (f.arity() == 1) k.push_back(f(x) == x);
      if (f.arity() == 2) k.push_back(f(x, x) == x);
    }
    return k;
  };
  const std::size_t n = a1.size();
  std::vector<std::size_t> c1(n), c2(n);
  std::map<Key, std::size_t> ids;
  for (Element x = 0; x < n; ++x) c1[x] = ids.try_emplace(initial(a1, x), ids.size()).first->second;
  for (Element x = 0; x < n; ++x) c2[x] = ids.try_emplace(initial(a2, x), ids.size()).first->second;

  for (std::size_t distinct = ids.size();;) {
    auto signature = [&](const Algebra& a, const std::vector<std::size_t>& c, Element x) {
      Key k{c[x]};
      for (const auto& s : order) {
        const Operation& f = a.op(s);
        if (f.arity() == 1) k.push_back(c[f(x)]);
        if (f.arity() == 2) {
          std::vector<std::array<std::size_t, 3>> row;
          for (Element y = 0; y < n; ++y) row.push_back({c[y], c[f(x, y)], c[f(y, x)]});
          std::sort(row.begin(), row.end());
          for (const auto& t : row) k.insert(k.end(), t.begin(), t.end());
        }
      }
      return k;
    };
    std::map<Key, std::size_t> next;
    std::vector<std::size_t> d1(n), d2(n);
    for (Element x = 0; x < n; ++x) d1[x] = next.try_emplace(signature(a1, c1, x), next.size()).first->second;
    for (Element x = 0; x < n; ++x) d2[x] = next.try_emplace(signature(a2, c2, x), next.size()).first->second;
    c1 = std::move(d1);
    c2 = std::move(d2);
    if (next.size() == distinct) break;
    distinct = next.size();
  }
  return {c1, c2};
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Algebra& a1, const Algebra& a2,
                                                     const IsomorphismOptions& options) {
  if (!a1.signature().same_as(a2.signature()))
    throw Error(ErrorCode::signature_mismatch, "isomorphism needs equal signatures");
  if (a1.size() != a2.size()) return std::nullopt;
  const std::size_t n = a1.size();
  if (n > options.guard)
    throw Error(ErrorCode::size_guard_exceeded,
                "isomorphism search limited to " + std::to_string(options.guard) + " elements");

  std::vector<std::string> order;
  for (const auto& op : a1.operations()) order.push_back(op.symbol());
  auto [c1, c2] = refine_colours(a1, a2, order);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<std::pair<const Operation*, const Operation*>> ops;
  for (const auto& s : order) ops.emplace_back(&a1.op(s), &a2.op(s));

  constexpr Element unset = ~Element{0};
  std::vector<Element> map(n, unset);
  std::vector<bool> used(n, false);
  auto agree = [&](Element src, Element dst) { return map[src] == unset || map[src] == dst; };
  // Checks every tuple whose arguments are mapped and include x.
  auto consistent = [&](Element x) {
    for (auto [f, g] : ops) {
      if (f->arity() == 0 && !agree((*f)(), (*g)())) return false;
      if (f->arity() == 1 && !agree((*f)(x), (*g)(map[x]))) return false;
      if (f->arity() == 2)
        for (Element y = 0; y <= x; ++y) {
          if (map[y] == unset) continue;
          if (!agree((*f)(x, y), (*g)(map[x], map[y])) || !agree((*f)(y, x), (*g)(map[y], map[x]))) return false;
        }
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == n) return is_isomorphism(a1, a2, map);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || c1[x] != c2[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && self(self, x + 1)) return true;
      used[y] = false;
      map[x] = unset;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

Congruence product_congruence(const Congruence& t1, const Congruence& t2) {
  const std::size_t n2 = t2.size();
  std::vector<Element> cls(t1.size() * n2);
  for (Element i = 0; i < t1.size(); ++i)
    for (Element j = 0; j < n2; ++j) cls[i * n2 + j] = static_cast<Element>(t1.leader(i) * n2 + t2.leader(j));
  return Congruence::from_classes(cls);
}

std::optional<std::pair<Congruence, Congruence>> is_directly_decomposable_congruence(
    const Algebra& a1, const Algebra& a2, const Congruence& theta, const CongruenceOptions& options) {
  const Algebra product = direct_product(a1, a2);
  if (auto r = is_congruence(product, theta); !r)
    throw Error(ErrorCode::not_a_congruence, "partition is not compatible with '" + r.symbol + "'");
  auto l1 = congruence_lattice(a1, options);
  auto l2 = congruence_lattice(a2, options);
  for (const auto& t1 : l1.elements)
    for (const auto& t2 : l2.elements)
      if (product_congruence(t1, t2) == theta) return std::pair{t1, t2};
  return std::nullopt;
}

}  // namespace ordalg
