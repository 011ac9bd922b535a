#include "ordalg/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ordalg/error.hpp"

namespace ordalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::duplicate_label: return "DuplicateLabel";
    case ErrorCode::unknown_label: return "UnknownLabel";
    case ErrorCode::cycle_detected: return "CycleDetected";
    case ErrorCode::size_limit: return "SizeLimit";
    case ErrorCode::no_bottom: return "NoBottom";
    case ErrorCode::not_a_partial_order: return "NotAPartialOrder";
    case ErrorCode::missing_symbol: return "MissingSymbol";
    case ErrorCode::unbound_variable: return "UnboundVariable";
    case ErrorCode::unknown_symbol: return "UnknownSymbol";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::missing_structure: return "MissingStructure";
    case ErrorCode::missing_choice: return "MissingChoice";
    case ErrorCode::bad_choice: return "BadChoice";
    case ErrorCode::not_directed: return "NotDirected";
    case ErrorCode::bad_partition: return "BadPartition";
    case ErrorCode::not_a_congruence: return "NotACongruence";
    case ErrorCode::size_guard_exceeded: return "SizeGuardExceeded";
    case ErrorCode::signature_mismatch: return "SignatureMismatch";
    case ErrorCode::non_total_table: return "NonTotalTable";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::semantic_error: return "SemanticError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

void check_labels(const std::vector<std::string>& labels, const PosetOptions& options) {
  if (labels.size() > options.max_size)
    throw Error(ErrorCode::size_limit, "carrier of size " + std::to_string(labels.size()) +
                                           " exceeds the limit " + std::to_string(options.max_size));
  std::set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorCode::duplicate_label, "label '" + l + "' repeated");
}

// Path from `from` to `to` along the original (non-closed) edges.
std::vector<Element> find_path(const std::vector<std::vector<Element>>& succ, Element from, Element to) {
  std::vector<Element> parent(succ.size(), static_cast<Element>(succ.size()));
  std::vector<Element> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    Element v = stack.back();
    stack.pop_back();
    for (Element w : succ[v]) {
      if (parent[w] != succ.size()) continue;
      parent[w] = v;
      if (w == to) {
        std::vector<Element> path{to};
        for (Element u = to; u != from;) {
          u = parent[u];
          path.push_back(u);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      stack.push_back(w);
    }
  }
  return {};
}

}  // namespace

Poset::Poset(std::vector<std::string> labels, std::vector<ElementSet> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const std::size_t n = labels_.size();
  down_.assign(n, ElementSet(n));
  for (Element a = 0; a < n; ++a) up_[a].for_each([&](Element b) { down_[b].insert(a); });
}

Poset Poset::build(std::vector<std::string> labels, const std::vector<LabelPair>& pairs,
                   const PosetOptions& options) {
  check_labels(labels, options);
  std::vector<ElementPair> indexed;
  indexed.reserve(pairs.size());
  auto lookup = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw Error(ErrorCode::unknown_label, "'" + l + "'");
    return static_cast<Element>(it - labels.begin());
  };
  for (const auto& [a, b] : pairs) indexed.emplace_back(lookup(a), lookup(b));
  return build(std::move(labels), indexed, options);
}

Poset Poset::build(std::vector<std::string> labels, const std::vector<ElementPair>& pairs,
                   const PosetOptions& options) {
  check_labels(labels, options);
  const std::size_t n = labels.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<std::vector<Element>> succ(n);
  for (Element a = 0; a < n; ++a) up[a].insert(a);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::unknown_label, "element index out of range");
    up[a].insert(b);
    succ[a].push_back(b);
  }
  // Warshall over bit rows.
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (up[a].contains(b) && up[b].contains(a)) {
        auto there = find_path(succ, a, b);
        auto back = find_path(succ, b, a);
        std::ostringstream cycle;
        for (Element e : there) cycle << labels[e] << " < ";
        for (std::size_t i = 1; i < back.size(); ++i)
          cycle << labels[back[i]] << (i + 1 < back.size() ? " < " : "");
        throw Error(ErrorCode::cycle_detected, cycle.str());
      }
  return Poset(std::move(labels), std::move(up));
}

Poset Poset::from_relation(std::vector<std::string> labels, const std::vector<ElementSet>& leq,
                           const PosetOptions& options) {
  check_labels(labels, options);
  const std::size_t n = labels.size();
  if (leq.size() != n) throw Error(ErrorCode::not_a_partial_order, "relation has wrong number of rows");
  for (const auto& row : leq)
    if (row.universe() != n) throw Error(ErrorCode::not_a_partial_order, "relation row has wrong width");
  auto pair_text = [&](Element a, Element b) { return "(" + labels[a] + "," + labels[b] + ")"; };
  for (Element a = 0; a < n; ++a)
    if (!leq[a].contains(a)) throw Error(ErrorCode::not_a_partial_order, "not reflexive at " + pair_text(a, a));
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (leq[a].contains(b) && leq[b].contains(a))
        throw Error(ErrorCode::not_a_partial_order, "not antisymmetric at " + pair_text(a, b));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (leq[a].contains(b) && !leq[b].is_subset_of(leq[a]))
        throw Error(ErrorCode::not_a_partial_order, "not transitive through " + pair_text(a, b));
  return Poset(std::move(labels), leq);
}

std::optional<Element> Poset::find(std::string_view label) const {
  for (Element i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element Poset::index_of(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::unknown_label, "'" + std::string(label) + "'");
}

ElementSet Poset::lower(const ElementSet& s) const {
  ElementSet out = all();
  s.for_each([&](Element e) { out &= down_[e]; });
  return out;
}

ElementSet Poset::upper(const ElementSet& s) const {
  ElementSet out = all();
  s.for_each([&](Element e) { out &= up_[e]; });
  return out;
}

ElementSet Poset::set_of_labels(const std::vector<std::string>& labels) const {
  ElementSet s(size());
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::string Poset::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ",";
    out += labels_[e];
    first = false;
  });
  return out + "}";
}

std::vector<ElementPair> Poset::covers() const {
  std::vector<ElementPair> out;
  const auto n = static_cast<Element>(size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      // a < b with nothing strictly between.
      ElementSet between = up_[a] & down_[b];
      if (between.size() == 2) out.emplace_back(a, b);
    }
  return out;
}

ConeResult lower_cone(const Poset& p, const ElementSet& s) { return {p.lower(s), s}; }
ConeResult upper_cone(const Poset& p, const ElementSet& s) { return {p.upper(s), s}; }

std::string_view to_string(Directedness d) {
  switch (d) {
    case Directedness::neither: return "neither";
    case Directedness::down: return "down";
    case Directedness::up: return "up";
    case Directedness::both: return "both";
  }
  return "neither";
}

DirectednessResult directedness(const Poset& p) {
  DirectednessResult r;
  const auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      if (!r.down_witness && p.lower(x, y).empty()) r.down_witness = ElementPair{x, y};
      if (!r.up_witness && p.upper(x, y).empty()) r.up_witness = ElementPair{x, y};
    }
  if (r.down_directed() && r.up_directed())
    r.kind = Directedness::both;
  else if (r.down_directed())
    r.kind = Directedness::down;
  else if (r.up_directed())
    r.kind = Directedness::up;
  return r;
}

Extremes extremes(const Poset& p) {
  Extremes e;
  const auto n = p.size();
  for (Element x = 0; x < n; ++x) {
    if (p.up(x).size() == n) e.bottom = x;
    if (p.down(x).size() == n) e.top = x;
  }
  return e;
}

namespace {

// Shared driver for the two distributivity forms; `lower_form` selects
//   L(U(x,y),z) = LU(L(x,z),L(y,z))   or   U(L(x,y),z) = UL(U(x,z),U(y,z)).
Report distributivity(const Poset& p, bool lower_form) {
  Report r;
  r.name = lower_form ? "L(U(x,y),z) = LU(L(x,z),L(y,z))" : "U(L(x,y),z) = UL(U(x,z),U(y,z))";
  const auto n = static_cast<Element>(p.size());
  auto inner = [&](Element a, Element b) { return lower_form ? p.upper(a, b) : p.lower(a, b); };
  auto outer = [&](Element a, Element b) { return lower_form ? p.lower(a, b) : p.upper(a, b); };
  auto cone = [&](const ElementSet& s) { return lower_form ? p.lower(s) : p.upper(s); };
  auto cocone = [&](const ElementSet& s) { return lower_form ? p.upper(s) : p.lower(s); };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        ++r.checked_count;
        ElementSet gen = inner(x, y);
        gen.insert(z);
        ElementSet left = cone(gen);
        ElementSet right = cone(cocone(outer(x, z) | outer(y, z)));
        if (left != right) {
          r.holds = false;
          r.witness = Assignment{{"x", x}, {"y", y}, {"z", z}};
          r.detail = (lower_form ? "L(U(x,y),z)=" : "U(L(x,y),z)=") + p.format(left) +
                     (lower_form ? " but LU(L(x,z),L(y,z))=" : " but UL(U(x,z),U(y,z))=") +
                     p.format(right);
          return r;
        }
      }
  return r;
}

}  // namespace

Report is_distributive(const Poset& p) { return distributivity(p, true); }
Report is_distributive_upper(const Poset& p) { return distributivity(p, false); }

Report is_lattice(const Poset& p) {
  Report r;
  r.name = "lattice";
  const auto n = static_cast<Element>(p.size());
  auto has_extreme = [&](const ElementSet& s, bool greatest) {
    bool found = false;
    s.for_each([&](Element c) {
      const ElementSet& cone = greatest ? p.down(c) : p.up(c);
      if (s.is_subset_of(cone)) found = true;
    });
    return found;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      ++r.checked_count;
      bool inf = has_extreme(p.lower(x, y), true);
      bool sup = has_extreme(p.upper(x, y), false);
      if (!inf || !sup) {
        r.holds = false;
        r.witness = Assignment{{"x", x}, {"y", y}};
        r.detail = std::string(!inf ? "no infimum" : "no supremum") + " of " + p.label(x) + " and " +
                   p.label(y);
        return r;
      }
    }
  return r;
}

}  // namespace ordalg
