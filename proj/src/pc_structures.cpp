#include "ordalg/pc_structures.hpp"

#include "ordalg/error.hpp"

namespace ordalg {

Greatest greatest_of(const Poset& p, const ElementSet& candidates) {
  Greatest g{std::nullopt, candidates, ElementSet(p.size())};
  candidates.for_each([&](Element c) {
    ElementSet above = p.up(c) & candidates;
    if (above.size() == 1) g.maximal.insert(c);
  });
  if (g.maximal.size() == 1) {
    Element m = g.maximal.first();
    if (candidates.is_subset_of(p.down(m))) g.value = m;
  }
  return g;
}

ElementSet pseudocomplement_candidates(const Poset& p, Element x, Element zero) {
  ElementSet out(p.size());
  const ElementSet only_zero = p.set_of({zero});
  for (Element y = 0; y < p.size(); ++y)
    if (p.lower(x, y) == only_zero) out.insert(y);
  return out;
}

ElementSet relative_candidates(const Poset& p, Element x, Element y) {
  ElementSet out(p.size());
  for (Element z = 0; z < p.size(); ++z)
    if (p.lower(x, z).is_subset_of(p.down(y))) out.insert(z);
  return out;
}

ElementSet sectional_candidates(const Poset& p, Element x, Element y) {
  ElementSet out(p.size());
  const ElementSet bound = p.lower(p.upper(x, y));
  for (Element z = 0; z < p.size(); ++z)
    if ((bound & p.down(z)) == p.down(y)) out.insert(z);
  return out;
}

Greatest pseudocomplement(const Poset& p, Element x) {
  auto bottom = extremes(p).bottom;
  if (!bottom) throw Error(ErrorCode::no_bottom, "pseudocomplement needs a bottom element");
  return greatest_of(p, pseudocomplement_candidates(p, x, *bottom));
}

Greatest relative_pseudocomplement(const Poset& p, Element x, Element y) {
  return greatest_of(p, relative_candidates(p, x, y));
}

Greatest sectional_pseudocomplement(const Poset& p, Element x, Element y) {
  return greatest_of(p, sectional_candidates(p, x, y));
}

std::string_view to_string(PcKind k) {
  switch (k) {
    case PcKind::pseudocomplemented: return "pseudocomplemented";
    case PcKind::stone: return "stone";
    case PcKind::relatively_pc: return "relatively_pc";
    case PcKind::sectionally_pc: return "sectionally_pc";
    case PcKind::sectionally_pc_with_1: return "sectionally_pc_with_1";
    case PcKind::strongly_sectionally_pc: return "strongly_sectionally_pc";
  }
  return "";
}

std::optional<PcKind> parse_pc_kind(std::string_view name) {
  if (name == "pc" || name == "pseudocomplemented") return PcKind::pseudocomplemented;
  if (name == "stone") return PcKind::stone;
  if (name == "rpc" || name == "relatively_pc") return PcKind::relatively_pc;
  if (name == "spc" || name == "sectionally_pc") return PcKind::sectionally_pc;
  if (name == "spc1" || name == "sectionally_pc_with_1") return PcKind::sectionally_pc_with_1;
  if (name == "sspc" || name == "strongly_sectionally_pc") return PcKind::strongly_sectionally_pc;
  return std::nullopt;
}

namespace {

std::string competing(const Poset& p, const Greatest& g) {
  return g.maximal.empty() ? "no candidates" : "maximal candidates " + p.format(g.maximal);
}

PcClassification classify_star(const Poset& p, bool stone) {
  PcClassification c;
  c.kind = stone ? PcKind::stone : PcKind::pseudocomplemented;
  const auto n = static_cast<Element>(p.size());
  auto bottom = extremes(p).bottom;
  if (!bottom) {
    c.witness = PcWitness{{}, "no bottom element"};
    return c;
  }
  std::vector<Element> table(n);
  for (Element x = 0; x < n; ++x) {
    auto g = greatest_of(p, pseudocomplement_candidates(p, x, *bottom));
    if (!g.value) {
      c.witness = PcWitness{{x}, "no greatest y with L(" + p.label(x) + ",y)={" + p.label(*bottom) + "}; " +
                                     competing(p, g)};
      return c;
    }
    table[x] = *g.value;
  }
  c.table = Operation(std::string(sym::star), 1, n, table);
  if (stone) {
    const ElementSet unit = p.set_of({table[*bottom]});
    for (Element x = 0; x < n; ++x) {
      ElementSet u = p.upper(table[x], table[table[x]]);
      if (u != unit) {
        c.witness = PcWitness{{x}, "U(" + p.label(x) + "*," + p.label(x) + "**)=" + p.format(u) +
                                       " but 0*=" + p.label(table[*bottom])};
        return c;
      }
    }
  }
  c.holds = true;
  return c;
}

PcClassification classify_binary(const Poset& p, PcKind kind) {
  PcClassification c;
  c.kind = kind;
  const auto n = static_cast<Element>(p.size());
  const bool relative = kind == PcKind::relatively_pc;
  const bool needs_top = kind == PcKind::sectionally_pc_with_1 || kind == PcKind::strongly_sectionally_pc;
  auto top = extremes(p).top;
  if (needs_top && !top) c.applicable = false;

  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto g = relative ? relative_pseudocomplement(p, x, y) : sectional_pseudocomplement(p, x, y);
      if (!g.value) {
        const std::string what = relative ? "L(" + p.label(x) + ",z)⊆L(" + p.label(y) + ")"
                                          : "L(U(" + p.label(x) + "," + p.label(y) + "),z)=L(" + p.label(y) + ")";
        c.witness = PcWitness{{x, y}, "no greatest z with " + what + "; " + competing(p, g)};
        return c;
      }
      table[static_cast<std::size_t>(x) * n + y] = *g.value;
    }
  c.table = Operation(std::string(relative ? sym::star : sym::circ), 2, n, table);
  if (!c.applicable) {
    c.witness = PcWitness{{}, "no top element"};
    return c;
  }
  if (kind == PcKind::strongly_sectionally_pc) {
    const Operation& o = *c.table;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!p.leq(x, o(o(x, y), y))) {
          c.witness = PcWitness{{x, y}, p.label(x) + " is not below (" + p.label(x) + "∘" + p.label(y) + ")∘" +
                                            p.label(y) + "=" + p.label(o(o(x, y), y))};
          return c;
        }
  }
  c.holds = true;
  return c;
}

}  // namespace

PcClassification classify(const Poset& p, PcKind kind) {
  switch (kind) {
    case PcKind::pseudocomplemented: return classify_star(p, false);
    case PcKind::stone: return classify_star(p, true);
    default: return classify_binary(p, kind);
  }
}

ReportSet check_distributive_pc_equalities(const Poset& p, const Operation& star) {
  if (star.arity() != 1 || star.carrier() != p.size())
    throw Error(ErrorCode::arity_mismatch, "expected a unary table on the poset's carrier");
  ReportSet out;
  const auto n = static_cast<Element>(p.size());
  auto ext = extremes(p);

  Report bounded;
  bounded.name = "bounded";
  bounded.checked_count = 1;
  if (!ext.bottom || !ext.top) {
    bounded.holds = false;
    bounded.detail = !ext.bottom ? "no bottom element" : "no top element";
    out.items.push_back(bounded);
    return out;
  }
  out.items.push_back(bounded);
  const Element zero = *ext.bottom, one = *ext.top;

  auto per_x = [&](std::string name, auto&& check) {
    Report r;
    r.name = std::move(name);
    for (Element x = 0; x < n; ++x) {
      ++r.checked_count;
      if (auto detail = check(x); !detail.empty()) {
        r.holds = false;
        r.witness = Assignment{{"x", x}};
        r.detail = detail;
        break;
      }
    }
    return r;
  };

  out.items.push_back(per_x("U(x,x*)={1}", [&](Element x) -> std::string {
    ElementSet u = p.upper(x, star(x));
    return u == p.set_of({one}) ? "" : "U(" + p.label(x) + "," + p.label(star(x)) + ")=" + p.format(u);
  }));
  out.items.push_back(is_distributive(p));
  out.items.back().name = "distributive";
  out.items.push_back(per_x("L(x,x*)={0}", [&](Element x) -> std::string {
    ElementSet l = p.lower(x, star(x));
    return l == p.set_of({zero}) ? "" : "L(" + p.label(x) + "," + p.label(star(x)) + ")=" + p.format(l);
  }));

  Report eq;
  eq.name = "U(x*,L(x,y))=U(x*,y)";
  for (Element x = 0; x < n && eq.holds; ++x)
    for (Element y = 0; y < n; ++y) {
      ++eq.checked_count;
      ElementSet gen = p.lower(x, y);
      gen.insert(star(x));
      ElementSet left = p.upper(gen);
      ElementSet right = p.upper(star(x), y);
      if (left != right) {
        eq.holds = false;
        eq.witness = Assignment{{"x", x}, {"y", y}};
        eq.detail = "U(x*,L(x,y))=" + p.format(left) + " but U(x*,y)=" + p.format(right);
        break;
      }
    }
  out.items.push_back(eq);
  return out;
}

}  // namespace ordalg
