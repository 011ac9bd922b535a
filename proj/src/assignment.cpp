#include "ordalg/assignment.hpp"

#include <limits>

#include "ordalg/error.hpp"

namespace ordalg {

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::pc: return "pc";
    case Profile::stone: return "stone";
    case Profile::rpc: return "rpc";
    case Profile::spc: return "spc";
    case Profile::spc1: return "spc1";
    case Profile::sspc: return "sspc";
  }
  return "";
}

std::optional<Profile> parse_profile(std::string_view name) {
  for (Profile p : all_profiles)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

PcKind profile_class(Profile p) {
  switch (p) {
    case Profile::pc: return PcKind::pseudocomplemented;
    case Profile::stone: return PcKind::stone;
    case Profile::rpc: return PcKind::relatively_pc;
    case Profile::spc: return PcKind::sectionally_pc;
    case Profile::spc1: return PcKind::sectionally_pc_with_1;
    case Profile::sspc: return PcKind::strongly_sectionally_pc;
  }
  return PcKind::pseudocomplemented;
}

bool needs_join(Profile p) { return p != Profile::pc && p != Profile::rpc; }

std::string_view profile_operation(Profile p) {
  return p == Profile::pc || p == Profile::stone || p == Profile::rpc ? sym::star : sym::circ;
}

namespace {

std::optional<std::string_view> profile_constant(Profile p) {
  switch (p) {
    case Profile::pc:
    case Profile::stone: return sym::zero;
    case Profile::spc: return std::nullopt;
    default: return sym::one;
  }
}

int operation_arity(Profile p) { return p == Profile::pc || p == Profile::stone ? 1 : 2; }

}  // namespace

Signature profile_signature(Profile p) {
  std::vector<Symbol> s;
  if (needs_join(p)) s.push_back({std::string(sym::join), 2});
  s.push_back({std::string(sym::meet), 2});
  s.push_back({std::string(profile_operation(p)), operation_arity(p)});
  if (auto c = profile_constant(p)) s.push_back({std::string(*c), 0});
  return Signature(std::move(s));
}

std::optional<Element> ConeChoice::get(Element a, Element b) const {
  auto it = values_.find(key(a, b));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void ConeChoice::validate(const Poset& p) const {
  for (const auto& [pair, value] : values_) {
    auto [a, b] = pair;
    if (a >= p.size() || b >= p.size() || value >= p.size())
      throw Error(ErrorCode::bad_choice, "choice refers to an element outside the carrier");
    const std::string what = "{" + p.label(a) + "," + p.label(b) + "}";
    if (p.comparable(a, b)) throw Error(ErrorCode::bad_choice, what + " is comparable; no choice allowed");
    const ElementSet cone = kind_ == OrderKind::meet ? p.lower(a, b) : p.upper(a, b);
    if (!cone.contains(value))
      throw Error(ErrorCode::bad_choice, p.label(value) + " is not in " +
                                             (kind_ == OrderKind::meet ? "L" : "U") + what + "=" + p.format(cone));
  }
}

ChoiceSpace::ChoiceSpace(const Poset& p, ChoiceFamily family) : poset_(&p), family_(family) {
  auto dir = directedness(p);
  auto fail = [&](const ElementPair& w, const char* what) {
    throw Error(ErrorCode::not_directed, std::string("not ") + what + "-directed: " + p.label(w.first) + "," +
                                             p.label(w.second));
  };
  const bool meet = family != ChoiceFamily::join;
  const bool join = family != ChoiceFamily::meet;
  if (meet && dir.down_witness) fail(*dir.down_witness, "down");
  if (join && dir.up_witness) fail(*dir.up_witness, "up");

  const auto n = static_cast<Element>(p.size());
  for (OrderKind kind : {OrderKind::meet, OrderKind::join}) {
    if ((kind == OrderKind::meet && !meet) || (kind == OrderKind::join && !join)) continue;
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (p.comparable(a, b)) continue;
        ElementSet cone = kind == OrderKind::meet ? p.lower(a, b) : p.upper(a, b);
        points_.push_back({kind, a, b, cone.members()});
      }
  }
  for (const auto& pt : points_) {
    const std::uint64_t k = pt.candidates.size();
    if (count_ > std::numeric_limits<std::uint64_t>::max() / k) {
      count_ = std::numeric_limits<std::uint64_t>::max();
      saturated_ = true;
      break;
    }
    count_ *= k;
  }
}

ChoicePair ChoiceSpace::at(const std::vector<std::size_t>& digits) const {
  ChoicePair out;
  if (family_ != ChoiceFamily::join) out.meet.emplace(OrderKind::meet);
  if (family_ != ChoiceFamily::meet) out.join.emplace(OrderKind::join);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& pt = points_[i];
    auto& target = pt.kind == OrderKind::meet ? out.meet : out.join;
    target->set(pt.a, pt.b, pt.candidates.at(digits.at(i)));
  }
  return out;
}

ChoicePair ChoiceSpace::decode(std::uint64_t index) const {
  std::vector<std::size_t> digits(points_.size(), 0);
  for (std::size_t i = points_.size(); i-- > 0;) {
    const std::uint64_t k = points_[i].candidates.size();
    digits[i] = static_cast<std::size_t>(index % k);
    index /= k;
  }
  return at(digits);
}

ChoicePair ChoiceSpace::sample(std::mt19937_64& rng) const {
  std::vector<std::size_t> digits(points_.size(), 0);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, points_[i].candidates.size() - 1);
    digits[i] = pick(rng);
  }
  return at(digits);
}

void ChoiceSpace::for_each(const std::function<bool(std::uint64_t, const ChoicePair&)>& f) const {
  std::vector<std::size_t> digits(points_.size(), 0);
  for (std::uint64_t index = 0;; ++index) {
    if (!f(index, at(digits))) return;
    std::size_t i = points_.size();
    while (i > 0 && ++digits[i - 1] == points_[i - 1].candidates.size()) digits[--i] = 0;
    if (i == 0) return;
  }
}

ConeChoice canonical_choice(const Poset& p, OrderKind kind) {
  ConeChoice c(kind);
  const auto n = static_cast<Element>(p.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      if (p.comparable(a, b)) continue;
      ElementSet cone = kind == OrderKind::meet ? p.lower(a, b) : p.upper(a, b);
      if (cone.empty())
        throw Error(ErrorCode::not_directed, std::string(kind == OrderKind::meet ? "L" : "U") + "(" + p.label(a) +
                                                 "," + p.label(b) + ") is empty");
      c.set(a, b, cone.first());
    }
  return c;
}

ChoicePair canonical_choices(const Poset& p, Profile profile) {
  ChoicePair out;
  out.meet = canonical_choice(p, OrderKind::meet);
  if (needs_join(profile)) out.join = canonical_choice(p, OrderKind::join);
  return out;
}

Operation directoid_table(const Poset& p, const ConeChoice& choice) {
  const auto n = static_cast<Element>(p.size());
  const bool meet = choice.kind() == OrderKind::meet;
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      Element v;
      if (p.leq(a, b))
        v = meet ? a : b;
      else if (p.leq(b, a))
        v = meet ? b : a;
      else if (auto c = choice.get(a, b))
        v = *c;
      else
        throw Error(ErrorCode::missing_choice, std::string(meet ? "⊓" : "⊔") + " has no value for {" + p.label(a) +
                                                   "," + p.label(b) + "}");
      table[static_cast<std::size_t>(a) * n + b] = v;
    }
  return Operation(std::string(meet ? sym::meet : sym::join), 2, n, std::move(table));
}

namespace {

std::vector<Operation> lattice_part(const Poset& p, Profile profile, const std::optional<ConeChoice>& meet,
                                    const std::optional<ConeChoice>& join) {
  std::vector<Operation> ops;
  if (needs_join(profile)) {
    if (!join) throw Error(ErrorCode::missing_choice, "profile " + std::string(to_string(profile)) + " needs ⊔");
    if (join->kind() != OrderKind::join) throw Error(ErrorCode::bad_choice, "join choice expected");
    join->validate(p);
    ops.push_back(directoid_table(p, *join));
  }
  if (!meet) throw Error(ErrorCode::missing_choice, "profile " + std::string(to_string(profile)) + " needs ⊓");
  if (meet->kind() != OrderKind::meet) throw Error(ErrorCode::bad_choice, "meet choice expected");
  meet->validate(p);
  ops.push_back(directoid_table(p, *meet));
  return ops;
}

Element first_maximal(const Poset& p) {
  for (Element e = 0; e < p.size(); ++e)
    if (p.up(e).size() == 1) return e;
  return 0;
}

Element first_minimal(const Poset& p) {
  for (Element e = 0; e < p.size(); ++e)
    if (p.down(e).size() == 1) return e;
  return 0;
}

Element best_effort(const Greatest& g, Element fallback) {
  if (g.value) return *g.value;
  if (!g.maximal.empty()) return g.maximal.first();
  return fallback;
}

}  // namespace

Algebra assign_algebra(const Poset& p, Profile profile, const std::optional<ConeChoice>& meet,
                       const std::optional<ConeChoice>& join) {
  auto cls = classify(p, profile_class(profile));
  if (!cls.holds)
    throw Error(ErrorCode::missing_structure,
                "poset is not " + std::string(to_string(cls.kind)) + (cls.witness ? ": " + cls.witness->reason : ""));
  auto ops = lattice_part(p, profile, meet, join);
  ops.push_back(*cls.table);
  auto ext = extremes(p);
  if (auto c = profile_constant(profile)) {
    const bool zero = *c == sym::zero;
    ops.push_back(Operation::constant(std::string(*c), p.size(), zero ? *ext.bottom : *ext.top));
  }
  return Algebra(p.labels(), std::move(ops));
}

Algebra assign_candidate_algebra(const Poset& p, Profile profile, const ChoicePair& choice) {
  auto ops = lattice_part(p, profile, choice.meet, choice.join);
  const auto n = static_cast<Element>(p.size());
  auto ext = extremes(p);
  const Element zero = ext.bottom.value_or(first_minimal(p));
  const Element one = ext.top.value_or(first_maximal(p));
  if (operation_arity(profile) == 1) {
    std::vector<Element> t(n);
    for (Element x = 0; x < n; ++x) t[x] = best_effort(greatest_of(p, pseudocomplement_candidates(p, x, zero)), zero);
    ops.emplace_back(std::string(sym::star), 1, n, std::move(t));
  } else {
    const bool relative = profile == Profile::rpc;
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        auto g = greatest_of(p, relative ? relative_candidates(p, x, y) : sectional_candidates(p, x, y));
        t[static_cast<std::size_t>(x) * n + y] = best_effort(g, y);
      }
    ops.emplace_back(std::string(profile_operation(profile)), 2, n, std::move(t));
  }
  if (auto c = profile_constant(profile))
    ops.push_back(Operation::constant(std::string(*c), n, *c == sym::zero ? zero : one));
  return Algebra(p.labels(), std::move(ops));
}

ElementSet cone_via_directoid(const Algebra& a, Element x, Element y, OrderKind kind) {
  const Operation& op = a.op(kind == OrderKind::meet ? sym::meet : sym::join);
  ElementSet out(a.size());
  for (Element t = 0; t < a.size(); ++t) out.insert(op(op(x, t), op(y, t)));
  return out;
}

std::vector<Formula> assigned_conditions(Profile p) {
  using namespace terms;
  auto x = var("x"), y = var("y"), z = var("z"), t = var("t"), s = var("s");
  auto identity = [](std::string name, std::vector<std::string> vars, Term l, Term r) {
    return Formula(std::move(name), std::move(vars), Prop::eq(std::move(l), std::move(r)));
  };
  std::vector<Formula> out;
  switch (p) {
    case Profile::pc:
    case Profile::stone:
      out.push_back(identity("(i) 0⊓x≈0", {"x"}, meet(zero(), x), zero()));
      out.push_back(identity("(ii) (x⊓y)⊓(x*⊓y)≈0", {"x", "y"}, meet(meet(x, y), meet(star(x), y)), zero()));
      out.push_back(Formula::implication("(iii) (x⊓z)⊓(y⊓z)=0 ∀z ⇒ y⊓x*=y", {"x", "y"}, {"z"},
                                         {meet(meet(x, z), meet(y, z)), zero()}, {meet(y, star(x)), y}));
      if (p == Profile::stone)
        out.push_back(identity("(iv) (x*⊔y)⊔(x**⊔y)≈0*", {"x", "y"}, join(join(star(x), y), join(star(star(x)), y)),
                               star(zero())));
      break;
    case Profile::rpc: {
      auto block = meet(meet(x, z), meet(rel(x, y), z));
      auto inner = meet(meet(x, t), meet(z, t));
      out.push_back(identity("(i) x⊓1≈x", {"x"}, meet(x, one()), x));
      out.push_back(identity("(ii) ((x⊓z)⊓((x*y)⊓z))⊓y≈(x⊓z)⊓((x*y)⊓z)", {"x", "y", "z"}, meet(block, y), block));
      out.push_back(Formula::implication("(iii) ((x⊓t)⊓(z⊓t))⊓y=(x⊓t)⊓(z⊓t) ∀t ⇒ z⊓(x*y)=z", {"x", "y", "z"}, {"t"},
                                         {meet(inner, y), inner}, {meet(z, rel(x, y)), z}));
      break;
    }
    case Profile::spc:
    case Profile::spc1:
    case Profile::sspc: {
      auto upper = join(join(x, t), join(y, t));
      out.push_back(identity("(i) y⊓(x∘y)≈y", {"x", "y"}, meet(y, circ(x, y)), y));
      out.push_back(Formula::implication("(ii) (((x⊔t)⊔(y⊔t))⊓z)⊓((x∘y)⊓z)=z ∀t ⇒ z⊓y=z", {"x", "y", "z"}, {"t"},
                                         {meet(meet(upper, z), meet(circ(x, y), z)), z}, {meet(z, y), z}));
      out.push_back(Formula::iff_implication(
          "(iii) ((((x⊔t)⊔(y⊔t))⊓s)⊓(z⊓s)=s ∀t ⇔ s⊓y=s) ∀s ⇒ z⊓(x∘y)=z", {"x", "y", "z"}, "s", {"t"},
          {meet(meet(upper, s), meet(z, s)), s}, {meet(s, y), s}, {meet(z, circ(x, y)), z}));
      if (p != Profile::spc) out.push_back(identity("(iv) x⊓1≈x", {"x"}, meet(x, one()), x));
      if (p == Profile::sspc)
        out.push_back(identity("(v) x⊓((x∘y)∘y)≈x", {"x", "y"}, meet(x, circ(circ(x, y), y)), x));
      break;
    }
  }
  return out;
}

ReportSet verify_assigned_conditions(const Algebra& a, Profile p, const CheckOptions& options) {
  const Signature signature = profile_signature(p);
  for (const auto& s : signature.symbols()) {
    const Operation* op = a.find(s.name);
    if (!op) throw Error(ErrorCode::missing_symbol, "'" + s.name + "' required by profile " + std::string(to_string(p)));
    if (op->arity() != s.arity) throw Error(ErrorCode::arity_mismatch, "'" + s.name + "' has the wrong arity");
  }
  ReportSet out;
  for (const auto& f : assigned_conditions(p)) out.items.push_back(check_formula(a, f, options));
  return out;
}

std::vector<Formula> derived_identities(Profile p) {
  using namespace terms;
  auto x = var("x"), y = var("y");
  switch (p) {
    case Profile::rpc:
      return {Formula::identity("(a) x*x≈1", rel(x, x), one()), Formula::identity("(b) 1*x≈x", rel(one(), x), x),
              Formula::identity("(c) x⊓((x*y)*y)≈x", meet(x, rel(rel(x, y), y)), x)};
    case Profile::spc1:
    case Profile::sspc:
      return {Formula::identity("(a) x∘x≈1", circ(x, x), one()), Formula::identity("(b) 1∘x≈x", circ(one(), x), x)};
    default:
      throw Error(ErrorCode::invalid_argument,
                  "no derived identities for profile " + std::string(to_string(p)) + " (use rpc, spc1 or sspc)");
  }
}

ReportSet verify_derived_identities(const Algebra& a, Profile p, const CheckOptions& options) {
  auto formulas = derived_identities(p);
  for (std::string_view s : {sym::one, sym::meet, profile_operation(p)})
    if (!a.has(s)) throw Error(ErrorCode::missing_symbol, "'" + std::string(s) + "' required");
  ReportSet out;
  for (const auto& f : formulas) out.items.push_back(check_formula(a, f, options));
  return out;
}

AuditReport theorem_equivalence_audit(const Poset& p, Profile profile, const AuditOptions& options) {
  AuditReport r;
  r.profile = profile;
  const ChoiceFamily family = needs_join(profile) ? ChoiceFamily::lambda : ChoiceFamily::meet;
  std::optional<ChoiceSpace> space;
  try {
    space.emplace(p, family);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_directed) throw;
    r.applicable = false;
    r.skipped_reason = e.what();
    return r;
  }
  r.poset_verdict = classify(p, profile_class(profile)).holds;
  r.total = space->count();
  r.total_saturated = space->count_saturated();

  auto examine = [&](std::uint64_t index, const ChoicePair& choice) {
    Algebra a = assign_candidate_algebra(p, profile, choice);
    ReportSet reports = verify_assigned_conditions(a, profile, options.check);
    if (options.observer) options.observer(a, reports);
    ++r.checked;
    const bool verdict = reports.holds();
    if (verdict != r.poset_verdict) {
      Divergence d{index, r.poset_verdict, verdict, {}};
      if (const auto* f = reports.first_failure()) d.detail = f->name;
      r.divergences.push_back(std::move(d));
    }
  };

  if (!r.total_saturated && r.total <= options.budget) {
    space->for_each([&](std::uint64_t index, const ChoicePair& c) {
      examine(index, c);
      return true;
    });
  } else {
    r.sampled = true;
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < options.budget; ++i) examine(i, space->sample(rng));
  }
  return r;
}

}  // namespace ordalg
