#include "ordalg/dsl.hpp"

#include <algorithm>
#include <sstream>

#include "ordalg/axioms.hpp"
#include "ordalg/error.hpp"
#include "ordalg/pc_structures.hpp"

namespace ordalg {

const Operation* AlgebraDef::table(std::string_view symbol) const {
  for (const auto& t : tables)
    if (t.symbol() == symbol) return &t;
  return nullptr;
}

const PosetDef* Document::find_poset(std::string_view name) const {
  for (const auto& p : posets)
    if (p.name == name) return &p;
  return nullptr;
}

const AlgebraDef* Document::find_algebra(std::string_view name) const {
  for (const auto& a : algebras)
    if (a.name == name) return &a;
  return nullptr;
}

std::string canonical_symbol(std::string_view s) {
  if (s == "meet") return std::string(sym::meet);
  if (s == "join") return std::string(sym::join);
  if (s == "o" || s == "circ") return std::string(sym::circ);
  return std::string(s);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool valid_label(std::string_view s) {
  return !s.empty() && s.find_first_of(",(){}<>=:#- \t") == std::string_view::npos;
}

bool valid_name(std::string_view s) { return valid_label(s); }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Document run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      auto end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      line_ = text_.substr(pos, end - pos);
      if (auto hash = line_.find('#'); hash != std::string_view::npos) line_ = line_.substr(0, hash);
      if (!trim(line_).empty()) statement(trim(line_));
      pos = end + 1;
    }
    finish_block();
    return std::move(doc_);
  }

 private:
  struct PendingPoset {
    std::string name;
    std::size_t line = 0;
    std::optional<std::vector<std::string>> labels;
    std::vector<std::pair<LabelPair, std::size_t>> pairs;
  };
  struct PendingBinary {
    std::string symbol;
    std::size_t line = 0;
    std::vector<std::optional<Element>> entries;
    std::size_t next_row = 0;
  };

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, std::string_view at = {}) const {
    fail_at(code, msg, line_no_, at);
  }
  [[noreturn]] void fail_at(ErrorCode code, const std::string& msg, std::size_t line,
                            std::string_view at = {}) const {
    std::size_t col = 1;
    if (line == line_no_ && !at.empty() && at.data() >= line_.data() && at.data() <= line_.data() + line_.size())
      col = static_cast<std::size_t>(at.data() - line_.data()) + 1;
    throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

  void statement(std::string_view s) {
    auto words = split_ws(s);
    std::string_view kw = words[0];
    if (auto c = kw.find(':'); c != std::string_view::npos) kw = kw.substr(0, c);

    if (kw == "poset") return begin_poset(words);
    if (kw == "algebra") return begin_algebra(words);
    if (kw == "elements") return elements(s);
    if (kw == "order") return order(s);
    if (kw == "profile") return profile(words);
    if (kw == "choice") return choice(s, words);
    if (kw == "unary") return unary(s);
    if (kw == "binary") return binary(s);
    if (kw == "row") return row(s);
    if (kw == "constant") return constant(s);
    fail(ErrorCode::syntax_error, "unknown statement '" + std::string(words[0]) + "'", words[0]);
  }

  // Text after the first ':' of a statement.
  std::string_view after_colon(std::string_view s) {
    auto c = s.find(':');
    if (c == std::string_view::npos) fail(ErrorCode::syntax_error, "expected ':'", s.substr(s.size()));
    return s.substr(c + 1);
  }

  void unique_name(std::string_view name) {
    if (!valid_name(name)) fail(ErrorCode::syntax_error, "invalid name '" + std::string(name) + "'", name);
    if (doc_.find_poset(name) || doc_.find_algebra(name) || (poset_ && poset_->name == name))
      fail(ErrorCode::semantic_error, "duplicate name '" + std::string(name) + "'", name);
  }

  void begin_poset(const std::vector<std::string_view>& w) {
    finish_block();
    if (w.size() != 2) fail(ErrorCode::syntax_error, "expected 'poset NAME'", w[0]);
    unique_name(w[1]);
    poset_ = PendingPoset{std::string(w[1]), line_no_, std::nullopt, {}};
  }

  void begin_algebra(const std::vector<std::string_view>& w) {
    finish_block();
    if (w.size() != 4 || w[2] != "on") fail(ErrorCode::syntax_error, "expected 'algebra NAME on POSET'", w[0]);
    unique_name(w[1]);
    const PosetDef* p = doc_.find_poset(w[3]);
    if (!p) fail(ErrorCode::semantic_error, "unknown poset '" + std::string(w[3]) + "'", w[3]);
    algebra_ = AlgebraDef{std::string(w[1]), std::string(w[3]), std::nullopt, std::nullopt, std::nullopt, {}};
    algebra_poset_ = &p->poset;
  }

  void elements(std::string_view s) {
    if (!poset_) fail(ErrorCode::syntax_error, "'elements' outside a poset block", s);
    if (poset_->labels) fail(ErrorCode::syntax_error, "second 'elements' line", s);
    std::vector<std::string> labels;
    for (auto tok : split_ws(after_colon(s))) {
      if (!valid_label(tok)) fail(ErrorCode::syntax_error, "invalid label '" + std::string(tok) + "'", tok);
      if (std::find(labels.begin(), labels.end(), tok) != labels.end())
        fail(ErrorCode::duplicate_label, "duplicate label '" + std::string(tok) + "'", tok);
      labels.emplace_back(tok);
    }
    poset_->labels = std::move(labels);
  }

  void order(std::string_view s) {
    if (!poset_) fail(ErrorCode::syntax_error, "'order' outside a poset block", s);
    if (!poset_->labels) fail(ErrorCode::syntax_error, "'order' before 'elements'", s);
    for (auto tok : split_ws(after_colon(s))) {
      std::vector<std::string_view> chain;
      std::size_t i = 0;
      while (true) {
        auto j = tok.find('<', i);
        chain.push_back(tok.substr(i, j == std::string_view::npos ? std::string_view::npos : j - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
      }
      if (chain.size() < 2) fail(ErrorCode::syntax_error, "expected a<b", tok);
      for (auto l : chain) {
        if (l.empty()) fail(ErrorCode::syntax_error, "empty label in '" + std::string(tok) + "'", tok);
        const auto& labels = *poset_->labels;
        if (std::find(labels.begin(), labels.end(), l) == labels.end())
          fail(ErrorCode::unknown_label, "unknown label '" + std::string(l) + "'", l);
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        poset_->pairs.push_back({{std::string(chain[k]), std::string(chain[k + 1])}, line_no_});
    }
  }

  void need_algebra(std::string_view s, const char* what) {
    if (!algebra_) fail(ErrorCode::syntax_error, std::string("'") + what + "' outside an algebra block", s);
  }

  Element label(std::string_view l) {
    auto e = algebra_poset_->find(l);
    if (!e) fail(ErrorCode::unknown_label, "unknown label '" + std::string(l) + "'", l);
    return *e;
  }

  void profile(const std::vector<std::string_view>& w) {
    need_algebra(w[0], "profile");
    if (w.size() != 2) fail(ErrorCode::syntax_error, "expected 'profile NAME'", w[0]);
    auto p = parse_profile(w[1]);
    if (!p) fail(ErrorCode::syntax_error, "unknown profile '" + std::string(w[1]) + "'", w[1]);
    if (algebra_->profile) fail(ErrorCode::syntax_error, "second 'profile' line", w[0]);
    algebra_->profile = p;
  }

  void choice(std::string_view s, const std::vector<std::string_view>& w) {
    need_algebra(s, "choice");
    finish_binary();
    if (w.size() < 3 || (w[1] != "meet" && w[1] != "join"))
      fail(ErrorCode::syntax_error, "expected 'choice meet|join {x,y}=z'", s);
    std::string rest;
    const auto start = w[2].data() - s.data();
    for (char c : s.substr(start))
      if (c != ' ' && c != '\t') rest += c;
    const auto close = rest.find('}');
    const auto comma = rest.find(',');
    if (rest.empty() || rest[0] != '{' || close == std::string::npos || comma == std::string::npos || comma > close ||
        close + 1 >= rest.size() || rest[close + 1] != '=')
      fail(ErrorCode::syntax_error, "expected '{x,y}=z'", w[2]);
    const std::string x = rest.substr(1, comma - 1), y = rest.substr(comma + 1, close - comma - 1),
                      z = rest.substr(close + 2);
    const OrderKind kind = w[1] == "meet" ? OrderKind::meet : OrderKind::join;
    const Element a = label(x), b = label(y), v = label(z);
    auto& slot = kind == OrderKind::meet ? algebra_->meet_choice : algebra_->join_choice;
    if (!slot) slot.emplace(kind);
    if (slot->get(a, b)) fail(ErrorCode::bad_choice, "second choice for {" + x + "," + y + "}", w[2]);
    ConeChoice single(kind);
    single.set(a, b, v);
    try {
      single.validate(*algebra_poset_);
    } catch (const Error& e) {
      fail(e.code(), e.what(), w[2]);
    }
    slot->set(a, b, v);
  }

  // "KEYWORD SYMBOL : rest"; returns the symbol and the rest.
  std::pair<std::string, std::string_view> header(std::string_view s, const char* kw) {
    auto body = trim(s.substr(std::string_view(kw).size()));
    auto c = body.find(':');
    if (c == std::string_view::npos) fail(ErrorCode::syntax_error, std::string("expected '") + kw + " SYMBOL :'", s);
    auto symbol = trim(body.substr(0, c));
    if (symbol.empty() || split_ws(symbol).size() != 1)
      fail(ErrorCode::syntax_error, "expected a single operation symbol", symbol.empty() ? s : symbol);
    auto name = canonical_symbol(symbol);
    for (const auto& t : algebra_->tables)
      if (t.symbol() == name) fail(ErrorCode::semantic_error, "second table for '" + name + "'", symbol);
    if (binary_ && binary_->symbol == name) fail(ErrorCode::semantic_error, "second table for '" + name + "'", symbol);
    return {name, body.substr(c + 1)};
  }

  void unary(std::string_view s) {
    need_algebra(s, "unary");
    finish_binary();
    auto [symbol, rest] = header(s, "unary");
    const std::size_t n = algebra_poset_->size();
    std::vector<std::optional<Element>> t(n);
    for (auto tok : split_ws(rest)) {
      auto arrow = tok.find("->");
      if (arrow == std::string_view::npos) fail(ErrorCode::syntax_error, "expected a->b", tok);
      const Element a = label(tok.substr(0, arrow)), b = label(tok.substr(arrow + 2));
      if (t[a]) fail(ErrorCode::semantic_error, "second value for " + std::string(tok.substr(0, arrow)), tok);
      t[a] = b;
    }
    std::vector<Element> table;
    for (Element a = 0; a < n; ++a) {
      if (!t[a])
        fail(ErrorCode::non_total_table, "unary " + symbol + " has no value for " + algebra_poset_->label(a), s);
      table.push_back(*t[a]);
    }
    algebra_->tables.emplace_back(symbol, 1, n, std::move(table));
  }

  void binary(std::string_view s) {
    need_algebra(s, "binary");
    finish_binary();
    auto [symbol, rest] = header(s, "binary");
    const std::size_t n = algebra_poset_->size();
    binary_ = PendingBinary{symbol, line_no_, std::vector<std::optional<Element>>(n * n), 0};
    std::string_view r = trim(rest);
    while (!r.empty()) {
      // (a,b)->c
      if (r[0] != '(') fail(ErrorCode::syntax_error, "expected (a,b)->c", r);
      auto close = r.find(')');
      auto arrow = r.find("->");
      if (close == std::string_view::npos || arrow != close + 1) fail(ErrorCode::syntax_error, "expected (a,b)->c", r);
      auto inside = r.substr(1, close - 1);
      auto comma = inside.find(',');
      if (comma == std::string_view::npos) fail(ErrorCode::syntax_error, "expected (a,b)->c", r);
      auto value_end = r.find_first_of(" \t", arrow + 2);
      auto value = r.substr(arrow + 2, value_end == std::string_view::npos ? std::string_view::npos
                                                                            : value_end - arrow - 2);
      const Element a = label(trim(inside.substr(0, comma))), b = label(trim(inside.substr(comma + 1)));
      auto& slot = binary_->entries[a * n + b];
      if (slot) fail(ErrorCode::semantic_error, "second value for (" + std::string(inside) + ")", r);
      slot = label(value);
      r = value_end == std::string_view::npos ? std::string_view{} : trim(r.substr(value_end));
    }
  }

  void row(std::string_view s) {
    if (!binary_) fail(ErrorCode::syntax_error, "'row' without a preceding 'binary' line", s);
    auto body = trim(s.substr(3));
    auto c = body.find(':');
    if (c == std::string_view::npos) fail(ErrorCode::syntax_error, "expected 'row a: ...'", s);
    const Element a = label(trim(body.substr(0, c)));
    auto values = split_ws(body.substr(c + 1));
    const std::size_t n = algebra_poset_->size();
    if (values.size() != n)
      fail(ErrorCode::non_total_table, "row " + algebra_poset_->label(a) + " of binary " + binary_->symbol + " has " +
                                           std::to_string(values.size()) + " entries, expected " + std::to_string(n),
           s);
    for (Element b = 0; b < n; ++b) {
      auto& slot = binary_->entries[a * n + b];
      if (slot) fail(ErrorCode::semantic_error, "second value for (" + algebra_poset_->label(a) + "," +
                                                    algebra_poset_->label(b) + ")", values[b]);
      slot = label(values[b]);
    }
  }

  void constant(std::string_view s) {
    need_algebra(s, "constant");
    finish_binary();
    auto [symbol, rest] = header(s, "constant");
    auto v = split_ws(rest);
    if (v.size() != 1) fail(ErrorCode::syntax_error, "expected 'constant SYMBOL: label'", s);
    algebra_->tables.push_back(Operation::constant(symbol, algebra_poset_->size(), label(v[0])));
  }

  void finish_binary() {
    if (!binary_) return;
    const std::size_t n = algebra_poset_->size();
    std::vector<Element> table;
    for (std::size_t i = 0; i < n * n; ++i) {
      if (!binary_->entries[i])
        fail_at(ErrorCode::non_total_table,
                "binary " + binary_->symbol + " has no value for (" + algebra_poset_->label(Element(i / n)) + "," +
                    algebra_poset_->label(Element(i % n)) + ")",
                binary_->line);
      table.push_back(*binary_->entries[i]);
    }
    algebra_->tables.emplace_back(binary_->symbol, 2, n, std::move(table));
    binary_.reset();
  }

  void finish_block() {
    if (poset_) {
      if (!poset_->labels) fail_at(ErrorCode::syntax_error, "poset " + poset_->name + " has no 'elements' line", poset_->line);
      std::vector<LabelPair> pairs;
      for (const auto& [p, _] : poset_->pairs) pairs.push_back(p);
      try {
        doc_.posets.push_back({poset_->name, Poset::build(*poset_->labels, pairs)});
      } catch (const Error& e) {
        const std::size_t at = poset_->pairs.empty() ? poset_->line : poset_->pairs.back().second;
        fail_at(e.code(), e.what(), at);
      }
      poset_.reset();
    }
    if (algebra_) {
      finish_binary();
      doc_.algebras.push_back(std::move(*algebra_));
      algebra_.reset();
      algebra_poset_ = nullptr;
    }
  }

  std::string_view text_;
  std::string_view line_;
  std::size_t line_no_ = 0;
  Document doc_;
  std::optional<PendingPoset> poset_;
  std::optional<AlgebraDef> algebra_;
  const Poset* algebra_poset_ = nullptr;
  std::optional<PendingBinary> binary_;
};

}  // namespace

Document parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const PosetDef& def) {
  std::ostringstream os;
  const Poset& p = def.poset;
  os << "poset " << def.name << "\n";
  os << "elements:";
  for (const auto& l : p.labels()) os << " " << l;
  os << "\n";
  auto covers = p.covers();
  if (!covers.empty()) {
    os << "order:";
    for (auto [a, b] : covers) os << " " << p.label(a) << "<" << p.label(b);
    os << "\n";
  }
  return os.str();
}

std::string serialize(const AlgebraDef& def, const Poset& p) {
  std::ostringstream os;
  os << "algebra " << def.name << " on " << def.poset << "\n";
  if (def.profile) os << "profile " << to_string(*def.profile) << "\n";
  for (const auto* c : {&def.meet_choice, &def.join_choice}) {
    if (!*c) continue;
    for (const auto& [pair, v] : (*c)->entries())
      os << "choice " << to_string((*c)->kind()) << " {" << p.label(pair.first) << "," << p.label(pair.second)
         << "}=" << p.label(v) << "\n";
  }
  for (const auto& t : def.tables) {
    const auto n = static_cast<Element>(t.carrier());
    switch (t.arity()) {
      case 0: os << "constant " << t.symbol() << ": " << p.label(t()) << "\n"; break;
      case 1:
        os << "unary " << t.symbol() << " :";
        for (Element a = 0; a < n; ++a) os << " " << p.label(a) << "->" << p.label(t(a));
        os << "\n";
        break;
      default:
        os << "binary " << t.symbol() << " :\n";
        for (Element a = 0; a < n; ++a) {
          os << "row " << p.label(a) << ":";
          for (Element b = 0; b < n; ++b) os << " " << p.label(t(a, b));
          os << "\n";
        }
    }
  }
  return os.str();
}

std::string serialize(const Document& doc) {
  std::string out;
  bool first = true;
  auto block = [&](const std::string& s) {
    if (!first) out += "\n";
    first = false;
    out += s;
  };
  // Algebras follow their poset so the text parses in one pass.
  for (const auto& p : doc.posets) {
    block(serialize(p));
    for (const auto& a : doc.algebras)
      if (a.poset == p.name) block(serialize(a, p.poset));
  }
  return out;
}

Algebra materialize(const Document& doc, const AlgebraDef& def) {
  const PosetDef* pd = doc.find_poset(def.poset);
  if (!pd) throw Error(ErrorCode::semantic_error, "unknown poset '" + def.poset + "'");
  const Poset& p = pd->poset;
  std::vector<Operation> ops;

  auto lattice_op = [&](OrderKind kind, const std::optional<ConeChoice>& given, bool required) {
    const std::string_view s = kind == OrderKind::meet ? sym::meet : sym::join;
    if (def.table(s) || (!required && !given)) return;
    ConeChoice c = canonical_choice(p, kind);
    if (given)
      for (const auto& [pair, v] : given->entries()) c.set(pair.first, pair.second, v);
    ops.push_back(directoid_table(p, c));
  };
  const bool profiled = def.profile.has_value();
  lattice_op(OrderKind::join, def.join_choice, profiled && needs_join(*def.profile));
  lattice_op(OrderKind::meet, def.meet_choice, profiled);
  for (const auto& t : def.tables) ops.push_back(t);

  if (profiled) {
    auto has = [&](std::string_view s) {
      return std::any_of(ops.begin(), ops.end(), [&](const Operation& o) { return o.symbol() == s; });
    };
    const std::string op(profile_operation(*def.profile));
    if (!has(op)) {
      auto cls = classify(p, profile_class(*def.profile));
      if (!cls.holds)
        throw Error(ErrorCode::missing_structure, "poset " + def.poset + " is not " + std::string(to_string(cls.kind)) +
                                                      (cls.witness ? ": " + cls.witness->reason : ""));
      ops.push_back(*cls.table);
    }
    const Signature signature = profile_signature(*def.profile);
    for (const auto& s : signature.symbols()) {
      if (s.arity != 0 || has(s.name)) continue;
      auto ext = extremes(p);
      auto v = s.name == sym::zero ? ext.bottom : ext.top;
      if (!v) throw Error(ErrorCode::missing_structure, "poset " + def.poset + " has no element for " + s.name);
      ops.push_back(Operation::constant(s.name, p.size(), *v));
    }
  }
  return Algebra(p.labels(), std::move(ops));
}

Algebra materialize(const Document& doc, std::string_view algebra_name) {
  const AlgebraDef* def = doc.find_algebra(algebra_name);
  if (!def) throw Error(ErrorCode::semantic_error, "unknown algebra '" + std::string(algebra_name) + "'");
  return materialize(doc, *def);
}

Document document_of(const Algebra& a, const std::string& name, std::optional<Profile> profile) {
  Document doc;
  std::optional<Poset> p;
  if (a.has(sym::meet))
    p = induced_order(a, OrderKind::meet);
  else if (a.has(sym::join))
    p = induced_order(a, OrderKind::join);
  else
    p = Poset::build(a.labels(), std::vector<ElementPair>{});
  doc.posets.push_back({name, *p});
  AlgebraDef def{name + "_alg", name, profile, std::nullopt, std::nullopt, a.operations()};
  doc.algebras.push_back(std::move(def));
  return doc;
}

}  // namespace ordalg
