#include "ordalg/json_io.hpp"

#include "ordalg/error.hpp"

namespace ordalg {

namespace {

Element index_in(const std::vector<std::string>& labels, const std::string& l) {
  for (Element i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw Error(ErrorCode::unknown_label, "unknown label '" + l + "'");
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::syntax_error, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Poset& p) {
  Json leq = Json::array();
  for (Element a = 0; a < p.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < p.size(); ++b) row.push_back(p.leq(a, b));
    leq.push_back(std::move(row));
  }
  return Json{{"labels", p.labels()}, {"leq", std::move(leq)}};
}

Poset poset_from_json(const Json& j) {
  return guarded([&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const auto& leq = j.at("leq");
    if (leq.size() != labels.size()) throw Error(ErrorCode::not_a_partial_order, "leq must be square");
    std::vector<ElementSet> up(labels.size(), ElementSet(labels.size()));
    for (Element a = 0; a < labels.size(); ++a) {
      if (leq[a].size() != labels.size()) throw Error(ErrorCode::not_a_partial_order, "leq must be square");
      for (Element b = 0; b < labels.size(); ++b)
        if (leq[a][b].get<bool>()) up[a].insert(b);
    }
    PosetOptions options;
    options.max_size = std::max<std::size_t>(options.max_size, labels.size());
    return Poset::from_relation(std::move(labels), up, options);
  });
}

Json to_json(const Operation& op, const std::vector<std::string>& labels) {
  Json table;
  const auto n = static_cast<Element>(op.carrier());
  switch (op.arity()) {
    case 0: table = labels.at(op()); break;
    case 1:
      table = Json::array();
      for (Element a = 0; a < n; ++a) table.push_back(labels.at(op(a)));
      break;
    default:
      table = Json::array();
      for (Element a = 0; a < n; ++a) {
        Json row = Json::array();
        for (Element b = 0; b < n; ++b) row.push_back(labels.at(op(a, b)));
        table.push_back(std::move(row));
      }
  }
  return Json{{"symbol", op.symbol()}, {"arity", op.arity()}, {"table", std::move(table)}};
}

Operation operation_from_json(const Json& j, const std::vector<std::string>& labels) {
  return guarded([&] {
    const auto symbol = j.at("symbol").get<std::string>();
    const int arity = j.at("arity").get<int>();
    const auto& t = j.at("table");
    const std::size_t n = labels.size();
    std::vector<Element> table;
    if (arity == 0) {
      table.push_back(index_in(labels, t.get<std::string>()));
    } else if (arity == 1) {
      for (const auto& v : t) table.push_back(index_in(labels, v.get<std::string>()));
    } else if (arity == 2) {
      if (t.size() != n) throw Error(ErrorCode::non_total_table, "'" + symbol + "' needs " + std::to_string(n) + " rows");
      for (const auto& row : t) {
        if (row.size() != n) throw Error(ErrorCode::non_total_table, "'" + symbol + "' has a short row");
        for (const auto& v : row) table.push_back(index_in(labels, v.get<std::string>()));
      }
    } else {
      throw Error(ErrorCode::arity_mismatch, "arity must be 0, 1 or 2");
    }
    return Operation(symbol, arity, n, std::move(table));
  });
}

Json to_json(const Algebra& a) {
  Json ops = Json::array();
  for (const auto& op : a.operations()) ops.push_back(to_json(op, a.labels()));
  return Json{{"labels", a.labels()}, {"operations", std::move(ops)}};
}

Algebra algebra_from_json(const Json& j) {
  return guarded([&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<Operation> ops;
    for (const auto& o : j.at("operations")) ops.push_back(operation_from_json(o, labels));
    return Algebra(std::move(labels), std::move(ops));
  });
}

Json to_json(const Report& r, const std::vector<std::string>& labels) {
  Json j{{"name", r.name}, {"holds", r.holds}, {"checked", r.checked_count}};
  if (r.witness) {
    Json w = Json::object();
    for (const auto& [v, e] : *r.witness) w[v] = labels.at(e);
    j["witness"] = std::move(w);
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const ReportSet& r, const std::vector<std::string>& labels) {
  Json items = Json::array();
  for (const auto& i : r.items) items.push_back(to_json(i, labels));
  return Json{{"holds", r.holds()}, {"items", std::move(items)}};
}

Json to_json(const PcClassification& c, const Poset& p) {
  Json j{{"class", to_string(c.kind)}, {"applicable", c.applicable}, {"holds", c.holds}};
  if (c.table) j["table"] = to_json(*c.table, p.labels());
  if (c.witness) {
    Json els = Json::array();
    for (Element e : c.witness->elements) els.push_back(p.label(e));
    j["witness"] = Json{{"elements", std::move(els)}, {"reason", c.witness->reason}};
  }
  return j;
}

Json to_json(const Congruence& c, const std::vector<std::string>& labels) {
  Json blocks = Json::array();
  for (const auto& b : c.blocks()) {
    Json block = Json::array();
    for (Element e : b) block.push_back(labels.at(e));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

Json to_json(const CongruenceLattice& l, const std::vector<std::string>& labels) {
  Json els = Json::array();
  for (const auto& c : l.elements) els.push_back(to_json(c, labels));
  Json hasse = Json::array();
  for (auto [a, b] : l.hasse) hasse.push_back(Json::array({a, b}));
  return Json{{"congruences", std::move(els)},
              {"hasse", std::move(hasse)},
              {"validated", l.validated},
              {"guard_exceeded", l.guard_exceeded}};
}

Json to_json(const CongruenceProperties& p) {
  Json j{{"permutable", p.permutable},
         {"distributive", p.distributive},
         {"arithmetical", p.arithmetical},
         {"weakly_regular", p.weakly_regular ? Json(*p.weakly_regular) : Json(nullptr)},
         {"congruences", p.congruence_count}};
  if (!p.permutable_witness.empty()) j["permutable_witness"] = p.permutable_witness;
  if (!p.distributive_witness.empty()) j["distributive_witness"] = p.distributive_witness;
  if (!p.weakly_regular_witness.empty()) j["weakly_regular_witness"] = p.weakly_regular_witness;
  return j;
}

Json to_json(const std::vector<TermConditionReport>& r, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& t : r)
    out.push_back(Json{{"scheme", to_string(t.scheme)}, {"holds", t.holds()},
                       {"identities", to_json(t.identities, labels)["items"]}});
  return out;
}

Json to_json(const Factorization& f, const std::vector<std::string>& labels) {
  Json j{{"decomposable", f.decomposable}};
  if (!f.decomposable) return j;
  j["theta"] = to_json(f.pair->theta(), labels);
  j["phi"] = to_json(f.pair->phi(), labels);
  j["first"] = to_json(*f.first);
  j["second"] = to_json(*f.second);
  Json map = Json::object();
  for (Element i = 0; i < f.map.size(); ++i)
    map[labels.at(i)] = Json::array({f.first->label(f.map[i].first), f.second->label(f.map[i].second)});
  j["map"] = std::move(map);
  return j;
}

Json to_json(const AuditReport& r) {
  Json j{{"profile", to_string(r.profile)}, {"applicable", r.applicable}};
  if (!r.applicable) {
    j["skipped"] = r.skipped_reason;
    return j;
  }
  j["poset_verdict"] = r.poset_verdict;
  j["assignments"] = r.total;
  j["assignments_saturated"] = r.total_saturated;
  j["checked"] = r.checked;
  j["sampled"] = r.sampled;
  Json d = Json::array();
  for (const auto& v : r.divergences)
    d.push_back(Json{{"index", v.index}, {"poset", v.poset_verdict}, {"algebra", v.algebra_verdict},
                     {"detail", v.detail}});
  j["divergences"] = std::move(d);
  return j;
}

}  // namespace ordalg
