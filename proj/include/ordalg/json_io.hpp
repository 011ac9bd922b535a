#pragma once

#include <json.hpp>

#include "ordalg/algebra.hpp"
#include "ordalg/assignment.hpp"
#include "ordalg/congruence.hpp"
#include "ordalg/decomposition.hpp"
#include "ordalg/pc_structures.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/report.hpp"

namespace ordalg {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema = 1;

// {"labels":[...], "leq":[[bool,...],...]}
Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

// {"symbol":"⊓","arity":2,"table":[[...],...]} with entries as labels; a
// unary table is a flat list and a constant a single label.
Json to_json(const Operation& op, const std::vector<std::string>& labels);
Operation operation_from_json(const Json& j, const std::vector<std::string>& labels);

// {"labels":[...], "operations":[...]}
Json to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j);

Json to_json(const Report& r, const std::vector<std::string>& labels);
Json to_json(const ReportSet& r, const std::vector<std::string>& labels);
Json to_json(const PcClassification& c, const Poset& p);
// Blocks as arrays of labels.
Json to_json(const Congruence& c, const std::vector<std::string>& labels);
Json to_json(const CongruenceLattice& l, const std::vector<std::string>& labels);
Json to_json(const CongruenceProperties& p);
Json to_json(const std::vector<TermConditionReport>& r, const std::vector<std::string>& labels);
Json to_json(const Factorization& f, const std::vector<std::string>& labels);
Json to_json(const AuditReport& r);

}  // namespace ordalg
