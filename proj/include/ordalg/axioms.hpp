#pragma once

#include <string_view>

#include "ordalg/algebra.hpp"
#include "ordalg/formula.hpp"
#include "ordalg/poset.hpp"

namespace ordalg {

enum class OrderKind { meet, join };
enum class AxiomClass { meet_directoid, join_directoid, lambda_lattice };

std::string_view to_string(OrderKind k);
std::string_view to_string(AxiomClass c);

// x <= y iff x⊓y = x (meet) or x⊔y = y (join).  Throws missing_symbol or
// not_a_partial_order.
Poset induced_order(const Algebra& a, OrderKind kind);

// Identities defining the class, one report per identity.
std::vector<Formula> axioms(AxiomClass c);
ReportSet verify_axioms(const Algebra& a, AxiomClass c, const CheckOptions& options = {});

}  // namespace ordalg
