#pragma once

#include <string_view>
#include <vector>

#include "ordalg/dsl.hpp"

namespace ordalg {

struct FixtureText {
  std::string_view name;
  std::string_view text;
};

// fig1 .. fig5 in canonical DSL form, tables as printed.
const std::vector<FixtureText>& fixture_texts();

// All fixtures in one document.
Document fixtures();
// One fixture; throws invalid_argument for an unknown name.
Document fixture(std::string_view name);

}  // namespace ordalg
