#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "connset/census.hpp"

namespace connset {

struct SweepRow {
  std::string family;  // concrete spec, e.g. `prism:7`
  std::size_t n = 0;   // the swept parameter
  SetCensus census;
  Engine engine = Engine::Auto;  // the engine that actually ran
};

/// Expands `pattern` for every parameter in [from, to]. A `*` in the pattern
/// is replaced by the parameter; a bare family name means `name:*`.
std::vector<std::string> expand_pattern(const std::string& pattern, std::size_t from, std::size_t to);

std::vector<SweepRow> sweep(const std::string& pattern, std::size_t from, std::size_t to,
                            Engine engine = Engine::Auto, const CensusOptions& opt = {});

/// `family,n,vertices,count,average,density,growth,engine`
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Growth printed with 12 significant digits.
std::string format_growth(long double growth);

}  // namespace connset
