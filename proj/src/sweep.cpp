#include "connset/sweep.hpp"

#include <cstdio>

#include "connset/error.hpp"
#include "connset/families.hpp"

namespace connset {

std::vector<std::string> expand_pattern(const std::string& pattern, std::size_t from, std::size_t to) {
  if (from > to) {
    throw Error(ErrorCode::InvalidArgument,
                "sweep range " + std::to_string(from) + ".." + std::to_string(to) + " is empty");
  }
  std::string base = pattern;
  if (base.find('*') == std::string::npos) {
    if (base.find(':') != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "sweep pattern `" + pattern + "` has no `*` placeholder");
    }
    base += ":*";
  }
  std::vector<std::string> out;
  for (std::size_t n = from; n <= to; ++n) {
    std::string s = base;
    for (auto pos = s.find('*'); pos != std::string::npos; pos = s.find('*', pos)) s.replace(pos, 1, std::to_string(n));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SweepRow> sweep(const std::string& pattern, std::size_t from, std::size_t to, Engine engine,
                            const CensusOptions& opt) {
  std::vector<SweepRow> rows;
  std::size_t n = from;
  for (const std::string& text : expand_pattern(pattern, from, to)) {
    FamilySpec spec = parse_family(text);
    Graph g = build(spec);
    SweepRow row;
    row.family = to_string(spec);
    row.n = n++;
    row.engine = resolve_engine(g, engine, spec);
    row.census = census(g, row.engine, spec, opt);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_growth(long double growth) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", growth);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,n,vertices,count,average,density,growth,engine\n";
  for (const SweepRow& r : rows) {
    out << r.family << ',' << r.n << ',' << r.census.order << ',' << r.census.count.get_str() << ','
        << fraction_string(r.census.average) << ',' << fraction_string(r.census.density) << ',' << format_growth(r.census.growth)
        << ',' << engine_name(r.engine) << '\n';
  }
}

}  // namespace connset
