#include "connset/families.hpp"

#include <sstream>
#include <vector>

#include "connset/error.hpp"

namespace connset {

namespace {


template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void bad_field(const std::string& family, const std::string& field,
                            std::size_t value, const std::string& rule) {
  throw Error(ErrorCode::InvalidArgument,
              family + ": parameter " + field + "=" + std::to_string(value) +
                  " out of range (" + rule + ")");
}

void add_cycle(EdgeList& e, Vertex offset, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    e.emplace_back(offset + i, offset + (i + 1) % len);
  }
}

void add_circulant(EdgeList& e, Vertex offset, std::size_t n, std::size_t k) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      e.emplace_back(offset + i, offset + (i + j) % n);
    }
  }
}

std::size_t parse_number(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') {
    throw Error(ErrorCode::Parse, "family spec `" + whole +
                                      "`: `" + text + "` is not a number");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      Overloaded{
          [](family::Path f) { if (f.n < 1) bad_field("path", "n", f.n, "n >= 1"); },
          [](family::Star f) { if (f.n < 2) bad_field("star", "n", f.n, "n >= 2"); },
          [](family::Cycle f) { if (f.n < 3) bad_field("cycle", "n", f.n, "n >= 3"); },
          [](family::Prism f) { if (f.n < 3) bad_field("prism", "n", f.n, "n >= 3"); },
          [](family::CrissCross f) {
            if (f.n < 2) bad_field("crisscross", "n", f.n, "n >= 2");
          },
          [](family::CirculantPower f) {
            if (f.n < 3) bad_field("circulant", "n", f.n, "n >= 3");
            if (f.k < 1 || 2 * f.k >= f.n) bad_field("circulant", "k", f.k, "1 <= k < n/2");
          },
          [](family::CirculantPrism f) {
            if (f.n < 3) bad_field("circulantprism", "n", f.n, "n >= 3");
            if (f.k < 1 || 2 * f.k >= f.n) bad_field("circulantprism", "k", f.k, "1 <= k < n/2");
          },
          [](family::HexChain f) { if (f.m < 1) bad_field("hexchain", "m", f.m, "m >= 1"); },
          [](family::Complete f) { if (f.n < 1) bad_field("complete", "n", f.n, "n >= 1"); },
      },
      spec);
}

Graph build(const FamilySpec& spec) {
  validate(spec);
  EdgeList e;
  std::size_t n = 0;
  std::visit(
      Overloaded{
          [&](family::Path f) {
            n = f.n;
            for (Vertex i = 0; i + 1 < f.n; ++i) e.emplace_back(i, i + 1);
          },
          [&](family::Star f) {
            n = f.n;
            for (Vertex i = 1; i < f.n; ++i) e.emplace_back(0, i);
          },
          [&](family::Cycle f) {
            n = f.n;
            add_cycle(e, 0, f.n);
          },
          [&](family::Prism f) {
            n = 2 * f.n;
            add_cycle(e, 0, f.n);
            add_cycle(e, static_cast<Vertex>(f.n), f.n);
            for (Vertex i = 0; i < f.n; ++i) e.emplace_back(i, f.n + i);
          },
          [&](family::CrissCross f) {
            const std::size_t len = 2 * f.n;
            n = 2 * len;
            add_cycle(e, 0, len);
            add_cycle(e, static_cast<Vertex>(len), len);
            // 1-based: v_i w_{i+1} for odd i, v_i w_{i-1} for even i.
            for (std::size_t i = 1; i <= len; ++i) {
              std::size_t partner = (i % 2 == 1) ? i + 1 : i - 1;
              e.emplace_back(static_cast<Vertex>(i - 1),
                             static_cast<Vertex>(len + (partner - 1) % len));
            }
          },
          [&](family::CirculantPower f) {
            n = f.n;
            add_circulant(e, 0, f.n, f.k);
          },
          [&](family::CirculantPrism f) {
            n = 2 * f.n;
            add_circulant(e, 0, f.n, f.k);
            add_circulant(e, static_cast<Vertex>(f.n), f.n, f.k);
            for (Vertex i = 0; i < f.n; ++i) e.emplace_back(i, f.n + i);
          },
          [&](family::HexChain f) {
            n = 6 * f.m;
            for (std::size_t j = 0; j < f.m; ++j) {
              const auto b = static_cast<Vertex>(6 * j);
              const Vertex u = b, v = b + 1, w = b + 2, x = b + 3, y = b + 4,
                           z = b + 5;
              for (auto [p, q] : {std::pair{u, v}, {v, w}, {v, x}, {v, y},
                                  {v, z}, {u, x}, {x, y}, {y, z}, {z, w}}) {
                e.emplace_back(p, q);
              }
              e.emplace_back(w, static_cast<Vertex>(6 * ((j + 1) % f.m)));
            }
          },
          [&](family::Complete f) {
            n = f.n;
            for (Vertex i = 0; i < f.n; ++i) {
              for (Vertex j = i + 1; j < f.n; ++j) e.emplace_back(i, j);
            }
          },
      },
      spec);
  return Graph::from_edges(n, e);
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](family::Path) { return std::string("path"); },
          [](family::Star) { return std::string("star"); },
          [](family::Cycle) { return std::string("cycle"); },
          [](family::Prism) { return std::string("prism"); },
          [](family::CrissCross) { return std::string("crisscross"); },
          [](family::CirculantPower) { return std::string("circulant"); },
          [](family::CirculantPrism) { return std::string("circulantprism"); },
          [](family::HexChain) { return std::string("hexchain"); },
          [](family::Complete) { return std::string("complete"); },
      },
      spec);
}

std::string to_string(const FamilySpec& spec) {
  std::string params = std::visit(
      Overloaded{
          [](family::CirculantPower f) {
            return std::to_string(f.n) + ":" + std::to_string(f.k);
          },
          [](family::CirculantPrism f) {
            return std::to_string(f.n) + ":" + std::to_string(f.k);
          },
          [](family::HexChain f) { return std::to_string(f.m); },
          [](auto f) { return std::to_string(f.n); },
      },
      spec);
  return family_name(spec) + ":" + params;
}

FamilySpec parse_family(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw Error(ErrorCode::Parse, "empty family spec");

  const std::string& name = parts[0];
  auto expect = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw Error(ErrorCode::Parse, "family spec `" + text + "`: " + name +
                                        " takes " + std::to_string(count) +
                                        " parameter(s)");
    }
  };
  auto num = [&](std::size_t i) { return parse_number(parts[i], text); };

  FamilySpec spec;
  if (name == "path") { expect(1); spec = family::Path{num(1)}; }
  else if (name == "star") { expect(1); spec = family::Star{num(1)}; }
  else if (name == "cycle") { expect(1); spec = family::Cycle{num(1)}; }
  else if (name == "prism") { expect(1); spec = family::Prism{num(1)}; }
  else if (name == "crisscross" || name == "franklin") {
    if (name == "franklin") { expect(0); spec = family::CrissCross{3}; }
    else { expect(1); spec = family::CrissCross{num(1)}; }
  }
  else if (name == "circulant") { expect(2); spec = family::CirculantPower{num(1), num(2)}; }
  else if (name == "circulantprism") { expect(2); spec = family::CirculantPrism{num(1), num(2)}; }
  else if (name == "hexchain") { expect(1); spec = family::HexChain{num(1)}; }
  else if (name == "complete") { expect(1); spec = family::Complete{num(1)}; }
  else {
    throw Error(ErrorCode::Parse, "unknown graph family `" + name + "`");
  }
  validate(spec);
  return spec;
}

VertexSet circulant_dominating_set(std::size_t n, std::size_t k) {
  validate(family::CirculantPower{n, k});
  std::vector<Vertex> members;
  for (std::size_t i = 1; i <= n; i += k) members.push_back(static_cast<Vertex>(i % n));
  return VertexSet(n, std::move(members));
}

}  // namespace connset
