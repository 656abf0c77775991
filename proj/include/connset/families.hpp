#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "connset/graph.hpp"

namespace connset {

namespace family {
struct Path { std::size_t n; };
struct Star { std::size_t n; };
struct Cycle { std::size_t n; };
/// Circular ladder C_n x K_2: rim v_i = i, w_i = n + i.
struct Prism { std::size_t n; };
/// Two 2n-cycles v (labels 0..2n-1) and w (2n..4n-1) with crossed rungs.
struct CrissCross { std::size_t n; };
/// Cycle with every pair at cyclic distance <= k joined; 2k-regular.
struct CirculantPower { std::size_t n, k; };
/// Two copies of CirculantPower(n, k) joined by a perfect matching.
struct CirculantPrism { std::size_t n, k; };
/// m copies of the 6-vertex gadget (u,v,w,x,y,z = 6j..6j+5), w_j -> u_{j+1}.
struct HexChain { std::size_t m; };
struct Complete { std::size_t n; };
}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Star, family::Cycle, family::Prism,
                 family::CrissCross, family::CirculantPower,
                 family::CirculantPrism, family::HexChain, family::Complete>;

/// Parses the canonical string form, e.g. `crisscross:3`, `circulant:12:3`.
FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);

/// Family name without parameters (`prism`, `hexchain`, ...).
std::string family_name(const FamilySpec& spec);

/// Throws Error(InvalidArgument) naming the offending field.
void validate(const FamilySpec& spec);

Graph build(const FamilySpec& spec);

/// The set {v_i : 1 <= i <= n, i = 1 (mod k)} of C_n^k, where cycle vertex
/// v_i carries label i mod n. Its size is ceil(n/k).
VertexSet circulant_dominating_set(std::size_t n, std::size_t k);

}  // namespace connset
