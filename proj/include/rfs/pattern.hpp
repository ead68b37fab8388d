#pragma once
// PatternSpec mini-language and the named pattern families.
//
// Grammar:   P<k> | C<k> | K1,<k> | K1,<k>+ | K1,<k>+e | S<a>,<b>,<c>
//          | B | Z1 | edges:[(u,v),...]
//
// Constructed labelings are fixed so that witnesses and tests reproduce:
//   P_k:      1-2-...-k in traversal order
//   C_k:      1-2-...-k-1
//   K1,k:     center 1, leaves 2..k+1
//   K1,k+:    center 1, subdivided leg 1-2-3, short legs 1-4 .. 1-(k+2)
//   K1,k+e:   center 1, leaves 2..k+1, extra edge (2,3)
//   S a,b,c:  legs normalized non-increasing; center 1, then each leg's
//             vertices outward, longest leg first
//   B:        K1,3+ plus a pendant edge at its degree-2 vertex (2,6)
//   Z1:       C3 on 1,2,3 plus pendant edge (1,4)

#include <optional>
#include <string>
#include <vector>

#include "rfs/graph.hpp"

namespace rfs {

// Throws std::invalid_argument on malformed specs or out-of-bound parameters
// (k >= 1 for P, k >= 3 for C, k >= 1 for stars, k >= 2 for K1,k+e,
// legs >= 1 for spiders).
Graph make_pattern(const std::string& spec);

bool is_valid_pattern_spec(const std::string& spec);

// Family name of the isomorphism class if it has one, e.g. "C5", "K1,3+",
// "S2,2,1", "B"; nullopt otherwise.
std::optional<std::string> family_name(const Graph& g);

// family_name when available, canonical_key otherwise. Parseable by
// make_pattern either way.
std::string pattern_display_name(const Graph& g);

// Grammar summary lines for `patterns list`.
std::vector<std::string> pattern_family_help();

}  // namespace rfs
