#pragma once

// Graph files: one JSON document
//   { "n": 2, "vertices": ["p", "q"],
//     "edges": [ {"from": "p", "to": "q", "alpha": [1, 0]} ],
//     "classes": { "f": { "p": [ {"coeff": 1, "exp": [-1, 0]} ], ... } } }
// Each listed edge implies its reversal with weight -alpha unless an
// explicit "alpha_bar" is given. Integers may be JSON numbers or decimal
// strings; floats are rejected.

#include <map>
#include <string>
#include <vector>

#include "gkm/action.hpp"

namespace gkm {

struct GraphFile
{
    RawAction raw;
    /// class name -> value at each vertex, in vertex order
    std::map<std::string, std::vector<LaurentPoly>> classes;
};

/// Throws ParseError naming the line or the offending field.
GraphFile parse_graph(const std::string& text);
GraphFile load_graph(const std::string& path);

/// Serializes an action with an optional set of named classes.
std::string dump_graph(const GkmAction& action, const std::map<std::string, std::vector<LaurentPoly>>& classes = {});

/// Symplectic class when every value is a single monomial with coefficient 1.
Validated<SymplecticClass> as_symplectic(ActionPtr action, const std::vector<LaurentPoly>& values);

/// Integer vectors and rationals as typed on the command line: "1,-2" and
/// "3/2". Throw ParseError.
std::vector<Coord> parse_int_list(const std::string& s);
Rational parse_rational(const std::string& s);

} // namespace gkm
