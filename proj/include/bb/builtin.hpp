#ifndef BB_BUILTIN_HPP
#define BB_BUILTIN_HPP

#include <string>
#include <vector>

#include "bb/complex.hpp"
#include "bb/context.hpp"

namespace bb {

/// Named builtin complexes: TRI (one 2-simplex), PATH (a tree), OCTA (the
/// octahedron sphere), GRID<m> (flag-triangulated m x m disc with uniform
/// diagonals), ANNULUS (negative control, not simply connected).
FlagComplex builtin_complex(const std::string& name);
std::vector<std::string> builtin_complex_names();

/// Resolves "builtin:NAME" or a file path.
FlagComplex resolve_complex(const std::string& spec);

/// The degree-four benchmark family (da)^k (b^-1 c^-1)^k (ad)^k (c^-1 b^-1)^k
/// over four directed edges; rejected unless null-homotopic.
Word brady_word(const Context& ctx, int k, int a, int b, int c, int d);

struct BradyEdges {
  int a, b, c, d;
};

/// Default edge labels for the benchmark family on a context; validated at
/// runtime through the vertex-group normal form.
BradyEdges default_brady_edges(const Context& ctx);

}  // namespace bb

#endif
