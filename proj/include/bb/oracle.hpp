#ifndef BB_ORACLE_HPP
#define BB_ORACLE_HPP

#include <optional>

#include "bb/context.hpp"
#include "bb/presentation.hpp"

namespace bb {

struct OracleCaps {
  size_t max_len = 12;
  size_t max_area = 6;
  size_t max_states = 200000;
};

enum class OracleExactness { exact, upper_bound_only };

struct OracleResult {
  Word word;
  bool filled = false;
  long long area = -1;
  OracleExactness exactness = OracleExactness::upper_bound_only;
  bool closed = false;  // reachable set exhausted under the caps
  OracleCaps caps;
  std::optional<NullExpression> expression;
  size_t states_explored = 0;
};

/// Exact decision: the word fills with a single relator application iff its
/// cyclic reduction is a cyclic permutation of a relator or its inverse.
bool decide_area_at_most_one(const Presentation& p, const Word& w);

/// Breadth-first search over freely reduced words, one relator application
/// per move. The reported area is always a valid upper bound; it is marked
/// exact only when a matching certified lower bound exists (empty word,
/// single-application criterion, or area two with that criterion refuted).
OracleResult brute_force_area(const Presentation& p, const Word& w, const OracleCaps& caps);

struct DehnSampleRow {
  int length = 0;
  long long max_area = 0;
  bool exact = true;     // every contributing oracle call was exact
  bool complete = true;  // no budget exhaustion among the calls
  size_t words_checked = 0;
};

/// Enumerates freely reduced edge words up to the given tiny length, filters
/// the null-homotopic ones through the vertex-group normal form, and
/// tabulates the maximal oracle area per length.
std::vector<DehnSampleRow> enumerate_dehn_sample(const Context& ctx, int max_len,
                                                 const OracleCaps& caps);

}  // namespace bb

#endif
