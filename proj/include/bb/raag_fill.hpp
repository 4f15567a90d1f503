#ifndef BB_RAAG_FILL_HPP
#define BB_RAAG_FILL_HPP

#include "bb/context.hpp"
#include "bb/expression.hpp"
#include "bb/word.hpp"

namespace bb {

class NotNullHomotopic : public Error {
 public:
  using Error::Error;
};

/// Letterwise image in the vertex group: an edge maps to from to^-1, the
/// stable letter to the base vertex.
Word embed_to_vertices(const Context& ctx, const Word& w);

/// Canonical representative of a vertex word: fully shuffle-cancelled, then
/// the lexicographically least linearization of its commutation class. Two
/// vertex words are equal in the group iff their normal forms coincide.
Word raag_normal_form(const Context& ctx, const Word& vertex_word);

bool raag_trivial(const Context& ctx, const Word& vertex_word);

/// Quadratic-area, linear-radius constructive filler over the commutator
/// presentation: area <= ceil(n^2/2), radius <= n for n = |w|. Throws
/// NotNullHomotopic when no shuffle-cancelling pair exists on a nonempty
/// reduced word (exact decision for these groups).
NullExpression fill_raag(const Context& ctx, const Word& vertex_word);

/// Case data for single elementary presentation moves.
struct TietzeData {
  const Presentation* from = nullptr;
  const Presentation* to = nullptr;
  // Case 2: id of the dropped relator in `from` plus its filling over `to`.
  int removed_relator = -1;
  const NullExpression* removed_filling = nullptr;
  // Cases 3 and 4: the adjoined/removed generator and its defining word.
  int generator = -1;
  Word defining_word;
  // Case 3 only: the target word over the extended alphabet and the id of
  // the defining relator in `to`.
  Word extended_target;
  int defining_relator = -1;
};

/// The word over the smaller alphabet whose filling case 3 consumes.
Word tietze_case3_base_word(const TietzeData& d);

/// Elementary change of presentation applied to a filling, with the metric
/// growth of the corresponding proof case. Shared relators must keep their
/// ids across the two presentations (build one store as an extension of the
/// other).
NullExpression tietze_case_transform(const NullExpression& e, int tcase, const TietzeData& d);

/// Constant-size extended-presentation fillings for the transport stage.
BridgeSet build_bridges(const Context& ctx);

/// Section of the quotient map: vertex v -> p(v, q) t.
Word sigma_section(const Context& ctx, const Word& vertex_word);

/// Lifts a commutator-presentation filling of embed_to_vertices(w) to a
/// verified extended-presentation filling of the edge word w.
NullExpression transport_to_extended(const Context& ctx, const Word& w,
                                     const NullExpression& raag_filling);

}  // namespace bb

#endif
