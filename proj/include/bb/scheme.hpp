#ifndef BB_SCHEME_HPP
#define BB_SCHEME_HPP

#include <cstddef>
#include <optional>

#include "bb/expression.hpp"
#include "bb/presentation.hpp"
#include "bb/word.hpp"

namespace bb {

/// One relator application: d is freely equal to conj r^sign conj^-1 for a
/// stored relator r.
struct RelatorApplication {
  int relator = -1;
  int sign = 1;
  Word conjugator;
};

/// Decides whether d is a single conjugated relator (or inverse) of the
/// presentation, scanning rotations of the cyclic reduction. Returns the
/// match with the shortest conjugator extension.
std::optional<RelatorApplication> find_relator_application(const Presentation& p, const Word& d);

/// Incremental construction of a null-expression by rewriting a word to the
/// empty word one relator application at a time. Every step is checked: a
/// rewrite that is not a legal application throws. In count_only mode the
/// terms are not stored, only area and radius.
class SchemeBuilder {
 public:
  enum class Policy { materialize, count_only };

  SchemeBuilder(const Presentation& pres, Word start, Policy policy = Policy::materialize);

  const Word& current() const { return current_; }
  size_t size() const { return current_.size(); }
  long long area() const { return area_; }
  long long radius() const { return radius_; }

  /// Replaces current[pos, pos+len) by v as a single relator application.
  void replace(size_t pos, size_t len, const Word& v);

  /// Zero-cost rewrite: requires the replaced subword freely equal to v.
  void replace_free(size_t pos, size_t len, const Word& v);

  /// Replaces the subword using a whole prebuilt filling: the replaced range
  /// u and v must satisfy u v^-1 freely equal to pre (target)^sign pre^-1.
  void apply_filling(size_t pos, size_t len, const Word& v, const NullExpression& fill,
                     const Word& pre_conjugator, int sign = 1);

  /// Edge letter (g, s) -> (gbar, -s); one edge-pair relator application.
  void flip_letter(size_t pos);
  void flip_range(size_t pos, size_t len);

  /// Exchanges the two letters at pos, pos+1 through the intermediate word
  /// mid (two applications).
  void swap_adjacent(size_t pos, const Word& mid);

  /// Deletes adjacent letters (g, s)(gbar, s); one application.
  void delete_pair(size_t pos);
  /// Inserts (e, sign)(ebar, sign) at pos; one application.
  void insert_pair(size_t pos, int edge_gen, int sign);

  /// Requires the remaining word to be freely trivial; returns the expression
  /// for the starting word.
  NullExpression finish();

 private:
  void record(size_t pos, const RelatorApplication& app);

  const Presentation* pres_;
  Policy policy_;
  Word start_;
  Word current_;
  std::vector<ExprTerm> terms_;
  long long area_ = 0;
  long long radius_ = 0;
};

}  // namespace bb

#endif
