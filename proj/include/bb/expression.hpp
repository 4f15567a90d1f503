#ifndef BB_EXPRESSION_HPP
#define BB_EXPRESSION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bb/word.hpp"

namespace bb {

class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Reference to a relator held in some relator store. `index` is the level
/// tag of indexed relators; finite presentations always report 0.
struct RelatorRef {
  int32_t id = -1;
  int32_t sign = 1;
  int32_t index = 0;
};

struct ExprTerm {
  Word conjugator;
  RelatorRef relator;
};

/// A product of conjugated relators together with the word it is claimed to
/// fill. The product is never trusted: verify_expression is the only thing
/// that makes an expression a certificate.
struct NullExpression {
  std::vector<ExprTerm> terms;
  Word target;

  size_t area() const { return terms.size(); }
};

struct ExpressionMetrics {
  int64_t area = 0;
  int64_t radius = 0;
  int64_t penetration = 0;
};

/// Resolves relator ids to literal words. Implemented by finite presentations
/// and by the indexed (infinite) relator store.
class RelatorStore {
 public:
  virtual ~RelatorStore() = default;
  virtual const Word& relator_word(int id) const = 0;
  virtual int relator_index(int id) const = 0;
  virtual std::string relator_label(int id) const = 0;
};

/// Push-only free-group accumulator; keeps the running product reduced so
/// large expressions can be verified without materializing the full product.
class ReductionStack {
 public:
  void push(Letter l) {
    if (!stack_.empty() && stack_.back().gen == l.gen && stack_.back().sign == -l.sign) {
      stack_.pop_back();
    } else {
      stack_.push_back(l);
    }
  }
  void push(const Word& w) {
    for (const Letter& l : w.letters) push(l);
  }
  void push_inverse(const Word& w) {
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) push(it->inverse());
  }
  void push_term(const RelatorStore& store, const ExprTerm& t);

  bool empty() const { return stack_.empty(); }
  size_t size() const { return stack_.size(); }
  Word take(uint32_t alphabet) {
    Word w(alphabet, std::move(stack_));
    stack_.clear();
    return w;
  }

 private:
  std::vector<Letter> stack_;
};

/// Free reduction of the product of the expression's terms.
Word evaluate_expression(const RelatorStore& store, const NullExpression& e);

/// True iff the expression's product is freely equal to w.
bool verify_expression(const RelatorStore& store, const Word& w, const NullExpression& e);

/// Convenience overload checking against the stored target.
bool verify_expression(const RelatorStore& store, const NullExpression& e);

ExpressionMetrics expression_metrics(const NullExpression& e);

/// Expression for target^-1 with the same area.
NullExpression invert_expression(const NullExpression& e);

/// Expression for the (unreduced) word c target c^-1; conjugators gain c.
NullExpression conjugate_expression(const NullExpression& e, const Word& c);

/// Expression for the cyclic permutation rotate(target, k), same area.
NullExpression cyclic_shift_expression(const NullExpression& e, size_t k);

/// Appends e's terms with every conjugator prefixed by c; with sign < 0 the
/// inverted expression is appended instead. Used when splicing subfillings.
void append_conjugated(std::vector<ExprTerm>& out, const NullExpression& e, const Word& c,
                       int sign);

/// Staged rewriting record: consecutive stages with one filling per
/// transition w_i ~> w_{i+1}, each filling an expression for w_i w_{i+1}^-1.
struct TransitionScheme {
  std::vector<Word> stages;
  std::vector<NullExpression> fillings;
};

/// Concatenates the stage fillings into one expression for stages.front().
/// Requires the last stage to be empty and every filling to verify.
NullExpression splice_transitions(const RelatorStore& store, const TransitionScheme& s);

}  // namespace bb

#endif
