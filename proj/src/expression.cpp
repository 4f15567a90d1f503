#include "bb/expression.hpp"

#include <algorithm>

namespace bb {

void ReductionStack::push_term(const RelatorStore& store, const ExprTerm& t) {
  push(t.conjugator);
  const Word& r = store.relator_word(t.relator.id);
  if (t.relator.sign >= 0) {
    push(r);
  } else {
    push_inverse(r);
  }
  push_inverse(t.conjugator);
}

Word evaluate_expression(const RelatorStore& store, const NullExpression& e) {
  ReductionStack stack;
  for (const ExprTerm& t : e.terms) stack.push_term(store, t);
  return stack.take(e.target.alphabet);
}

bool verify_expression(const RelatorStore& store, const Word& w, const NullExpression& e) {
  ReductionStack stack;
  for (const ExprTerm& t : e.terms) stack.push_term(store, t);
  stack.push_inverse(w);
  return stack.empty();
}

bool verify_expression(const RelatorStore& store, const NullExpression& e) {
  return verify_expression(store, e.target, e);
}

ExpressionMetrics expression_metrics(const NullExpression& e) {
  ExpressionMetrics m;
  m.area = static_cast<int64_t>(e.terms.size());
  for (const ExprTerm& t : e.terms) {
    m.radius = std::max(m.radius, static_cast<int64_t>(t.conjugator.size()));
    m.penetration = std::max(m.penetration, static_cast<int64_t>(t.relator.index));
  }
  return m;
}

NullExpression invert_expression(const NullExpression& e) {
  NullExpression out;
  out.target = e.target.inverse();
  out.terms.reserve(e.terms.size());
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    ExprTerm t = *it;
    t.relator.sign = -t.relator.sign;
    out.terms.push_back(std::move(t));
  }
  return out;
}

NullExpression conjugate_expression(const NullExpression& e, const Word& c) {
  NullExpression out;
  out.target = concat(c, e.target, c.inverse());
  out.terms.reserve(e.terms.size());
  for (const ExprTerm& t : e.terms) {
    out.terms.push_back({concat(c, t.conjugator), t.relator});
  }
  return out;
}

NullExpression cyclic_shift_expression(const NullExpression& e, size_t k) {
  // target = u v, shifted = v u = v (u v) v^-1; conjugate by the moved suffix.
  size_t n = e.target.size();
  Word suffix = n == 0 ? Word(e.target.alphabet) : e.target.subword(k % n, n - k % n);
  NullExpression out = conjugate_expression(e, suffix);
  out.target = rotate(e.target, k);
  return out;
}

void append_conjugated(std::vector<ExprTerm>& out, const NullExpression& e, const Word& c,
                       int sign) {
  if (sign >= 0) {
    for (const ExprTerm& t : e.terms) out.push_back({concat(c, t.conjugator), t.relator});
  } else {
    for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
      ExprTerm t = {concat(c, it->conjugator), it->relator};
      t.relator.sign = -t.relator.sign;
      out.push_back(std::move(t));
    }
  }
}

NullExpression splice_transitions(const RelatorStore& store, const TransitionScheme& s) {
  if (s.stages.empty()) throw Error("transition scheme has no stages");
  if (s.fillings.size() + 1 != s.stages.size()) {
    throw Error("transition scheme needs one filling per consecutive stage pair");
  }
  if (!free_reduce(s.stages.back()).empty()) {
    throw VerificationError("last stage of a spliced scheme must be the empty word");
  }
  NullExpression out;
  out.target = s.stages.front();
  for (size_t i = 0; i + 1 < s.stages.size(); ++i) {
    Word step = concat(s.stages[i], s.stages[i + 1].inverse());
    if (!verify_expression(store, step, s.fillings[i])) {
      throw VerificationError("stage filling failed verification at transition " +
                              std::to_string(i));
    }
    out.terms.insert(out.terms.end(), s.fillings[i].terms.begin(), s.fillings[i].terms.end());
  }
  return out;
}

}  // namespace bb
