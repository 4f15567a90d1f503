#include "bb/scheme.hpp"

#include <algorithm>

namespace bb {

std::optional<RelatorApplication> find_relator_application(const Presentation& p, const Word& d) {
  Word reduced = free_reduce(d);
  if (reduced.empty()) return std::nullopt;
  auto [core, outer] = cyclic_reduce(reduced);
  for (size_t k = 0; k < core.size(); ++k) {
    Word rot = rotate(core, k);
    if (auto id = p.find(rot)) {
      RelatorApplication app;
      app.relator = *id;
      app.sign = 1;
      app.conjugator = concat(outer, core.subword(0, k));
      return app;
    }
    if (auto id = p.find(rot.inverse())) {
      RelatorApplication app;
      app.relator = *id;
      app.sign = -1;
      app.conjugator = concat(outer, core.subword(0, k));
      return app;
    }
  }
  return std::nullopt;
}

SchemeBuilder::SchemeBuilder(const Presentation& pres, Word start, Policy policy)
    : pres_(&pres), policy_(policy), start_(start), current_(std::move(start)) {}

void SchemeBuilder::record(size_t pos, const RelatorApplication& app) {
  ++area_;
  long long conj_len = static_cast<long long>(pos) + static_cast<long long>(app.conjugator.size());
  radius_ = std::max(radius_, conj_len);
  if (policy_ == Policy::materialize) {
    Word conj = current_.subword(0, pos);
    conj.append(app.conjugator);
    terms_.push_back({std::move(conj),
                      {app.relator, app.sign, pres_->relator_index(app.relator)}});
  }
}

void SchemeBuilder::replace(size_t pos, size_t len, const Word& v) {
  if (pos + len > current_.size()) throw Error("rewrite range out of bounds");
  Word u = current_.subword(pos, len);
  Word d = concat(u, v.inverse());
  auto app = find_relator_application(*pres_, d);
  if (!app) {
    if (free_reduce(d).empty()) {
      replace_free(pos, len, v);
      return;
    }
    throw VerificationError("rewrite is not a single relator application");
  }
  record(pos, *app);
  if (len == v.size()) {
    std::copy(v.letters.begin(), v.letters.end(),
              current_.letters.begin() + static_cast<long>(pos));
  } else {
    current_.letters.erase(current_.letters.begin() + static_cast<long>(pos),
                           current_.letters.begin() + static_cast<long>(pos + len));
    current_.letters.insert(current_.letters.begin() + static_cast<long>(pos),
                            v.letters.begin(), v.letters.end());
  }
}

void SchemeBuilder::replace_free(size_t pos, size_t len, const Word& v) {
  if (pos + len > current_.size()) throw Error("rewrite range out of bounds");
  Word u = current_.subword(pos, len);
  if (!freely_equal(u, v)) {
    throw VerificationError("free rewrite changes the free-group element");
  }
  current_.letters.erase(current_.letters.begin() + static_cast<long>(pos),
                         current_.letters.begin() + static_cast<long>(pos + len));
  current_.letters.insert(current_.letters.begin() + static_cast<long>(pos), v.letters.begin(),
                          v.letters.end());
}

void SchemeBuilder::apply_filling(size_t pos, size_t len, const Word& v,
                                  const NullExpression& fill, const Word& pre_conjugator,
                                  int sign) {
  if (pos + len > current_.size()) throw Error("rewrite range out of bounds");
  Word u = current_.subword(pos, len);
  Word d = concat(u, v.inverse());
  Word claimed = sign >= 0 ? fill.target : fill.target.inverse();
  if (!freely_equal(d, concat(pre_conjugator, claimed, pre_conjugator.inverse()))) {
    throw VerificationError("filling does not match the rewritten subword");
  }
  area_ += static_cast<long long>(fill.terms.size());
  if (policy_ == Policy::materialize) {
    Word base = current_.subword(0, pos);
    base.append(pre_conjugator);
    append_conjugated(terms_, fill, base, sign);
    for (size_t i = terms_.size() - fill.terms.size(); i < terms_.size(); ++i) {
      radius_ = std::max(radius_, static_cast<long long>(terms_[i].conjugator.size()));
    }
  } else {
    long long base_len = static_cast<long long>(pos) + static_cast<long long>(pre_conjugator.size());
    for (const ExprTerm& t : fill.terms) {
      radius_ = std::max(radius_, base_len + static_cast<long long>(t.conjugator.size()));
    }
  }
  current_.letters.erase(current_.letters.begin() + static_cast<long>(pos),
                         current_.letters.begin() + static_cast<long>(pos + len));
  current_.letters.insert(current_.letters.begin() + static_cast<long>(pos), v.letters.begin(),
                          v.letters.end());
}

void SchemeBuilder::flip_letter(size_t pos) {
  Letter l = current_[pos];
  const Alphabet& abc = pres_->alphabet();
  int rev = abc.reverse_edge(l.gen);
  replace(pos, 1, abc.word_of({{rev, -l.sign}}));
}

void SchemeBuilder::flip_range(size_t pos, size_t len) {
  for (size_t i = 0; i < len; ++i) flip_letter(pos + i);
}

void SchemeBuilder::swap_adjacent(size_t pos, const Word& mid) {
  Letter a = current_[pos];
  Letter b = current_[pos + 1];
  replace(pos, 2, mid);
  Word swapped(current_.alphabet);
  swapped.push_back(b);
  swapped.push_back(a);
  replace(pos, mid.size(), swapped);
}

void SchemeBuilder::delete_pair(size_t pos) {
  replace(pos, 2, Word(current_.alphabet));
}

void SchemeBuilder::insert_pair(size_t pos, int edge_gen, int sign) {
  const Alphabet& abc = pres_->alphabet();
  int rev = abc.reverse_edge(edge_gen);
  replace(pos, 0, abc.word_of({{edge_gen, sign}, {rev, sign}}));
}

NullExpression SchemeBuilder::finish() {
  if (!free_reduce(current_).empty()) {
    throw VerificationError("scheme did not terminate at the empty word");
  }
  NullExpression out;
  out.target = std::move(start_);
  out.terms = std::move(terms_);
  return out;
}

}  // namespace bb
