#include "bb/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "bb/raag_fill.hpp"

namespace bb {

namespace {

struct Rule {
  Word from;
  Word to;
  int relator = -1;
  int sign = 1;
  Word conjugator;  // u v^-1 = conj r^sign conj^-1
};

std::vector<Rule> build_rules(const Presentation& p) {
  std::vector<Rule> rules;
  std::unordered_map<Word, std::vector<Word>, WordHash> seen;  // from -> to list
  auto add = [&](Word u, Word v, int rel, int sign, Word conj) {
    auto& tos = seen[u];
    if (std::find(tos.begin(), tos.end(), v) != tos.end()) return;
    tos.push_back(v);
    rules.push_back({std::move(u), std::move(v), rel, sign, std::move(conj)});
  };
  for (int id = 0; id < p.relator_count(); ++id) {
    const Word& r = p.relator_word(id);
    for (int sign : {1, -1}) {
      Word base = sign > 0 ? r : r.inverse();
      for (size_t k = 0; k < base.size(); ++k) {
        // rotation = prefix^-1 (r^sign) prefix, so the rule conjugator is
        // the inverted rotation prefix.
        Word rho = rotate(base, k);
        Word conj = base.subword(0, k).inverse();
        for (size_t split = 0; split <= rho.size(); ++split) {
          Word u = rho.subword(0, split);
          Word v = rho.subword(split, rho.size() - split).inverse();
          add(std::move(u), std::move(v), id, sign, conj);
        }
      }
    }
  }
  return rules;
}

}  // namespace

bool decide_area_at_most_one(const Presentation& p, const Word& w) {
  auto [core, conj] = cyclic_reduce(w);
  (void)conj;
  if (core.empty()) return true;  // area zero
  for (int id = 0; id < p.relator_count(); ++id) {
    auto [rc, rconj] = cyclic_reduce(p.relator_word(id));
    (void)rconj;
    if (rc.size() != core.size()) continue;
    for (int sign : {1, -1}) {
      Word base = sign > 0 ? rc : rc.inverse();
      for (size_t k = 0; k < base.size(); ++k) {
        if (rotate(base, k) == core) return true;
      }
    }
  }
  return false;
}

OracleResult brute_force_area(const Presentation& p, const Word& w, const OracleCaps& caps) {
  OracleResult result;
  result.word = w;
  result.caps = caps;

  Word start = free_reduce(w);
  if (start.empty()) {
    result.filled = true;
    result.area = 0;
    result.exactness = OracleExactness::exact;
    result.expression = NullExpression{{}, w};
    return result;
  }

  std::vector<Rule> rules = build_rules(p);
  struct Parent {
    int state = -1;
    size_t pos = 0;
    int rule = -1;
  };
  std::vector<Word> states{start};
  std::vector<Parent> parents{{}};
  std::vector<int> depth{0};
  std::unordered_map<Word, int, WordHash> seen{{start, 0}};

  int found = -1;
  bool exhausted = false;
  for (size_t head = 0; head < states.size() && found < 0; ++head) {
    if (static_cast<size_t>(depth[head]) >= caps.max_area) continue;
    const Word cur = states[head];
    for (size_t pos = 0; pos <= cur.size() && found < 0; ++pos) {
      for (size_t ri = 0; ri < rules.size(); ++ri) {
        const Rule& rule = rules[ri];
        if (pos + rule.from.size() > cur.size()) continue;
        bool match = true;
        for (size_t i = 0; i < rule.from.size(); ++i) {
          if (!(cur[pos + i] == rule.from[i])) {
            match = false;
            break;
          }
        }
        if (!match) continue;
        Word next(cur.alphabet);
        next.letters.reserve(cur.size() + rule.to.size());
        next.letters.assign(cur.letters.begin(), cur.letters.begin() + static_cast<long>(pos));
        next.append(rule.to);
        for (size_t i = pos + rule.from.size(); i < cur.size(); ++i) next.push_back(cur[i]);
        next = free_reduce(next);
        if (next.size() > caps.max_len) continue;
        if (seen.count(next)) continue;
        if (states.size() >= caps.max_states) {
          exhausted = true;
          break;
        }
        seen.emplace(next, static_cast<int>(states.size()));
        states.push_back(next);
        parents.push_back({static_cast<int>(head), pos, static_cast<int>(ri)});
        depth.push_back(depth[head] + 1);
        if (next.empty()) {
          found = static_cast<int>(states.size()) - 1;
          break;
        }
      }
      if (exhausted) break;
    }
    if (exhausted) break;
  }
  result.states_explored = states.size();
  result.closed = found < 0 && !exhausted;

  if (found < 0) {
    result.filled = false;
    return result;
  }

  // Reconstruct the move chain and convert each move into one term.
  std::vector<int> chain;
  for (int s = found; s > 0; s = parents[static_cast<size_t>(s)].state) chain.push_back(s);
  std::reverse(chain.begin(), chain.end());
  NullExpression expr;
  expr.target = w;
  for (int s : chain) {
    const Parent& par = parents[static_cast<size_t>(s)];
    const Rule& rule = rules[static_cast<size_t>(par.rule)];
    Word conj = states[static_cast<size_t>(par.state)].subword(0, par.pos);
    conj.append(rule.conjugator);
    expr.terms.push_back({std::move(conj), {rule.relator, rule.sign, 0}});
  }
  if (!verify_expression(p, expr)) {
    throw VerificationError("oracle reconstruction failed verification");
  }
  result.filled = true;
  result.area = static_cast<long long>(expr.terms.size());
  result.expression = std::move(expr);

  if (result.area <= 1) {
    result.exactness = OracleExactness::exact;
  } else if (result.area == 2 && !decide_area_at_most_one(p, w)) {
    result.exactness = OracleExactness::exact;
  } else {
    // Intermediate words of a minimal filling may exceed any fixed cap, so
    // closure under the caps alone never upgrades to exactness.
    result.exactness = OracleExactness::upper_bound_only;
  }
  return result;
}

namespace {

void enumerate_reduced(const Context& ctx, Word& cur, int remaining,
                       const std::function<void(const Word&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  for (int e : ctx.edge_gens) {
    for (int sign : {1, -1}) {
      if (!cur.empty() && cur.letters.back().gen == e && cur.letters.back().sign == -sign) {
        continue;
      }
      cur.push_back({e, sign});
      enumerate_reduced(ctx, cur, remaining - 1, visit);
      cur.letters.pop_back();
    }
  }
}

}  // namespace

std::vector<DehnSampleRow> enumerate_dehn_sample(const Context& ctx, int max_len,
                                                 const OracleCaps& caps) {
  if (max_len > 8) throw Error("exhaustive sampling is limited to length 8");
  std::vector<DehnSampleRow> rows;
  for (int n = 0; n <= max_len; ++n) {
    DehnSampleRow row;
    row.length = n;
    Word cur(ctx.alphabet.uid());
    enumerate_reduced(ctx, cur, n, [&](const Word& w) {
      ++row.words_checked;
      if (!raag_trivial(ctx, embed_to_vertices(ctx, w))) return;
      OracleResult r = brute_force_area(ctx.ph, w, caps);
      if (!r.filled) {
        row.complete = false;
        return;
      }
      if (r.area > row.max_area) {
        row.max_area = r.area;
        row.exact = r.exactness == OracleExactness::exact;
      }
    });
    if (n > 0 && rows.back().max_area > row.max_area) {
      row.max_area = rows.back().max_area;  // running maximum over |w| <= n
      row.exact = rows.back().exact;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bb
