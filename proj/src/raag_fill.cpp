#include "bb/raag_fill.hpp"

#include <algorithm>

#include "bb/expanders.hpp"
#include "bb/scheme.hpp"

namespace bb {

namespace {

bool vertices_commute(const Context& ctx, int a, int b) {
  return a != b && ctx.complex.has_edge(a, b);
}

void require_vertex_word(const Context& ctx, const Word& w) {
  for (const Letter& l : w.letters) {
    if (ctx.alphabet.info(l.gen).kind != GenKind::vertex) {
      throw Error("expected a word over vertex generators");
    }
  }
}

// Deletes every shuffle-cancelling pair. The scan looks for the innermost
// pair per generator: x ... x^-1 with all letters between over distinct
// commuting generators.
Word shuffle_cancel(const Context& ctx, const Word& w) {
  Word cur = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cur.size() && !changed; ++i) {
      Letter x = cur[i];
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Letter y = cur[j];
        if (y.gen == x.gen) {
          if (y.sign == -x.sign) {
            cur.letters.erase(cur.letters.begin() + static_cast<long>(j));
            cur.letters.erase(cur.letters.begin() + static_cast<long>(i));
            cur = free_reduce(cur);
            changed = true;
          }
          break;  // same generator blocks the pair either way
        }
        if (!vertices_commute(ctx, x.gen, y.gen)) break;
      }
    }
  }
  return cur;
}

}  // namespace

Word embed_to_vertices(const Context& ctx, const Word& w) {
  Word out(ctx.alphabet.uid());
  out.letters.reserve(2 * w.size());
  for (const Letter& l : w.letters) {
    const GeneratorInfo& gi = ctx.alphabet.info(l.gen);
    if (gi.kind == GenKind::stable) {
      out.push_back({ctx.tree.base, l.sign});
    } else if (gi.kind == GenKind::edge) {
      if (l.sign > 0) {
        out.push_back({gi.from, 1});
        out.push_back({gi.to, -1});
      } else {
        out.push_back({gi.to, 1});
        out.push_back({gi.from, -1});
      }
    } else {
      throw Error("embedding applies to words over edges and the stable letter");
    }
  }
  return out;
}

Word raag_normal_form(const Context& ctx, const Word& vertex_word) {
  require_vertex_word(ctx, vertex_word);
  Word reduced = shuffle_cancel(ctx, vertex_word);
  size_t n = reduced.size();
  if (n == 0) return reduced;

  // Lexicographically least linearization of the commutation class: letters
  // of the same generator stay ordered, distinct non-commuting generators
  // stay ordered; among ready positions pick the least letter.
  std::vector<std::vector<size_t>> succs(n);
  std::vector<size_t> blockers(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (!vertices_commute(ctx, reduced[i].gen, reduced[j].gen)) {
        succs[i].push_back(j);
        ++blockers[j];
      }
    }
  }
  auto letter_less = [](Letter a, Letter b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign;  // positive before negative
  };
  std::vector<char> done(n, 0);
  Word out(vertex_word.alphabet);
  out.letters.reserve(n);
  for (size_t step = 0; step < n; ++step) {
    size_t best = n;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || blockers[i] > 0) continue;
      if (best == n || letter_less(reduced[i], reduced[best])) best = i;
    }
    done[best] = 1;
    out.push_back(reduced[best]);
    for (size_t j : succs[best]) --blockers[j];
  }
  return out;
}

bool raag_trivial(const Context& ctx, const Word& vertex_word) {
  require_vertex_word(ctx, vertex_word);
  return shuffle_cancel(ctx, vertex_word).empty();
}

NullExpression fill_raag(const Context& ctx, const Word& vertex_word) {
  require_vertex_word(ctx, vertex_word);
  const size_t n = vertex_word.size();
  SchemeBuilder b(ctx.pa, vertex_word);
  while (true) {
    b.replace_free(0, b.size(), free_reduce(b.current()));
    if (b.current().empty()) break;

    // Leftmost pair x ... x^-1 whose intermediate letters all commute with x.
    const Word& cur = b.current();
    size_t pi = cur.size(), pj = 0;
    for (size_t i = 0; i < cur.size() && pi == cur.size(); ++i) {
      Letter x = cur[i];
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Letter y = cur[j];
        if (y.gen == x.gen) {
          if (y.sign == -x.sign) {
            pi = i;
            pj = j;
          }
          break;
        }
        if (!vertices_commute(ctx, x.gen, y.gen)) break;
      }
    }
    if (pi == cur.size()) {
      throw NotNullHomotopic("word is not null-homotopic in the vertex group");
    }
    // Move x rightward one commutator application at a time, then cancel.
    for (size_t p = pi; p + 1 < pj; ++p) {
      Letter x = b.current()[p];
      Letter m = b.current()[p + 1];
      Word swapped(cur.alphabet);
      swapped.push_back(m);
      swapped.push_back(x);
      b.replace(p, 2, swapped);
    }
    b.replace_free(pj - 1, 2, Word(cur.alphabet));
  }
  NullExpression out = b.finish();
  ExpressionMetrics m = expression_metrics(out);
  long long nn = static_cast<long long>(n);
  if (m.area > (nn * nn + 1) / 2 || m.radius > nn) {
    throw VerificationError("shuffle filler exceeded its certified area or radius bound");
  }
  return out;
}

Word tietze_case3_base_word(const TietzeData& d) {
  // Rewrite of the target with every occurrence of the adjoined generator b
  // replaced through cancelling pairs: the b-free prefix word tau_0.
  const Word& w = d.extended_target;
  Word out(w.alphabet);
  for (const Letter& l : w.letters) {
    if (l.gen != d.generator) {
      out.push_back(l);
    } else if (l.sign > 0) {
      out.append(d.defining_word);
    } else {
      out.append_inverse(d.defining_word);
    }
  }
  return out;
}

NullExpression tietze_case_transform(const NullExpression& e, int tcase, const TietzeData& d) {
  if (!d.to) throw Error("tietze transform needs the target presentation");
  switch (tcase) {
    case 1: {
      // Adding a relator: any expression is already an expression there.
      NullExpression out = e;
      if (!verify_expression(*d.to, out)) {
        throw VerificationError("case 1 output failed verification");
      }
      return out;
    }
    case 2: {
      if (!d.removed_filling || d.removed_relator < 0) {
        throw Error("case 2 needs the filling of the removed relator");
      }
      NullExpression out;
      out.target = e.target;
      for (const ExprTerm& t : e.terms) {
        if (t.relator.id == d.removed_relator) {
          append_conjugated(out.terms, *d.removed_filling, t.conjugator, t.relator.sign);
        } else {
          out.terms.push_back(t);
        }
      }
      if (!verify_expression(*d.to, out)) {
        throw VerificationError("case 2 output failed verification");
      }
      return out;
    }
    case 3: {
      if (d.generator < 0 || d.defining_relator < 0) {
        throw Error("case 3 needs the adjoined generator and its defining relator");
      }
      // e fills the b-free rewrite tau_0; each b-occurrence contributes one
      // defining-relator term conjugated by the rewritten suffix after it.
      const Word& w = d.extended_target;
      NullExpression out;
      out.target = w;
      out.terms = e.terms;
      auto rewrite = [&](size_t from) {
        Word tau(w.alphabet);
        for (size_t p = from; p < w.size(); ++p) {
          Letter l = w[p];
          if (l.gen != d.generator) {
            tau.push_back(l);
          } else if (l.sign > 0) {
            tau.append(d.defining_word);
          } else {
            tau.append_inverse(d.defining_word);
          }
        }
        return tau;
      };
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen != d.generator) continue;
        Word tau(w.alphabet);
        if (w[i].sign > 0) tau.append(d.defining_word);
        tau.append(rewrite(i + 1));
        out.terms.push_back({tau.inverse(), {d.defining_relator, w[i].sign, 0}});
      }
      if (!verify_expression(*d.to, out)) {
        throw VerificationError("case 3 output failed verification");
      }
      return out;
    }
    case 4: {
      if (d.generator < 0) throw Error("case 4 needs the removed generator");
      auto retract = [&](const Word& w) {
        Word out(w.alphabet);
        for (const Letter& l : w.letters) {
          if (l.gen != d.generator) {
            out.push_back(l);
          } else if (l.sign > 0) {
            out.append(d.defining_word);
          } else {
            out.append_inverse(d.defining_word);
          }
        }
        return out;
      };
      NullExpression out;
      out.target = retract(e.target);
      for (const ExprTerm& t : e.terms) {
        if (t.relator.id == d.defining_relator) continue;  // dropped with the generator
        out.terms.push_back({retract(t.conjugator), t.relator});
      }
      if (!verify_expression(*d.to, out)) {
        throw VerificationError("case 4 output failed verification");
      }
      return out;
    }
    default:
      throw Error("tietze case must be 1, 2, 3 or 4");
  }
}

Word sigma_section(const Context& ctx, const Word& vertex_word) {
  Word out(ctx.alphabet.uid());
  for (const Letter& l : vertex_word.letters) {
    Word img = tree_power_path(ctx, l.gen, ctx.tree.base, 1);
    img.push_back({ctx.stable_gen, 1});
    if (l.sign > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  return out;
}

namespace {

// sigma(embed(e)) as a literal word: p(from,q) t t^-1 p(to,q)^-1.
Word sigma_embed_edge(const Context& ctx, int edge) {
  Word w(ctx.alphabet.uid());
  w.append(tree_power_path(ctx, ctx.edge_from(edge), ctx.tree.base, 1));
  w.push_back({ctx.stable_gen, 1});
  w.push_back({ctx.stable_gen, -1});
  w.append_inverse(tree_power_path(ctx, ctx.edge_to(edge), ctx.tree.base, 1));
  return w;
}

// Filling of e sigma(embed(e))^-1 over the extended presentation.
NullExpression build_letter_bridge(const Context& ctx, int edge) {
  const uint32_t abc = ctx.alphabet.uid();
  int q = ctx.tree.base;
  Word target(abc);
  target.push_back({edge, 1});
  target.append(sigma_embed_edge(ctx, edge).inverse());

  Word y = tree_power_path(ctx, ctx.edge_to(edge), q, 1);
  Word x = tree_power_path(ctx, ctx.edge_from(edge), q, 1);
  SchemeBuilder b(ctx.pa_ext, target);
  // target = e . y . t t^-1 . x^-1
  b.replace_free(1 + y.size(), 2, Word(abc));
  b.flip_range(1 + y.size(), x.size());
  // Now e p(te,q) p(q,ie): one lollipop filling conjugated by e p(te,q).
  NullExpression fill = fill_tree_edge_cycle(ctx, edge, 1);
  Word pre(abc);
  pre.push_back({edge, 1});
  pre.append(y);
  b.apply_filling(0, b.size(), Word(abc), fill, pre, 1);
  NullExpression out = b.finish();
  if (!verify_expression(ctx.pa_ext, out)) {
    throw VerificationError("letter bridge failed verification");
  }
  return out;
}

// Filling of sigma([u, v]) over the extended presentation.
NullExpression build_commutator_bridge(const Context& ctx, int u, int v) {
  const uint32_t abc = ctx.alphabet.uid();
  int q = ctx.tree.base;
  int a = ctx.edge_gen(u, v);
  Word pu = tree_power_path(ctx, u, q, 1);
  Word pv = tree_power_path(ctx, v, q, 1);
  Word su(abc), sv(abc);
  su.append(pu);
  su.push_back({ctx.stable_gen, 1});
  sv.append(pv);
  sv.push_back({ctx.stable_gen, 1});
  Word target = concat(su, sv);
  target.append_inverse(su);
  target.append_inverse(sv);

  SchemeBuilder b(ctx.pa_ext, target);
  size_t A = pu.size(), B = pv.size();
  // Cancel the middle t t^-1, flip p(u,q)^-1 forward.
  b.replace_free(A + 1 + B, 2, Word(abc));
  b.flip_range(A + 1 + B, A);
  // [p(v,q) p(q,u)] -> abar via the lollipop of a.
  {
    NullExpression fill = fill_tree_edge_cycle(ctx, a, 1);
    Word abar(abc);
    abar.push_back({a, -1});
    b.apply_filling(A + 1, B + A, abar, fill, pv, 1);
  }
  // t a^-1 t^-1 -> w_a^-1 by one extension relator.
  b.replace(A, 3, w_e_word(ctx, a).inverse());
  // p(u,q) p(u,q)^-1 cancels; the rest is the inverted lollipop of a.
  b.replace_free(0, 2 * A, Word(abc));
  {
    NullExpression fill = fill_tree_edge_cycle(ctx, a, 1);
    b.apply_filling(0, b.size(), Word(abc), fill, pv, -1);
  }
  NullExpression out = b.finish();
  if (!verify_expression(ctx.pa_ext, out)) {
    throw VerificationError("commutator bridge failed verification");
  }
  return out;
}

}  // namespace

BridgeSet build_bridges(const Context& ctx) {
  BridgeSet bridges;
  for (int e : ctx.edge_gens) {
    NullExpression fill = build_letter_bridge(ctx, e);
    ExpressionMetrics m = expression_metrics(fill);
    bridges.max_letter_area = std::max<long long>(bridges.max_letter_area, m.area);
    bridges.max_letter_radius = std::max<long long>(bridges.max_letter_radius, m.radius);
    bridges.letter.emplace(e, std::move(fill));
  }
  for (int id = 0; id < ctx.pa.relator_count(); ++id) {
    const RelatorMeta& meta = ctx.pa.meta(id);
    NullExpression fill = build_commutator_bridge(ctx, meta.params[0], meta.params[1]);
    ExpressionMetrics m = expression_metrics(fill);
    bridges.max_commutator_area = std::max<long long>(bridges.max_commutator_area, m.area);
    bridges.max_commutator_radius = std::max<long long>(bridges.max_commutator_radius, m.radius);
    bridges.commutator.emplace(id, std::move(fill));
  }
  return bridges;
}

NullExpression transport_to_extended(const Context& ctx, const Word& w,
                                     const NullExpression& raag_filling) {
  for (const Letter& l : w.letters) {
    if (ctx.alphabet.info(l.gen).kind != GenKind::edge) {
      throw Error("transport expects a word over directed edges");
    }
  }
  const BridgeSet& bridges = ctx.bridge_set();
  NullExpression out;
  out.target = w;

  // Letters are replaced by their section images right to left, so each
  // correction is conjugated by the original prefix.
  for (size_t j = w.size(); j-- > 0;) {
    Word prefix = w.subword(0, j);
    Letter l = w[j];
    const NullExpression& bridge = bridges.letter.at(l.gen);
    if (l.sign > 0) {
      append_conjugated(out.terms, bridge, prefix, 1);
    } else {
      prefix.push_back({l.gen, -1});
      append_conjugated(out.terms, bridge, prefix, -1);
    }
  }
  // The fully rewritten word sigma(embed(w)) is filled through the
  // commutator bridges along the vertex-group filling.
  for (const ExprTerm& t : raag_filling.terms) {
    const NullExpression& bridge = bridges.commutator.at(t.relator.id);
    append_conjugated(out.terms, bridge, sigma_section(ctx, t.conjugator), t.relator.sign);
  }
  if (!verify_expression(ctx.pa_ext, out)) {
    throw VerificationError("transport output failed verification");
  }
  return out;
}

}  // namespace bb
