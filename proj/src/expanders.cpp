#include "bb/expanders.hpp"

#include <algorithm>
#include <numeric>

namespace bb {

namespace {

long long llabs2(long long n) { return n >= 0 ? n : -n; }

void check_triangle_cycle(const Context& ctx, const std::array<int, 3>& c) {
  if (ctx.edge_to(c[0]) != ctx.edge_from(c[1]) || ctx.edge_to(c[1]) != ctx.edge_from(c[2]) ||
      ctx.edge_to(c[2]) != ctx.edge_from(c[0])) {
    throw Error("edges do not form a directed triangle cycle");
  }
}

NullExpression finish_expansion(SchemeBuilder& b, SchemeBuilder::Policy policy,
                                ExpressionMetrics* metrics, const Word& target) {
  ExpressionMetrics m;
  m.area = b.area();
  m.radius = b.radius();
  NullExpression out;
  if (policy == SchemeBuilder::Policy::materialize) {
    out = b.finish();
  } else {
    if (!free_reduce(b.current()).empty()) {
      throw VerificationError("scheme did not terminate at the empty word");
    }
    out.target = target;
  }
  if (metrics) *metrics = m;
  return out;
}

/// Offset bookkeeping for multi-block rewriting: blocks shrink and grow as
/// the scheme runs and offsets are recomputed from the current lengths.
struct Regions {
  std::vector<long long> len;
  size_t add(long long l) {
    len.push_back(l);
    return len.size() - 1;
  }
  size_t offset(size_t i) const {
    return static_cast<size_t>(
        std::accumulate(len.begin(), len.begin() + static_cast<long>(i), 0ll));
  }
  size_t length(size_t i) const { return static_cast<size_t>(len[i]); }
};

/// Bubble-sorts a window of like-signed letters so that every `first` letter
/// precedes every `second` letter; each exchange routes through mid (two
/// relator applications). Swap count = number of inversions.
void separate_window(SchemeBuilder& b, size_t pos, size_t len, Letter first, Letter second,
                     const Word& mid) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t p = 0; p + 1 < len; ++p) {
      if (b.current()[pos + p] == second && b.current()[pos + p + 1] == first) {
        b.swap_adjacent(pos + p, mid);
        again = true;
      }
    }
  }
}

}  // namespace

TransitionScheme reverse_path_scheme(const Context& ctx, int vertex, long long n) {
  int q = ctx.tree.base;
  Word forward_inv = tree_power_path(ctx, q, vertex, n).inverse();
  Word backward = tree_power_path(ctx, vertex, q, n);

  TransitionScheme s;
  s.stages = {forward_inv, backward};
  SchemeBuilder b(ctx.ph, concat(forward_inv, backward.inverse()));
  b.flip_range(0, forward_inv.size());
  b.replace_free(0, b.size(), Word(ctx.alphabet.uid()));
  s.fillings.push_back(b.finish());
  return s;
}

void collapse_triangle_power(const Context& ctx, SchemeBuilder& b, size_t pos,
                             const std::array<int, 3>& cycle, long long n) {
  if (n == 0) return;
  check_triangle_cycle(ctx, cycle);
  const size_t m = static_cast<size_t>(llabs2(n));
  const int s = n > 0 ? 1 : -1;
  int e = cycle[0], f = cycle[1], g = cycle[2];
  const uint32_t abc = ctx.alphabet.uid();

  // Trade each g-letter for the complementary pair, separate the pairs, then
  // cancel against the leading powers.
  Word pair(abc);
  pair.push_back({f, -s});
  pair.push_back({e, -s});
  for (size_t i = 0; i < m; ++i) b.replace(pos + 2 * m + 2 * i, 1, pair);

  Word mid(abc);
  mid.push_back({g, s});
  separate_window(b, pos + 2 * m, 2 * m, {f, -s}, {e, -s}, mid);

  b.replace_free(pos + m, 2 * m, Word(abc));
  b.replace_free(pos, 2 * m, Word(abc));
}

void insert_triangle_power(const Context& ctx, SchemeBuilder& b, size_t pos,
                           const std::array<int, 3>& cycle, long long n) {
  if (n == 0) return;
  check_triangle_cycle(ctx, cycle);
  const size_t m = static_cast<size_t>(llabs2(n));
  const int s = n > 0 ? 1 : -1;
  int e = cycle[0], f = cycle[1], g = cycle[2];
  const uint32_t abc = ctx.alphabet.uid();

  Word seed(abc);
  for (size_t i = 0; i < m; ++i) seed.push_back({e, s});
  for (size_t i = 0; i < m; ++i) seed.push_back({f, s});
  for (size_t i = 0; i < m; ++i) seed.push_back({f, -s});
  for (size_t i = 0; i < m; ++i) seed.push_back({e, -s});
  b.replace_free(pos, 0, seed);

  // Interleave the trailing inverse powers into adjacent pairs, then fuse
  // each pair into a g-letter.
  Word mid(abc);
  mid.push_back({g, s});
  for (size_t j = 0; j < m; ++j) {
    size_t from = m + j;
    size_t to = 2 * j + 1;
    for (size_t p = from; p > to; --p) b.swap_adjacent(pos + 2 * m + p - 1, mid);
  }
  Word gw(abc);
  gw.push_back({g, s});
  for (size_t i = 0; i < m; ++i) b.replace(pos + 2 * m + i, 2, gw);
}

NullExpression expand_triangle_power(const Context& ctx, const std::array<int, 3>& cycle,
                                     long long n, SchemeBuilder::Policy policy,
                                     ExpressionMetrics* metrics) {
  check_triangle_cycle(ctx, cycle);
  Word start(ctx.alphabet.uid());
  for (int x : cycle) start.append(ctx.alphabet.power(x, n));
  SchemeBuilder b(ctx.ph, start, policy);
  collapse_triangle_power(ctx, b, 0, cycle, n);
  return finish_expansion(b, policy, metrics, start);
}

NullExpression fill_cycle_power(const Context& ctx, const CombinatorialCycle& cycle, long long n,
                                const NullHomotopy& homotopy, SchemeBuilder::Policy policy,
                                ExpressionMetrics* metrics) {
  if (homotopy.initial != cycle) throw Error("homotopy does not start at the given cycle");
  const size_t m = static_cast<size_t>(llabs2(n));
  Word start(ctx.alphabet.uid());
  for (int e : cycle) start.append(ctx.alphabet.power(e, n));
  if (n == 0) {
    if (metrics) *metrics = {};
    NullExpression out;
    out.target = start;
    return out;
  }
  SchemeBuilder b(ctx.ph, start, policy);
  int s = n > 0 ? 1 : -1;
  std::vector<int> blocks = cycle;
  for (const HomotopyMove& mv : homotopy.moves) {
    size_t k = static_cast<size_t>(mv.position);
    size_t pos = k * m;
    switch (mv.kind) {
      case MoveKind::one_cell_expand: {
        int e = mv.edges[0];
        for (size_t i = 0; i < m; ++i) b.insert_pair(pos + i, e, s);
        blocks.insert(blocks.begin() + static_cast<long>(k), {e, ctx.edge_reverse(e)});
        break;
      }
      case MoveKind::one_cell_collapse: {
        for (size_t i = 0; i < m; ++i) b.delete_pair(pos + m - 1 - i);
        blocks.erase(blocks.begin() + static_cast<long>(k),
                     blocks.begin() + static_cast<long>(k) + 2);
        break;
      }
      case MoveKind::two_cell_expand: {
        insert_triangle_power(ctx, b, pos, mv.edges, n);
        blocks.insert(blocks.begin() + static_cast<long>(k),
                      {mv.edges[0], mv.edges[1], mv.edges[2]});
        break;
      }
      case MoveKind::two_cell_collapse: {
        std::array<int, 3> tri = {blocks[k], blocks[k + 1], blocks[k + 2]};
        collapse_triangle_power(ctx, b, pos, tri, n);
        blocks.erase(blocks.begin() + static_cast<long>(k),
                     blocks.begin() + static_cast<long>(k) + 3);
        break;
      }
    }
  }
  if (!blocks.empty()) throw VerificationError("homotopy replay left a nonempty cycle");
  return finish_expansion(b, policy, metrics, start);
}

NullExpression fill_tree_edge_cycle(const Context& ctx, int edge, long long n,
                                    SchemeBuilder::Policy policy, ExpressionMetrics* metrics) {
  const NullHomotopyCache& cache = ctx.homotopy_cache();
  auto it = cache.by_edge.find(edge);
  if (it == cache.by_edge.end()) throw Error("homotopy cache miss for edge");
  CombinatorialCycle cycle = edge_lollipop_cycle(ctx, edge);
  return fill_cycle_power(ctx, cycle, n, it->second, policy, metrics);
}

NullExpression expand_edge_inverse(const Context& ctx, int edge, long long n,
                                   SchemeBuilder::Policy policy, ExpressionMetrics* metrics) {
  int q = ctx.tree.base;
  int ie = ctx.edge_from(edge), te = ctx.edge_to(edge);
  int ebar = ctx.edge_reverse(edge);
  const long long ab = llabs2(n + 1);
  Word p1 = tree_power_path(ctx, q, ie, n);
  Word p2 = tree_power_path(ctx, te, q, n);
  Word p3 = tree_power_path(ctx, q, te, n);
  Word p4 = tree_power_path(ctx, ie, q, n);
  const size_t a1 = p1.size(), a2 = p2.size();

  Word start = concat(p1, ctx.alphabet.power(edge, n + 1), p2);
  start.append(p3);
  start.append(ctx.alphabet.power(ebar, n + 1));
  start.append(p4);

  SchemeBuilder b(ctx.ph, start, policy);
  const uint32_t abc = ctx.alphabet.uid();
  b.flip_range(a1 + static_cast<size_t>(ab) + a2, a2);
  b.replace_free(a1 + static_cast<size_t>(ab), 2 * a2, Word(abc));
  for (long long i = 0; i < ab; ++i) {
    b.delete_pair(a1 + static_cast<size_t>(ab - 1 - i));
  }
  b.flip_range(a1, a1);
  b.replace_free(0, 2 * a1, Word(abc));
  return finish_expansion(b, policy, metrics, start);
}

NullExpression expand_phi_triangle(const Context& ctx, const std::array<int, 3>& cycle,
                                   long long n, SchemeBuilder::Policy policy,
                                   ExpressionMetrics* metrics) {
  check_triangle_cycle(ctx, cycle);
  int q = ctx.tree.base;
  const uint32_t abc = ctx.alphabet.uid();
  const size_t ab = static_cast<size_t>(llabs2(n + 1));

  std::array<Word, 3> head, tail;
  Word start(abc);
  for (size_t i = 0; i < 3; ++i) {
    head[i] = tree_power_path(ctx, q, ctx.edge_from(cycle[i]), n);
    tail[i] = tree_power_path(ctx, ctx.edge_to(cycle[i]), q, n);
    start.append(head[i]);
    start.append(ctx.alphabet.power(cycle[i], n + 1));
    start.append(tail[i]);
  }
  SchemeBuilder b(ctx.ph, start, policy);

  // Junctions right to left, so earlier offsets stay valid.
  size_t junction2 = head[0].size() + ab + tail[0].size() + head[1].size() + ab;
  b.flip_range(junction2 + tail[1].size(), head[2].size());
  b.replace_free(junction2, tail[1].size() + head[2].size(), Word(abc));
  size_t junction1 = head[0].size() + ab;
  b.flip_range(junction1 + tail[0].size(), head[1].size());
  b.replace_free(junction1, tail[0].size() + head[1].size(), Word(abc));

  collapse_triangle_power(ctx, b, head[0].size(), cycle, n + 1);

  b.flip_range(head[0].size(), tail[2].size());
  b.replace_free(0, head[0].size() + tail[2].size(), Word(abc));
  return finish_expansion(b, policy, metrics, start);
}

NullExpression expand_phi_inverse_triangle(const Context& ctx, const std::array<int, 3>& cycle,
                                           long long n, SchemeBuilder::Policy policy,
                                           ExpressionMetrics* metrics) {
  check_triangle_cycle(ctx, cycle);
  int q = ctx.tree.base;
  const uint32_t abc = ctx.alphabet.uid();
  const long long m = llabs2(n);
  const long long ab = llabs2(n + 1);
  int e = cycle[0], f = cycle[1], g = cycle[2];

  std::array<Word, 3> head, tail;  // head[i] = p_n(q, from), tail[i] = p_n(to, q)
  for (size_t i = 0; i < 3; ++i) {
    head[i] = tree_power_path(ctx, q, ctx.edge_from(cycle[i]), n);
    tail[i] = tree_power_path(ctx, ctx.edge_to(cycle[i]), q, n);
  }
  Word start(abc);
  for (size_t i = 0; i < 3; ++i) {
    start.append(tail[i].inverse());
    start.append(ctx.alphabet.power(cycle[i], -(n + 1)));
    start.append(head[i].inverse());
  }
  SchemeBuilder b(ctx.ph, start, policy);

  Regions r;
  size_t rt0 = r.add(static_cast<long long>(tail[0].size()));
  size_t re = r.add(ab);
  size_t rh0 = r.add(static_cast<long long>(head[0].size()));
  size_t rt1 = r.add(static_cast<long long>(tail[1].size()));
  size_t rf = r.add(ab);
  size_t rh1 = r.add(static_cast<long long>(head[1].size()));
  size_t rt2 = r.add(static_cast<long long>(tail[2].size()));
  size_t rg = r.add(ab);
  size_t rh2 = r.add(static_cast<long long>(head[2].size()));
  size_t rpad = r.add(0);

  // All six inverted paths turn into forward paths.
  for (size_t i : {rt0, rh0, rt1, rh1, rt2, rh2}) b.flip_range(r.offset(i), r.length(i));

  // Padding pair p_n(q, from(f)) p_n(q, from(f))^-1 at the end.
  Word pad = tree_power_path(ctx, q, ctx.edge_from(f), n);
  b.replace_free(r.offset(rpad), 0, concat(pad, pad.inverse()));
  r.len[rpad] = 2 * static_cast<long long>(pad.size());

  // Each lollipop bracket [p_n(to(x), q)][p_n(q, from(x))] collapses to
  // x^-n, right to left.
  auto bracket = [&](size_t left, size_t right, int edge_of, long long keep_in_right) {
    NullExpression fill = fill_tree_edge_cycle(ctx, edge_of, n);
    Word pre = tree_power_path(ctx, ctx.edge_to(edge_of), q, n);
    Word v = ctx.alphabet.power(edge_of, -n);
    size_t len = r.length(left) + r.length(right) - static_cast<size_t>(keep_in_right);
    b.apply_filling(r.offset(left), len, v, fill, pre, 1);
    r.len[left] = m;
    r.len[right] = keep_in_right;
  };
  bracket(rh2, rpad, f, static_cast<long long>(pad.size()));
  bracket(rh1, rt2, e, 0);
  bracket(rh0, rt1, g, 0);

  // Unfold both g-power blocks into complementary pairs, then separate the
  // pairs into split powers.
  auto unfold_and_sort = [&](size_t region, long long count, int g_letter_sign) {
    if (count == 0) return;
    Word pr(abc);
    if (g_letter_sign < 0) {
      pr.push_back({e, 1});
      pr.push_back({f, 1});
    } else {
      pr.push_back({f, -1});
      pr.push_back({e, -1});
    }
    for (long long i = 0; i < count; ++i) {
      b.replace(r.offset(region) + static_cast<size_t>(2 * i), 1, pr);
    }
    r.len[region] = 2 * count;
    int ls = -g_letter_sign;  // sign of the unfolded letters
    Word mid(abc);
    mid.push_back({g, g_letter_sign});
    separate_window(b, r.offset(region), r.length(region), {e, ls}, {f, ls}, mid);
  };
  // rh0 holds g^-n, rg holds g^-(n+1).
  if (n != 0) unfold_and_sort(rh0, m, n > 0 ? -1 : 1);
  if (n + 1 != 0) unfold_and_sort(rg, ab, (n + 1) > 0 ? -1 : 1);

  // The middle collapses freely to the bare commutator; two applications
  // turn it into g g^-1.
  Word comm(abc);
  comm.push_back({e, -1});
  comm.push_back({f, -1});
  comm.push_back({e, 1});
  comm.push_back({f, 1});
  size_t mid_off = r.offset(re);
  size_t mid_len = 0;
  for (size_t i : {re, rh0, rt1, rf, rh1, rt2, rg, rh2}) mid_len += r.length(i);
  b.replace_free(mid_off, mid_len, comm);

  Word gpos(abc), gneg(abc);
  gpos.push_back({g, 1});
  gneg.push_back({g, -1});
  b.replace(mid_off, 2, gpos);
  b.replace(mid_off + 1, 2, gneg);
  b.replace_free(mid_off, 2, Word(abc));
  b.replace_free(0, b.size(), Word(abc));
  return finish_expansion(b, policy, metrics, start);
}

NullExpression expand_s_relator(const Context& ctx, int edge, long long n,
                                SchemeBuilder::Policy policy, ExpressionMetrics* metrics) {
  const uint32_t abc = ctx.alphabet.uid();
  int q = ctx.tree.base;
  int ie = ctx.edge_from(edge), te = ctx.edge_to(edge);
  const long long m = llabs2(n);
  const long long ab = llabs2(n + 1);
  const long long dte = ctx.tree.dist[static_cast<size_t>(te)][static_cast<size_t>(q)];

  // Tree chain q = u_0, ..., u_d = from(edge).
  std::vector<int> chain;
  {
    int v = ie;
    while (v != q) {
      chain.push_back(v);
      v = ctx.tree.parent[static_cast<size_t>(v)];
    }
    chain.push_back(q);
    std::reverse(chain.begin(), chain.end());
  }
  const size_t d = chain.size() - 1;

  Word start = tree_power_path(ctx, q, ie, n + 1);
  start.append(ctx.alphabet.power(edge, n + 2));
  start.append(tree_power_path(ctx, te, q, n + 1));
  start.append(phi_map(ctx, w_e_word(ctx, edge), n).inverse());

  SchemeBuilder b(ctx.ph, start, policy);
  Regions r;
  size_t ra1 = r.add(static_cast<long long>(d) * ab);
  size_t ra2 = r.add(llabs2(n + 2));
  size_t ra3 = r.add(dte * ab);
  std::vector<size_t> s1p(d + 1), s1e(d + 1), s1q(d + 1);
  for (size_t j = 1; j <= d; ++j) {
    s1p[j] = r.add(static_cast<long long>(j - 1) * m);
    s1e[j] = r.add(ab);
    s1q[j] = r.add(static_cast<long long>(j) * m);
  }
  size_t rb1 = r.add(dte * m);
  size_t rb2 = r.add(ab);
  size_t rb3 = r.add(static_cast<long long>(d) * m);
  std::vector<size_t> s2p(d + 1), s2e(d + 1), s2q(d + 1);
  for (size_t j = d; j >= 1; --j) {
    s2p[j] = r.add(static_cast<long long>(j) * m);
    s2e[j] = r.add(ab);
    s2q[j] = r.add(static_cast<long long>(j - 1) * m);
    if (j == 1) break;
  }

  // Junction conversions inside both inverted path images.
  for (size_t j = 1; j + 1 <= d; ++j) {
    b.flip_range(r.offset(s1p[j + 1]), r.length(s1p[j + 1]));
    b.replace_free(r.offset(s1q[j]), r.length(s1q[j]) + r.length(s1p[j + 1]), Word(abc));
    r.len[s1q[j]] = 0;
    r.len[s1p[j + 1]] = 0;
  }
  for (size_t j = 1; j + 1 <= d; ++j) {
    b.flip_range(r.offset(s2p[j]), r.length(s2p[j]));
    b.replace_free(r.offset(s2q[j + 1]), r.length(s2q[j + 1]) + r.length(s2p[j]), Word(abc));
    r.len[s2q[j + 1]] = 0;
    r.len[s2p[j]] = 0;
  }
  if (d >= 1) {
    b.flip_range(r.offset(s2p[d]), r.length(s2p[d]));
    b.replace_free(r.offset(rb3), r.length(rb3) + r.length(s2p[d]), Word(abc));
    r.len[rb3] = 0;
    r.len[s2p[d]] = 0;
  }

  // The near path image flips into the forward level-(n+1) path.
  for (size_t j = 1; j <= d; ++j) b.flip_range(r.offset(s1e[j]), r.length(s1e[j]));

  // Bracket 1: p_{n+1}(te, q) p_{n+1}(q, ie) -> e^-(n+1).
  {
    NullExpression fill = fill_tree_edge_cycle(ctx, edge, n + 1);
    Word pre = tree_power_path(ctx, te, q, n + 1);
    size_t len = r.length(ra3);
    for (size_t j = 1; j <= d; ++j) len += r.length(s1e[j]);
    b.apply_filling(r.offset(ra3), len, ctx.alphabet.power(edge, -(n + 1)), fill, pre, 1);
    r.len[ra3] = ab;
    for (size_t j = 1; j <= d; ++j) r.len[s1e[j]] = 0;
  }
  // Bracket 2: p_n(q, ie)^-1 p_n(te, q)^-1 -> e^n.
  {
    NullExpression fill = fill_tree_edge_cycle(ctx, edge, n);
    Word pre = concat(ctx.alphabet.power(edge, n), tree_power_path(ctx, te, q, n));
    size_t off = d >= 1 ? r.offset(s1q[d]) : r.offset(rb1);
    size_t len = (d >= 1 ? r.length(s1q[d]) : 0) + r.length(rb1);
    b.apply_filling(off, len, ctx.alphabet.power(edge, n), fill, pre, -1);
    if (d >= 1) {
      r.len[s1q[d]] = m;
      r.len[rb1] = 0;
    } else {
      r.len[rb1] = m;
    }
  }

  // Concentrated e-powers cancel freely; the outer path pair follows.
  size_t mid_off = r.offset(ra2);
  size_t mid_len = r.length(ra2) + r.length(ra3) + r.length(rb1) + r.length(rb2);
  for (size_t j = 1; j <= d; ++j) mid_len += r.length(s1q[j]);
  b.replace_free(mid_off, mid_len, Word(abc));
  b.replace_free(0, b.size(), Word(abc));
  (void)ra1;
  return finish_expansion(b, policy, metrics, start);
}

NullExpression expand_indexed_relator(const Context& ctx, const IndexedKey& key,
                                      SchemeBuilder::Policy policy, ExpressionMetrics* metrics) {
  NullExpression out;
  ExpressionMetrics m;
  if (key.level == 0 && key.kind != IndexedKind::s_relator) {
    Word w = indexed_relator_word(ctx, key);
    auto id = ctx.ph.find(w);
    if (!id) throw Error("level-0 relator not found in the edge presentation");
    out.target = w;
    if (policy == SchemeBuilder::Policy::materialize) {
      out.terms.push_back({Word(ctx.alphabet.uid()), {*id, 1, 0}});
    }
    m.area = 1;
    m.radius = 0;
  } else {
    switch (key.kind) {
      case IndexedKind::edge_pair:
        out = expand_edge_inverse(ctx, key.edges[0], key.level, policy, &m);
        break;
      case IndexedKind::triangle:
        out = expand_phi_triangle(ctx, key.edges, key.level, policy, &m);
        break;
      case IndexedKind::anti_triangle:
        out = expand_phi_inverse_triangle(ctx, key.edges, key.level, policy, &m);
        break;
      case IndexedKind::s_relator:
        out = expand_s_relator(ctx, key.edges[0], key.level, policy, &m);
        break;
    }
  }
  long long level = llabs2(key.level);
  if (ctx.fillings_ready() && m.area > ctx.constants.rarea_bound(level)) {
    throw VerificationError("indexed relator expansion exceeded the certified area bound");
  }
  if (metrics) *metrics = m;
  return out;
}

long long edge_inverse_area_bound(const Context& ctx, long long n) {
  long long l = ctx.tree.diameter;
  return (2 * l + 1) * llabs2(n) + 1;
}

long long triangle_power_area_bound(long long n) { return 3 * n * n; }

long long phi_triangle_area_bound(const Context& ctx, long long n) {
  long long l = ctx.tree.diameter;
  return 3 * n * n + (3 * l + 6) * llabs2(n) + 3;
}

long long phi_inverse_triangle_area_bound(const Context& ctx, long long n) {
  long long l = ctx.tree.diameter;
  long long k = ctx.constants.k_constant;
  return (3 * k + 4) * n * n + (6 * l + 6) * llabs2(n) + 5;
}

long long s_relator_area_bound(const Context& ctx, long long n) {
  long long l = ctx.tree.diameter;
  long long k = ctx.constants.k_constant;
  return 2 * k * n * n + (3 * l * l + 2 * l + 2 * k) * llabs2(n) + l + k;
}

}  // namespace bb
