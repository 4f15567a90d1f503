#include "bb/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "bb/context.hpp"

namespace bb {

namespace {

struct CycleHash {
  size_t operator()(const CombinatorialCycle& c) const {
    uint64_t h = 1469598103934665603ull;
    for (int e : c) h = (h ^ static_cast<uint64_t>(e + 1)) * 1099511628211ull;
    return static_cast<size_t>(h);
  }
};

// Vertex at insertion slot k: start of edge k, or for k == size the terminal
// vertex of the last edge. For the empty cycle there is no constraint.
int slot_vertex(const Context& ctx, const CombinatorialCycle& c, int k) {
  if (c.empty()) return -1;
  if (k == static_cast<int>(c.size())) return ctx.edge_to(c.back());
  return ctx.edge_from(c[static_cast<size_t>(k)]);
}

bool is_triangle_cycle(const Context& ctx, int e, int f, int g) {
  return ctx.edge_to(e) == ctx.edge_from(f) && ctx.edge_to(f) == ctx.edge_from(g) &&
         ctx.edge_to(g) == ctx.edge_from(e) &&
         ctx.complex.has_edge(ctx.edge_from(e), ctx.edge_from(g));
}

}  // namespace

SearchBudget SearchBudget::from_env() { return from_env(SearchBudget{}); }

SearchBudget SearchBudget::from_env(SearchBudget base) {
  if (const char* env = std::getenv("BB_BUDGET")) {
    double scale = std::atof(env);
    if (scale > 0) {
      base.max_states = static_cast<size_t>(static_cast<double>(base.max_states) * scale);
    }
  }
  return base;
}

bool cycle_is_valid(const Context& ctx, const CombinatorialCycle& cycle) {
  if (cycle.empty()) return true;
  for (size_t i = 0; i < cycle.size(); ++i) {
    int e = cycle[i];
    if (ctx.alphabet.info(e).kind != GenKind::edge) return false;
    int next = cycle[(i + 1) % cycle.size()];
    if (ctx.edge_to(e) != ctx.edge_from(next)) return false;
  }
  return true;
}

CombinatorialCycle apply_move(const Context& ctx, const CombinatorialCycle& cycle,
                              const HomotopyMove& move) {
  CombinatorialCycle out = cycle;
  int k = move.position;
  size_t n = cycle.size();
  switch (move.kind) {
    case MoveKind::one_cell_expand: {
      int e = move.edges[0];
      if (k < 0 || k > static_cast<int>(n)) throw Error("move position out of range");
      int v = slot_vertex(ctx, cycle, k);
      if (v >= 0 && ctx.edge_from(e) != v) throw Error("backtrack insertion breaks the path");
      out.insert(out.begin() + k, {e, ctx.edge_reverse(e)});
      return out;
    }
    case MoveKind::one_cell_collapse: {
      if (k < 0 || k + 1 >= static_cast<int>(n)) throw Error("move position out of range");
      if (cycle[static_cast<size_t>(k + 1)] != ctx.edge_reverse(cycle[static_cast<size_t>(k)])) {
        throw Error("collapse needs an adjacent backtracking pair");
      }
      out.erase(out.begin() + k, out.begin() + k + 2);
      return out;
    }
    case MoveKind::two_cell_expand: {
      int e = move.edges[0], f = move.edges[1], g = move.edges[2];
      if (k < 0 || k > static_cast<int>(n)) throw Error("move position out of range");
      if (!is_triangle_cycle(ctx, e, f, g)) throw Error("inserted edges are not a triangle cycle");
      int v = slot_vertex(ctx, cycle, k);
      if (v >= 0 && ctx.edge_from(e) != v) throw Error("triangle insertion breaks the path");
      out.insert(out.begin() + k, {e, f, g});
      return out;
    }
    case MoveKind::two_cell_collapse: {
      if (k < 0 || k + 2 >= static_cast<int>(n)) throw Error("move position out of range");
      int e = cycle[static_cast<size_t>(k)];
      int f = cycle[static_cast<size_t>(k + 1)];
      int g = cycle[static_cast<size_t>(k + 2)];
      if (!is_triangle_cycle(ctx, e, f, g)) throw Error("deleted edges are not a triangle cycle");
      out.erase(out.begin() + k, out.begin() + k + 3);
      return out;
    }
  }
  throw Error("unknown move kind");
}

bool replay_null_homotopy(const Context& ctx, const NullHomotopy& h) {
  if (!cycle_is_valid(ctx, h.initial)) return false;
  CombinatorialCycle c = h.initial;
  for (const HomotopyMove& m : h.moves) {
    try {
      c = apply_move(ctx, c, m);
    } catch (const Error&) {
      return false;
    }
  }
  return c.empty();
}

namespace {

struct BfsNode {
  int parent = -1;
  HomotopyMove move;
};

// Exhaustive layered search. States are cycles keyed by their literal edge
// sequence; the first time the empty cycle is reached the move count is
// minimal over the explored region.
std::optional<NullHomotopy> bfs_search(const Context& ctx, const CombinatorialCycle& start,
                                       size_t max_states, size_t length_cap,
                                       HomotopySearchStats* stats) {
  std::vector<CombinatorialCycle> states{start};
  std::vector<BfsNode> nodes{{-1, {}}};
  std::unordered_set<CombinatorialCycle, CycleHash> seen{start};
  const std::vector<std::array<int, 3>> triangle_cycles = directed_triangle_cycles(ctx);

  auto build_result = [&](int idx) {
    std::vector<HomotopyMove> rev;
    while (idx > 0) {
      rev.push_back(nodes[static_cast<size_t>(idx)].move);
      idx = nodes[static_cast<size_t>(idx)].parent;
    }
    std::reverse(rev.begin(), rev.end());
    return NullHomotopy{start, std::move(rev)};
  };

  if (start.empty()) return NullHomotopy{start, {}};

  for (size_t head = 0; head < states.size(); ++head) {
    const CombinatorialCycle c = states[head];
    auto visit = [&](const HomotopyMove& m) -> int {
      CombinatorialCycle next = apply_move(ctx, c, m);
      if (next.size() > length_cap) return -1;
      if (!seen.insert(next).second) return -1;
      states.push_back(next);
      nodes.push_back({static_cast<int>(head), m});
      if (next.empty()) return static_cast<int>(states.size()) - 1;
      return -1;
    };

    int n = static_cast<int>(c.size());
    // Collapses first, then expansions, all in deterministic order.
    for (int k = 0; k + 1 < n; ++k) {
      if (c[static_cast<size_t>(k + 1)] == ctx.edge_reverse(c[static_cast<size_t>(k)])) {
        int hit = visit({MoveKind::one_cell_collapse, k, {}});
        if (hit >= 0) {
          if (stats) stats->states_explored = states.size();
          return build_result(hit);
        }
      }
    }
    for (int k = 0; k + 2 < n; ++k) {
      if (is_triangle_cycle(ctx, c[static_cast<size_t>(k)], c[static_cast<size_t>(k + 1)],
                            c[static_cast<size_t>(k + 2)])) {
        int hit = visit({MoveKind::two_cell_collapse, k, {}});
        if (hit >= 0) {
          if (stats) stats->states_explored = states.size();
          return build_result(hit);
        }
      }
    }
    for (int k = 0; k <= n; ++k) {
      int v = slot_vertex(ctx, c, k);
      for (int e : ctx.edge_gens) {
        if (v >= 0 && ctx.edge_from(e) != v) continue;
        visit({MoveKind::one_cell_expand, k, {e, -1, -1}});
      }
      for (const auto& tc : triangle_cycles) {
        if (v >= 0 && ctx.edge_from(tc[0]) != v) continue;
        visit({MoveKind::two_cell_expand, k, tc});
      }
      if (states.size() > max_states) break;
    }
    if (states.size() > max_states) {
      if (stats) {
        stats->states_explored = states.size();
        stats->exhausted = true;
      }
      return std::nullopt;
    }
  }
  if (stats) {
    stats->states_explored = states.size();
    stats->exhausted = false;  // reachable set closed without finding the empty cycle
  }
  return std::nullopt;
}

struct GreedyState {
  CombinatorialCycle c;
  std::vector<HomotopyMove> moves;
};

void greedy_emit(const Context& ctx, GreedyState& st, const HomotopyMove& m) {
  st.c = apply_move(ctx, st.c, m);
  st.moves.push_back(m);
}

// One shortening action: leftmost backtrack collapse, triangle collapse, or
// corner push across a triangle chord (three moves, length -1).
bool greedy_shrink_step(const Context& ctx, GreedyState& st) {
  const CombinatorialCycle& c = st.c;
  int n = static_cast<int>(c.size());
  for (int k = 0; k + 1 < n; ++k) {
    if (c[static_cast<size_t>(k + 1)] == ctx.edge_reverse(c[static_cast<size_t>(k)])) {
      greedy_emit(ctx, st, {MoveKind::one_cell_collapse, k, {}});
      return true;
    }
  }
  for (int k = 0; k + 2 < n; ++k) {
    if (is_triangle_cycle(ctx, c[static_cast<size_t>(k)], c[static_cast<size_t>(k + 1)],
                          c[static_cast<size_t>(k + 2)])) {
      greedy_emit(ctx, st, {MoveKind::two_cell_collapse, k, {}});
      return true;
    }
  }
  for (int k = 0; k + 1 < n; ++k) {
    int e = c[static_cast<size_t>(k)];
    int f = c[static_cast<size_t>(k + 1)];
    int a = ctx.edge_from(e), d = ctx.edge_to(f);
    if (a == d || !ctx.complex.has_edge(a, d)) continue;
    int chord = ctx.edge_gen(a, d);
    int fbar = ctx.edge_reverse(f);
    int ebar = ctx.edge_reverse(e);
    greedy_emit(ctx, st, {MoveKind::two_cell_expand, k + 2, {fbar, ebar, chord}});
    greedy_emit(ctx, st, {MoveKind::one_cell_collapse, k + 1, {}});
    greedy_emit(ctx, st, {MoveKind::one_cell_collapse, k, {}});
    return true;
  }
  return false;
}

// Deterministic contraction: shrink while possible; when stuck, try
// splitting one cycle edge across a triangle and commit the split only if
// the shrink loop then drops strictly below the pre-split length.
std::optional<NullHomotopy> greedy_contraction(const Context& ctx,
                                               const CombinatorialCycle& start) {
  GreedyState st{start, {}};
  while (!st.c.empty()) {
    if (greedy_shrink_step(ctx, st)) continue;

    size_t base_len = st.c.size();
    bool committed = false;
    for (int k = 0; k < static_cast<int>(st.c.size()) && !committed; ++k) {
      int e = st.c[static_cast<size_t>(k)];
      int a = ctx.edge_from(e), b = ctx.edge_to(e);
      for (int x : ctx.complex.adjacency[static_cast<size_t>(a)]) {
        if (x == b || !ctx.complex.has_edge(x, b)) continue;
        GreedyState cand = st;
        int ax = ctx.edge_gen(a, x);
        int xb = ctx.edge_gen(x, b);
        greedy_emit(ctx, cand, {MoveKind::two_cell_expand, k + 1,
                                {ctx.edge_reverse(e), ax, xb}});
        greedy_emit(ctx, cand, {MoveKind::one_cell_collapse, k, {}});
        std::unordered_set<CombinatorialCycle, CycleHash> visited{cand.c};
        size_t step_cap = 4 * cand.c.size() + 16;
        for (size_t iter = 0; iter < step_cap; ++iter) {
          if (!greedy_shrink_step(ctx, cand)) break;
          if (cand.c.size() < base_len) {
            st = std::move(cand);
            committed = true;
            break;
          }
          if (!visited.insert(cand.c).second) break;
        }
        if (committed) break;
      }
    }
    if (!committed) return std::nullopt;
  }
  return NullHomotopy{start, std::move(st.moves)};
}

}  // namespace

std::optional<NullHomotopy> find_null_homotopy(const Context& ctx,
                                               const CombinatorialCycle& cycle,
                                               const SearchBudget& budget,
                                               HomotopySearchStats* stats) {
  if (!cycle_is_valid(ctx, cycle)) throw Error("invalid combinatorial cycle");
  size_t length_cap = cycle.size() + 2 * static_cast<size_t>(ctx.tree.diameter) + 6 +
                      budget.length_slack;
  HomotopySearchStats local;
  local.budget = budget.max_states;
  auto found = bfs_search(ctx, cycle, budget.max_states, length_cap, &local);
  if (found) {
    local.breadth_first_minimal = true;
    if (stats) *stats = local;
    return found;
  }
  if (!local.exhausted) {
    // Reachable set closed under the caps: no contraction exists there.
    if (stats) *stats = local;
    return std::nullopt;
  }
  auto greedy = greedy_contraction(ctx, cycle);
  if (stats) *stats = local;
  return greedy;
}

CombinatorialCycle edge_lollipop_cycle(const Context& ctx, int edge) {
  CombinatorialCycle c;
  int q = ctx.tree.base;
  Word head = tree_power_path(ctx, q, ctx.edge_from(edge), 1);
  for (const Letter& l : head.letters) c.push_back(l.gen);
  c.push_back(edge);
  Word tail = tree_power_path(ctx, ctx.edge_to(edge), q, 1);
  for (const Letter& l : tail.letters) c.push_back(l.gen);
  return c;
}

NullHomotopyCache edge_cycle_homotopy_cache(const Context& ctx, const SearchBudget& budget) {
  NullHomotopyCache cache;
  // The per-edge searches are independent; a smaller exhaustive budget per
  // edge keeps the build fast before the fallback kicks in.
  SearchBudget per_edge = budget;
  per_edge.max_states = std::max<size_t>(1000, budget.max_states / 8);
  for (int e : ctx.edge_gens) {
    CombinatorialCycle cycle = edge_lollipop_cycle(ctx, e);
    auto h = find_null_homotopy(ctx, cycle, per_edge);
    if (!h) {
      throw Error("simple-connectivity evidence unavailable: lollipop cycle of edge " +
                  ctx.alphabet.info(e).name + " did not contract within budget");
    }
    if (!replay_null_homotopy(ctx, *h)) {
      throw Error("internal error: homotopy replay failed for edge " + ctx.alphabet.info(e).name);
    }
    cache.max_moves = std::max(cache.max_moves, static_cast<int>(h->move_count()));
    cache.by_edge.emplace(e, std::move(*h));
  }
  cache.k_constant = 3ll * cache.max_moves;
  return cache;
}

ConnectivityReport simple_connectivity_report(const Context& ctx, const SearchBudget& budget) {
  ConnectivityReport report;
  for (const auto& [a, b] : ctx.complex.edges) {
    if (ctx.tree.is_tree_edge(a, b)) continue;
    ++report.cycles_checked;
    // Fundamental cycle through the non-tree edge a-b, based at the root.
    CombinatorialCycle cycle;
    Word head = tree_power_path(ctx, ctx.tree.base, a, 1);
    for (const Letter& l : head.letters) cycle.push_back(l.gen);
    cycle.push_back(ctx.edge_gen(a, b));
    Word tail = tree_power_path(ctx, b, ctx.tree.base, 1);
    for (const Letter& l : tail.letters) cycle.push_back(l.gen);

    auto h = find_null_homotopy(ctx, cycle, budget);
    if (!h || !replay_null_homotopy(ctx, *h)) {
      std::string text;
      for (size_t i = 0; i < cycle.size(); ++i) {
        if (i) text += ' ';
        text += ctx.alphabet.info(cycle[i]).name;
      }
      report.failed_cycles.push_back(cycle);
      report.failed_cycles_text.push_back(text);
    }
  }
  report.pass = report.failed_cycles.empty();
  return report;
}

}  // namespace bb
