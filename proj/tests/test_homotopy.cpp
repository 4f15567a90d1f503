#include "bb/builtin.hpp"
#include "bb/context.hpp"
#include "bb/homotopy.hpp"
#include "doctest.h"

using namespace bb;

namespace {

CombinatorialCycle parse_cycle(const Context& ctx, const std::string& text) {
  Word w = ctx.alphabet.parse_word(text);
  CombinatorialCycle c;
  for (const Letter& l : w.letters) c.push_back(l.gen);
  return c;
}

}  // namespace

TEST_CASE("backtracking pair contracts in one move") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CombinatorialCycle c = parse_cycle(*ctx, "u>v v>u");
  auto h = find_null_homotopy(*ctx, c, SearchBudget{});
  REQUIRE(h.has_value());
  CHECK(h->move_count() == 1);
  CHECK(h->moves[0].kind == MoveKind::one_cell_collapse);
  CHECK(replay_null_homotopy(*ctx, *h));
}

TEST_CASE("triangle cycle contracts in one move") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CombinatorialCycle c = parse_cycle(*ctx, "u>v v>w w>u");
  auto h = find_null_homotopy(*ctx, c, SearchBudget{});
  REQUIRE(h.has_value());
  CHECK(h->move_count() == 1);
  CHECK(h->moves[0].kind == MoveKind::two_cell_collapse);
  CHECK(replay_null_homotopy(*ctx, *h));
}

TEST_CASE("invalid cycles are rejected") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  CombinatorialCycle broken = parse_cycle(*ctx, "u>v u>w");  // endpoints mismatch
  CHECK_FALSE(cycle_is_valid(*ctx, broken));
  CHECK_THROWS_AS(find_null_homotopy(*ctx, broken, SearchBudget{}), Error);
}

TEST_CASE("replay validates every move") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  NullHomotopy bogus;
  bogus.initial = parse_cycle(*ctx, "u>v v>u");
  bogus.moves.push_back({MoveKind::two_cell_collapse, 0, {}});
  CHECK_FALSE(replay_null_homotopy(*ctx, bogus));
}

TEST_CASE("every octahedron fundamental cycle contracts within budget") {
  auto ctx = make_context(builtin_complex("OCTA"));
  SearchBudget budget = SearchBudget{};
  for (const auto& [a, b] : ctx->complex.edges) {
    if (ctx->tree.is_tree_edge(a, b)) continue;
    CombinatorialCycle cycle;
    Word head = tree_power_path(*ctx, ctx->tree.base, a, 1);
    for (const Letter& l : head.letters) cycle.push_back(l.gen);
    cycle.push_back(ctx->edge_gen(a, b));
    Word tail = tree_power_path(*ctx, b, ctx->tree.base, 1);
    for (const Letter& l : tail.letters) cycle.push_back(l.gen);
    auto h = find_null_homotopy(*ctx, cycle, budget);
    REQUIRE(h.has_value());
    CHECK(replay_null_homotopy(*ctx, *h));
  }
}

TEST_CASE("homotopy cache of the triangle complex") {
  auto ctx = make_context(builtin_complex("TRI"), "u");
  NullHomotopyCache cache = edge_cycle_homotopy_cache(*ctx, SearchBudget{});
  CHECK(cache.by_edge.size() == 6);
  for (const auto& [e, h] : cache.by_edge) {
    CHECK(h.move_count() == 1);
    CHECK(replay_null_homotopy(*ctx, h));
  }
  CHECK(cache.k_constant == 3);
}

TEST_CASE("tree complex cache uses backtracking collapses only") {
  auto ctx = make_context(builtin_complex("PATH"), "u");
  NullHomotopyCache cache = edge_cycle_homotopy_cache(*ctx, SearchBudget{});
  long long l = ctx->tree.diameter;
  for (const auto& [e, h] : cache.by_edge) {
    CHECK(static_cast<long long>(h.move_count()) <= 2 * l);
    for (const HomotopyMove& m : h.moves) CHECK(m.kind == MoveKind::one_cell_collapse);
  }
  CHECK(cache.k_constant > 0);
}

TEST_CASE("grid cache is finite and replayable") {
  auto ctx = make_context(builtin_complex("GRID2"));
  NullHomotopyCache cache = edge_cycle_homotopy_cache(*ctx, SearchBudget{});
  CHECK(cache.by_edge.size() == ctx->edge_gens.size());
  CHECK(cache.k_constant >= 3);
  for (const auto& [e, h] : cache.by_edge) CHECK(replay_null_homotopy(*ctx, h));
}

TEST_CASE("connectivity reports") {
  SearchBudget budget = SearchBudget{};
  auto tri = make_context(builtin_complex("TRI"));
  CHECK(simple_connectivity_report(*tri, budget).pass);

  auto octa = make_context(builtin_complex("OCTA"));
  CHECK(simple_connectivity_report(*octa, budget).pass);

  auto ann = make_context(builtin_complex("ANNULUS"));
  ConnectivityReport r = simple_connectivity_report(*ann, budget);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.failed_cycles.empty());
}

TEST_CASE("negative control rejects the filling machinery") {
  auto ann = make_context(builtin_complex("ANNULUS"));
  CHECK_THROWS_AS(prepare_fillings(*ann, SearchBudget{}), Error);
}
