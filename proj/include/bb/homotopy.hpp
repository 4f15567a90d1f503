#ifndef BB_HOMOTOPY_HPP
#define BB_HOMOTOPY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace bb {

struct Context;

/// A combinatorial 1-cycle: directed edge generators with matching
/// consecutive endpoints, including the wraparound. May be empty.
using CombinatorialCycle = std::vector<int>;

enum class MoveKind : uint8_t {
  one_cell_expand,   // insert e ebar at a position
  one_cell_collapse, // delete an adjacent e ebar pair
  two_cell_expand,   // insert a directed triangle cycle e f g
  two_cell_collapse, // delete three consecutive edges forming a triangle cycle
};

struct HomotopyMove {
  MoveKind kind;
  int position = 0;                        // insertion slot / first deleted edge
  std::array<int, 3> edges = {-1, -1, -1}; // inserted edges (1 or 3 of them)
};

/// Replayable contraction of a cycle to the empty cycle.
struct NullHomotopy {
  CombinatorialCycle initial;
  std::vector<HomotopyMove> moves;

  size_t move_count() const { return moves.size(); }
};

struct SearchBudget {
  size_t max_states = 150000;   // breadth-first state cap
  size_t length_slack = 0;      // cycle length cap = initial + 2L + 6 + slack

  /// Scales max_states by the BB_BUDGET environment variable when set.
  static SearchBudget from_env();
  static SearchBudget from_env(SearchBudget base);
};

struct HomotopySearchStats {
  size_t states_explored = 0;
  size_t budget = 0;
  bool exhausted = false;
  bool breadth_first_minimal = false;  // found by the exhaustive layer
};

bool cycle_is_valid(const Context& ctx, const CombinatorialCycle& cycle);

/// Applies one move; throws on an invalid move.
CombinatorialCycle apply_move(const Context& ctx, const CombinatorialCycle& cycle,
                              const HomotopyMove& move);

/// Replays all moves from the initial cycle; true iff the result is empty.
bool replay_null_homotopy(const Context& ctx, const NullHomotopy& h);

/// Searches for a contraction of the cycle: exhaustive breadth-first search
/// within the state budget (minimal move count over the searched region),
/// falling back to a deterministic corner-contraction strategy when the
/// budget is exhausted. Returns nullopt when both fail.
std::optional<NullHomotopy> find_null_homotopy(const Context& ctx,
                                               const CombinatorialCycle& cycle,
                                               const SearchBudget& budget,
                                               HomotopySearchStats* stats = nullptr);

/// Per-directed-edge contractions of the tree lollipop cycles, with the
/// worst-case move count turned into the quadratic filling constant K.
struct NullHomotopyCache {
  std::unordered_map<int, NullHomotopy> by_edge;  // directed edge gen -> contraction
  int max_moves = 0;
  long long k_constant = 0;  // 3 * max_moves
};

NullHomotopyCache edge_cycle_homotopy_cache(const Context& ctx, const SearchBudget& budget);

struct ConnectivityReport {
  bool pass = false;
  std::vector<CombinatorialCycle> failed_cycles;
  std::vector<std::string> failed_cycles_text;
  size_t cycles_checked = 0;
};

/// Attempts to contract every fundamental cycle of the spanning tree. PASS
/// proves the complex simply connected; UNKNOWN only reports budget
/// exhaustion and lists the obstructing cycles.
ConnectivityReport simple_connectivity_report(const Context& ctx, const SearchBudget& budget);

}  // namespace bb

#endif
