#ifndef BB_CONTEXT_HPP
#define BB_CONTEXT_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bb/complex.hpp"
#include "bb/expression.hpp"
#include "bb/homotopy.hpp"
#include "bb/presentation.hpp"
#include "bb/word.hpp"

namespace bb {

/// Deterministic breadth-first spanning tree rooted at the base vertex, with
/// the exact tree metric and its diameter L.
struct TreeData {
  int base = 0;                                // vertex index == vertex gen id
  std::vector<int> parent;                     // -1 at the root
  std::vector<int> depth;
  std::vector<std::pair<int, int>> tree_edges; // a < b
  std::vector<std::vector<int>> dist;          // tree distance matrix
  long long diameter = 0;                      // L

  bool is_tree_edge(int a, int b) const;
};

struct Context;

/// The level-n substitution system: the letterwise lift of the n-th power of
/// the extension automorphism, memoized per (generator, level).
class PhiSystem {
 public:
  explicit PhiSystem(const Context& ctx) : ctx_(&ctx) {}

  /// Image of a single edge generator at level n.
  const Word& generator_image(int edge_gen, long long n) const;

  /// Letterwise image of an edge word; commutes with the inversion involution.
  Word map_word(const Word& w, long long n) const;

 private:
  const Context* ctx_;
  mutable std::map<std::pair<int, long long>, Word> memo_;
};

enum class IndexedKind { edge_pair, triangle, anti_triangle, s_relator };

struct IndexedKey {
  IndexedKind kind;
  std::array<int, 3> edges = {-1, -1, -1};
  long long level = 0;

  friend bool operator==(const IndexedKey& a, const IndexedKey& b) {
    return a.kind == b.kind && a.edges == b.edges && a.level == b.level;
  }
  friend bool operator<(const IndexedKey& a, const IndexedKey& b);
};

struct IndexedRelator {
  IndexedKey key;
  Word word;
  long long index = 0;  // |level|
};

/// Relator store of the indexed infinite presentation. Relators are created
/// on demand from (kind, params, level) and regenerate deterministically.
class IndexedRelatorStore final : public RelatorStore {
 public:
  explicit IndexedRelatorStore(const Context& ctx) : ctx_(&ctx) {}

  int intern(const IndexedKey& key);
  const IndexedRelator& relator(int id) const { return relators_.at(static_cast<size_t>(id)); }
  int count() const { return static_cast<int>(relators_.size()); }
  size_t word_collisions() const { return collisions_; }

  const Word& relator_word(int id) const override {
    return relators_.at(static_cast<size_t>(id)).word;
  }
  int relator_index(int id) const override {
    return static_cast<int>(relators_.at(static_cast<size_t>(id)).index);
  }
  std::string relator_label(int id) const override;

 private:
  const Context* ctx_;
  std::map<IndexedKey, int> by_key_;
  std::unordered_map<Word, IndexedKey, WordHash> by_word_;
  std::vector<IndexedRelator> relators_;
  size_t collisions_ = 0;
};

/// Word used to present the indexed relator of the given key.
Word indexed_relator_word(const Context& ctx, const IndexedKey& key);
IndexedRelator make_indexed_relator(const Context& ctx, const IndexedKey& key);

/// Constant-size fillings over the extended presentation used by the
/// transport stage: one per commutator relator and one per edge letter.
struct BridgeSet {
  std::unordered_map<int, NullExpression> commutator;  // P_A relator id -> filling
  std::unordered_map<int, NullExpression> letter;      // edge gen -> filling
  long long max_commutator_area = 0;
  long long max_commutator_radius = 0;
  long long max_letter_area = 0;
  long long max_letter_radius = 0;
};

/// All computed complex constants feeding the certified bound polynomials.
struct ConstantsRecord {
  long long tree_diameter = 0;  // L
  long long k_constant = 0;     // K from the homotopy cache
  // Relational area bound coefficients: a n^2 + b n + c.
  long long rarea_a = 0;  // 3K + 4
  long long rarea_b = 0;  // 6L^2 + 2K + 6
  long long rarea_c = 0;  // L + K + 5
  // Transport guarantees.
  long long transport_area_per_relator = 0;  // c1: worst commutator bridge area
  long long transport_area_per_letter = 0;   // c2: worst letter bridge area
  long long transport_radius_commutator = 0; // worst commutator bridge radius
  long long transport_radius_letter = 0;     // worst letter bridge radius

  long long rarea_bound(long long n) const { return rarea_a * n * n + rarea_b * n + rarea_c; }
  /// Area guarantee for the extended-presentation filling of a length-n word.
  long long alpha_prime(long long n) const;
  /// Radius guarantee for the same filling (bounds the pushdown penetration).
  long long pi_prime(long long n) const;
  long long dehn_bound(long long n) const { return alpha_prime(n) * rarea_bound(pi_prime(n)); }
};

/// Everything derived from one complex: the interned alphabet, the spanning
/// tree, the three finite presentations, the substitution system, and (after
/// prepare_fillings) the homotopy cache, bridges and constants. Immutable
/// once built; create through make_context so references stay valid.
struct Context {
  FlagComplex complex;
  Alphabet alphabet;
  int base_vertex = 0;

  std::vector<int> vertex_gen;                   // vertex index -> gen id (identity)
  std::vector<int> edge_gens;                    // all directed edge gen ids, sorted
  std::map<std::pair<int, int>, int> edge_from_to;  // (from,to) vertex -> edge gen
  int stable_gen = -1;                           // @t

  TreeData tree;
  Presentation pa;      // vertices | commutators
  Presentation ph;      // directed edges | e ebar, efg, inverse triples
  Presentation pa_ext;  // edges + t | ph relators + extension relators
  std::unique_ptr<PhiSystem> phi;
  std::unique_ptr<IndexedRelatorStore> infinite;

  std::optional<NullHomotopyCache> cache;
  std::optional<BridgeSet> bridges;
  ConstantsRecord constants;

  std::string hash;

  int edge_gen(int from_vertex, int to_vertex) const;
  int edge_reverse(int edge) const { return alphabet.reverse_edge(edge); }
  int edge_from(int edge) const { return alphabet.info(edge).from; }
  int edge_to(int edge) const { return alphabet.info(edge).to; }

  bool fillings_ready() const { return cache.has_value() && bridges.has_value(); }
  const NullHomotopyCache& homotopy_cache() const;
  const BridgeSet& bridge_set() const;
};

/// Binds a complex to an alphabet, builds the spanning tree and the three
/// presentations. Base defaults to the complex hint, else the first vertex.
std::unique_ptr<Context> make_context(FlagComplex cx,
                                      std::optional<std::string> base = std::nullopt);

/// Runs the homotopy-cache search, derives K and the bound coefficients, and
/// builds the transport bridges. Throws if some lollipop cycle cannot be
/// contracted within budget ("simple-connectivity evidence unavailable").
void prepare_fillings(Context& ctx, const SearchBudget& budget);

TreeData build_tree_data(const FlagComplex& cx, int base);

/// Word e_1^n ... e_l^n along the unique tree geodesic from u to v.
Word tree_power_path(const Context& ctx, int u, int v, long long n);

/// The defining word p(q, ie) e p(ie, q) of the extension automorphism.
Word w_e_word(const Context& ctx, int edge);

/// Letterwise level-n image of an edge word. Throws if w contains the stable
/// letter or a vertex generator.
Word phi_map(const Context& ctx, const Word& w, long long n);

/// Lollipop cycle p(q, ie) . e . p(te, q) as an edge-generator cycle.
CombinatorialCycle edge_lollipop_cycle(const Context& ctx, int edge);

/// Directed triangle cycles (e, f, g) with from(e) the smallest vertex; both
/// orientations, in deterministic order.
std::vector<std::array<int, 3>> directed_triangle_cycles(const Context& ctx);

}  // namespace bb

#endif
