#include "bb/context.hpp"

#include <algorithm>
#include <queue>

#include "bb/raag_fill.hpp"

namespace bb {

bool TreeData::is_tree_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(tree_edges.begin(), tree_edges.end(), std::make_pair(a, b));
}

TreeData build_tree_data(const FlagComplex& cx, int base) {
  int n = cx.vertex_count();
  TreeData t;
  t.base = base;
  t.parent.assign(static_cast<size_t>(n), -1);
  t.depth.assign(static_cast<size_t>(n), 0);

  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> q;
  q.push(base);
  seen[static_cast<size_t>(base)] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : cx.adjacency[static_cast<size_t>(v)]) {  // sorted-name order
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        t.parent[static_cast<size_t>(w)] = v;
        t.depth[static_cast<size_t>(w)] = t.depth[static_cast<size_t>(v)] + 1;
        t.tree_edges.emplace_back(std::min(v, w), std::max(v, w));
        q.push(w);
      }
    }
  }
  std::sort(t.tree_edges.begin(), t.tree_edges.end());

  // Exact tree metric by BFS from every vertex over tree edges only.
  std::vector<std::vector<int>> tree_adj(static_cast<size_t>(n));
  for (const auto& [a, b] : t.tree_edges) {
    tree_adj[static_cast<size_t>(a)].push_back(b);
    tree_adj[static_cast<size_t>(b)].push_back(a);
  }
  t.dist.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = t.dist[static_cast<size_t>(s)];
    d[static_cast<size_t>(s)] = 0;
    std::queue<int> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : tree_adj[static_cast<size_t>(v)]) {
        if (d[static_cast<size_t>(w)] < 0) {
          d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
          bfs.push(w);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      t.diameter = std::max(t.diameter, static_cast<long long>(d[static_cast<size_t>(v)]));
    }
  }
  return t;
}

int Context::edge_gen(int from_vertex, int to_vertex) const {
  auto it = edge_from_to.find({from_vertex, to_vertex});
  if (it == edge_from_to.end()) throw Error("no directed edge between the given vertices");
  return it->second;
}

const NullHomotopyCache& Context::homotopy_cache() const {
  if (!cache) throw Error("filling machinery not prepared (homotopy cache missing)");
  return *cache;
}

const BridgeSet& Context::bridge_set() const {
  if (!bridges) throw Error("filling machinery not prepared (bridges missing)");
  return *bridges;
}

std::vector<std::array<int, 3>> directed_triangle_cycles(const Context& ctx) {
  std::vector<std::array<int, 3>> out;
  for (const auto& tri : ctx.complex.triangles) {
    int a = tri[0], b = tri[1], c = tri[2];
    out.push_back({ctx.edge_gen(a, b), ctx.edge_gen(b, c), ctx.edge_gen(c, a)});
    out.push_back({ctx.edge_gen(a, c), ctx.edge_gen(c, b), ctx.edge_gen(b, a)});
  }
  return out;
}

namespace {

void build_raag_presentation(Context& ctx) {
  ctx.pa = Presentation(&ctx.alphabet, PresentationLabel::p_a);
  for (const auto& [a, b] : ctx.complex.edges) {
    Word c(ctx.alphabet.uid());
    c.push_back({a, 1});
    c.push_back({b, 1});
    c.push_back({a, -1});
    c.push_back({b, -1});
    ctx.pa.add(std::move(c), {RelKind::commutator, {a, b, -1}});
  }
}

void build_dicks_leary(Context& ctx) {
  ctx.ph = Presentation(&ctx.alphabet, PresentationLabel::p_h);
  for (int e : ctx.edge_gens) {
    Word w(ctx.alphabet.uid());
    w.push_back({e, 1});
    w.push_back({ctx.edge_reverse(e), 1});
    ctx.ph.add(std::move(w), {RelKind::edge_pair, {e, -1, -1}});
  }
  // Both orientations and all three rotations of every triangle, deduplicated
  // by literal word.
  for (const auto& cyc : directed_triangle_cycles(ctx)) {
    for (int rot = 0; rot < 3; ++rot) {
      std::array<int, 3> r = {cyc[static_cast<size_t>(rot % 3)],
                              cyc[static_cast<size_t>((rot + 1) % 3)],
                              cyc[static_cast<size_t>((rot + 2) % 3)]};
      Word pos(ctx.alphabet.uid());
      Word neg(ctx.alphabet.uid());
      for (int e : r) pos.push_back({e, 1});
      for (int e : r) neg.push_back({e, -1});
      ctx.ph.add(std::move(pos), {RelKind::triangle, r});
      ctx.ph.add(std::move(neg), {RelKind::anti_triangle, r});
    }
  }
}

void build_extended_presentation(Context& ctx) {
  ctx.pa_ext = Presentation(&ctx.alphabet, PresentationLabel::p_a_ext);
  for (int id = 0; id < ctx.ph.relator_count(); ++id) {
    ctx.pa_ext.add(ctx.ph.relator_word(id), ctx.ph.meta(id));
  }
  for (int e : ctx.edge_gens) {
    Word w(ctx.alphabet.uid());
    w.push_back({ctx.stable_gen, 1});
    w.push_back({e, 1});
    w.push_back({ctx.stable_gen, -1});
    w.append_inverse(w_e_word(ctx, e));
    ctx.pa_ext.add(std::move(w), {RelKind::s_relator, {e, -1, -1}});
  }
}

}  // namespace

std::unique_ptr<Context> make_context(FlagComplex cx, std::optional<std::string> base) {
  auto ctx = std::make_unique<Context>();
  ctx->complex = std::move(cx);
  const FlagComplex& c = ctx->complex;

  std::string base_name = base ? *base : c.base_hint.value_or(c.vertex_names.front());
  ctx->base_vertex = c.vertex_index(base_name);

  // Vertex generators first, in sorted-name order, so vertex index == gen id.
  for (int v = 0; v < c.vertex_count(); ++v) {
    int g = ctx->alphabet.add_vertex(c.vertex_names[static_cast<size_t>(v)]);
    ctx->vertex_gen.push_back(g);
  }
  for (const auto& [a, b] : c.edges) {
    const std::string& na = c.vertex_names[static_cast<size_t>(a)];
    const std::string& nb = c.vertex_names[static_cast<size_t>(b)];
    int ab = ctx->alphabet.add_edge(na + ">" + nb, a, b);
    int ba = ctx->alphabet.add_edge(nb + ">" + na, b, a);
    ctx->alphabet.link_reverse(ab, ba);
    ctx->edge_from_to[{a, b}] = ab;
    ctx->edge_from_to[{b, a}] = ba;
    ctx->edge_gens.push_back(ab);
    ctx->edge_gens.push_back(ba);
  }
  ctx->stable_gen = ctx->alphabet.add_stable("@t");

  ctx->tree = build_tree_data(c, ctx->base_vertex);
  ctx->hash = complex_hash(c, ctx->base_vertex);

  build_raag_presentation(*ctx);
  build_dicks_leary(*ctx);
  build_extended_presentation(*ctx);
  ctx->phi = std::make_unique<PhiSystem>(*ctx);
  ctx->infinite = std::make_unique<IndexedRelatorStore>(*ctx);

  ctx->constants.tree_diameter = ctx->tree.diameter;
  return ctx;
}

void prepare_fillings(Context& ctx, const SearchBudget& budget) {
  if (ctx.fillings_ready()) return;
  ctx.cache = edge_cycle_homotopy_cache(ctx, budget);
  long long l = ctx.tree.diameter;
  long long k = ctx.cache->k_constant;
  ctx.constants.k_constant = k;
  ctx.constants.rarea_a = 3 * k + 4;
  ctx.constants.rarea_b = 6 * l * l + 2 * k + 6;
  ctx.constants.rarea_c = l + k + 5;
  ctx.bridges = build_bridges(ctx);
  ctx.constants.transport_area_per_relator = ctx.bridges->max_commutator_area;
  ctx.constants.transport_area_per_letter = ctx.bridges->max_letter_area;
  ctx.constants.transport_radius_commutator = ctx.bridges->max_commutator_radius;
  ctx.constants.transport_radius_letter = ctx.bridges->max_letter_radius;
}

Word tree_power_path(const Context& ctx, int u, int v, long long n) {
  Word out(ctx.alphabet.uid());
  if (u == v || n == 0) {
    if (u == v) return out;
  }
  // Vertex chain u -> v through the tree: climb both ends to the common
  // ancestor, deterministically.
  std::vector<int> up, down;
  int a = u, b = v;
  const auto& depth = ctx.tree.depth;
  const auto& parent = ctx.tree.parent;
  while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
    up.push_back(a);
    a = parent[static_cast<size_t>(a)];
  }
  while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
    down.push_back(b);
    b = parent[static_cast<size_t>(b)];
  }
  while (a != b) {
    up.push_back(a);
    a = parent[static_cast<size_t>(a)];
    down.push_back(b);
    b = parent[static_cast<size_t>(b)];
  }
  std::vector<int> chain = up;
  chain.push_back(a);
  for (auto it = down.rbegin(); it != down.rend(); ++it) chain.push_back(*it);

  if (n == 0) return out;
  int sign = n > 0 ? 1 : -1;
  long long reps = n > 0 ? n : -n;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    int e = ctx.edge_gen(chain[i], chain[i + 1]);
    for (long long r = 0; r < reps; ++r) out.push_back({e, sign});
  }
  return out;
}

Word w_e_word(const Context& ctx, int edge) {
  int q = ctx.tree.base;
  int ie = ctx.edge_from(edge);
  Word out = tree_power_path(ctx, q, ie, 1);
  out.push_back({edge, 1});
  out.append(tree_power_path(ctx, ie, q, 1));
  return out;
}

const Word& PhiSystem::generator_image(int edge_gen, long long n) const {
  auto key = std::make_pair(edge_gen, n);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const Context& ctx = *ctx_;
  int q = ctx.tree.base;
  Word img = tree_power_path(ctx, q, ctx.edge_from(edge_gen), n);
  img.append(ctx.alphabet.power(edge_gen, n + 1));
  img.append(tree_power_path(ctx, ctx.edge_to(edge_gen), q, n));
  return memo_.emplace(key, std::move(img)).first->second;
}

Word PhiSystem::map_word(const Word& w, long long n) const {
  if (n == 0) return w;  // level 0 is the identity, literally
  Word out(w.alphabet);
  for (const Letter& l : w.letters) {
    const GeneratorInfo& gi = ctx_->alphabet.info(l.gen);
    if (gi.kind != GenKind::edge) {
      throw Error("substitution system applies to edge words only, got: " + gi.name);
    }
    const Word& img = generator_image(l.gen, n);
    if (l.sign > 0) {
      out.append(img);
    } else {
      out.append_inverse(img);
    }
  }
  return out;
}

Word phi_map(const Context& ctx, const Word& w, long long n) {
  if (n == 0) {
    for (const Letter& l : w.letters) {
      if (ctx.alphabet.info(l.gen).kind != GenKind::edge) {
        throw Error("substitution system applies to edge words only");
      }
    }
    return w;
  }
  return ctx.phi->map_word(w, n);
}

bool operator<(const IndexedKey& a, const IndexedKey& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.level < b.level;
}

Word indexed_relator_word(const Context& ctx, const IndexedKey& key) {
  const uint32_t abc = ctx.alphabet.uid();
  switch (key.kind) {
    case IndexedKind::edge_pair: {
      int e = key.edges[0];
      Word base(abc);
      base.push_back({e, 1});
      base.push_back({ctx.edge_reverse(e), 1});
      return phi_map(ctx, base, key.level);
    }
    case IndexedKind::triangle: {
      Word base(abc);
      for (int e : key.edges) base.push_back({e, 1});
      return phi_map(ctx, base, key.level);
    }
    case IndexedKind::anti_triangle: {
      Word base(abc);
      for (int e : key.edges) base.push_back({e, -1});
      return phi_map(ctx, base, key.level);
    }
    case IndexedKind::s_relator: {
      Word e(abc);
      e.push_back({key.edges[0], 1});
      Word out = phi_map(ctx, e, key.level + 1);
      out.append(phi_map(ctx, w_e_word(ctx, key.edges[0]), key.level).inverse());
      return out;
    }
  }
  throw Error("invalid indexed relator kind");
}

IndexedRelator make_indexed_relator(const Context& ctx, const IndexedKey& key) {
  IndexedRelator r;
  r.key = key;
  r.word = indexed_relator_word(ctx, key);
  r.index = key.level >= 0 ? key.level : -key.level;
  return r;
}

int IndexedRelatorStore::intern(const IndexedKey& key) {
  auto it = by_key_.find(key);
  if (it != by_key_.end()) return it->second;
  IndexedRelator r = make_indexed_relator(*ctx_, key);
  auto wit = by_word_.find(r.word);
  if (wit != by_word_.end() && !(wit->second == key)) {
    ++collisions_;  // same literal word from two keys; recorded, not re-minimized
  } else {
    by_word_.emplace(r.word, key);
  }
  int id = static_cast<int>(relators_.size());
  relators_.push_back(std::move(r));
  by_key_.emplace(key, id);
  return id;
}

std::string IndexedRelatorStore::relator_label(int id) const {
  const IndexedRelator& r = relator(id);
  std::string out;
  switch (r.key.kind) {
    case IndexedKind::edge_pair: out = "edge-pair"; break;
    case IndexedKind::triangle: out = "triangle"; break;
    case IndexedKind::anti_triangle: out = "anti-triangle"; break;
    case IndexedKind::s_relator: out = "s"; break;
  }
  out += ':';
  bool first = true;
  for (int e : r.key.edges) {
    if (e < 0) break;
    if (!first) out += ',';
    first = false;
    out += ctx_->alphabet.info(e).name;
  }
  out += ':';
  out += std::to_string(r.key.level);
  return out;
}

long long ConstantsRecord::alpha_prime(long long n) const {
  long long raag_area = (2 * n) * (2 * n);  // ceil((2n)^2 / 2) with (2n)^2 even
  raag_area = raag_area / 2;
  return transport_area_per_relator * raag_area + transport_area_per_letter * n;
}

long long ConstantsRecord::pi_prime(long long n) const {
  long long letter_side = n + 1 + transport_radius_letter;
  long long relator_side = (tree_diameter + 1) * (2 * n) + transport_radius_commutator;
  return std::max(letter_side, relator_side);
}

}  // namespace bb
