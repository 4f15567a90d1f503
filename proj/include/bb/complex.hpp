#ifndef BB_COMPLEX_HPP
#define BB_COMPLEX_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bb {

/// Finite flag simplicial complex, given by its 1-skeleton. Vertices are kept
/// sorted by name and referred to by index; triangles are always derived as
/// the 3-cliques of the edge graph.
struct FlagComplex {
  std::vector<std::string> vertex_names;           // sorted, unique
  std::vector<std::pair<int, int>> edges;          // a < b, sorted
  std::vector<std::array<int, 3>> triangles;       // a < b < c, sorted
  std::vector<std::vector<int>> adjacency;         // sorted neighbor lists
  std::optional<std::string> base_hint;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int vertex_index(const std::string& name) const;
  bool has_edge(int a, int b) const;
};

/// Builds the flag complex of a connected graph: triangles are exactly the
/// 3-cliques. Throws on dangling edge endpoints or a disconnected graph.
FlagComplex flag_from_graph(std::vector<std::string> vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges,
                            std::optional<std::string> base_hint = std::nullopt);

/// Reads the JSON complex format: {"vertices": [...], "edges": [[u,v],...],
/// "base": optional}.
FlagComplex load_complex(const std::string& path);
FlagComplex parse_complex_text(const std::string& text);

/// Stable 64-bit hash of the canonical complex description plus base vertex.
std::string complex_hash(const FlagComplex& cx, int base_vertex);

}  // namespace bb

#endif
