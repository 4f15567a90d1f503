#ifndef BB_EXPANDERS_HPP
#define BB_EXPANDERS_HPP

#include <array>

#include "bb/context.hpp"
#include "bb/scheme.hpp"

namespace bb {

/// Converts the literal word p_n(q,v)^-1 into p_n(v,q) one edge-pair relator
/// at a time; cost exactly |n| * Dist(q, v).
TransitionScheme reverse_path_scheme(const Context& ctx, int vertex, long long n);

/// In-place collapse of the window e^n f^n g^n at pos to the empty window.
/// Cost <= 3 n^2 relator applications.
void collapse_triangle_power(const Context& ctx, SchemeBuilder& b, size_t pos,
                             const std::array<int, 3>& cycle, long long n);

/// In-place insertion of e^n f^n g^n at pos; mirror image of the collapse.
void insert_triangle_power(const Context& ctx, SchemeBuilder& b, size_t pos,
                           const std::array<int, 3>& cycle, long long n);

/// Filling of e^n f^n g^n over the edge presentation; area <= 3 n^2.
NullExpression expand_triangle_power(const Context& ctx, const std::array<int, 3>& cycle,
                                     long long n,
                                     SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                     ExpressionMetrics* metrics = nullptr);

/// Replays a combinatorial null-homotopy on the powered cycle word
/// e_1^n ... e_l^n; area <= 3 m n^2 for an m-move homotopy.
NullExpression fill_cycle_power(const Context& ctx, const CombinatorialCycle& cycle, long long n,
                                const NullHomotopy& homotopy,
                                SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                ExpressionMetrics* metrics = nullptr);

/// Filling of p_n(q, ie) e^n p_n(te, q) from the cached homotopy of the
/// edge's lollipop cycle; area <= K n^2.
NullExpression fill_tree_edge_cycle(const Context& ctx, int edge, long long n,
                                    SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                    ExpressionMetrics* metrics = nullptr);

/// Level-n image of e ebar; area <= (2L+1)|n| + 1.
NullExpression expand_edge_inverse(const Context& ctx, int edge, long long n,
                                   SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                   ExpressionMetrics* metrics = nullptr);

/// Level-n image of a triangle cycle word; area <= 3n^2 + (3L+6)|n| + 3.
NullExpression expand_phi_triangle(const Context& ctx, const std::array<int, 3>& cycle,
                                   long long n,
                                   SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                   ExpressionMetrics* metrics = nullptr);

/// Level-n image of the inverse triangle word; area <= (3K+4)n^2 + (6L+6)|n| + 5.
NullExpression expand_phi_inverse_triangle(const Context& ctx, const std::array<int, 3>& cycle,
                                           long long n,
                                           SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                           ExpressionMetrics* metrics = nullptr);

/// Filling of the level-n extension relator image; area <= 2Kn^2 +
/// (3L^2+2L+2K)|n| + L + K.
NullExpression expand_s_relator(const Context& ctx, int edge, long long n,
                                SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                ExpressionMetrics* metrics = nullptr);

/// Dispatch over the four indexed relator kinds; level-0 images of finite
/// relators are single-term expressions. Checks area <= rarea_bound(|level|).
NullExpression expand_indexed_relator(const Context& ctx, const IndexedKey& key,
                                      SchemeBuilder::Policy policy = SchemeBuilder::Policy::materialize,
                                      ExpressionMetrics* metrics = nullptr);

/// Closed-form area bound of each expander, used as hard assertions.
long long edge_inverse_area_bound(const Context& ctx, long long n);
long long triangle_power_area_bound(long long n);
long long phi_triangle_area_bound(const Context& ctx, long long n);
long long phi_inverse_triangle_area_bound(const Context& ctx, long long n);
long long s_relator_area_bound(const Context& ctx, long long n);

}  // namespace bb

#endif
