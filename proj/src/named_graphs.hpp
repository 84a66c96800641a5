#pragma once

#include "multigraph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace hcolor {

/// A multigraph plus names for the vertices and edges the constructions refer to.
struct LabelledGraph {
    Multigraph graph;
    std::map<std::string, VertexId> vertex_roles;
    std::map<std::string, EdgeId> edge_roles;
    /// The distinguished perfect matching M of S4/S6/S12 (one edge per bold pair).
    EdgeSet bold_matching;

    VertexId vertex(const std::string& label) const;
    EdgeId edge(const std::string& label) const;
};

/// Outer cycle u1..u5, inner pentagram v1..v5 (v_i ~ v_{i+2}), spokes u_i v_i.
LabelledGraph petersen();

/// z, u, v, w with edges r1 = zu, m1 = uv, m2 = uw and l1, l2 parallel between v and w.
LabelledGraph s4();
LabelledGraph s6();
/// Sylvester multigraph: a centre joined to the u-vertex of three S4 gadgets.
LabelledGraph s10();
/// Three S4 copies whose z-vertices form a simple triangle.
LabelledGraph s12();

/// k extra parallel copies of every bold matching edge; k = 0 gives the base graph.
LabelledGraph s4_plus_kM(int k);
LabelledGraph s6_plus_kM(int k);
LabelledGraph s12_plus_kM(int k);

LabelledGraph complete(int n);
/// K_n minus the edge between vertices 0 and 1, recorded as "deficient1"/"deficient2".
LabelledGraph complete_minus_edge(int n);
LabelledGraph star(int t);
LabelledGraph t_k2(int t);

/// r copies of K'_{2r+1} whose deficient vertices are all joined to a central vertex "u".
LabelledGraph j_graph(int r);

/// All r-regular multigraphs on t pairwise adjacent vertices, up to isomorphism.
std::vector<Multigraph> k_family_members(int t, int r);
bool is_k_family_member(const Multigraph& g, std::size_t r);

/// Calls visit once per isomorphism class of connected r-regular loopless
/// multigraphs on n vertices (multiplicities <= max_multiplicity). Orderly
/// generation: each class is produced by its lexicographically greatest
/// column-wise adjacency string. Return false from visit to stop.
void enumerate_connected_regular_multigraphs(std::size_t n, std::size_t r, std::size_t max_multiplicity,
                                             const std::function<bool(const Multigraph&)>& visit);

/// Smallest-order r-regular multigraph with a perfect matching but no two
/// disjoint perfect matchings, searching orders up to max_order.
std::optional<Multigraph> poorly_matchable_witness(int r, int max_order);

/// Generator lookup used by the CLI: name plus integer parameters.
LabelledGraph generate_named(const std::string& name, const std::vector<int>& params);
std::vector<std::string> named_generators();

} // namespace hcolor
