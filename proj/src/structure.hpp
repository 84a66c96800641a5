#pragma once

#include "multigraph.hpp"

#include <functional>
#include <optional>
#include <utility>

namespace hcolor {

struct Matching {
    EdgeSet edges;
    bool is_perfect = false;
};

/// Return false from the visitor to stop the enumeration early.
using MatchingVisitor = std::function<bool(const Matching&)>;

/// Every matching with at least min_size edges, exactly once, in a
/// deterministic order fixed by the edge ids.
void enumerate_matchings(const Multigraph& g, std::size_t min_size, const MatchingVisitor& visit);
std::vector<Matching> all_matchings(const Multigraph& g, std::size_t min_size = 0);

/// Perfect matchings only, branching on the lowest uncovered vertex.
void enumerate_perfect_matchings(const Multigraph& g, const MatchingVisitor& visit);
std::size_t count_perfect_matchings(const Multigraph& g);
std::optional<EdgeSet> find_perfect_matching(const Multigraph& g);

bool is_matching(const Multigraph& g, std::span<const EdgeId> F);
bool is_perfect_matching(const Multigraph& g, std::span<const EdgeId> F);

std::optional<std::pair<EdgeSet, EdgeSet>> two_disjoint_perfect_matchings(const Multigraph& g);
bool has_two_disjoint_perfect_matchings(const Multigraph& g);

inline constexpr std::size_t chromatic_index_edge_cap = 64;

/// Whether g has a proper edge-colouring with k colours.
bool is_k_edge_colourable(const Multigraph& g, std::size_t k);
/// Exact chromatic index. Throws SizeGuard above chromatic_index_edge_cap edges.
std::size_t chromatic_index(const Multigraph& g);

/// True iff every vertex touched by F has exactly k incident edges in F.
bool spanning_regular_check(const Multigraph& g, std::span<const EdgeId> F, std::size_t k);

/// All 4-vertex sets X with g[X] isomorphic to S4+kM whose three heavy
/// vertices (degree k+3 in g[X]) also have degree k+3 in g.
std::vector<VertexSet> exposed_copies(const Multigraph& g, std::size_t k);

} // namespace hcolor
