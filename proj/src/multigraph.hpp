#pragma once

#include "error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hcolor {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    VertexId a;
    VertexId b;

    VertexId other(VertexId v) const { return v == a ? b : a; }
    bool touches(VertexId v) const { return a == v || b == v; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edge ids. Used for boundaries, matchings and cuts.
using EdgeSet = std::vector<EdgeId>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

EdgeSet make_edge_set(std::vector<EdgeId> ids);
VertexSet make_vertex_set(std::vector<VertexId> ids);

/// Finite undirected loopless multigraph. Edge ids are positions in the edge
/// list, so parallel edges are individually addressable. Immutable once built.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges, std::string name = {});

    std::size_t vertex_count() const { return incidence_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;
    const std::string& name() const { return name_; }

    /// Edges incident to u, in increasing id order.
    std::span<const EdgeId> incident(VertexId u) const;
    std::size_t degree(VertexId u) const { return incident(u).size(); }
    std::size_t max_degree() const;

    /// Number of edges joining a and b.
    std::size_t multiplicity(VertexId a, VertexId b) const;
    bool is_simple() const;

    Multigraph renamed(std::string name) const;

private:
    void check_vertex(VertexId u) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::string name_;
};

// Structural queries.

EdgeSet incident_edges(const Multigraph& g, VertexId u);
/// Edges with exactly one endpoint in U.
EdgeSet boundary(const Multigraph& g, std::span<const VertexId> U);
std::size_t degree(const Multigraph& g, VertexId u);
bool is_regular(const Multigraph& g, std::size_t r);
std::vector<std::size_t> degree_sequence(const Multigraph& g);

bool is_connected(const Multigraph& g);
std::vector<VertexSet> components(const Multigraph& g);

/// Vertex-induced subgraph. Vertex i of the result is X[i] (sorted order);
/// edges keep their relative order.
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> X);

/// Edge-induced subgraph plus the vertex/edge correspondences back to g.
struct EdgeInducedSubgraph {
    Multigraph graph;
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};
EdgeInducedSubgraph edge_induced_subgraph(const Multigraph& g, std::span<const EdgeId> F);

Multigraph remove_edges(const Multigraph& g, std::span<const EdgeId> X);

/// True iff removing X from g disconnects it. g must be connected.
bool is_edge_cut(const Multigraph& g, std::span<const EdgeId> X);
EdgeSet bridges(const Multigraph& g);

/// Length of a shortest cycle; parallel edges count as 2-cycles. nullopt on forests.
std::optional<std::size_t> girth(const Multigraph& g);

/// Disjoint union, second graph's ids shifted after the first.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);
Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm);

// Canonical forms.

/// Isomorphism-invariant encoding: two multigraphs have equal forms iff they
/// are isomorphic (respecting edge multiplicities).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    /// 16 hex digit FNV-1a digest of the bytes.
    std::string digest() const;
};

struct CanonicalLabelling {
    CanonicalForm form;
    /// position[v] = canonical index of vertex v.
    std::vector<VertexId> position;
};

CanonicalLabelling canonical_labelling(const Multigraph& g);
CanonicalForm canonical_form(const Multigraph& g);
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

} // namespace hcolor
