#pragma once

#include "multigraph.hpp"

#include <optional>
#include <string>

namespace hcolor {

/// A candidate H-colouring: f maps guest edge ids to host edge ids.
struct Colouring {
    Multigraph host;
    Multigraph guest;
    std::vector<EdgeId> edge_map;
};

Colouring identity_colouring(const Multigraph& g);

struct Violation {
    enum class Kind { Properness, VertexCondition };
    Kind kind;
    VertexId guest_vertex;
    /// For properness: the two adjacent guest edges sharing an image.
    EdgeId first = 0;
    EdgeId second = 0;

    std::string describe() const;
};

struct ColouringCheck {
    bool valid = false;
    std::vector<Violation> violations;
};

/// Validates properness and the vertex condition f(∂u) = ∂v. Throws NotTotal
/// when the map does not cover every guest edge with a valid host edge.
ColouringCheck check_colouring(const Colouring& c);

/// f_V: guest vertex -> the unique host vertex v with f(∂u) = ∂v. Throws
/// InvalidColouring, or Ambiguous when two host vertices share the same ∂
/// (the tK_2 case).
std::vector<VertexId> induced_vertex_map(const Colouring& c);

/// H_f: the edge-induced host subgraph on Im(f), with origins in the host.
EdgeInducedSubgraph image_subgraph(const Colouring& c);
/// Host vertices of H_f outside Im(f_V).
VertexSet unused_vertices(const Colouring& c);

/// The splitted image: H_f with every unused vertex of degree d replaced by
/// d vertices of degree 1.
struct ImageGraph {
    Multigraph graph;
    /// Vertices of `graph` that are images of guest vertices.
    VertexSet used_vertices;
    /// Degree-1 vertices arising from splitting an unused vertex of degree >= 2.
    VertexSet split_vertices;
    /// Unused vertices that already had degree 1 in H_f; splitting leaves them as is.
    VertexSet unused_leaves;
    /// Provenance when built from a colouring: host vertex / host edge behind
    /// each image vertex / edge (split vertices point at the unused host vertex).
    std::vector<VertexId> host_vertex;
    std::vector<EdgeId> host_edge;
    /// The guest coloured by `graph` itself.
    std::optional<Colouring> witness;
};

ImageGraph splitted_image(const Colouring& c);

/// True iff the image has a split vertex. Unused leaves do not count.
bool image_admits_extension(const ImageGraph& image);

/// f^{-1}(F) with the host-side premises and guest-side conclusions of the
/// preimage lemmas evaluated side by side.
struct PreimageClassification {
    EdgeSet preimage;

    bool host_matching = false;
    bool guest_matching = false;

    bool host_perfect_matching = false;
    /// F is a matching covering every vertex of Im(f_V).
    bool host_covers_used = false;
    bool guest_perfect_matching = false;

    /// F ⊆ Im(f) is an edge-cut of H_f and H_f - F has no isolated vertex
    /// (evaluated only for connected guests).
    bool host_clean_cut = false;
    bool guest_edge_cut = false;

    /// k when F is a k-regular edge set meeting Im(f_V).
    std::optional<std::size_t> host_regular_degree;
    bool guest_regular = false;

    bool matching_holds() const { return !host_matching || guest_matching; }
    bool perfect_matching_holds() const { return !host_perfect_matching || guest_perfect_matching; }
    bool covering_matching_holds() const { return !host_covers_used || guest_perfect_matching; }
    bool cut_holds() const { return !host_clean_cut || guest_edge_cut; }
    bool regular_holds() const { return !host_regular_degree || guest_regular; }
    bool consistent() const
    {
        return matching_holds() && perfect_matching_holds() && covering_matching_holds() && cut_holds() &&
               regular_holds();
    }
};

PreimageClassification preimage(const Colouring& c, std::span<const EdgeId> F);

/// Caches f_V and H_f for classifying many edge sets against one colouring.
class PreimageAnalyser {
public:
    explicit PreimageAnalyser(const Colouring& c);
    PreimageClassification classify(std::span<const EdgeId> F) const;

    const std::vector<VertexId>& vertex_map() const { return vertex_map_; }
    const EdgeInducedSubgraph& image() const { return image_; }

private:
    const Colouring& c_;
    std::vector<VertexId> vertex_map_;
    std::vector<char> used_;
    EdgeInducedSubgraph image_;
    std::vector<EdgeId> image_index_; // host edge -> image edge, or npos
    bool guest_connected_;
};

} // namespace hcolor
