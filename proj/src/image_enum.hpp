#pragma once

#include "hcolour.hpp"

#include <cstdint>

namespace hcolor {

/// Colour classes of the guest edges in restricted-growth form along the
/// breadth-first edge order. A vertex's type is the set of classes on its
/// incident edges; equal types mean equal images.
struct TypePartition {
    std::vector<std::uint32_t> class_of; // indexed by guest edge id
    std::uint32_t class_count = 0;
};

/// Checks properness, the two-types-per-class bound and the restricted-growth
/// labelling. Returns a reason on failure.
std::optional<std::string> type_partition_violation(const Multigraph& guest, const TypePartition& p);

/// The splitted image described by a partition: one vertex per distinct type,
/// one edge per class, fresh degree-1 vertices for classes seen by one type.
/// The witness colours the guest by the returned graph.
ImageGraph realize_image(const Multigraph& guest, const TypePartition& p);

struct ImageClass {
    CanonicalForm form;
    ImageGraph image; // first partition found for the class
    TypePartition partition;
    std::uint64_t multiplicity = 0;
};

struct ImageAtlas {
    std::vector<ImageClass> classes; // sorted by canonical form
    bool complete = true;
    std::uint64_t nodes = 0;
    std::uint64_t partitions = 0;
    /// Guest is t-regular and t-edge-colourable (t = max degree), i.e. tK_2
    /// colours it. Those colourings show up in the atlas as K_{1,t}.
    bool tk2_realizable = false;
};

struct ImageLimits {
    std::uint64_t node_limit = 0; // 0 = unlimited
};

/// Every splitted image realisable by an H-colouring of a connected guest
/// with more than two vertices, up to isomorphism.
ImageAtlas enumerate_splitted_images(const Multigraph& guest, const ImageLimits& limits = {});

} // namespace hcolor
