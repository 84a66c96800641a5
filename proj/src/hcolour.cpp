#include "hcolour.hpp"

#include "structure.hpp"

#include <algorithm>
#include <map>

namespace hcolor {

Colouring identity_colouring(const Multigraph& g)
{
    std::vector<EdgeId> map(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        map[e] = e;
    return {g, g, std::move(map)};
}

std::string Violation::describe() const
{
    if (kind == Kind::Properness)
        return "vertex " + std::to_string(guest_vertex) + ": adjacent edges " + std::to_string(first) + " and " +
               std::to_string(second) + " share an image";
    return "vertex " + std::to_string(guest_vertex) + ": image of its edges is not the edge set of any host vertex";
}

namespace {

using Boundaries = std::map<std::vector<EdgeId>, std::vector<VertexId>>;

Boundaries host_boundaries(const Multigraph& host)
{
    Boundaries out;
    for (VertexId v = 0; v < host.vertex_count(); ++v) {
        auto inc = host.incident(v);
        out[{inc.begin(), inc.end()}].push_back(v);
    }
    return out;
}

void require_total(const Colouring& c)
{
    if (c.edge_map.size() != c.guest.edge_count())
        fail(ErrorCode::NotTotal, "edge map has " + std::to_string(c.edge_map.size()) + " entries for " +
                                      std::to_string(c.guest.edge_count()) + " guest edges");
    for (EdgeId e = 0; e < c.edge_map.size(); ++e)
        if (c.edge_map[e] >= c.host.edge_count())
            fail(ErrorCode::NotTotal, "guest edge " + std::to_string(e) + " maps outside the host");
}

std::vector<EdgeId> image_of_star(const Colouring& c, VertexId u)
{
    std::vector<EdgeId> out;
    for (EdgeId e : c.guest.incident(u))
        out.push_back(c.edge_map[e]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ColouringCheck check_colouring(const Colouring& c)
{
    require_total(c);
    const auto bounds = host_boundaries(c.host);
    ColouringCheck out;
    for (VertexId u = 0; u < c.guest.vertex_count(); ++u) {
        auto inc = c.guest.incident(u);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (c.edge_map[inc[i]] == c.edge_map[inc[j]])
                    out.violations.push_back({Violation::Kind::Properness, u, inc[i], inc[j]});
        auto star = image_of_star(c, u);
        star.erase(std::unique(star.begin(), star.end()), star.end());
        if (!bounds.contains(star))
            out.violations.push_back({Violation::Kind::VertexCondition, u});
    }
    out.valid = out.violations.empty();
    return out;
}

std::vector<VertexId> induced_vertex_map(const Colouring& c)
{
    if (!check_colouring(c).valid)
        fail(ErrorCode::InvalidColouring, "not an H-colouring");
    const auto bounds = host_boundaries(c.host);
    std::vector<VertexId> out(c.guest.vertex_count());
    for (VertexId u = 0; u < c.guest.vertex_count(); ++u) {
        const auto& candidates = bounds.at(image_of_star(c, u));
        if (candidates.size() > 1)
            fail(ErrorCode::Ambiguous, "host vertices " + std::to_string(candidates[0]) + " and " +
                                           std::to_string(candidates[1]) + " have the same incident edges");
        out[u] = candidates.front();
    }
    return out;
}

namespace {

EdgeSet image_edges(const Colouring& c) { return make_edge_set(c.edge_map); }

} // namespace

EdgeInducedSubgraph image_subgraph(const Colouring& c)
{
    if (!check_colouring(c).valid)
        fail(ErrorCode::InvalidColouring, "not an H-colouring");
    return edge_induced_subgraph(c.host, image_edges(c));
}

VertexSet unused_vertices(const Colouring& c)
{
    auto image = image_subgraph(c);
    auto vm = induced_vertex_map(c);
    std::vector<char> used(c.host.vertex_count(), 0);
    for (auto v : vm)
        used[v] = 1;
    VertexSet out;
    for (auto v : image.vertex_origin)
        if (!used[v])
            out.push_back(v);
    return out;
}

ImageGraph splitted_image(const Colouring& c)
{
    const auto vm = induced_vertex_map(c);
    const auto edges = image_edges(c);
    std::vector<char> used(c.host.vertex_count(), 0);
    for (auto v : vm)
        used[v] = 1;

    ImageGraph out;
    const auto none = static_cast<VertexId>(-1);
    std::vector<VertexId> index(c.host.vertex_count(), none);
    for (VertexId v = 0; v < c.host.vertex_count(); ++v)
        if (used[v]) {
            index[v] = static_cast<VertexId>(out.host_vertex.size());
            out.used_vertices.push_back(index[v]);
            out.host_vertex.push_back(v);
        }
    std::vector<std::size_t> image_degree(c.host.vertex_count(), 0);
    for (auto h : edges) {
        ++image_degree[c.host.edges()[h].a];
        ++image_degree[c.host.edges()[h].b];
    }
    std::vector<Edge> image;
    std::vector<EdgeId> image_of(c.host.edge_count(), 0);
    for (auto h : edges) {
        auto end = [&](VertexId v) {
            if (used[v])
                return index[v];
            auto split = static_cast<VertexId>(out.host_vertex.size());
            (image_degree[v] == 1 ? out.unused_leaves : out.split_vertices).push_back(split);
            out.host_vertex.push_back(v);
            return split;
        };
        const auto [a, b] = c.host.edges()[h];
        const VertexId ia = end(a);
        const VertexId ib = end(b);
        image_of[h] = static_cast<EdgeId>(image.size());
        image.push_back({ia, ib});
        out.host_edge.push_back(h);
    }
    out.graph = Multigraph(out.host_vertex.size(), std::move(image));
    std::vector<EdgeId> witness_map;
    for (auto h : c.edge_map)
        witness_map.push_back(image_of[h]);
    out.witness = Colouring{out.graph, c.guest, std::move(witness_map)};
    return out;
}

bool image_admits_extension(const ImageGraph& image) { return !image.split_vertices.empty(); }

PreimageAnalyser::PreimageAnalyser(const Colouring& c)
    : c_(c), vertex_map_(induced_vertex_map(c)), used_(c.host.vertex_count(), 0), image_(image_subgraph(c)),
      image_index_(c.host.edge_count(), static_cast<EdgeId>(-1)), guest_connected_(is_connected(c.guest))
{
    for (auto v : vertex_map_)
        used_[v] = 1;
    for (EdgeId i = 0; i < image_.edge_origin.size(); ++i)
        image_index_[image_.edge_origin[i]] = i;
}

PreimageClassification PreimageAnalyser::classify(std::span<const EdgeId> F_in) const
{
    const EdgeSet F = make_edge_set({F_in.begin(), F_in.end()});
    const Multigraph& host = c_.host;
    const Multigraph& guest = c_.guest;
    std::vector<char> in_f(host.edge_count(), 0);
    for (auto h : F) {
        if (h >= host.edge_count())
            fail(ErrorCode::InvalidEdge, "host edge " + std::to_string(h) + " out of range");
        in_f[h] = 1;
    }

    PreimageClassification out;
    for (EdgeId e = 0; e < guest.edge_count(); ++e)
        if (in_f[c_.edge_map[e]])
            out.preimage.push_back(e);

    out.host_matching = is_matching(host, F);
    out.guest_matching = is_matching(guest, out.preimage);
    out.host_perfect_matching = out.host_matching && F.size() * 2 == host.vertex_count();
    out.guest_perfect_matching = is_perfect_matching(guest, out.preimage);

    std::vector<std::size_t> f_degree(host.vertex_count(), 0);
    for (auto h : F) {
        ++f_degree[host.edges()[h].a];
        ++f_degree[host.edges()[h].b];
    }
    if (out.host_matching) {
        out.host_covers_used = true;
        for (VertexId v = 0; v < host.vertex_count(); ++v)
            if (used_[v] && f_degree[v] == 0)
                out.host_covers_used = false;
    }

    if (guest_connected_ && !F.empty() && guest.vertex_count() > 0) {
        bool inside = std::all_of(F.begin(), F.end(), [&](EdgeId h) { return image_index_[h] != static_cast<EdgeId>(-1); });
        if (inside) {
            std::vector<EdgeId> local;
            for (auto h : F)
                local.push_back(image_index_[h]);
            const auto& hf = image_.graph;
            bool isolated = false;
            for (VertexId v = 0; v < hf.vertex_count(); ++v)
                if (f_degree[image_.vertex_origin[v]] == hf.degree(v))
                    isolated = true;
            out.host_clean_cut = !isolated && is_edge_cut(hf, local);
        }
        out.guest_edge_cut = is_edge_cut(guest, out.preimage);
    }

    if (!F.empty()) {
        std::size_t k = 0;
        bool uniform = true;
        bool meets_used = false;
        for (VertexId v = 0; v < host.vertex_count(); ++v) {
            if (!f_degree[v])
                continue;
            if (k == 0)
                k = f_degree[v];
            uniform = uniform && f_degree[v] == k;
            meets_used = meets_used || used_[v];
        }
        if (uniform && meets_used) {
            out.host_regular_degree = k;
            out.guest_regular = !out.preimage.empty() && spanning_regular_check(guest, out.preimage, k);
        }
    }
    return out;
}

PreimageClassification preimage(const Colouring& c, std::span<const EdgeId> F)
{
    return PreimageAnalyser(c).classify(F);
}

} // namespace hcolor
