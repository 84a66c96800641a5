#include "multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace hcolor {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidVertex: return "invalid vertex";
    case ErrorCode::InvalidEdge: return "invalid edge";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::SizeGuard: return "size guard exceeded";
    case ErrorCode::NotTotal: return "edge map not total";
    case ErrorCode::InvalidColouring: return "invalid colouring";
    case ErrorCode::Ambiguous: return "ambiguous vertex map";
    case ErrorCode::Disconnected: return "disconnected graph";
    case ErrorCode::UnknownRecipe: return "unknown recipe";
    case ErrorCode::Incomplete: return "incomplete";
    }
    return "error";
}

EdgeSet make_edge_set(std::vector<EdgeId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

VertexSet make_vertex_set(std::vector<VertexId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges, std::string name)
    : edges_(std::move(edges)), incidence_(vertex_count), name_(std::move(name))
{
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [a, b] = edges_[e];
        if (a >= vertex_count || b >= vertex_count)
            fail(ErrorCode::InvalidVertex, "edge " + std::to_string(e) + " has an endpoint out of range");
        if (a == b)
            fail(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " is a loop");
        incidence_[a].push_back(e);
        incidence_[b].push_back(e);
    }
}

void Multigraph::check_vertex(VertexId u) const
{
    if (u >= vertex_count())
        fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(u) + " out of range");
}

const Edge& Multigraph::edge(EdgeId e) const
{
    if (e >= edges_.size())
        fail(ErrorCode::InvalidEdge, "edge " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(VertexId u) const
{
    check_vertex(u);
    return incidence_[u];
}

std::size_t Multigraph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& inc : incidence_)
        best = std::max(best, inc.size());
    return best;
}

std::size_t Multigraph::multiplicity(VertexId a, VertexId b) const
{
    check_vertex(b);
    return std::count_if(incident(a).begin(), incident(a).end(),
                         [&](EdgeId e) { return edges_[e].other(a) == b; });
}

bool Multigraph::is_simple() const
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_)
        pairs.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

Multigraph Multigraph::renamed(std::string name) const
{
    Multigraph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

EdgeSet incident_edges(const Multigraph& g, VertexId u)
{
    auto inc = g.incident(u);
    return {inc.begin(), inc.end()};
}

namespace {

std::vector<char> membership(const Multigraph& g, std::span<const VertexId> U)
{
    std::vector<char> in(g.vertex_count(), 0);
    for (auto u : U) {
        if (u >= g.vertex_count())
            fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(u) + " out of range");
        in[u] = 1;
    }
    return in;
}

std::vector<char> edge_membership(const Multigraph& g, std::span<const EdgeId> F)
{
    std::vector<char> in(g.edge_count(), 0);
    for (auto e : F) {
        if (e >= g.edge_count())
            fail(ErrorCode::InvalidEdge, "edge " + std::to_string(e) + " out of range");
        in[e] = 1;
    }
    return in;
}

// Component label per vertex, ignoring edges flagged in `removed`.
std::vector<std::size_t> component_labels(const Multigraph& g, const std::vector<char>* removed,
                                          std::size_t& count)
{
    const std::size_t unset = g.vertex_count();
    std::vector<std::size_t> label(g.vertex_count(), unset);
    count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != unset)
            continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (removed && (*removed)[e])
                    continue;
                VertexId w = g.edges()[e].other(v);
                if (label[w] == unset) {
                    label[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return label;
}

} // namespace

EdgeSet boundary(const Multigraph& g, std::span<const VertexId> U)
{
    auto in = membership(g, U);
    EdgeSet out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[g.edges()[e].a] != in[g.edges()[e].b])
            out.push_back(e);
    return out;
}

std::size_t degree(const Multigraph& g, VertexId u) { return g.degree(u); }

bool is_regular(const Multigraph& g, std::size_t r)
{
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) != r)
            return false;
    return true;
}

std::vector<std::size_t> degree_sequence(const Multigraph& g)
{
    std::vector<std::size_t> out;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        out.push_back(g.degree(u));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Multigraph& g)
{
    std::size_t count = 0;
    component_labels(g, nullptr, count);
    return count <= 1;
}

std::vector<VertexSet> components(const Multigraph& g)
{
    std::size_t count = 0;
    auto label = component_labels(g, nullptr, count);
    std::vector<VertexSet> out(count);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out[label[v]].push_back(v);
    return out;
}

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> X)
{
    auto in = membership(g, X);
    std::vector<VertexId> index(g.vertex_count(), 0);
    std::size_t n = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (in[v])
            index[v] = static_cast<VertexId>(n++);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (in[e.a] && in[e.b])
            edges.push_back({index[e.a], index[e.b]});
    return Multigraph(n, std::move(edges));
}

EdgeInducedSubgraph edge_induced_subgraph(const Multigraph& g, std::span<const EdgeId> F)
{
    auto in = edge_membership(g, F);
    EdgeInducedSubgraph out;
    std::vector<char> touched(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[e]) {
            touched[g.edges()[e].a] = 1;
            touched[g.edges()[e].b] = 1;
        }
    std::vector<VertexId> index(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (touched[v]) {
            index[v] = static_cast<VertexId>(out.vertex_origin.size());
            out.vertex_origin.push_back(v);
        }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[e]) {
            edges.push_back({index[g.edges()[e].a], index[g.edges()[e].b]});
            out.edge_origin.push_back(e);
        }
    out.graph = Multigraph(out.vertex_origin.size(), std::move(edges));
    return out;
}

Multigraph remove_edges(const Multigraph& g, std::span<const EdgeId> X)
{
    auto in = edge_membership(g, X);
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!in[e])
            edges.push_back(g.edges()[e]);
    return Multigraph(g.vertex_count(), std::move(edges));
}

bool is_edge_cut(const Multigraph& g, std::span<const EdgeId> X)
{
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "is_edge_cut requires a connected graph");
    auto removed = edge_membership(g, X);
    std::size_t count = 0;
    component_labels(g, &removed, count);
    return count > 1;
}

EdgeSet bridges(const Multigraph& g)
{
    // Lowlink DFS keyed on the parent edge id, so parallel edges are never bridges.
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> order(n, 0), low(n, 0);
    std::vector<char> seen(n, 0);
    std::size_t clock = 0;
    EdgeSet out;

    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next;
    };
    const EdgeId none = static_cast<EdgeId>(-1);
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<Frame> stack{{root, none, 0}};
        seen[root] = 1;
        order[root] = low[root] = clock++;
        while (!stack.empty()) {
            auto& top = stack.back();
            auto inc = g.incident(top.v);
            if (top.next < inc.size()) {
                EdgeId e = inc[top.next++];
                if (e == top.parent_edge)
                    continue;
                VertexId w = g.edges()[e].other(top.v);
                if (!seen[w]) {
                    seen[w] = 1;
                    order[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else {
                    low[top.v] = std::min(low[top.v], order[w]);
                }
            } else {
                Frame done = top;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[done.v]);
                    if (low[done.v] > order[parent])
                        out.push_back(done.parent_edge);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> girth(const Multigraph& g)
{
    std::optional<std::size_t> best;
    const std::size_t n = g.vertex_count();
    for (EdgeId skip = 0; skip < g.edge_count(); ++skip) {
        const auto [s, t] = g.edges()[skip];
        std::vector<std::size_t> dist(n, n + 1);
        std::queue<VertexId> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (e == skip)
                    continue;
                VertexId w = g.edges()[e].other(v);
                if (dist[w] > dist[v] + 1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[t] <= n && (!best || dist[t] + 1 < *best))
            best = dist[t] + 1;
    }
    return best;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b)
{
    auto edges = a.edges();
    const auto shift = static_cast<VertexId>(a.vertex_count());
    for (const auto& e : b.edges())
        edges.push_back({e.a + shift, e.b + shift});
    return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Multigraph relabel(const Multigraph& g, std::span<const VertexId> perm)
{
    if (perm.size() != g.vertex_count())
        fail(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<char> hit(perm.size(), 0);
    for (auto p : perm) {
        if (p >= perm.size() || hit[p])
            fail(ErrorCode::InvalidArgument, "not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        edges.push_back({perm[e.a], perm[e.b]});
    return Multigraph(g.vertex_count(), std::move(edges), g.name());
}

} // namespace hcolor
