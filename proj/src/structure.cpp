#include "structure.hpp"

#include "named_graphs.hpp"

#include <algorithm>
#include <bit>

namespace hcolor {

namespace {

struct MatchingWalk {
    const Multigraph& g;
    std::size_t min_size;
    const MatchingVisitor& visit;
    std::vector<char> covered;
    std::size_t free_vertices;
    EdgeSet current;
    bool stopped = false;

    void step(EdgeId next)
    {
        if (stopped)
            return;
        if (current.size() + free_vertices / 2 < min_size)
            return;
        if (current.size() + (g.edge_count() - next) < min_size)
            return;
        if (next == g.edge_count()) {
            Matching m{current, free_vertices == 0};
            if (!visit(m))
                stopped = true;
            return;
        }
        const auto [a, b] = g.edges()[next];
        if (!covered[a] && !covered[b]) {
            covered[a] = covered[b] = 1;
            free_vertices -= 2;
            current.push_back(next);
            step(next + 1);
            current.pop_back();
            free_vertices += 2;
            covered[a] = covered[b] = 0;
        }
        step(next + 1);
    }
};

struct PerfectWalk {
    const Multigraph& g;
    const MatchingVisitor& visit;
    std::vector<char> covered;
    EdgeSet current;
    bool stopped = false;

    void step(VertexId from)
    {
        if (stopped)
            return;
        while (from < g.vertex_count() && covered[from])
            ++from;
        if (from == g.vertex_count()) {
            Matching m{make_edge_set(current), true};
            if (!visit(m))
                stopped = true;
            return;
        }
        covered[from] = 1;
        for (EdgeId e : g.incident(from)) {
            VertexId w = g.edges()[e].other(from);
            if (covered[w])
                continue;
            covered[w] = 1;
            current.push_back(e);
            step(from + 1);
            current.pop_back();
            covered[w] = 0;
            if (stopped)
                break;
        }
        covered[from] = 0;
    }
};

} // namespace

void enumerate_matchings(const Multigraph& g, std::size_t min_size, const MatchingVisitor& visit)
{
    MatchingWalk walk{g, min_size, visit, std::vector<char>(g.vertex_count(), 0), g.vertex_count(), {}};
    walk.step(0);
}

std::vector<Matching> all_matchings(const Multigraph& g, std::size_t min_size)
{
    std::vector<Matching> out;
    enumerate_matchings(g, min_size, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

void enumerate_perfect_matchings(const Multigraph& g, const MatchingVisitor& visit)
{
    if (g.vertex_count() % 2)
        return;
    PerfectWalk walk{g, visit, std::vector<char>(g.vertex_count(), 0), {}};
    walk.step(0);
}

std::size_t count_perfect_matchings(const Multigraph& g)
{
    std::size_t count = 0;
    enumerate_perfect_matchings(g, [&](const Matching&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<EdgeSet> find_perfect_matching(const Multigraph& g)
{
    std::optional<EdgeSet> out;
    enumerate_perfect_matchings(g, [&](const Matching& m) {
        out = m.edges;
        return false;
    });
    return out;
}

bool is_matching(const Multigraph& g, std::span<const EdgeId> F)
{
    std::vector<char> covered(g.vertex_count(), 0);
    for (auto e : make_edge_set({F.begin(), F.end()})) {
        const auto [a, b] = g.edge(e);
        if (covered[a] || covered[b])
            return false;
        covered[a] = covered[b] = 1;
    }
    return true;
}

bool is_perfect_matching(const Multigraph& g, std::span<const EdgeId> F)
{
    return is_matching(g, F) && make_edge_set({F.begin(), F.end()}).size() * 2 == g.vertex_count();
}

std::optional<std::pair<EdgeSet, EdgeSet>> two_disjoint_perfect_matchings(const Multigraph& g)
{
    std::optional<std::pair<EdgeSet, EdgeSet>> out;
    enumerate_perfect_matchings(g, [&](const Matching& first) {
        auto rest = remove_edges(g, first.edges);
        auto second = find_perfect_matching(rest);
        if (!second)
            return true;
        // Map edge ids of `rest` back to g.
        std::vector<EdgeId> kept;
        std::vector<char> in_first(g.edge_count(), 0);
        for (auto e : first.edges)
            in_first[e] = 1;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!in_first[e])
                kept.push_back(e);
        EdgeSet mapped;
        for (auto e : *second)
            mapped.push_back(kept[e]);
        out = std::make_pair(first.edges, make_edge_set(std::move(mapped)));
        return false;
    });
    return out;
}

bool has_two_disjoint_perfect_matchings(const Multigraph& g) { return two_disjoint_perfect_matchings(g).has_value(); }

namespace {

struct EdgeColourer {
    const Multigraph& g;
    std::size_t k;
    std::vector<std::uint64_t> used; // per vertex, colours present
    std::vector<int> colour;
    std::size_t coloured = 0;

    bool run()
    {
        if (coloured == g.edge_count())
            return true;
        // Most constrained uncoloured edge.
        EdgeId pick = 0;
        int best = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (colour[e] >= 0)
                continue;
            const auto [a, b] = g.edges()[e];
            int blocked = std::popcount(used[a] | used[b]);
            if (blocked > best) {
                best = blocked;
                pick = e;
            }
        }
        const auto [a, b] = g.edges()[pick];
        const std::uint64_t blocked = used[a] | used[b];
        // Colours are interchangeable until used; only one fresh colour is tried.
        std::uint64_t any_used = 0;
        for (auto u : used)
            any_used |= u;
        bool tried_fresh = false;
        for (std::size_t c = 0; c < k; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (blocked & bit)
                continue;
            if (!(any_used & bit)) {
                if (tried_fresh)
                    continue;
                tried_fresh = true;
            }
            colour[pick] = static_cast<int>(c);
            used[a] |= bit;
            used[b] |= bit;
            ++coloured;
            if (run())
                return true;
            --coloured;
            used[a] &= ~bit;
            used[b] &= ~bit;
            colour[pick] = -1;
        }
        return false;
    }
};

} // namespace

bool is_k_edge_colourable(const Multigraph& g, std::size_t k)
{
    if (g.edge_count() > chromatic_index_edge_cap)
        fail(ErrorCode::SizeGuard, "exact edge colouring is capped at " + std::to_string(chromatic_index_edge_cap) + " edges");
    if (g.max_degree() > k)
        return false;
    if (g.edge_count() == 0)
        return true;
    if (k > 64)
        fail(ErrorCode::SizeGuard, "more than 64 colours");
    EdgeColourer c{g, k, std::vector<std::uint64_t>(g.vertex_count(), 0), std::vector<int>(g.edge_count(), -1)};
    return c.run();
}

std::size_t chromatic_index(const Multigraph& g)
{
    if (g.edge_count() > chromatic_index_edge_cap)
        fail(ErrorCode::SizeGuard, "exact chromatic index is capped at " + std::to_string(chromatic_index_edge_cap) + " edges");
    std::size_t k = g.max_degree();
    while (!is_k_edge_colourable(g, k))
        ++k;
    return k;
}

bool spanning_regular_check(const Multigraph& g, std::span<const EdgeId> F, std::size_t k)
{
    std::vector<std::size_t> count(g.vertex_count(), 0);
    for (auto e : make_edge_set({F.begin(), F.end()})) {
        ++count[g.edge(e).a];
        ++count[g.edge(e).b];
    }
    return std::all_of(count.begin(), count.end(), [&](std::size_t c) { return c == 0 || c == k; });
}

std::vector<VertexSet> exposed_copies(const Multigraph& g, std::size_t k)
{
    const auto pattern = canonical_form(s4_plus_kM(k).graph);
    const std::size_t heavy = k + 3;
    std::vector<VertexSet> out;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            for (VertexId c = b + 1; c < n; ++c)
                for (VertexId d = c + 1; d < n; ++d) {
                    const VertexSet X{a, b, c, d};
                    auto sub = induced_subgraph(g, X);
                    if (sub.edge_count() != 2 * k + 5)
                        continue;
                    bool degrees_ok = true;
                    std::size_t heavy_count = 0;
                    for (VertexId i = 0; i < 4; ++i)
                        if (sub.degree(i) == heavy) {
                            ++heavy_count;
                            degrees_ok = degrees_ok && g.degree(X[i]) == heavy;
                        }
                    if (!degrees_ok || heavy_count < 3)
                        continue;
                    if (canonical_form(sub) == pattern)
                        out.push_back(X);
                }
    return out;
}

} // namespace hcolor
