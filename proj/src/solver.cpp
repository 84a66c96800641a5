#include "solver.hpp"

#include "structure.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <queue>

namespace hcolor {

const char* to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Guest edges in breadth-first discovery order from a maximum-degree root,
/// component by component.
std::vector<EdgeId> breadth_first_edge_order(const Multigraph& g)
{
    std::vector<EdgeId> order;
    std::vector<char> seen_v(g.vertex_count(), 0), seen_e(g.edge_count(), 0);
    while (order.size() < g.edge_count()) {
        VertexId root = 0;
        std::size_t best = 0;
        bool any = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!seen_v[v] && g.degree(v) > 0 && (!any || g.degree(v) > best)) {
                root = v;
                best = g.degree(v);
                any = true;
            }
        std::queue<VertexId> q;
        seen_v[root] = 1;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (!seen_e[e]) {
                    seen_e[e] = 1;
                    order.push_back(e);
                }
                VertexId w = g.edges()[e].other(v);
                if (!seen_v[w]) {
                    seen_v[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

class FixedHostSearch {
public:
    FixedHostSearch(const Multigraph& host, const Multigraph& guest, const SolveLimits& limits,
                    const std::function<bool(const std::vector<EdgeId>&)>& visit)
        : host_(host), guest_(guest), limits_(limits), visit_(visit)
    {
        if (host.vertex_count() > solver_host_cap || host.edge_count() > solver_host_cap)
            fail(ErrorCode::SizeGuard, "host exceeds " + std::to_string(solver_host_cap) + " vertices or edges");
        inc_.assign(host.vertex_count(), 0);
        ends_.assign(host.edge_count(), 0);
        for (EdgeId h = 0; h < host.edge_count(); ++h) {
            const auto [a, b] = host.edges()[h];
            inc_[a] |= bit(h);
            inc_[b] |= bit(h);
            ends_[h] = bit(a) | bit(b);
        }
        const std::size_t n = guest.vertex_count();
        dom_.assign(n, 0);
        reach_.assign(n, 0);
        used_at_.assign(n, 0);
        for (VertexId x = 0; x < n; ++x) {
            for (VertexId v = 0; v < host.vertex_count(); ++v)
                if (host.degree(v) == guest.degree(x))
                    dom_[x] |= bit(v);
            reach_[x] = reach_of(dom_[x]);
        }
        image_.assign(guest.edge_count(), unassigned);
        assigned_adjacent_.assign(guest.edge_count(), 0);
        auto order = breadth_first_edge_order(guest);
        rank_.assign(guest.edge_count(), 0);
        for (std::size_t i = 0; i < order.size(); ++i)
            rank_[order[i]] = i;
        start_ = std::chrono::steady_clock::now();
    }

    SolveStatus run(SolveStats& stats)
    {
        bool feasible = std::all_of(dom_.begin(), dom_.end(), [](Mask d) { return d != 0; });
        if (feasible)
            search();
        stats = stats_;
        if (aborted_)
            return found_ ? SolveStatus::Sat : SolveStatus::Unknown;
        return found_ ? SolveStatus::Sat : SolveStatus::Unsat;
    }

    bool aborted() const { return aborted_; }

private:
    static constexpr EdgeId unassigned = static_cast<EdgeId>(-1);

    Mask reach_of(Mask dom) const
    {
        Mask out = 0;
        for (; dom; dom &= dom - 1)
            out |= inc_[std::countr_zero(dom)];
        return out;
    }

    Mask candidates(EdgeId e) const
    {
        const auto [x, y] = guest_.edges()[e];
        return reach_[x] & reach_[y] & ~used_at_[x] & ~used_at_[y];
    }

    bool out_of_budget()
    {
        if (limits_.node_limit && stats_.nodes > limits_.node_limit)
            return true;
        if (limits_.time_limit_seconds > 0 && (stats_.nodes & 0xfff) == 0) {
            std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
            if (spent.count() > limits_.time_limit_seconds)
                return true;
        }
        return false;
    }

    // Returns false once the search should stop (visitor asked, or budget).
    bool search()
    {
        if (assigned_ == guest_.edge_count()) {
            found_ = true;
            return visit_(image_);
        }
        ++stats_.nodes;
        if (out_of_budget()) {
            aborted_ = true;
            return false;
        }

        // Most already-assigned neighbours first, then fewest candidates.
        EdgeId pick = unassigned;
        Mask pick_cands = 0;
        for (EdgeId e = 0; e < guest_.edge_count(); ++e) {
            if (image_[e] != unassigned)
                continue;
            const Mask c = candidates(e);
            if (pick == unassigned || assigned_adjacent_[e] > assigned_adjacent_[pick] ||
                (assigned_adjacent_[e] == assigned_adjacent_[pick] &&
                 (std::popcount(c) < std::popcount(pick_cands) ||
                  (std::popcount(c) == std::popcount(pick_cands) && rank_[e] < rank_[pick])))) {
                pick = e;
                pick_cands = c;
            }
        }

        const auto [x, y] = guest_.edges()[pick];
        for (Mask c = pick_cands; c; c &= c - 1) {
            const auto h = static_cast<EdgeId>(std::countr_zero(c));
            const Mask saved[] = {dom_[x], dom_[y], reach_[x], reach_[y], used_at_[x], used_at_[y]};
            assign(pick, h);
            bool keep_going = true;
            if (consistent_around(x) && consistent_around(y))
                keep_going = search();
            else
                ++stats_.prunes;
            unassign(pick);
            dom_[x] = saved[0];
            dom_[y] = saved[1];
            reach_[x] = saved[2];
            reach_[y] = saved[3];
            used_at_[x] = saved[4];
            used_at_[y] = saved[5];
            if (!keep_going)
                return false;
        }
        return true;
    }

    void assign(EdgeId e, EdgeId h)
    {
        const auto [x, y] = guest_.edges()[e];
        image_[e] = h;
        ++assigned_;
        used_at_[x] |= bit(h);
        used_at_[y] |= bit(h);
        dom_[x] &= ends_[h];
        dom_[y] &= ends_[h];
        reach_[x] = reach_of(dom_[x]);
        reach_[y] = reach_of(dom_[y]);
        for (VertexId v : {x, y})
            for (EdgeId f : guest_.incident(v))
                if (f != e)
                    ++assigned_adjacent_[f];
    }

    void unassign(EdgeId e)
    {
        const auto [x, y] = guest_.edges()[e];
        image_[e] = unassigned;
        --assigned_;
        for (VertexId v : {x, y})
            for (EdgeId f : guest_.incident(v))
                if (f != e)
                    --assigned_adjacent_[f];
    }

    bool consistent_around(VertexId v) const
    {
        if (!dom_[v])
            return false;
        for (EdgeId f : guest_.incident(v))
            if (image_[f] == unassigned && !candidates(f))
                return false;
        return true;
    }

    const Multigraph& host_;
    const Multigraph& guest_;
    SolveLimits limits_;
    const std::function<bool(const std::vector<EdgeId>&)>& visit_;

    std::vector<Mask> inc_, ends_;
    std::vector<Mask> dom_, reach_, used_at_;
    std::vector<EdgeId> image_;
    std::vector<std::size_t> assigned_adjacent_;
    std::vector<std::size_t> rank_;
    std::size_t assigned_ = 0;
    SolveStats stats_;
    bool found_ = false;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

} // namespace

SolveResult solve_each(const Multigraph& host, const Multigraph& guest, const SolveLimits& limits,
                       const std::function<bool(const std::vector<EdgeId>&)>& visit)
{
    SolveResult result;
    FixedHostSearch search(host, guest, limits, visit);
    result.status = search.run(result.stats);
    result.aborted = search.aborted();
    return result;
}

SolveResult solve(const Multigraph& host, const Multigraph& guest, SolveMode mode, const SolveLimits& limits)
{
    std::vector<Colouring> found;
    std::uint64_t count = 0;
    auto result = solve_each(host, guest, limits, [&](const std::vector<EdgeId>& map) {
        Colouring c{host, guest, map};
        if (!check_colouring(c).valid)
            fail(ErrorCode::InvalidColouring, "solver produced an invalid colouring");
        ++count;
        if (mode != SolveMode::Count)
            found.push_back(std::move(c));
        return mode != SolveMode::First;
    });
    result.colourings = std::move(found);
    result.count = count;
    // A truncated enumeration is not an answer, even with witnesses in hand.
    if (mode != SolveMode::First && result.aborted)
        result.status = SolveStatus::Unknown;
    return result;
}

bool tk2_colourable(const Multigraph& guest, std::size_t t)
{
    return is_regular(guest, t) && chromatic_index(guest) == t;
}

} // namespace hcolor
