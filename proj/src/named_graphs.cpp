#include "named_graphs.hpp"

#include "structure.hpp"

#include <algorithm>
#include <set>

namespace hcolor {

VertexId LabelledGraph::vertex(const std::string& label) const
{
    auto it = vertex_roles.find(label);
    if (it == vertex_roles.end())
        fail(ErrorCode::InvalidArgument, "no vertex labelled " + label);
    return it->second;
}

EdgeId LabelledGraph::edge(const std::string& label) const
{
    auto it = edge_roles.find(label);
    if (it == edge_roles.end())
        fail(ErrorCode::InvalidArgument, "no edge labelled " + label);
    return it->second;
}

namespace {

class Builder {
public:
    VertexId add_vertex(const std::string& label)
    {
        auto id = static_cast<VertexId>(count_++);
        if (!label.empty())
            out_.vertex_roles[label] = id;
        return id;
    }

    EdgeId add_edge(VertexId a, VertexId b, const std::string& label = {}, bool bold = false)
    {
        auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({a, b});
        if (!label.empty())
            out_.edge_roles[label] = id;
        if (bold)
            out_.bold_matching.push_back(id);
        return id;
    }

    LabelledGraph finish(std::string name)
    {
        out_.graph = Multigraph(count_, std::move(edges_), std::move(name));
        std::sort(out_.bold_matching.begin(), out_.bold_matching.end());
        return std::move(out_);
    }

private:
    std::size_t count_ = 0;
    std::vector<Edge> edges_;
    LabelledGraph out_;
};

std::string sup(const std::string& base, int copy) { return copy ? base + "^" + std::to_string(copy) : base; }

std::string sub(const std::string& base, int copy, int j)
{
    return sup(base, copy) + "_" + std::to_string(j);
}

// The gadget {u, v, w}: m1 = uv, m2 = uw, l_1..l_{k+2} between v and w.
// Returns u. `copy` = 0 means unsuperscripted labels.
VertexId add_gadget(Builder& b, int copy, int k)
{
    const VertexId u = b.add_vertex(sup("u", copy));
    const VertexId v = b.add_vertex(sup("v", copy));
    const VertexId w = b.add_vertex(sup("w", copy));
    b.add_edge(u, v, sup("m", copy) + "_1");
    b.add_edge(u, w, sup("m", copy) + "_2");
    for (int j = 1; j <= k + 2; ++j)
        b.add_edge(v, w, sub("l", copy, j), j == 1);
    return u;
}

void check_k(int k)
{
    if (k < 0)
        fail(ErrorCode::InvalidArgument, "k must be non-negative");
}

std::string plus_name(const char* base, int k) { return k ? std::string(base) + "+" + std::to_string(k) + "M" : base; }

} // namespace

LabelledGraph petersen()
{
    Builder b;
    std::vector<VertexId> u, v;
    for (int i = 1; i <= 5; ++i)
        u.push_back(b.add_vertex("u" + std::to_string(i)));
    for (int i = 1; i <= 5; ++i)
        v.push_back(b.add_vertex("v" + std::to_string(i)));
    auto name = [](const char* p, int i, const char* q, int j) {
        return p + std::to_string(i + 1) + q + std::to_string(j + 1);
    };
    for (int i = 0; i < 5; ++i)
        b.add_edge(u[i], u[(i + 1) % 5], name("u", i, "u", (i + 1) % 5));
    for (int i = 0; i < 5; ++i)
        b.add_edge(u[i], v[i], name("u", i, "v", i));
    for (int i = 0; i < 5; ++i)
        b.add_edge(v[i], v[(i + 2) % 5], name("v", i, "v", (i + 2) % 5));
    return b.finish("petersen");
}

LabelledGraph s4_plus_kM(int k)
{
    check_k(k);
    Builder b;
    const VertexId z = b.add_vertex("z");
    const VertexId u = b.add_vertex("u");
    const VertexId v = b.add_vertex("v");
    const VertexId w = b.add_vertex("w");
    for (int j = 1; j <= k + 1; ++j)
        b.add_edge(z, u, "r_" + std::to_string(j), j == 1);
    b.add_edge(u, v, "m_1");
    b.add_edge(u, w, "m_2");
    for (int j = 1; j <= k + 2; ++j)
        b.add_edge(v, w, "l_" + std::to_string(j), j == 1);
    return b.finish(plus_name("s4", k));
}

LabelledGraph s4() { return s4_plus_kM(0); }

LabelledGraph s6_plus_kM(int k)
{
    check_k(k);
    Builder b;
    const VertexId u1 = add_gadget(b, 1, k);
    const VertexId u2 = add_gadget(b, 2, k);
    for (int j = 1; j <= k + 1; ++j)
        b.add_edge(u1, u2, "r_" + std::to_string(j), j == 1);
    return b.finish(plus_name("s6", k));
}

LabelledGraph s6() { return s6_plus_kM(0); }

LabelledGraph s10()
{
    Builder b;
    const VertexId c = b.add_vertex("c");
    for (int i = 1; i <= 3; ++i) {
        const VertexId u = add_gadget(b, i, 0);
        b.add_edge(c, u, sup("r", i) + "_1");
    }
    return b.finish("s10");
}

LabelledGraph s12_plus_kM(int k)
{
    check_k(k);
    Builder b;
    std::vector<VertexId> z;
    for (int i = 1; i <= 3; ++i) {
        z.push_back(b.add_vertex(sup("z", i)));
        const VertexId u = add_gadget(b, i, k);
        for (int j = 1; j <= k + 1; ++j)
            b.add_edge(z.back(), u, sub("r", i, j), j == 1);
    }
    b.add_edge(z[0], z[1], "z^1z^2");
    b.add_edge(z[1], z[2], "z^2z^3");
    b.add_edge(z[0], z[2], "z^1z^3");
    return b.finish(plus_name("s12", k));
}

LabelledGraph s12() { return s12_plus_kM(0); }

LabelledGraph complete(int n)
{
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "complete graph needs n >= 1");
    Builder b;
    for (int i = 0; i < n; ++i)
        b.add_vertex({});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_edge(i, j);
    return b.finish("K" + std::to_string(n));
}

LabelledGraph complete_minus_edge(int n)
{
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "complete_minus_edge needs n >= 2");
    Builder b;
    b.add_vertex("deficient1");
    b.add_vertex("deficient2");
    for (int i = 2; i < n; ++i)
        b.add_vertex({});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1))
                b.add_edge(i, j);
    return b.finish("K" + std::to_string(n) + "-e");
}

LabelledGraph star(int t)
{
    if (t < 1)
        fail(ErrorCode::InvalidArgument, "star needs t >= 1");
    Builder b;
    const VertexId c = b.add_vertex("centre");
    for (int i = 1; i <= t; ++i)
        b.add_edge(c, b.add_vertex("leaf" + std::to_string(i)));
    return b.finish("K1," + std::to_string(t));
}

LabelledGraph t_k2(int t)
{
    if (t < 1)
        fail(ErrorCode::InvalidArgument, "tK2 needs t >= 1");
    Builder b;
    const VertexId a = b.add_vertex("a");
    const VertexId c = b.add_vertex("b");
    for (int i = 0; i < t; ++i)
        b.add_edge(a, c);
    return b.finish(std::to_string(t) + "K2");
}

LabelledGraph j_graph(int r)
{
    if (r <= 1)
        fail(ErrorCode::InvalidArgument, "j_graph needs r > 1");
    Builder b;
    const int size = 2 * r + 1;
    std::vector<VertexId> deficient;
    for (int copy = 1; copy <= r; ++copy) {
        std::vector<VertexId> vs;
        for (int i = 0; i < size; ++i)
            vs.push_back(b.add_vertex("R" + std::to_string(copy) + "." + std::to_string(i)));
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (!(i == 0 && j == 1))
                    b.add_edge(vs[i], vs[j]);
        deficient.push_back(vs[0]);
        deficient.push_back(vs[1]);
    }
    const VertexId centre = b.add_vertex("u");
    for (auto d : deficient)
        b.add_edge(d, centre);
    return b.finish("J" + std::to_string(2 * r));
}

std::vector<Multigraph> k_family_members(int t, int r)
{
    if (t < 2 || r < 1 || (t * r) % 2 || r < t - 1)
        return {};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            pairs.emplace_back(i, j);
    std::vector<int> deficit(t, r);
    std::vector<int> mult(pairs.size(), 0);
    std::set<CanonicalForm> seen;
    std::vector<std::pair<CanonicalForm, Multigraph>> found;

    // Each vertex still needs one edge to every later partner.
    auto later_pairs = [&](std::size_t from, int v) {
        int count = 0;
        for (std::size_t p = from; p < pairs.size(); ++p)
            if (pairs[p].first == v || pairs[p].second == v)
                ++count;
        return count;
    };
    std::function<void(std::size_t)> assign = [&](std::size_t p) {
        if (p == pairs.size()) {
            if (std::any_of(deficit.begin(), deficit.end(), [](int d) { return d != 0; }))
                return;
            std::vector<Edge> edges;
            for (std::size_t q = 0; q < pairs.size(); ++q)
                for (int c = 0; c < mult[q]; ++c)
                    edges.push_back({static_cast<VertexId>(pairs[q].first), static_cast<VertexId>(pairs[q].second)});
            Multigraph g(t, std::move(edges));
            auto form = canonical_form(g);
            if (seen.insert(form).second)
                found.emplace_back(std::move(form), std::move(g));
            return;
        }
        const auto [a, b] = pairs[p];
        const int room_a = deficit[a] - (later_pairs(p + 1, a));
        const int room_b = deficit[b] - (later_pairs(p + 1, b));
        for (int m = 1; m <= std::min(room_a, room_b); ++m) {
            mult[p] = m;
            deficit[a] -= m;
            deficit[b] -= m;
            assign(p + 1);
            deficit[a] += m;
            deficit[b] += m;
        }
        mult[p] = 0;
    };
    assign(0);
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Multigraph> out;
    for (auto& [form, g] : found)
        out.push_back(g.renamed("K_" + std::to_string(t) + "^" + std::to_string(r)));
    return out;
}

bool is_k_family_member(const Multigraph& g, std::size_t r)
{
    if (!is_regular(g, r))
        return false;
    for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = a + 1; b < g.vertex_count(); ++b)
            if (g.multiplicity(a, b) == 0)
                return false;
    return true;
}

namespace {

// Orderly generation over the column-wise upper-triangle string
// A[0][1] | A[0][2] A[1][2] | A[0][3] ... , keeping only prefixes that are
// lexicographically greatest among all relabellings of their vertices.
class RegularGenerator {
public:
    RegularGenerator(std::size_t n, std::size_t r, std::size_t cap,
                     const std::function<bool(const Multigraph&)>& visit)
        : n_(n), r_(r), cap_(cap), visit_(visit), a_(n, std::vector<std::size_t>(n, 0)), deg_(n, 0)
    {
    }

    void run()
    {
        if (n_ == 0 || (n_ * r_) % 2)
            return;
        if (n_ == 1) {
            if (r_ == 0)
                emit();
            return;
        }
        add_column(1);
    }

private:
    void emit()
    {
        std::vector<Edge> edges;
        for (VertexId i = 0; i < n_; ++i)
            for (VertexId j = i + 1; j < n_; ++j)
                for (std::size_t c = 0; c < a_[i][j]; ++c)
                    edges.push_back({i, j});
        if (!visit_(Multigraph(n_, std::move(edges))))
            stopped_ = true;
    }

    void add_column(std::size_t j)
    {
        if (stopped_)
            return;
        if (j == n_) {
            emit();
            return;
        }
        std::vector<std::size_t> column(j, 0);
        fill(j, 0, 0, column);
    }

    // Chooses A[i][j] for i = row.. j-1, in decreasing order so that larger
    // strings come first.
    void fill(std::size_t j, std::size_t row, std::size_t sum, std::vector<std::size_t>& column)
    {
        if (stopped_)
            return;
        if (row == j) {
            if (sum == 0 && r_ > 0)
                return; // connected prefixes only
            const bool last = j + 1 == n_;
            if (last && sum != r_)
                return;
            if (!last) {
                // Remaining vertices must be able to absorb every deficit.
                std::size_t deficit = r_ - sum;
                for (std::size_t i = 0; i < j; ++i)
                    deficit += r_ - deg_[i] - column[i];
                if (deficit > (n_ - 1 - j) * r_)
                    return;
            }
            for (std::size_t i = 0; i < j; ++i) {
                a_[i][j] = a_[j][i] = column[i];
                deg_[i] += column[i];
            }
            deg_[j] = sum;
            if (is_canonical(j + 1))
                add_column(j + 1);
            for (std::size_t i = 0; i < j; ++i) {
                deg_[i] -= column[i];
                a_[i][j] = a_[j][i] = 0;
            }
            deg_[j] = 0;
            return;
        }
        const bool last = j + 1 == n_;
        const std::size_t room = std::min({cap_, r_ - deg_[row], r_ - sum});
        if (last) {
            // Final column is forced.
            const std::size_t need = r_ - deg_[row];
            if (need > room)
                return;
            column[row] = need;
            fill(j, row + 1, sum + need, column);
            column[row] = 0;
            return;
        }
        for (std::size_t m = room + 1; m-- > 0;) {
            column[row] = m;
            fill(j, row + 1, sum + m, column);
        }
        column[row] = 0;
    }

    // Is the string of the first k vertices maximal under relabelling?
    bool is_canonical(std::size_t k)
    {
        std::vector<std::size_t> perm;
        std::vector<char> used(k, 0);
        return !beats(k, perm, used);
    }

    // Returns true if some completion of perm gives a strictly larger string.
    bool beats(std::size_t k, std::vector<std::size_t>& perm, std::vector<char>& used)
    {
        const std::size_t pos = perm.size();
        if (pos == k)
            return false;
        for (std::size_t v = 0; v < k; ++v) {
            if (used[v])
                continue;
            // Compare column `pos` of the relabelled string with the original.
            int cmp = 0;
            for (std::size_t i = 0; i < pos && cmp == 0; ++i) {
                const auto mine = a_[perm[i]][v];
                const auto orig = a_[i][pos];
                if (mine != orig)
                    cmp = mine > orig ? 1 : -1;
            }
            if (cmp < 0)
                continue;
            if (cmp > 0)
                return true;
            perm.push_back(v);
            used[v] = 1;
            const bool better = beats(k, perm, used);
            used[v] = 0;
            perm.pop_back();
            if (better)
                return true;
        }
        return false;
    }

    std::size_t n_, r_, cap_;
    const std::function<bool(const Multigraph&)>& visit_;
    std::vector<std::vector<std::size_t>> a_;
    std::vector<std::size_t> deg_;
    bool stopped_ = false;
};

} // namespace

void enumerate_connected_regular_multigraphs(std::size_t n, std::size_t r, std::size_t max_multiplicity,
                                             const std::function<bool(const Multigraph&)>& visit)
{
    RegularGenerator(n, r, max_multiplicity, visit).run();
}

std::optional<Multigraph> poorly_matchable_witness(int r, int max_order)
{
    if (r < 4)
        fail(ErrorCode::InvalidArgument, "poorly matchable witness search needs r >= 4");
    // A smallest witness is connected: a disconnected one has a witness component.
    std::optional<Multigraph> found;
    for (int n = 2; n <= max_order && !found; n += 2) {
        enumerate_connected_regular_multigraphs(n, r, r, [&](const Multigraph& g) {
            if (!find_perfect_matching(g))
                return true;
            if (has_two_disjoint_perfect_matchings(g))
                return true;
            found = g.renamed("poorly-matchable-r" + std::to_string(r) + "-n" + std::to_string(n));
            return false;
        });
    }
    return found;
}

std::vector<std::string> named_generators()
{
    return {"petersen", "s4", "s6", "s10", "s12", "s4+kM", "s6+kM", "s12+kM", "complete", "complete-minus-edge",
            "star", "tk2", "j", "k-family", "poorly-matchable"};
}

LabelledGraph generate_named(const std::string& name, const std::vector<int>& params)
{
    auto param = [&](std::size_t i) {
        if (i >= params.size())
            fail(ErrorCode::InvalidArgument, "generator " + name + " needs " + std::to_string(i + 1) + " parameter(s)");
        return params[i];
    };
    if (name == "petersen")
        return petersen();
    if (name == "s4")
        return s4();
    if (name == "s6")
        return s6();
    if (name == "s10")
        return s10();
    if (name == "s12")
        return s12();
    if (name == "s4+kM")
        return s4_plus_kM(param(0));
    if (name == "s6+kM")
        return s6_plus_kM(param(0));
    if (name == "s12+kM")
        return s12_plus_kM(param(0));
    if (name == "complete")
        return complete(param(0));
    if (name == "complete-minus-edge")
        return complete_minus_edge(param(0));
    if (name == "star")
        return star(param(0));
    if (name == "tk2")
        return t_k2(param(0));
    if (name == "j")
        return j_graph(param(0));
    if (name == "k-family") {
        // third parameter selects the member (default 0)
        auto members = k_family_members(param(0), param(1));
        const auto index = params.size() > 2 ? static_cast<std::size_t>(params[2]) : 0;
        if (index >= members.size())
            fail(ErrorCode::InvalidArgument, "k-family member index out of range");
        return LabelledGraph{members[index], {}, {}, {}};
    }
    if (name == "poorly-matchable") {
        auto witness = poorly_matchable_witness(param(0), param(1));
        if (!witness)
            fail(ErrorCode::Incomplete, "no poorly matchable witness within the order bound");
        return LabelledGraph{*witness, {}, {}, {}};
    }
    fail(ErrorCode::InvalidArgument, "unknown generator " + name);
}

} // namespace hcolor
