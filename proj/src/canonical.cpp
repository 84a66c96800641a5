// Canonical labelling by colour refinement plus individualisation search.
//
// Every leaf of the search tree is a discrete ordered partition; its encoding
// is the upper triangle of the multiplicity matrix read in that order. The
// canonical form is the lexicographically least leaf encoding. Refinement is
// equivariant, so the set of leaf encodings depends only on the isomorphism
// class. Twin vertices (identical multiplicity rows) in a cell are explored
// once, since swapping them is an automorphism fixing the current partition.

#include "multigraph.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace hcolor {

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;
using Partition = std::vector<std::vector<VertexId>>;

class Canonicaliser {
public:
    explicit Canonicaliser(const Multigraph& g) : n_(g.vertex_count()), m_(g.edge_count())
    {
        mult_.assign(n_, std::vector<std::uint32_t>(n_, 0));
        for (const auto& e : g.edges()) {
            ++mult_[e.a][e.b];
            ++mult_[e.b][e.a];
        }
        for (const auto& row : mult_)
            for (auto x : row)
                if (x > 255)
                    fail(ErrorCode::SizeGuard, "edge multiplicity above 255");
        if (n_ > 65535 || m_ > 65535)
            fail(ErrorCode::SizeGuard, "graph too large for a canonical form");
    }

    CanonicalLabelling run()
    {
        Partition start;
        if (n_ > 0) {
            start.emplace_back();
            for (VertexId v = 0; v < n_; ++v)
                start.back().push_back(v);
        }
        refine(start);
        search(start);
        return {CanonicalForm{best_}, best_position_};
    }

private:
    bool twins(VertexId u, VertexId w) const
    {
        for (VertexId x = 0; x < n_; ++x)
            if (x != u && x != w && mult_[u][x] != mult_[w][x])
                return false;
        return true;
    }

    void refine(Partition& cells) const
    {
        std::vector<std::size_t> cell_of(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (auto v : cells[c])
                    cell_of[v] = c;
            Partition next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // Signature: sorted (neighbour cell, multiplicity) pairs.
                std::map<std::vector<std::pair<std::size_t, std::uint32_t>>, std::vector<VertexId>> split;
                for (auto v : cell) {
                    std::vector<std::pair<std::size_t, std::uint32_t>> sig;
                    for (VertexId w = 0; w < n_; ++w)
                        if (mult_[v][w])
                            sig.emplace_back(cell_of[w], mult_[v][w]);
                    std::sort(sig.begin(), sig.end());
                    split[std::move(sig)].push_back(v);
                }
                if (split.size() > 1)
                    changed = true;
                for (auto& [sig, members] : split)
                    next.push_back(std::move(members));
            }
            cells = std::move(next);
        }
    }

    void leaf(const Partition& cells)
    {
        std::vector<VertexId> position(n_);
        for (std::size_t c = 0; c < cells.size(); ++c)
            position[cells[c][0]] = static_cast<VertexId>(c);
        std::vector<VertexId> at(n_);
        for (VertexId v = 0; v < n_; ++v)
            at[position[v]] = v;
        std::vector<std::uint8_t> code;
        code.reserve(4 + n_ * (n_ - 1) / 2);
        code.push_back(static_cast<std::uint8_t>(n_ >> 8));
        code.push_back(static_cast<std::uint8_t>(n_ & 0xff));
        code.push_back(static_cast<std::uint8_t>(m_ >> 8));
        code.push_back(static_cast<std::uint8_t>(m_ & 0xff));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                code.push_back(static_cast<std::uint8_t>(mult_[at[i]][at[j]]));
        if (!have_best_ || code < best_) {
            best_ = std::move(code);
            best_position_ = std::move(position);
            have_best_ = true;
        }
    }

    void search(const Partition& cells)
    {
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<VertexId> tried;
        for (auto v : cells[target]) {
            if (std::any_of(tried.begin(), tried.end(), [&](VertexId t) { return twins(t, v); }))
                continue;
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<VertexId> rest;
                for (auto w : cells[c])
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(child);
            search(child);
        }
    }

    std::size_t n_;
    std::size_t m_;
    Matrix mult_;
    std::vector<std::uint8_t> best_;
    std::vector<VertexId> best_position_;
    bool have_best_ = false;
};

} // namespace

std::string CanonicalForm::digest() const
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CanonicalLabelling canonical_labelling(const Multigraph& g) { return Canonicaliser(g).run(); }

CanonicalForm canonical_form(const Multigraph& g) { return canonical_labelling(g).form; }

bool is_isomorphic(const Multigraph& a, const Multigraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace hcolor
