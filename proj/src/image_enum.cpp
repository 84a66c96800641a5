#include "image_enum.hpp"

#include "structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace hcolor {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t class_cap = 64;

std::vector<EdgeId> breadth_first_edges(const Multigraph& g)
{
    VertexId root = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(root))
            root = v;
    std::vector<EdgeId> order;
    std::vector<char> seen_v(g.vertex_count(), 0), seen_e(g.edge_count(), 0);
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
    return order;
}

std::vector<Mask> vertex_types(const Multigraph& guest, const TypePartition& p)
{
    std::vector<Mask> type(guest.vertex_count(), 0);
    for (EdgeId e = 0; e < guest.edge_count(); ++e) {
        type[guest.edges()[e].a] |= Mask{1} << p.class_of[e];
        type[guest.edges()[e].b] |= Mask{1} << p.class_of[e];
    }
    return type;
}

class PartitionSearch {
public:
    PartitionSearch(const Multigraph& guest, const ImageLimits& limits,
                    std::map<CanonicalForm, ImageClass>& classes, ImageAtlas& atlas)
        : g_(guest), limits_(limits), classes_(classes), atlas_(atlas), order_(breadth_first_edges(guest)),
          n_(guest.vertex_count()), set_(n_, 0), remaining_(n_, 0), class_of_(guest.edge_count(), 0),
          end_count_(class_cap, 0)
    {
        for (VertexId v = 0; v < n_; ++v)
            remaining_[v] = guest.degree(v);
    }

    void run() { step(0); }

private:
    struct Type {
        Mask mask;
        std::size_t count;
    };

    void step(std::size_t pos)
    {
        if (stopped_)
            return;
        if (pos == order_.size()) {
            record();
            return;
        }
        ++atlas_.nodes;
        if (limits_.node_limit && atlas_.nodes > limits_.node_limit) {
            atlas_.complete = false;
            stopped_ = true;
            return;
        }
        const EdgeId e = order_[pos];
        const auto [x, y] = g_.edges()[e];
        Mask allowed = (class_count_ == class_cap ? ~Mask{0} : (Mask{1} << class_count_) - 1) & ~set_[x] & ~set_[y];
        bool fresh_ok = class_count_ < class_cap;
        for (VertexId v : {x, y}) {
            Mask reach = 0;
            if (!can_be_new(v)) {
                for (const auto& t : types_)
                    if (fits(v, t.mask))
                        reach |= t.mask;
                allowed &= reach;
                fresh_ok = false;
            }
        }
        for (; allowed; allowed &= allowed - 1)
            try_class(pos, e, static_cast<std::uint32_t>(std::countr_zero(allowed)));
        if (fresh_ok) {
            ++class_count_;
            try_class(pos, e, class_count_ - 1);
            --class_count_;
        }
    }

    void try_class(std::size_t pos, EdgeId e, std::uint32_t c)
    {
        const auto [x, y] = g_.edges()[e];
        const Mask b = Mask{1} << c;
        class_of_[e] = c;
        set_[x] |= b;
        set_[y] |= b;
        --remaining_[x];
        --remaining_[y];
        bool ok = true;
        std::size_t registered = 0;
        for (VertexId v : {x, y}) {
            if (remaining_[v] == 0 && ok) {
                ok = register_type(set_[v]);
                ++registered;
            }
        }
        if (ok && propagate())
            step(pos + 1);
        // Types were registered in order x then y; undo in reverse.
        std::vector<VertexId> done;
        for (VertexId v : {x, y})
            if (remaining_[v] == 0)
                done.push_back(v);
        for (std::size_t i = registered; i-- > 0;)
            unregister_type(set_[done[i]]);
        ++remaining_[x];
        ++remaining_[y];
        set_[x] &= ~b;
        set_[y] &= ~b;
        // x == y never happens (no loops), so clearing both is exact.
    }

    // Adds a completed vertex type. Fails if a class would gain a third end.
    bool register_type(Mask mask)
    {
        for (auto& t : types_)
            if (t.mask == mask) {
                ++t.count;
                return true;
            }
        types_.push_back({mask, 1});
        bool ok = true;
        for (Mask m = mask; m; m &= m - 1)
            if (++end_count_[std::countr_zero(m)] > 2)
                ok = false;
        return ok;
    }

    void unregister_type(Mask mask)
    {
        for (std::size_t i = 0; i < types_.size(); ++i)
            if (types_[i].mask == mask) {
                if (--types_[i].count == 0) {
                    for (Mask m = mask; m; m &= m - 1)
                        --end_count_[std::countr_zero(m)];
                    types_.erase(types_.begin() + static_cast<std::ptrdiff_t>(i));
                }
                return;
            }
    }

    bool fits(VertexId v, Mask type) const
    {
        return (set_[v] & ~type) == 0 && static_cast<std::size_t>(std::popcount(type)) == g_.degree(v);
    }

    // A vertex may still receive a type nobody has yet only if none of its
    // classes already has two ends.
    bool can_be_new(VertexId v) const
    {
        for (Mask m = set_[v]; m; m &= m - 1)
            if (end_count_[std::countr_zero(m)] >= 2)
                return false;
        return true;
    }

    bool propagate()
    {
        // Incomplete vertices need a reachable final type.
        for (VertexId v = 0; v < n_; ++v) {
            if (remaining_[v] == 0 || set_[v] == 0 || can_be_new(v))
                continue;
            bool any = false;
            for (const auto& t : types_)
                if (fits(v, t.mask)) {
                    any = true;
                    break;
                }
            if (!any)
                return false;
        }
        // A class with exactly one end: vertices that cannot take that end
        // must all become its second end, hence share one type.
        for (VertexId v = 0; v < n_; ++v) {
            if (remaining_[v] == 0 || set_[v] == 0)
                continue;
            for (VertexId w = v + 1; w < n_; ++w) {
                if (remaining_[w] == 0)
                    continue;
                const Mask shared = set_[v] & set_[w];
                if (!shared)
                    continue;
                for (Mask m = shared; m; m &= m - 1) {
                    const auto c = static_cast<std::size_t>(std::countr_zero(m));
                    if (end_count_[c] != 1)
                        continue;
                    const Mask end = only_end(c);
                    if (fits(v, end) || fits(w, end))
                        continue;
                    if (g_.degree(v) != g_.degree(w) ||
                        static_cast<std::size_t>(std::popcount(set_[v] | set_[w])) > g_.degree(v))
                        return false;
                }
            }
        }
        return true;
    }

    Mask only_end(std::size_t c) const
    {
        for (const auto& t : types_)
            if (t.mask >> c & 1)
                return t.mask;
        return 0;
    }

    void record()
    {
        ++atlas_.partitions;
        TypePartition p{class_of_, class_count_};
        ImageGraph image = realize_image(g_, p);
        auto form = canonical_form(image.graph);
        auto it = classes_.find(form);
        if (it == classes_.end()) {
            ImageClass cls{form, std::move(image), std::move(p), 0};
            it = classes_.emplace(std::move(form), std::move(cls)).first;
        }
        ++it->second.multiplicity;
    }

    const Multigraph& g_;
    ImageLimits limits_;
    std::map<CanonicalForm, ImageClass>& classes_;
    ImageAtlas& atlas_;
    std::vector<EdgeId> order_;
    std::size_t n_;
    std::vector<Mask> set_;
    std::vector<std::size_t> remaining_;
    std::vector<std::uint32_t> class_of_;
    std::uint32_t class_count_ = 0;
    std::vector<Type> types_;
    std::vector<std::size_t> end_count_;
    bool stopped_ = false;
};

} // namespace

std::optional<std::string> type_partition_violation(const Multigraph& guest, const TypePartition& p)
{
    if (p.class_of.size() != guest.edge_count())
        return "partition does not label every guest edge";
    if (p.class_count > class_cap)
        return "more than 64 classes";
    for (auto c : p.class_of)
        if (c >= p.class_count)
            return "class id out of range";
    // Restricted growth along the breadth-first edge order.
    std::uint32_t next = 0;
    for (auto e : breadth_first_edges(guest)) {
        if (p.class_of[e] > next)
            return "labels are not in restricted-growth form";
        if (p.class_of[e] == next)
            ++next;
    }
    if (next != p.class_count)
        return "unused class ids";
    for (VertexId v = 0; v < guest.vertex_count(); ++v) {
        Mask seen = 0;
        for (EdgeId e : guest.incident(v)) {
            const Mask b = Mask{1} << p.class_of[e];
            if (seen & b)
                return "adjacent edges share class " + std::to_string(p.class_of[e]);
            seen |= b;
        }
    }
    auto types = vertex_types(guest, p);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
    for (std::uint32_t c = 0; c < p.class_count; ++c) {
        std::size_t ends = 0;
        for (auto t : types)
            ends += t >> c & 1;
        if (ends > 2)
            return "class " + std::to_string(c) + " lies in more than two types";
    }
    return std::nullopt;
}

ImageGraph realize_image(const Multigraph& guest, const TypePartition& p)
{
    if (auto why = type_partition_violation(guest, p))
        fail(ErrorCode::Incomplete, "not a complete type partition: " + *why);
    const auto type = vertex_types(guest, p);
    std::vector<Mask> distinct;
    std::vector<VertexId> vertex_of(guest.vertex_count());
    for (VertexId v = 0; v < guest.vertex_count(); ++v) {
        auto it = std::find(distinct.begin(), distinct.end(), type[v]);
        vertex_of[v] = static_cast<VertexId>(it - distinct.begin());
        if (it == distinct.end())
            distinct.push_back(type[v]);
    }
    ImageGraph out;
    std::size_t count = distinct.size();
    for (VertexId i = 0; i < count; ++i)
        out.used_vertices.push_back(i);
    std::vector<Edge> edges;
    std::size_t missing = 0;
    for (std::uint32_t c = 0; c < p.class_count; ++c) {
        std::size_t ends = 0;
        for (auto t : distinct)
            ends += t >> c & 1;
        missing += ends == 1;
    }
    // A lone missing endpoint cannot come from splitting a vertex of degree
    // >= 2, so it is an unused leaf. Several may or may not share an unused
    // vertex in some host; they are reported as split.
    auto& loose = missing == 1 ? out.unused_leaves : out.split_vertices;
    for (std::uint32_t c = 0; c < p.class_count; ++c) {
        std::vector<VertexId> ends;
        for (VertexId i = 0; i < distinct.size(); ++i)
            if (distinct[i] >> c & 1)
                ends.push_back(i);
        if (ends.size() == 1) {
            loose.push_back(static_cast<VertexId>(count));
            ends.push_back(static_cast<VertexId>(count++));
        }
        edges.push_back({ends[0], ends[1]});
    }
    out.graph = Multigraph(count, std::move(edges));
    std::vector<EdgeId> witness(p.class_of.begin(), p.class_of.end());
    out.witness = Colouring{out.graph, guest, std::move(witness)};
    return out;
}

ImageAtlas enumerate_splitted_images(const Multigraph& guest, const ImageLimits& limits)
{
    if (guest.vertex_count() <= 2)
        fail(ErrorCode::InvalidArgument, "image enumeration needs more than two guest vertices");
    if (!is_connected(guest))
        fail(ErrorCode::Disconnected, "image enumeration needs a connected guest");
    if (guest.edge_count() > class_cap)
        fail(ErrorCode::SizeGuard, "image enumeration is capped at 64 guest edges");

    ImageAtlas atlas;
    std::map<CanonicalForm, ImageClass> classes;
    PartitionSearch(guest, limits, classes, atlas).run();
    for (auto& [form, cls] : classes)
        atlas.classes.push_back(std::move(cls));
    const auto t = guest.max_degree();
    atlas.tk2_realizable = guest.edge_count() <= chromatic_index_edge_cap && is_regular(guest, t) &&
                           is_k_edge_colourable(guest, t);
    return atlas;
}

} // namespace hcolor
