#include "io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hcolor {

namespace {

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back(line);
        start = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t to_number(std::string_view s, std::size_t line)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorCode::Parse, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                                   std::string(s) + "'");
    return v;
}

} // namespace

Multigraph parse_edge_list(std::string_view text, std::string name)
{
    auto lines = split_lines(text);
    std::size_t i = 0;
    auto next_data = [&]() -> std::optional<std::pair<std::size_t, std::string_view>> {
        while (i < lines.size()) {
            auto line = trim(lines[i++]);
            if (line.empty() || line.front() == '#')
                continue;
            return std::make_pair(i, line);
        }
        return std::nullopt;
    };
    auto header = next_data();
    if (!header)
        fail(ErrorCode::Parse, "missing 'n m' header");
    auto hf = fields(header->second);
    if (hf.size() != 2)
        fail(ErrorCode::Parse, "line " + std::to_string(header->first) + ": header must be 'n m'");
    const auto n = to_number(hf[0], header->first);
    const auto m = to_number(hf[1], header->first);
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < m; ++k) {
        auto row = next_data();
        if (!row)
            fail(ErrorCode::Parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
        auto f = fields(row->second);
        if (f.size() != 2)
            fail(ErrorCode::Parse, "line " + std::to_string(row->first) + ": edge must be 'a b'");
        const auto a = to_number(f[0], row->first);
        const auto b = to_number(f[1], row->first);
        if (a >= n || b >= n)
            fail(ErrorCode::Parse, "line " + std::to_string(row->first) + ": vertex id out of range");
        if (a == b)
            fail(ErrorCode::Parse, "line " + std::to_string(row->first) + ": loops are not allowed");
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
    if (auto extra = next_data())
        fail(ErrorCode::Parse, "line " + std::to_string(extra->first) + ": more edges than declared");
    return Multigraph(n, std::move(edges), std::move(name));
}

Multigraph read_edge_list(const std::filesystem::path& path)
{
    return parse_edge_list(read_file(path), path.stem().string());
}

std::string format_edge_list(const Multigraph& g)
{
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

std::string format_labelled(const LabelledGraph& g)
{
    std::string out = "# hcolor graph " + (g.graph.name().empty() ? std::string("unnamed") : g.graph.name()) + "\n";
    for (const auto& [label, v] : g.vertex_roles)
        out += "# vertex " + label + " " + std::to_string(v) + "\n";
    for (const auto& [label, e] : g.edge_roles)
        out += "# edge " + label + " " + std::to_string(e) + "\n";
    if (!g.bold_matching.empty()) {
        out += "# matching";
        for (auto e : g.bold_matching)
            out += " " + std::to_string(e);
        out += "\n";
    }
    return out + format_edge_list(g.graph);
}

namespace {

struct SixBitReader {
    std::string_view data;
    std::size_t pos = 0;

    int byte(std::size_t i) const
    {
        const int c = static_cast<unsigned char>(data[i]);
        if (c < 63 || c > 126)
            fail(ErrorCode::Parse, "character out of the graph6 range");
        return c - 63;
    }

    std::size_t read_size()
    {
        if (pos >= data.size())
            fail(ErrorCode::Parse, "missing vertex count");
        if (byte(pos) != 63) {
            return static_cast<std::size_t>(byte(pos++));
        }
        if (pos + 1 < data.size() && byte(pos + 1) == 63) {
            if (pos + 8 > data.size())
                fail(ErrorCode::Parse, "truncated vertex count");
            std::size_t n = 0;
            for (std::size_t i = 2; i < 8; ++i)
                n = n << 6 | static_cast<std::size_t>(byte(pos + i));
            pos += 8;
            return n;
        }
        if (pos + 4 > data.size())
            fail(ErrorCode::Parse, "truncated vertex count");
        std::size_t n = 0;
        for (std::size_t i = 1; i < 4; ++i)
            n = n << 6 | static_cast<std::size_t>(byte(pos + i));
        pos += 4;
        return n;
    }
};

std::string_view strip_header(std::string_view line, std::string_view header)
{
    if (line.substr(0, header.size()) == header)
        line.remove_prefix(header.size());
    return line;
}

void put_size(std::string& out, std::size_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6)
            out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6)
            out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
}

} // namespace

Multigraph decode_graph6(std::string_view line)
{
    line = strip_header(trim(line), ">>graph6<<");
    SixBitReader r{line};
    const std::size_t n = r.read_size();
    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (line.size() - r.pos != need)
        fail(ErrorCode::Parse, "graph6 body has " + std::to_string(line.size() - r.pos) + " bytes, expected " +
                                   std::to_string(need));
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int b = r.byte(r.pos + k / 6);
            if (b >> (5 - k % 6) & 1)
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        }
    return Multigraph(n, std::move(edges));
}

std::string encode_graph6(const Multigraph& g)
{
    if (!g.is_simple())
        fail(ErrorCode::InvalidArgument, "graph6 encodes simple graphs only");
    const std::size_t n = g.vertex_count();
    std::string out;
    put_size(out, n);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges())
        adj[e.a][e.b] = adj[e.b][e.a] = 1;
    int acc = 0, used = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = acc << 1 | adj[i][j];
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used) {
        acc <<= 6 - used;
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Multigraph decode_sparse6(std::string_view line)
{
    line = strip_header(trim(line), ">>sparse6<<");
    if (line.empty() || line.front() != ':')
        fail(ErrorCode::Parse, "sparse6 must start with ':'");
    SixBitReader r{line.substr(1)};
    const std::size_t n = r.read_size();
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n)
        ++k;
    std::vector<int> bits;
    for (std::size_t i = r.pos; i < r.data.size(); ++i) {
        const int b = r.byte(i);
        for (int s = 5; s >= 0; --s)
            bits.push_back(b >> s & 1);
    }
    std::vector<Edge> edges;
    std::size_t v = 0, at = 0;
    while (at + 1 + k <= bits.size()) {
        const int b = bits[at++];
        std::size_t x = 0;
        for (std::size_t i = 0; i < k; ++i)
            x = x << 1 | static_cast<std::size_t>(bits[at++]);
        if (b)
            ++v;
        if (v >= n)
            break;
        if (x > v)
            v = x;
        else {
            if (x == v)
                fail(ErrorCode::Parse, "sparse6 input contains a loop");
            edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(v)});
        }
    }
    Multigraph g(n, std::move(edges));
    if (!g.is_simple())
        fail(ErrorCode::Parse, "sparse6 input has parallel edges; only simple graphs are accepted");
    return g;
}

void ingest_graph6(std::istream& in, const std::function<bool(const Graph6Record&)>& visit)
{
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto body = trim(line);
        if (!body.empty() && body.back() == '\r')
            body.remove_suffix(1);
        if (body.empty())
            continue;
        Graph6Record rec;
        rec.line_number = number;
        try {
            const bool sparse = body.front() == ':' || body.starts_with(">>sparse6<<");
            rec.graph = sparse ? decode_sparse6(body) : decode_graph6(body);
        } catch (const Error& err) {
            rec.error = err.what();
        }
        if (!visit(rec))
            return;
    }
}

std::vector<Graph6Record> ingest_graph6_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::Io, "cannot open " + path.string());
    std::vector<Graph6Record> out;
    ingest_graph6(in, [&](const Graph6Record& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

std::string format_certificate(const Certificate& cert)
{
    std::string out = "hcolor-certificate 1\n";
    out += "host " + cert.host_path + " " + cert.host_digest + "\n";
    out += "guest " + cert.guest_path + " " + cert.guest_digest + "\n";
    out += "map " + std::to_string(cert.edge_map.size()) + "\n";
    for (std::size_t e = 0; e < cert.edge_map.size(); ++e)
        out += std::to_string(e) + " " + std::to_string(cert.edge_map[e]) + "\n";
    return out;
}

Certificate parse_certificate(std::string_view text)
{
    auto lines = split_lines(text);
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    auto expect = [&](std::size_t i, std::string_view key, std::size_t count) {
        if (i >= lines.size())
            fail(ErrorCode::Parse, "certificate truncated before '" + std::string(key) + "'");
        auto f = fields(lines[i]);
        if (f.size() != count || f[0] != key)
            fail(ErrorCode::Parse, "line " + std::to_string(i + 1) + ": expected '" + std::string(key) + "'");
        return f;
    };
    auto head = expect(0, "hcolor-certificate", 2);
    if (head[1] != "1")
        fail(ErrorCode::Parse, "unsupported certificate version");
    Certificate cert;
    auto host = expect(1, "host", 3);
    cert.host_path = host[1];
    cert.host_digest = host[2];
    auto guest = expect(2, "guest", 3);
    cert.guest_path = guest[1];
    cert.guest_digest = guest[2];
    auto map = expect(3, "map", 2);
    const auto m = to_number(map[1], 4);
    if (lines.size() != 4 + m)
        fail(ErrorCode::Parse, "certificate declares " + std::to_string(m) + " pairs but has " +
                                   std::to_string(lines.size() - 4));
    for (std::size_t k = 0; k < m; ++k) {
        auto f = fields(lines[4 + k]);
        if (f.size() != 2)
            fail(ErrorCode::Parse, "line " + std::to_string(5 + k) + ": expected '<guest edge> <host edge>'");
        if (to_number(f[0], 5 + k) != k)
            fail(ErrorCode::Parse, "line " + std::to_string(5 + k) + ": pairs must be in guest-edge order");
        cert.edge_map.push_back(static_cast<EdgeId>(to_number(f[1], 5 + k)));
    }
    return cert;
}

Certificate make_certificate(const Colouring& c, std::string host_path, std::string guest_path)
{
    return {std::move(host_path), canonical_form(c.host).digest(), std::move(guest_path),
            canonical_form(c.guest).digest(), c.edge_map};
}

CertificateCheck check_certificate(std::string_view text, const std::filesystem::path& base_dir)
{
    CertificateCheck out;
    Certificate cert;
    try {
        cert = parse_certificate(text);
    } catch (const Error& err) {
        out.problems.push_back(err.what());
        return out;
    }
    if (format_certificate(cert) != text)
        out.problems.push_back("certificate text is not in canonical form");
    auto resolve = [&](const std::string& p) {
        std::filesystem::path path(p);
        return path.is_absolute() ? path : base_dir / path;
    };
    Multigraph host, guest;
    try {
        host = read_edge_list(resolve(cert.host_path));
        guest = read_edge_list(resolve(cert.guest_path));
    } catch (const Error& err) {
        out.problems.push_back(err.what());
        return out;
    }
    if (canonical_form(host).digest() != cert.host_digest)
        out.problems.push_back("host digest mismatch");
    if (canonical_form(guest).digest() != cert.guest_digest)
        out.problems.push_back("guest digest mismatch");
    try {
        auto check = check_colouring({host, guest, cert.edge_map});
        for (const auto& v : check.violations)
            out.problems.push_back(v.describe());
    } catch (const Error& err) {
        out.problems.push_back(err.what());
    }
    out.valid = out.problems.empty();
    return out;
}

} // namespace hcolor
