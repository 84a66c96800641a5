#include "io.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"
#include "solver.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace hcolor;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("hcolor_test_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    out << text;
}

Multigraph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Multigraph(n, edges);
}

} // namespace

TEST_CASE("edge list round trip")
{
    for (auto g : {petersen().graph, s12_plus_kM(1).graph, s4().graph, Multigraph(3, {})}) {
        auto text = format_edge_list(g);
        auto back = parse_edge_list(text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
    auto labelled = format_labelled(s4());
    CHECK(labelled.find("# vertex z") != std::string::npos);
    CHECK(parse_edge_list(labelled).edges() == s4().graph.edges());
}

TEST_CASE("edge list errors")
{
    auto code_of = [](std::string_view text) {
        try {
            parse_edge_list(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Incomplete; // sentinel: no throw
    };
    CHECK(code_of("") == ErrorCode::Parse);
    CHECK(code_of("2 1\n0\n") == ErrorCode::Parse);
    CHECK(code_of("2 2\n0 1\n") == ErrorCode::Parse);  // too few edges
    CHECK(code_of("2 1\n0 1\n0 1\n") == ErrorCode::Parse); // trailing edge
    CHECK(code_of("2 1\n0 0\n") == ErrorCode::Parse); // loop
    CHECK(code_of("2 1\n0 5\n") == ErrorCode::Parse); // out of range
    CHECK(code_of("x y\n") == ErrorCode::Parse);
    CHECK_THROWS_AS(read_edge_list("/nonexistent/graph.txt"), Error);
}

TEST_CASE("graph6 known strings")
{
    auto k4 = decode_graph6("C~");
    CHECK(oracle::isomorphic(k4, complete(4).graph));
    CHECK(encode_graph6(complete(4).graph) == "C~");

    auto p = decode_graph6("IheA@GUAo");
    CHECK(oracle::isomorphic(p, petersen().graph));
    CHECK(decode_graph6(">>graph6<<IheA@GUAo").edge_count() == 15);

    // 70 vertices needs the four-byte size prefix.
    auto enc = encode_graph6(path_graph(70));
    CHECK(enc.rfind("~?@E", 0) == 0);
    CHECK(decode_graph6(enc).edges() == path_graph(70).edges());

    CHECK_THROWS_AS(decode_graph6("C"), Error);
    CHECK_THROWS_AS(decode_graph6("C~~"), Error);
    CHECK_THROWS_AS(decode_graph6("C\x01"), Error);
    CHECK_THROWS_AS(encode_graph6(s4().graph), Error); // parallel edges
}

TEST_CASE("graph6 round trip on random simple graphs")
{
    std::mt19937 rng(6);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng() % 80;
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (rng() % 4 == 0)
                    edges.push_back({a, b});
        Multigraph g(n, edges);
        auto back = decode_graph6(encode_graph6(g));
        CHECK(back.vertex_count() == n);
        CHECK(canonical_form(back) == canonical_form(g));
    }
}

TEST_CASE("sparse6")
{
    CHECK(oracle::isomorphic(decode_sparse6(":CcKI"), complete(4).graph));
    CHECK(oracle::isomorphic(decode_sparse6(":I`ES@obGkqegW~"), petersen().graph));
    CHECK_THROWS_AS(decode_sparse6("CcKI"), Error);
}

TEST_CASE("graph6 ingestion reports bad lines and keeps going")
{
    std::istringstream in("C~\n\nnot graph6\n:CcKI\nIheA@GUAo\n");
    std::vector<Graph6Record> recs;
    ingest_graph6(in, [&](const Graph6Record& r) {
        recs.push_back(r);
        return true;
    });
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].line_number == 1);
    CHECK(recs[0].graph);
    CHECK(recs[1].line_number == 3);
    CHECK_FALSE(recs[1].graph);
    CHECK_FALSE(recs[1].error.empty());
    CHECK(recs[2].graph);
    CHECK(recs[3].line_number == 5);
    CHECK(recs[3].graph->edge_count() == 15);

    std::istringstream empty("");
    std::size_t calls = 0;
    ingest_graph6(empty, [&](const Graph6Record&) { return ++calls > 0; });
    CHECK(calls == 0);

    std::istringstream three("C~\nC~\nC~\n");
    ingest_graph6(three, [&](const Graph6Record&) { return ++calls < 2; });
    CHECK(calls == 2);
}

TEST_CASE("certificates")
{
    auto dir = scratch_dir("cert");
    write_file(dir / "host.txt", format_edge_list(s4().graph));
    write_file(dir / "guest.txt", format_edge_list(petersen().graph));

    auto res = solve(s4().graph, petersen().graph, SolveMode::First);
    REQUIRE(res.status == SolveStatus::Sat);
    auto cert = make_certificate(res.colourings.front(), "host.txt", "guest.txt");
    auto text = format_certificate(cert);
    CHECK(text.rfind("hcolor-certificate 1\n", 0) == 0);

    auto back = parse_certificate(text);
    CHECK(back.edge_map == cert.edge_map);
    CHECK(back.host_digest == cert.host_digest);
    CHECK(format_certificate(back) == text);

    auto ok = check_certificate(text, dir);
    CHECK(ok.valid);
    CHECK(ok.problems.empty());

    // Tampered map entry.
    auto bad = cert;
    bad.edge_map[0] = (bad.edge_map[0] + 1) % 5;
    auto r1 = check_certificate(format_certificate(bad), dir);
    CHECK_FALSE(r1.valid);

    // Out-of-range host edge.
    bad = cert;
    bad.edge_map[3] = 99;
    CHECK_FALSE(check_certificate(format_certificate(bad), dir).valid);

    // Host file changed after signing.
    write_file(dir / "host.txt", format_edge_list(s4_plus_kM(1).graph));
    auto r2 = check_certificate(text, dir);
    CHECK_FALSE(r2.valid);
    CHECK_FALSE(r2.problems.empty());

    // Non-canonical text (extra whitespace) is rejected.
    write_file(dir / "host.txt", format_edge_list(s4().graph));
    auto padded = text;
    padded.insert(padded.find("map"), " ");
    CHECK_FALSE(check_certificate(padded, dir).valid);

    CHECK_THROWS_AS(parse_certificate("garbage"), Error);
    fs::remove_all(dir);
}
