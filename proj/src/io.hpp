#pragma once

#include "hcolour.hpp"
#include "named_graphs.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace hcolor {

// Edge-list text: optional '#' comment lines, then "n m", then m lines "a b".
// Line order fixes edge ids.

Multigraph parse_edge_list(std::string_view text, std::string name = {});
Multigraph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Multigraph& g);
/// Edge list preceded by a comment header carrying the role map.
std::string format_labelled(const LabelledGraph& g);

// graph6 / sparse6 (simple graphs only).

Multigraph decode_graph6(std::string_view line);
std::string encode_graph6(const Multigraph& g);
Multigraph decode_sparse6(std::string_view line);

struct Graph6Record {
    std::size_t line_number = 0; // 1-based
    std::optional<Multigraph> graph;
    std::string error; // set when graph is empty
};

/// One callback per non-empty line; malformed lines are reported, not fatal.
/// Lines starting with ':' are read as sparse6. Return false to stop.
void ingest_graph6(std::istream& in, const std::function<bool(const Graph6Record&)>& visit);
std::vector<Graph6Record> ingest_graph6_file(const std::filesystem::path& path);

// Colouring certificates.
//
//   hcolor-certificate 1
//   host <path> <digest>
//   guest <path> <digest>
//   map <m>
//   <guest edge> <host edge>      (m lines, guest-edge order)

struct Certificate {
    std::string host_path;
    std::string host_digest;
    std::string guest_path;
    std::string guest_digest;
    std::vector<EdgeId> edge_map;
};

std::string format_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);
Certificate make_certificate(const Colouring& c, std::string host_path, std::string guest_path);

struct CertificateCheck {
    bool valid = false;
    std::vector<std::string> problems;
};

/// Re-reads the named graph files (relative paths resolve against base_dir),
/// compares digests, requires the text to be exactly the canonical
/// serialisation and re-validates the colouring.
CertificateCheck check_certificate(std::string_view text, const std::filesystem::path& base_dir);

} // namespace hcolor
