// Command-line front end. Talks to the library only through the C API.

#include "hcolor/hcolor.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_error = 2;

struct Failure {
    std::string message;
};

void check(hc_status s, const std::string& context)
{
    if (s != HC_OK)
        throw Failure{context + ": " + hc_status_name(s) + ": " + hc_last_error()};
}

struct GraphDeleter {
    void operator()(hc_graph* g) const { hc_graph_free(g); }
};
using Graph = std::unique_ptr<hc_graph, GraphDeleter>;

std::string take(char* s)
{
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

std::vector<int> parse_params(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{"bad generator parameter '" + item + "'"};
        }
    return out;
}

// A graph argument is an edge-list file, or a generator spec "name[:p1,p2,...]".
Graph load_graph(const std::string& spec)
{
    hc_graph* g = nullptr;
    if (std::filesystem::exists(spec)) {
        check(hc_graph_read(spec.c_str(), &g), spec);
        return Graph(g);
    }
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const auto params = colon == std::string::npos ? std::vector<int>{} : parse_params(spec.substr(colon + 1));
    check(hc_graph_generate(name.c_str(), params.data(), params.size(), &g),
          "'" + spec + "' is neither a file nor a generator");
    return Graph(g);
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Failure{"cannot write " + path};
    out << text;
}

std::string map_line(const uint32_t* map, size_t length)
{
    std::string s = "map";
    for (size_t i = 0; i < length; ++i)
        s += " " + std::to_string(map[i]);
    return s;
}

void print_line(const char* line, void*) { std::cout << line << '\n' << std::flush; }

void print_timing(const char* check, double seconds, void*)
{
    std::fprintf(stderr, "%-40s %10.3f s\n", check, seconds);
}

int outcome_exit(hc_outcome o)
{
    switch (o) {
    case HC_PASS:
        return exit_pass;
    case HC_FAIL:
        return exit_fail;
    default:
        return exit_error;
    }
}

int cmd_gen(const std::string& name, const std::vector<int>& params, const std::string& format,
            const std::string& output)
{
    hc_graph* raw = nullptr;
    check(hc_graph_generate(name.c_str(), params.data(), params.size(), &raw), "gen");
    Graph g(raw);
    char* text = nullptr;
    if (format == "graph6")
        check(hc_graph_to_graph6(g.get(), &text), "gen");
    else if (format == "dot")
        check(hc_graph_to_dot(g.get(), &text), "gen");
    else
        check(hc_graph_to_text(g.get(), &text), "gen");
    const auto s = take(text);
    if (output.empty())
        std::cout << s;
    else
        write_text(output, s);
    return exit_pass;
}

int cmd_solve(const std::string& host_spec, const std::string& guest_spec, bool all, bool count,
              uint64_t node_limit, double time_limit, const std::string& certificate)
{
    auto host = load_graph(host_spec);
    auto guest = load_graph(guest_spec);
    const hc_solve_mode mode = count ? HC_MODE_COUNT : all ? HC_MODE_ALL : HC_MODE_FIRST;
    hc_solve_result* raw = nullptr;
    check(hc_solve(host.get(), guest.get(), mode, node_limit, time_limit, &raw), "solve");
    std::unique_ptr<hc_solve_result, decltype(&hc_solve_result_free)> res(raw, hc_solve_result_free);

    const auto status = hc_solve_result_status(res.get());
    const char* names[] = {"SAT", "UNSAT", "UNKNOWN"};
    std::cout << "status " << names[status] << '\n';
    std::cout << "nodes " << hc_solve_result_nodes(res.get()) << '\n';
    if (mode != HC_MODE_FIRST)
        std::cout << "count " << hc_solve_result_count(res.get()) << '\n';
    for (size_t i = 0; i < hc_solve_result_colouring_count(res.get()); ++i) {
        size_t length = 0;
        const auto* map = hc_solve_result_colouring(res.get(), i, &length);
        std::cout << map_line(map, length) << '\n';
    }

    if (!certificate.empty() && hc_solve_result_colouring_count(res.get()) > 0) {
        // Certificates name graph files; generated graphs are written next to it.
        auto file_for = [&](const std::string& spec, const hc_graph* g, const char* suffix) {
            if (std::filesystem::exists(spec))
                return spec;
            const std::string path = certificate + suffix;
            char* text = nullptr;
            check(hc_graph_to_text(g, &text), "certificate");
            write_text(path, take(text));
            return path;
        };
        const auto host_path = file_for(host_spec, host.get(), ".host.txt");
        const auto guest_path = file_for(guest_spec, guest.get(), ".guest.txt");
        const auto base = std::filesystem::path(certificate).parent_path();
        auto rel = [&](const std::string& p) {
            return std::filesystem::absolute(p).lexically_relative(std::filesystem::absolute(base)).string();
        };
        size_t length = 0;
        const auto* map = hc_solve_result_colouring(res.get(), 0, &length);
        char* text = nullptr;
        check(hc_certificate_format(host.get(), guest.get(), map, length, rel(host_path).c_str(),
                                    rel(guest_path).c_str(), &text),
              "certificate");
        write_text(certificate, take(text));
        std::cerr << "certificate written to " << certificate << '\n';
    }
    return status == HC_SAT ? exit_pass : status == HC_UNSAT ? exit_fail : exit_error;
}

int cmd_images(const std::string& guest_spec, uint64_t node_limit, bool dot)
{
    auto guest = load_graph(guest_spec);
    hc_image_set* raw = nullptr;
    check(hc_images(guest.get(), node_limit, &raw), "images");
    std::unique_ptr<hc_image_set, decltype(&hc_image_set_free)> set(raw, hc_image_set_free);
    const size_t n = hc_image_set_size(set.get());
    std::cout << "# images " << n << " complete " << (hc_image_set_complete(set.get()) ? "yes" : "no") << " nodes "
              << hc_image_set_nodes(set.get()) << " partitions " << hc_image_set_partitions(set.get())
              << " tk2 " << (hc_image_set_tk2_realizable(set.get()) ? "yes" : "no") << '\n';
    for (size_t i = 0; i < n; ++i) {
        hc_image_info info{};
        check(hc_image_info_get(set.get(), i, &info), "images");
        hc_graph* g = nullptr;
        check(hc_image_graph(set.get(), i, &g), "images");
        Graph image(g);
        char* digest = nullptr;
        check(hc_graph_digest(image.get(), &digest), "images");
        std::cout << "# image " << i + 1 << " digest " << take(digest) << " split " << info.split_vertices
                  << " unused_leaves " << info.unused_leaves << " multiplicity " << info.multiplicity
                  << " extends " << (info.admits_extension ? "yes" : "no") << '\n';
        char* text = nullptr;
        check(dot ? hc_graph_to_dot(image.get(), &text) : hc_graph_to_text(image.get(), &text), "images");
        std::cout << take(text);
        size_t length = 0;
        const auto* map = hc_image_witness(set.get(), i, &length);
        std::cout << "# witness " << map_line(map, length) << '\n';
    }
    return hc_image_set_complete(set.get()) ? exit_pass : exit_error;
}

int cmd_check(const std::string& path, const std::string& base_dir)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{"cannot open " + path};
    std::stringstream buf;
    buf << in.rdbuf();
    const auto base = base_dir.empty() ? std::filesystem::path(path).parent_path().string() : base_dir;
    int valid = 0;
    char* problems = nullptr;
    check(hc_certificate_check(buf.str().c_str(), base.empty() ? "." : base.c_str(), &valid, &problems), "check");
    const auto text = take(problems);
    std::cout << (valid ? "valid" : "invalid") << '\n' << text;
    return valid ? exit_pass : exit_fail;
}

int cmd_recipe(const std::string& name, const std::vector<std::string>& params)
{
    std::string json = "{";
    for (size_t i = 0; i < params.size(); ++i) {
        const auto eq = params[i].find('=');
        if (eq == std::string::npos || eq == 0)
            throw Failure{"parameters take the form key=value"};
        const auto key = params[i].substr(0, eq);
        const auto value = params[i].substr(eq + 1);
        const bool numeric = !value.empty() && value.find_first_not_of("0123456789") == std::string::npos;
        std::string quoted;
        for (char c : value) {
            if (c == '"' || c == '\\')
                quoted += '\\';
            quoted += c;
        }
        json += (i ? "," : "") + ("\"" + key + "\":") + (numeric ? value : "\"" + quoted + "\"");
    }
    json += "}";
    hc_outcome outcome = HC_UNKNOWN_OUTCOME;
    check(hc_recipe_run(name.c_str(), json.c_str(), print_line, print_timing, nullptr, &outcome), "recipe");
    return outcome_exit(outcome);
}

int cmd_corpus(const std::string& file, const std::string& host_spec, size_t threads, size_t resume_from,
               uint64_t node_limit)
{
    const auto colon = host_spec.find(':');
    const std::string host = host_spec.substr(0, colon);
    const auto params =
        colon == std::string::npos ? std::vector<int>{} : parse_params(host_spec.substr(colon + 1));
    hc_corpus_options options;
    hc_corpus_options_init(&options);
    options.host = host.c_str();
    options.host_params = params.data();
    options.host_param_count = params.size();
    options.node_limit = node_limit;
    options.threads = threads;
    options.resume_from = resume_from;
    hc_outcome outcome = HC_UNKNOWN_OUTCOME;
    check(hc_corpus_run(file.c_str(), &options, print_line, print_timing, nullptr, &outcome), "corpus");
    return outcome_exit(outcome);
}

std::string list(hc_status (*fn)(char**))
{
    char* s = nullptr;
    check(fn(&s), "list");
    return take(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact H-colourings of loopless multigraphs"};
    app.set_version_flag("--version", std::string("hcolor ") + hc_version());
    app.require_subcommand(1);
    app.footer("Graph arguments: an edge-list file, or a generator spec such as petersen, s12+kM:1, complete:5.\n"
               "Exit codes: 0 pass/SAT, 1 fail/UNSAT/invalid, 2 unknown or error.");

    constexpr uint64_t default_node_limit = 100'000'000;

    auto* gen = app.add_subcommand("gen", "Print a named graph");
    std::string gen_name, gen_format = "text", gen_out;
    std::vector<int> gen_params;
    bool gen_list = false;
    gen->add_option("name", gen_name, "Generator name");
    gen->add_option("params", gen_params, "Integer parameters");
    gen->add_option("--format", gen_format, "text, graph6 or dot")
        ->check(CLI::IsMember({"text", "graph6", "dot"}));
    gen->add_option("-o,--out", gen_out, "Write to a file instead of stdout");
    gen->add_flag("--list", gen_list, "List generator names");

    auto* solve = app.add_subcommand("solve", "Decide whether a host colours a guest");
    std::string host, guest, certificate;
    bool all = false, count = false;
    uint64_t node_limit = default_node_limit;
    double time_limit = 0;
    solve->add_option("--host", host, "Host graph")->required();
    solve->add_option("--guest", guest, "Guest graph")->required();
    auto* all_opt = solve->add_flag("--all", all, "Print every colouring");
    solve->add_flag("--count", count, "Count colourings")->excludes(all_opt);
    solve->add_option("--node-limit", node_limit, "Search node budget, 0 for none")->capture_default_str();
    solve->add_option("--time-limit", time_limit, "Seconds, 0 for none");
    solve->add_option("--certificate", certificate, "Write a certificate for the first colouring");

    auto* images = app.add_subcommand("images", "Enumerate splitted images of a guest");
    std::string images_guest;
    uint64_t images_limit = 0;
    bool images_dot = false;
    images->add_option("--guest", images_guest, "Guest graph")->required();
    images->add_option("--node-limit", images_limit, "Search node budget, 0 for none");
    images->add_flag("--dot", images_dot, "Emit images as DOT");

    auto* chk = app.add_subcommand("check", "Re-validate a certificate");
    std::string cert_path, base_dir;
    chk->add_option("certificate", cert_path, "Certificate file")->required();
    chk->add_option("--base-dir", base_dir, "Directory for relative graph paths (default: the certificate's)");

    auto* recipe = app.add_subcommand("recipe", "Run a verification recipe");
    std::string recipe_name;
    std::vector<std::string> recipe_params;
    bool recipe_list = false;
    recipe->add_option("name", recipe_name, "Recipe name");
    recipe->add_option("--param", recipe_params, "key=value, repeatable");
    recipe->add_flag("--list", recipe_list, "List recipe names");

    auto* corpus = app.add_subcommand("corpus", "Solve every bridgeless cubic graph in a graph6 file");
    std::string corpus_file, corpus_host = "s4";
    size_t threads = 0, resume_from = 1;
    uint64_t corpus_limit = default_node_limit;
    corpus->add_option("file", corpus_file, "graph6/sparse6 file")->required();
    corpus->add_option("--host", corpus_host, "Host generator spec")->capture_default_str();
    corpus->add_option("--threads", threads, "Worker count (default: HCOLOR_THREADS or all cores)");
    corpus->add_option("--resume-from", resume_from, "1-based record index to start at")->capture_default_str();
    corpus->add_option("--node-limit", corpus_limit, "Per-graph node budget, 0 for none")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_error;
    }

    try {
        if (*gen) {
            if (gen_list) {
                std::cout << list(hc_generator_names);
                return exit_pass;
            }
            if (gen_name.empty())
                throw Failure{"gen needs a generator name (see --list)"};
            return cmd_gen(gen_name, gen_params, gen_format, gen_out);
        }
        if (*solve)
            return cmd_solve(host, guest, all, count, node_limit, time_limit, certificate);
        if (*images)
            return cmd_images(images_guest, images_limit, images_dot);
        if (*chk)
            return cmd_check(cert_path, base_dir);
        if (*recipe) {
            if (recipe_list) {
                std::cout << list(hc_recipe_names);
                return exit_pass;
            }
            if (recipe_name.empty())
                throw Failure{"recipe needs a name (see --list)"};
            return cmd_recipe(recipe_name, recipe_params);
        }
        if (*corpus)
            return cmd_corpus(corpus_file, corpus_host, threads, resume_from, corpus_limit);
    } catch (const Failure& f) {
        std::cerr << "hcolor: " << f.message << '\n';
        return exit_error;
    }
    return exit_error;
}
