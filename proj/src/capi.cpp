#include "hcolor/hcolor.h"

#include "image_enum.hpp"
#include "io.hpp"
#include "named_graphs.hpp"
#include "solver.hpp"
#include "verify.hpp"

#include <cstring>
#include <fstream>
#include <new>

using namespace hcolor;

struct hc_graph {
    LabelledGraph g;
};

struct hc_solve_result {
    SolveResult r;
};

struct hc_image_set {
    ImageAtlas atlas;
};

namespace {

thread_local std::string last_error;

hc_status code_of(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InvalidArgument:
        return HC_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidVertex:
        return HC_ERR_INVALID_VERTEX;
    case ErrorCode::InvalidEdge:
        return HC_ERR_INVALID_EDGE;
    case ErrorCode::Parse:
        return HC_ERR_PARSE;
    case ErrorCode::Io:
        return HC_ERR_IO;
    case ErrorCode::SizeGuard:
        return HC_ERR_SIZE_GUARD;
    case ErrorCode::NotTotal:
        return HC_ERR_NOT_TOTAL;
    case ErrorCode::InvalidColouring:
        return HC_ERR_INVALID_COLOURING;
    case ErrorCode::Ambiguous:
        return HC_ERR_AMBIGUOUS;
    case ErrorCode::Disconnected:
        return HC_ERR_DISCONNECTED;
    case ErrorCode::UnknownRecipe:
        return HC_ERR_UNKNOWN_RECIPE;
    case ErrorCode::Incomplete:
        return HC_ERR_INCOMPLETE;
    }
    return HC_ERR_INTERNAL;
}

template <class F>
hc_status guarded(F&& f)
{
    try {
        f();
        last_error.clear();
        return HC_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return code_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return HC_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return HC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return HC_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        fail(ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

hc_graph* wrap(Multigraph g)
{
    return new hc_graph{LabelledGraph{std::move(g), {}, {}, {}}};
}

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
        out += l + "\n";
    return out;
}

std::vector<EdgeId> edge_map(const uint32_t* map, size_t length)
{
    require(map || length == 0, "null edge map");
    return {map, map + length};
}

hc_outcome outcome_code(Outcome o)
{
    switch (o) {
    case Outcome::Pass:
        return HC_PASS;
    case Outcome::Fail:
        return HC_FAIL;
    default:
        return HC_UNKNOWN_OUTCOME;
    }
}

CheckSink make_sink(hc_line_callback on_line, hc_timing_callback on_timing, void* user)
{
    return [=](const CheckResult& c) {
        if (on_line)
            on_line(c.to_json().dump().c_str(), user);
        if (on_timing)
            on_timing(c.check.c_str(), c.seconds, user);
    };
}

} // namespace

extern "C" {

const char* hc_last_error(void) { return last_error.c_str(); }

const char* hc_status_name(hc_status status)
{
    switch (status) {
    case HC_OK:
        return "ok";
    case HC_ERR_INTERNAL:
        return "internal error";
    default:
        return to_string(static_cast<ErrorCode>(status - 1));
    }
}

const char* hc_version(void) { return version_digest(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_graph_create(size_t n, const uint32_t* ends, size_t m, hc_graph** out)
{
    return guarded([&] {
        require(out && (ends || m == 0), "null argument");
        std::vector<Edge> edges;
        for (size_t i = 0; i < m; ++i)
            edges.push_back({ends[2 * i], ends[2 * i + 1]});
        *out = wrap(Multigraph(n, std::move(edges)));
    });
}

hc_status hc_graph_generate(const char* name, const int* params, size_t param_count, hc_graph** out)
{
    return guarded([&] {
        require(name && out && (params || param_count == 0), "null argument");
        *out = new hc_graph{generate_named(name, std::vector<int>(params, params + param_count))};
    });
}

hc_status hc_generator_names(char** out)
{
    return guarded([&] {
        require(out, "null argument");
        *out = dup(join_lines(named_generators()));
    });
}

hc_status hc_graph_read(const char* path, hc_graph** out)
{
    return guarded([&] {
        require(path && out, "null argument");
        *out = wrap(read_edge_list(path));
    });
}

hc_status hc_graph_parse(const char* text, hc_graph** out)
{
    return guarded([&] {
        require(text && out, "null argument");
        *out = wrap(parse_edge_list(text));
    });
}

hc_status hc_graph_from_graph6(const char* line, hc_graph** out)
{
    return guarded([&] {
        require(line && out, "null argument");
        std::string_view s(line);
        *out = wrap(!s.empty() && s.front() == ':' ? decode_sparse6(s) : decode_graph6(s));
    });
}

void hc_graph_free(hc_graph* g) { delete g; }

size_t hc_graph_vertex_count(const hc_graph* g) { return g ? g->g.graph.vertex_count() : 0; }

size_t hc_graph_edge_count(const hc_graph* g) { return g ? g->g.graph.edge_count() : 0; }

hc_status hc_graph_edge(const hc_graph* g, size_t e, uint32_t* a, uint32_t* b)
{
    return guarded([&] {
        require(g && a && b, "null argument");
        if (e >= g->g.graph.edge_count())
            fail(ErrorCode::InvalidEdge, "edge " + std::to_string(e) + " out of range");
        *a = g->g.graph.edges()[e].a;
        *b = g->g.graph.edges()[e].b;
    });
}

hc_status hc_graph_to_text(const hc_graph* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        const bool labelled = !g->g.vertex_roles.empty() || !g->g.edge_roles.empty();
        *out = dup(labelled ? format_labelled(g->g) : format_edge_list(g->g.graph));
    });
}

hc_status hc_graph_to_graph6(const hc_graph* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup(encode_graph6(g->g.graph) + "\n");
    });
}

hc_status hc_graph_to_dot(const hc_graph* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        const auto& graph = g->g.graph;
        std::vector<std::string> vname(graph.vertex_count()), ename(graph.edge_count());
        for (const auto& [label, v] : g->g.vertex_roles)
            vname[v] = label;
        for (const auto& [label, e] : g->g.edge_roles)
            ename[e] = label;
        std::string s = "graph \"" + (graph.name().empty() ? std::string("G") : graph.name()) + "\" {\n";
        for (VertexId v = 0; v < graph.vertex_count(); ++v)
            s += "  " + std::to_string(v) + (vname[v].empty() ? "" : " [label=\"" + vname[v] + "\"]") + ";\n";
        for (EdgeId e = 0; e < graph.edge_count(); ++e) {
            const auto& ed = graph.edges()[e];
            const bool bold = std::binary_search(g->g.bold_matching.begin(), g->g.bold_matching.end(), e);
            std::string attrs;
            if (!ename[e].empty())
                attrs += "label=\"" + ename[e] + "\"";
            if (bold)
                attrs += std::string(attrs.empty() ? "" : ",") + "penwidth=3";
            s += "  " + std::to_string(ed.a) + " -- " + std::to_string(ed.b) +
                 (attrs.empty() ? "" : " [" + attrs + "]") + ";\n";
        }
        *out = dup(s + "}\n");
    });
}

hc_status hc_graph_digest(const hc_graph* g, char** out)
{
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup(canonical_form(g->g.graph).digest());
    });
}

hc_status hc_graph_isomorphic(const hc_graph* a, const hc_graph* b, int* out)
{
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = is_isomorphic(a->g.graph, b->g.graph) ? 1 : 0;
    });
}

hc_status hc_solve(const hc_graph* host, const hc_graph* guest, hc_solve_mode mode, uint64_t node_limit,
                   double time_limit_seconds, hc_solve_result** out)
{
    return guarded([&] {
        require(host && guest && out, "null argument");
        require(mode == HC_MODE_FIRST || mode == HC_MODE_ALL || mode == HC_MODE_COUNT, "bad solve mode");
        require(time_limit_seconds >= 0, "negative time limit");
        const SolveMode m = mode == HC_MODE_FIRST ? SolveMode::First
                            : mode == HC_MODE_ALL ? SolveMode::All
                                                  : SolveMode::Count;
        *out = new hc_solve_result{solve(host->g.graph, guest->g.graph, m, {node_limit, time_limit_seconds})};
    });
}

hc_solve_status hc_solve_result_status(const hc_solve_result* r)
{
    if (!r)
        return HC_UNKNOWN;
    switch (r->r.status) {
    case SolveStatus::Sat:
        return HC_SAT;
    case SolveStatus::Unsat:
        return HC_UNSAT;
    default:
        return HC_UNKNOWN;
    }
}

uint64_t hc_solve_result_count(const hc_solve_result* r) { return r ? r->r.count : 0; }

uint64_t hc_solve_result_nodes(const hc_solve_result* r) { return r ? r->r.stats.nodes : 0; }

size_t hc_solve_result_colouring_count(const hc_solve_result* r) { return r ? r->r.colourings.size() : 0; }

const uint32_t* hc_solve_result_colouring(const hc_solve_result* r, size_t i, size_t* length)
{
    if (!r || i >= r->r.colourings.size())
        return nullptr;
    if (length)
        *length = r->r.colourings[i].edge_map.size();
    return r->r.colourings[i].edge_map.data();
}

void hc_solve_result_free(hc_solve_result* r) { delete r; }

hc_status hc_check_colouring(const hc_graph* host, const hc_graph* guest, const uint32_t* map, size_t length,
                             int* valid, char** problems)
{
    return guarded([&] {
        require(host && guest && valid, "null argument");
        auto check = check_colouring({host->g.graph, guest->g.graph, edge_map(map, length)});
        *valid = check.valid ? 1 : 0;
        if (problems) {
            std::vector<std::string> lines;
            for (const auto& v : check.violations)
                lines.push_back(v.describe());
            *problems = dup(join_lines(lines));
        }
    });
}

hc_status hc_certificate_format(const hc_graph* host, const hc_graph* guest, const uint32_t* map, size_t length,
                                const char* host_path, const char* guest_path, char** out)
{
    return guarded([&] {
        require(host && guest && host_path && guest_path && out, "null argument");
        Colouring c{host->g.graph, guest->g.graph, edge_map(map, length)};
        if (!check_colouring(c).valid)
            fail(ErrorCode::InvalidColouring, "refusing to certify an invalid colouring");
        *out = dup(format_certificate(make_certificate(c, host_path, guest_path)));
    });
}

hc_status hc_certificate_check(const char* text, const char* base_dir, int* valid, char** problems)
{
    return guarded([&] {
        require(text && valid, "null argument");
        auto check = check_certificate(text, base_dir ? base_dir : ".");
        *valid = check.valid ? 1 : 0;
        if (problems)
            *problems = dup(join_lines(check.problems));
    });
}

hc_status hc_images(const hc_graph* guest, uint64_t node_limit, hc_image_set** out)
{
    return guarded([&] {
        require(guest && out, "null argument");
        *out = new hc_image_set{enumerate_splitted_images(guest->g.graph, {node_limit})};
    });
}

size_t hc_image_set_size(const hc_image_set* s) { return s ? s->atlas.classes.size() : 0; }

int hc_image_set_complete(const hc_image_set* s) { return s && s->atlas.complete ? 1 : 0; }

int hc_image_set_tk2_realizable(const hc_image_set* s) { return s && s->atlas.tk2_realizable ? 1 : 0; }

uint64_t hc_image_set_nodes(const hc_image_set* s) { return s ? s->atlas.nodes : 0; }

uint64_t hc_image_set_partitions(const hc_image_set* s) { return s ? s->atlas.partitions : 0; }

hc_status hc_image_info_get(const hc_image_set* s, size_t i, hc_image_info* out)
{
    return guarded([&] {
        require(s && out, "null argument");
        require(i < s->atlas.classes.size(), "image index out of range");
        const auto& cls = s->atlas.classes[i];
        out->split_vertices = cls.image.split_vertices.size();
        out->unused_leaves = cls.image.unused_leaves.size();
        out->multiplicity = cls.multiplicity;
        out->admits_extension = image_admits_extension(cls.image) ? 1 : 0;
    });
}

hc_status hc_image_graph(const hc_image_set* s, size_t i, hc_graph** out)
{
    return guarded([&] {
        require(s && out, "null argument");
        require(i < s->atlas.classes.size(), "image index out of range");
        *out = wrap(s->atlas.classes[i].image.graph);
    });
}

const uint32_t* hc_image_witness(const hc_image_set* s, size_t i, size_t* length)
{
    if (!s || i >= s->atlas.classes.size() || !s->atlas.classes[i].image.witness)
        return nullptr;
    const auto& map = s->atlas.classes[i].image.witness->edge_map;
    if (length)
        *length = map.size();
    return map.data();
}

void hc_image_set_free(hc_image_set* s) { delete s; }

hc_status hc_recipe_names(char** out)
{
    return guarded([&] {
        require(out, "null argument");
        *out = dup(join_lines(recipe_names()));
    });
}

hc_status hc_recipe_run(const char* name, const char* params_json, hc_line_callback on_line,
                        hc_timing_callback on_timing, void* user, hc_outcome* outcome)
{
    return guarded([&] {
        require(name && outcome, "null argument");
        auto params = params_json ? nlohmann::json::parse(params_json) : nlohmann::json::object();
        auto report = run_recipe(name, params, make_sink(on_line, on_timing, user));
        *outcome = outcome_code(report.outcome());
    });
}

void hc_corpus_options_init(hc_corpus_options* options)
{
    if (!options)
        return;
    CorpusOptions d;
    options->host = "s4";
    options->host_params = nullptr;
    options->host_param_count = 0;
    options->node_limit = d.node_limit;
    options->threads = 0;
    options->resume_from = 1;
}

hc_status hc_corpus_run(const char* path, const hc_corpus_options* options, hc_line_callback on_line,
                        hc_timing_callback on_timing, void* user, hc_outcome* outcome)
{
    return guarded([&] {
        require(path && options && options->host && outcome, "null argument");
        require(options->host_params || options->host_param_count == 0, "null host parameters");
        CorpusOptions o;
        o.host = options->host;
        o.host_params.assign(options->host_params, options->host_params + options->host_param_count);
        o.node_limit = options->node_limit;
        o.threads = options->threads;
        o.resume_from = options->resume_from ? options->resume_from : 1;
        std::ifstream in(path);
        if (!in)
            fail(ErrorCode::Io, std::string("cannot open ") + path);
        auto report = run_corpus(in, o, make_sink(on_line, on_timing, user));
        *outcome = outcome_code(report.outcome());
    });
}

} // extern "C"
