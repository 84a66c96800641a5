// Exercises the shared library through its C header only.

#include <hcolor/hcolor.h>

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace {

hc_graph* gen(const char* name, std::vector<int> params = {})
{
    hc_graph* g = nullptr;
    REQUIRE(hc_graph_generate(name, params.data(), params.size(), &g) == HC_OK);
    return g;
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

struct Lines {
    std::vector<std::string> lines;
    std::size_t timings = 0;
};

void on_line(const char* line, void* user) { static_cast<Lines*>(user)->lines.emplace_back(line); }
void on_timing(const char*, double seconds, void* user)
{
    CHECK(seconds >= 0);
    ++static_cast<Lines*>(user)->timings;
}

} // namespace

TEST_CASE("graph handles")
{
    const uint32_t ends[] = {0, 1, 1, 2, 2, 0};
    hc_graph* tri = nullptr;
    REQUIRE(hc_graph_create(3, ends, 3, &tri) == HC_OK);
    CHECK(hc_graph_vertex_count(tri) == 3);
    CHECK(hc_graph_edge_count(tri) == 3);
    uint32_t a = 9, b = 9;
    CHECK(hc_graph_edge(tri, 1, &a, &b) == HC_OK);
    CHECK(a == 1);
    CHECK(b == 2);
    CHECK(hc_graph_edge(tri, 7, &a, &b) == HC_ERR_INVALID_EDGE);

    char* text = nullptr;
    REQUIRE(hc_graph_to_text(tri, &text) == HC_OK);
    hc_graph* back = nullptr;
    REQUIRE(hc_graph_parse(text, &back) == HC_OK);
    hc_string_free(text);
    int iso = 0;
    CHECK(hc_graph_isomorphic(tri, back, &iso) == HC_OK);
    CHECK(iso == 1);

    char* g6 = nullptr;
    REQUIRE(hc_graph_to_graph6(tri, &g6) == HC_OK);
    CHECK(take(g6) == "Bw\n");

    char* dot = nullptr;
    REQUIRE(hc_graph_to_dot(tri, &dot) == HC_OK);
    CHECK(take(dot).find("graph") != std::string::npos);

    char* d1 = nullptr;
    char* d2 = nullptr;
    REQUIRE(hc_graph_digest(tri, &d1) == HC_OK);
    REQUIRE(hc_graph_digest(back, &d2) == HC_OK);
    CHECK(take(d1) == take(d2));

    hc_graph_free(tri);
    hc_graph_free(back);
}

TEST_CASE("errors come back as status codes")
{
    hc_graph* g = nullptr;
    const uint32_t loop[] = {0, 0};
    CHECK(hc_graph_create(2, loop, 1, &g) == HC_ERR_INVALID_ARGUMENT);
    CHECK(g == nullptr);
    CHECK(std::string(hc_last_error()).size() > 0);
    CHECK(hc_graph_parse("2 1\n0 7\n", &g) == HC_ERR_PARSE);
    const uint32_t far[] = {0, 7};
    CHECK(hc_graph_create(2, far, 1, &g) == HC_ERR_INVALID_VERTEX);
    CHECK(hc_graph_generate("nonsense", nullptr, 0, &g) == HC_ERR_INVALID_ARGUMENT);
    CHECK(hc_graph_read("/nonexistent/file", &g) == HC_ERR_IO);
    CHECK(hc_graph_from_graph6("C", &g) == HC_ERR_PARSE);
    CHECK(hc_graph_create(2, loop, 1, nullptr) == HC_ERR_INVALID_ARGUMENT);
    CHECK(std::string(hc_status_name(HC_OK)) == "ok");
    CHECK(std::string(hc_status_name(HC_ERR_SIZE_GUARD)) != hc_status_name(HC_ERR_PARSE));
    CHECK(std::string(hc_version()).size() == 16);
    hc_outcome o;
    CHECK(hc_recipe_run("no-such-recipe", nullptr, nullptr, nullptr, nullptr, &o) == HC_ERR_UNKNOWN_RECIPE);
}

TEST_CASE("solving through the C API")
{
    hc_graph* s4 = gen("s4");
    hc_graph* p = gen("petersen");
    hc_graph* k4 = gen("complete", {4});

    hc_solve_result* r = nullptr;
    REQUIRE(hc_solve(s4, p, HC_MODE_FIRST, 0, 0, &r) == HC_OK);
    CHECK(hc_solve_result_status(r) == HC_SAT);
    REQUIRE(hc_solve_result_colouring_count(r) == 1);
    size_t len = 0;
    const uint32_t* map = hc_solve_result_colouring(r, 0, &len);
    REQUIRE(map);
    CHECK(len == 15);
    int valid = 0;
    char* problems = nullptr;
    CHECK(hc_check_colouring(s4, p, map, len, &valid, &problems) == HC_OK);
    CHECK(valid == 1);
    take(problems);

    std::vector<uint32_t> broken(map, map + len);
    broken[0] = (broken[0] + 1) % 5;
    CHECK(hc_check_colouring(s4, p, broken.data(), len, &valid, &problems) == HC_OK);
    CHECK(valid == 0);
    CHECK_FALSE(take(problems).empty());
    CHECK(hc_check_colouring(s4, p, map, 3, &valid, nullptr) == HC_ERR_NOT_TOTAL);

    char* cert = nullptr;
    CHECK(hc_certificate_format(s4, p, map, len, "h.txt", "g.txt", &cert) == HC_OK);
    CHECK(take(cert).rfind("hcolor-certificate 1", 0) == 0);
    hc_solve_result_free(r);

    REQUIRE(hc_solve(k4, p, HC_MODE_FIRST, 0, 0, &r) == HC_OK);
    CHECK(hc_solve_result_status(r) == HC_UNSAT);
    hc_solve_result_free(r);

    REQUIRE(hc_solve(k4, p, HC_MODE_FIRST, 2, 0, &r) == HC_OK);
    CHECK(hc_solve_result_status(r) == HC_UNKNOWN);
    hc_solve_result_free(r);

    REQUIRE(hc_solve(p, p, HC_MODE_COUNT, 0, 0, &r) == HC_OK);
    CHECK(hc_solve_result_count(r) == 120);
    CHECK(hc_solve_result_nodes(r) > 0);
    hc_solve_result_free(r);

    hc_graph* big = gen("complete", {13});
    CHECK(hc_solve(big, p, HC_MODE_FIRST, 0, 0, &r) == HC_ERR_SIZE_GUARD);
    hc_graph_free(big);

    hc_graph_free(s4);
    hc_graph_free(p);
    hc_graph_free(k4);
}

TEST_CASE("certificate check through files")
{
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "hcolor_test_capi";
    fs::remove_all(dir);
    fs::create_directories(dir);
    hc_graph* s4 = gen("s4");
    hc_graph* p = gen("petersen");
    for (auto [g, name] : {std::pair{s4, "h.txt"}, std::pair{p, "g.txt"}}) {
        char* text = nullptr;
        REQUIRE(hc_graph_to_text(g, &text) == HC_OK);
        std::ofstream(dir / name) << text;
        hc_string_free(text);
    }
    hc_solve_result* r = nullptr;
    REQUIRE(hc_solve(s4, p, HC_MODE_FIRST, 0, 0, &r) == HC_OK);
    size_t len = 0;
    const uint32_t* map = hc_solve_result_colouring(r, 0, &len);
    char* cert = nullptr;
    REQUIRE(hc_certificate_format(s4, p, map, len, "h.txt", "g.txt", &cert) == HC_OK);
    int valid = 0;
    char* problems = nullptr;
    CHECK(hc_certificate_check(cert, dir.c_str(), &valid, &problems) == HC_OK);
    CHECK(valid == 1);
    take(problems);
    hc_string_free(cert);
    hc_solve_result_free(r);
    hc_graph_free(s4);
    hc_graph_free(p);
    fs::remove_all(dir);
}

TEST_CASE("images through the C API")
{
    hc_graph* p = gen("petersen");
    hc_image_set* s = nullptr;
    REQUIRE(hc_images(p, 0, &s) == HC_OK);
    CHECK(hc_image_set_size(s) == 2);
    CHECK(hc_image_set_complete(s) == 1);
    CHECK(hc_image_set_tk2_realizable(s) == 0);
    CHECK(hc_image_set_partitions(s) == 121);
    hc_graph* s4 = gen("s4");
    bool found_s4 = false;
    for (size_t i = 0; i < hc_image_set_size(s); ++i) {
        hc_image_info info;
        REQUIRE(hc_image_info_get(s, i, &info) == HC_OK);
        hc_graph* img = nullptr;
        REQUIRE(hc_image_graph(s, i, &img) == HC_OK);
        size_t len = 0;
        const uint32_t* w = hc_image_witness(s, i, &len);
        int valid = 0;
        CHECK(hc_check_colouring(img, p, w, len, &valid, nullptr) == HC_OK);
        CHECK(valid == 1);
        int iso = 0;
        hc_graph_isomorphic(img, s4, &iso);
        if (iso) {
            found_s4 = true;
            CHECK(info.multiplicity == 120);
            CHECK(info.unused_leaves == 1);
            CHECK(info.split_vertices == 0);
            CHECK(info.admits_extension == 0);
        }
        hc_graph_free(img);
    }
    CHECK(found_s4);
    hc_image_info info;
    CHECK(hc_image_info_get(s, 5, &info) == HC_ERR_INVALID_ARGUMENT);
    hc_image_set_free(s);
    hc_graph_free(s4);
    hc_graph_free(p);
}

TEST_CASE("recipes and corpus through the C API")
{
    char* names = nullptr;
    REQUIRE(hc_recipe_names(&names) == HC_OK);
    CHECK(take(names).find("petersen-images") != std::string::npos);

    Lines out;
    hc_outcome o = HC_FAIL;
    REQUIRE(hc_recipe_run("petersen-images", "{}", on_line, on_timing, &out, &o) == HC_OK);
    CHECK(o == HC_PASS);
    CHECK_FALSE(out.lines.empty());
    CHECK(out.timings == out.lines.size());
    CHECK(hc_recipe_run("petersen-images", "[1]", on_line, nullptr, &out, &o) == HC_ERR_INVALID_ARGUMENT);
    CHECK(hc_recipe_run("petersen-images", "{bad", on_line, nullptr, &out, &o) == HC_ERR_PARSE);

    namespace fs = std::filesystem;
    auto path = fs::temp_directory_path() / "hcolor_test_capi_corpus.g6";
    std::ofstream(path) << "C~\nIheA@GUAo\n";
    hc_corpus_options opt;
    hc_corpus_options_init(&opt);
    CHECK(std::string(opt.host) == "s4");
    opt.threads = 1;
    Lines corpus;
    REQUIRE(hc_corpus_run(path.c_str(), &opt, on_line, nullptr, &corpus, &o) == HC_OK);
    CHECK(o == HC_PASS);
    CHECK(corpus.lines.size() == 3);
    CHECK(hc_corpus_run("/nonexistent.g6", &opt, on_line, nullptr, &corpus, &o) == HC_ERR_IO);
    fs::remove(path);
}
