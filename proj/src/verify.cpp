#include "verify.hpp"

#include "image_enum.hpp"
#include "io.hpp"
#include "named_graphs.hpp"
#include "solver.hpp"
#include "structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <thread>

#ifndef HCOLOR_SOURCE_DIGEST
#define HCOLOR_SOURCE_DIGEST "unversioned"
#endif

namespace hcolor {

using nlohmann::json;

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass:
        return "pass";
    case Outcome::Fail:
        return "fail";
    case Outcome::Unknown:
        return "unknown";
    case Outcome::Skip:
        return "skip";
    }
    return "unknown";
}

Outcome combine(Outcome a, Outcome b)
{
    auto rank = [](Outcome o) {
        switch (o) {
        case Outcome::Skip:
            return 0;
        case Outcome::Pass:
            return 1;
        case Outcome::Unknown:
            return 2;
        case Outcome::Fail:
            return 3;
        }
        return 2;
    };
    return rank(a) >= rank(b) ? a : b;
}

json CheckResult::to_json() const
{
    return json{{"recipe", recipe}, {"check", check},       {"outcome", to_string(outcome)},
                {"nodes", nodes},   {"detail", detail},     {"version", version_digest()}};
}

Outcome VerificationReport::outcome() const
{
    Outcome out = Outcome::Skip;
    for (const auto& c : checks)
        out = combine(out, c.outcome);
    // A report with nothing checked proves nothing.
    return out == Outcome::Skip ? Outcome::Unknown : out;
}

const char* version_digest() { return HCOLOR_SOURCE_DIGEST; }

void write_report_line(std::ostream& out, const CheckResult& check) { out << check.to_json().dump() << '\n'; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome pass_if(bool ok) { return ok ? Outcome::Pass : Outcome::Fail; }

json edge_list_json(const Multigraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.a, e.b});
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

json colouring_json(const Colouring& c)
{
    return json{{"host_digest", canonical_form(c.host).digest()},
                {"guest_digest", canonical_form(c.guest).digest()},
                {"map", c.edge_map}};
}

class Recipe {
public:
    Recipe(std::string name, const json& params, const CheckSink& sink)
        : name_(std::move(name)), params_(params), sink_(sink)
    {
        report_.recipe = name_;
    }

    std::uint64_t u64(const char* key, std::uint64_t fallback) const
    {
        if (!params_.contains(key))
            return fallback;
        const auto& v = params_.at(key);
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
            fail(ErrorCode::InvalidArgument, std::string("parameter ") + key + " must be a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::string text(const char* key) const
    {
        if (!params_.contains(key) || !params_.at(key).is_string())
            fail(ErrorCode::InvalidArgument, std::string("parameter ") + key + " is required");
        return params_.at(key).get<std::string>();
    }

    const json& params() const { return params_; }

    CheckResult start(std::string check) const
    {
        CheckResult r;
        r.recipe = name_;
        r.check = std::move(check);
        return r;
    }

    void emit(CheckResult r)
    {
        if (sink_)
            sink_(r);
        report_.checks.push_back(std::move(r));
    }

    /// Second pass over every witness claimed so far.
    VerificationReport finish()
    {
        auto t0 = Clock::now();
        auto r = start("witnesses-revalidated");
        std::size_t total = 0, bad = 0;
        for (auto& c : report_.checks) {
            for (const auto& w : c.witnesses) {
                ++total;
                if (!check_colouring(w).valid)
                    ++bad;
            }
            c.witnesses.clear();
        }
        r.outcome = pass_if(bad == 0);
        r.detail = {{"witnesses", total}, {"invalid", bad}};
        r.seconds = seconds_since(t0);
        emit(std::move(r));
        return std::move(report_);
    }

    VerificationReport& report() { return report_; }

private:
    std::string name_;
    json params_;
    const CheckSink& sink_;
    VerificationReport report_;
};

// Image atlases against an expected set of named graphs.

struct Named {
    std::string name;
    Multigraph graph;
};

std::string match_name(const Multigraph& g, const std::vector<Named>& known)
{
    for (const auto& k : known)
        if (is_isomorphic(g, k.graph))
            return k.name;
    return {};
}

json image_json(const ImageClass& cls, const std::vector<Named>& known)
{
    json j{{"digest", cls.form.digest()},
           {"vertices", cls.image.graph.vertex_count()},
           {"edges", cls.image.graph.edge_count()},
           {"split_vertices", cls.image.split_vertices.size()},
           {"unused_leaves", cls.image.unused_leaves.size()},
           {"multiplicity", cls.multiplicity},
           {"graph", edge_list_json(cls.image.graph)}};
    if (auto name = match_name(cls.image.graph, known); !name.empty())
        j["name"] = name;
    return j;
}

ImageAtlas atlas_checks(Recipe& recipe, const Multigraph& guest, const std::vector<Named>& expected,
                        bool require_no_split)
{
    ImageLimits limits;
    limits.node_limit = recipe.u64("node_limit", 0);
    auto t0 = Clock::now();
    ImageAtlas atlas = enumerate_splitted_images(guest, limits);

    auto r = recipe.start("atlas");
    r.seconds = seconds_since(t0);
    r.nodes = atlas.nodes;
    std::vector<CanonicalForm> want, got;
    for (const auto& e : expected)
        want.push_back(canonical_form(e.graph));
    std::sort(want.begin(), want.end());
    json images = json::array();
    for (const auto& cls : atlas.classes) {
        got.push_back(cls.form);
        images.push_back(image_json(cls, expected));
        if (cls.image.witness)
            r.witnesses.push_back(*cls.image.witness);
    }
    json names = json::array();
    for (const auto& e : expected)
        names.push_back(e.name);
    r.detail = {{"guest", guest.name()},
                {"complete", atlas.complete},
                {"partitions", atlas.partitions},
                {"tk2_realizable", atlas.tk2_realizable},
                {"expected", names},
                {"images", images}};
    if (!atlas.complete)
        r.outcome = Outcome::Unknown;
    else
        r.outcome = pass_if(expected.empty() || got == want);
    recipe.emit(std::move(r));

    if (require_no_split) {
        auto s = recipe.start("no-split-vertices");
        bool ok = atlas.complete;
        for (const auto& cls : atlas.classes)
            ok = ok && cls.image.split_vertices.empty();
        s.outcome = atlas.complete ? pass_if(ok) : Outcome::Unknown;
        recipe.emit(std::move(s));
    }

    // Every realised image must actually colour the guest as a host.
    t0 = Clock::now();
    auto h = recipe.start("images-colour-guest");
    bool ok = true;
    for (const auto& cls : atlas.classes) {
        auto res = solve(cls.image.graph, guest, SolveMode::First);
        h.nodes += res.stats.nodes;
        ok = ok && res.status == SolveStatus::Sat;
        for (auto& c : res.colourings)
            h.witnesses.push_back(std::move(c));
    }
    h.outcome = pass_if(ok);
    h.detail = {{"images", atlas.classes.size()}};
    h.seconds = seconds_since(t0);
    recipe.emit(std::move(h));
    return atlas;
}

void cubic_image_checks(Recipe& recipe, const ImageAtlas& atlas, bool bridge_lemma)
{
    auto dichotomy = recipe.start("degree-dichotomy");
    auto connected = recipe.start("images-connected");
    auto bridges_ok = recipe.start("bridge-lemma");
    bool deg_ok = true, conn_ok = true, bridge_ok = true;
    std::size_t bridge_count = 0;
    for (const auto& cls : atlas.classes) {
        const auto& g = cls.image.graph;
        const auto& used = cls.image.used_vertices;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const bool is_used = std::binary_search(used.begin(), used.end(), v);
            const auto d = g.degree(v);
            if (!((d == 3 && is_used) || (d == 1 && !is_used)))
                deg_ok = false;
        }
        conn_ok = conn_ok && is_connected(g);
        for (auto e : bridges(g)) {
            ++bridge_count;
            const auto [a, b] = g.edges()[e];
            if ((g.degree(a) == 1) == (g.degree(b) == 1))
                bridge_ok = false;
        }
    }
    dichotomy.outcome = pass_if(atlas.complete && deg_ok);
    connected.outcome = pass_if(atlas.complete && conn_ok);
    recipe.emit(std::move(dichotomy));
    recipe.emit(std::move(connected));
    if (bridge_lemma) {
        bridges_ok.outcome = pass_if(atlas.complete && bridge_ok);
        bridges_ok.detail = {{"bridges", bridge_count}};
        recipe.emit(std::move(bridges_ok));
    }
}

VerificationReport petersen_images(Recipe recipe)
{
    auto atlas = atlas_checks(recipe, petersen().graph, {{"P", petersen().graph}, {"S4", s4().graph}}, true);
    cubic_image_checks(recipe, atlas, true);
    return recipe.finish();
}

VerificationReport s10_images(Recipe recipe)
{
    auto atlas = atlas_checks(recipe, s10().graph, {{"S10", s10().graph}}, true);
    cubic_image_checks(recipe, atlas, false);
    return recipe.finish();
}

VerificationReport s12_images(Recipe recipe)
{
    auto atlas = atlas_checks(recipe, s12().graph, {{"S10", s10().graph}, {"S12", s12().graph}}, true);
    cubic_image_checks(recipe, atlas, false);
    return recipe.finish();
}

VerificationReport s12km_rigidity(Recipe recipe)
{
    const int k = static_cast<int>(recipe.u64("k", 1));
    auto g = s12_plus_kM(k).graph;
    atlas_checks(recipe, g, {{"S12+" + std::to_string(k) + "M", g}}, true);
    return recipe.finish();
}

VerificationReport p_matching_cuts(Recipe recipe)
{
    auto t0 = Clock::now();
    const auto p = petersen().graph;
    std::size_t matchings = 0, cuts = 0, perfect = 0, mismatched = 0;
    enumerate_matchings(p, 0, [&](const Matching& m) {
        ++matchings;
        const bool cut = is_edge_cut(p, m.edges);
        cuts += cut;
        perfect += m.is_perfect;
        if (cut != m.is_perfect)
            ++mismatched;
        return true;
    });
    auto r = recipe.start("cuts-are-perfect-matchings");
    r.outcome = pass_if(mismatched == 0);
    r.detail = {{"matchings", matchings}, {"edge_cuts", cuts}, {"mismatched", mismatched}};
    r.seconds = seconds_since(t0);
    recipe.emit(std::move(r));

    auto c = recipe.start("perfect-matching-count");
    c.outcome = pass_if(perfect == 6 && count_perfect_matchings(p) == 6);
    c.detail = {{"perfect_matchings", perfect}};
    recipe.emit(std::move(c));
    return recipe.finish();
}

VerificationReport k5_images(Recipe recipe)
{
    const int n = static_cast<int>(recipe.u64("n", 5));
    if (n < 3 || n % 2 == 0)
        fail(ErrorCode::InvalidArgument, "k5-images takes an odd n >= 3");
    const auto r = static_cast<std::size_t>(n - 1);
    auto atlas = atlas_checks(recipe, complete(n).graph, {}, true);
    auto c = recipe.start("images-in-odd-k-family");
    bool ok = atlas.complete;
    json members = json::array();
    for (const auto& cls : atlas.classes) {
        const auto& g = cls.image.graph;
        const bool member = is_k_family_member(g, r) && g.vertex_count() % 2 == 1 && cls.image.split_vertices.empty() &&
                            cls.image.unused_leaves.empty();
        ok = ok && member;
        members.push_back({{"digest", cls.form.digest()}, {"t", g.vertex_count()}, {"member", member}});
    }
    c.outcome = atlas.complete ? pass_if(ok) : Outcome::Unknown;
    c.detail = {{"images", members}};
    recipe.emit(std::move(c));
    return recipe.finish();
}

Outcome from_solve(SolveStatus s, bool want_sat)
{
    if (s == SolveStatus::Unknown)
        return Outcome::Unknown;
    return pass_if((s == SolveStatus::Sat) == want_sat);
}

VerificationReport j4_exclusion(Recipe recipe)
{
    const int r = static_cast<int>(recipe.u64("r", 2));
    SolveLimits limits;
    limits.node_limit = recipe.u64("node_limit", 0);
    const auto guest = j_graph(r).graph;
    std::vector<Multigraph> hosts;
    for (int t = 3; t <= 2 * r + 1; t += 2)
        for (auto& h : k_family_members(t, 2 * r))
            hosts.push_back(std::move(h));
    auto count = recipe.start("host-count");
    count.outcome = pass_if(!hosts.empty());
    count.detail = {{"hosts", hosts.size()}};
    recipe.emit(std::move(count));
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        auto t0 = Clock::now();
        auto res = solve(hosts[i], guest, SolveMode::First, limits);
        auto c = recipe.start("host-" + std::to_string(i + 1) + "-unsat");
        c.outcome = from_solve(res.status, false);
        c.nodes = res.stats.nodes;
        c.detail = {{"host", edge_list_json(hosts[i])},
                    {"host_digest", canonical_form(hosts[i]).digest()},
                    {"status", to_string(res.status)}};
        for (auto& w : res.colourings) {
            c.detail["counterexample"] = colouring_json(w);
            c.witnesses.push_back(std::move(w));
        }
        c.seconds = seconds_since(t0);
        recipe.emit(std::move(c));
    }
    return recipe.finish();
}

// Perfect matchings by brute force over all matchings, independent of the
// dedicated perfect-matching search.
std::vector<EdgeSet> perfect_matchings_by_scan(const Multigraph& g)
{
    std::vector<EdgeSet> out;
    enumerate_matchings(g, g.vertex_count() / 2, [&](const Matching& m) {
        if (m.edges.size() * 2 == g.vertex_count())
            out.push_back(m.edges);
        return true;
    });
    return out;
}

bool disjoint(const EdgeSet& a, const EdgeSet& b)
{
    std::vector<EdgeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return common.empty();
}

VerificationReport thm44(Recipe recipe)
{
    const int r = static_cast<int>(recipe.u64("r", 4));
    const int max_order = static_cast<int>(recipe.u64("max_order", 10));
    SolveLimits limits;
    limits.node_limit = recipe.u64("node_limit", 0);
    if (r < 4)
        fail(ErrorCode::InvalidArgument, "thm44 needs r >= 4");

    auto t0 = Clock::now();
    auto witness = poorly_matchable_witness(r, max_order);
    auto w = recipe.start("witness-search");
    w.seconds = seconds_since(t0);
    w.outcome = pass_if(witness.has_value());
    w.detail = {{"r", r}, {"max_order", max_order}};
    if (witness)
        w.detail["witness"] = edge_list_json(*witness);
    recipe.emit(std::move(w));

    auto has_pm = recipe.start("witness-has-perfect-matching");
    auto no_two = recipe.start("witness-no-two-disjoint-perfect-matchings");
    auto unsat = recipe.start("host-does-not-colour-witness");
    if (witness) {
        const auto pms = perfect_matchings_by_scan(*witness);
        bool pair = false;
        for (std::size_t i = 0; i < pms.size() && !pair; ++i)
            for (std::size_t j = i + 1; j < pms.size() && !pair; ++j)
                pair = disjoint(pms[i], pms[j]);
        has_pm.outcome = pass_if(!pms.empty());
        has_pm.detail = {{"perfect_matchings", pms.size()}};
        no_two.outcome = pass_if(!pair && !has_two_disjoint_perfect_matchings(*witness));
    } else {
        has_pm.outcome = no_two.outcome = Outcome::Fail;
    }
    recipe.emit(std::move(has_pm));
    recipe.emit(std::move(no_two));

    const auto host = s12_plus_kM(r - 3).graph;
    auto two = recipe.start("host-two-disjoint-perfect-matchings");
    auto pmpair = two_disjoint_perfect_matchings(host);
    two.outcome = pass_if(pmpair && is_perfect_matching(host, pmpair->first) &&
                          is_perfect_matching(host, pmpair->second) && disjoint(pmpair->first, pmpair->second));
    if (pmpair)
        two.detail = {{"first", pmpair->first}, {"second", pmpair->second}};
    recipe.emit(std::move(two));

    if (witness) {
        t0 = Clock::now();
        auto res = solve(host, *witness, SolveMode::First, limits);
        unsat.outcome = from_solve(res.status, false);
        unsat.nodes = res.stats.nodes;
        unsat.detail = {{"status", to_string(res.status)}};
        for (auto& c : res.colourings) {
            unsat.detail["counterexample"] = colouring_json(c);
            unsat.witnesses.push_back(std::move(c));
        }
        unsat.seconds = seconds_since(t0);
    } else {
        unsat.outcome = Outcome::Fail;
        unsat.detail = {{"status", "no witness"}};
    }
    recipe.emit(std::move(unsat));
    return recipe.finish();
}

// Preimage lemma properties on solver-found colourings.

struct LemmaPair {
    const char* host;
    std::vector<int> host_params;
    const char* guest;
    std::vector<int> guest_params;
};

const std::vector<LemmaPair>& lemma_pairs()
{
    static const std::vector<LemmaPair> pairs{
        {"s4", {}, "petersen", {}},          {"petersen", {}, "petersen", {}}, {"s10", {}, "s10", {}},
        {"s12", {}, "s12", {}},              {"s10", {}, "s12", {}},           {"complete", {4}, "complete", {4}},
        {"complete", {5}, "complete", {5}},  {"s12+kM", {1}, "s12+kM", {1}},   {"petersen", {}, "complete", {4}},
        {"s4", {}, "complete", {4}},         {"s10", {}, "petersen", {}},      {"s6", {}, "s6", {}},
    };
    return pairs;
}

struct Tally {
    std::size_t sets = 0;
    std::size_t violations = 0;
    std::map<std::string, std::size_t> premises;
    json first_violation;
};

void classify_into(const PreimageAnalyser& a, const Colouring& c, std::span<const EdgeId> F, Tally& t)
{
    const auto p = a.classify(F);
    ++t.sets;
    t.premises["matching"] += p.host_matching;
    t.premises["perfect_matching"] += p.host_perfect_matching;
    t.premises["covers_used"] += p.host_covers_used;
    t.premises["clean_cut"] += p.host_clean_cut;
    t.premises["regular"] += p.host_regular_degree.has_value();
    if (!p.consistent()) {
        if (t.violations++ == 0)
            t.first_violation = {{"colouring", colouring_json(c)}, {"F", std::vector<EdgeId>(F.begin(), F.end())}};
    }
}

VerificationReport lemma24_props(Recipe recipe)
{
    const auto seed = recipe.u64("seed", 1);
    const auto per_pair = recipe.u64("colourings_per_pair", 20);
    const auto samples = recipe.u64("random_sets", 200);
    std::size_t colourings = 0, pairs_used = 0;
    Tally total;
    for (std::size_t i = 0; i < lemma_pairs().size(); ++i) {
        const auto& lp = lemma_pairs()[i];
        auto t0 = Clock::now();
        const auto host = generate_named(lp.host, lp.host_params).graph;
        const auto guest = generate_named(lp.guest, lp.guest_params).graph;
        std::vector<Colouring> found;
        auto res = solve_each(host, guest, {}, [&](const std::vector<EdgeId>& map) {
            found.push_back({host, guest, map});
            return found.size() < per_pair;
        });
        std::mt19937_64 rng(seed * 1000003 + i);
        const auto host_matchings = all_matchings(host);
        const auto host_pms = perfect_matchings_by_scan(host);
        Tally tally;
        for (const auto& c : found) {
            PreimageAnalyser a(c);
            for (const auto& m : host_matchings)
                classify_into(a, c, m.edges, tally);
            // Complements of perfect matchings: spanning (d-1)-regular sets
            // on d-regular hosts.
            for (const auto& pm : host_pms) {
                EdgeSet rest;
                for (EdgeId e = 0; e < host.edge_count(); ++e)
                    if (!std::binary_search(pm.begin(), pm.end(), e))
                        rest.push_back(e);
                classify_into(a, c, rest, tally);
            }
            // Random subsets of Im(f), where the cut statement lives, and of E(H).
            const auto& origin = a.image().edge_origin;
            for (std::uint64_t s = 0; s < samples; ++s) {
                EdgeSet F;
                if (s % 2 == 0) {
                    for (auto h : origin)
                        if (rng() & 1)
                            F.push_back(h);
                } else {
                    for (EdgeId h = 0; h < host.edge_count(); ++h)
                        if (rng() & 1)
                            F.push_back(h);
                }
                classify_into(a, c, F, tally);
            }
            // Small cuts of H_f: boundaries of single vertices and of adjacent pairs.
            for (VertexId v = 0; v < a.image().graph.vertex_count(); ++v) {
                const VertexId one[] = {v};
                EdgeSet F;
                for (auto e : boundary(a.image().graph, one))
                    F.push_back(origin[e]);
                classify_into(a, c, make_edge_set(F), tally);
            }
        }
        auto r = recipe.start("pair-" + std::to_string(i + 1));
        r.outcome = found.empty() ? Outcome::Fail : pass_if(tally.violations == 0);
        r.nodes = res.stats.nodes;
        r.detail = {{"host", std::string(lp.host)}, {"host_params", lp.host_params},
                    {"guest", std::string(lp.guest)}, {"guest_params", lp.guest_params},
                    {"colourings", found.size()}, {"edge_sets", tally.sets},
                    {"violations", tally.violations}, {"premises", tally.premises}};
        if (tally.violations)
            r.detail["first_violation"] = tally.first_violation;
        r.witnesses = std::move(found);
        r.seconds = seconds_since(t0);
        colourings += r.witnesses.size();
        pairs_used += !r.witnesses.empty();
        total.sets += tally.sets;
        total.violations += tally.violations;
        for (const auto& [k, v] : tally.premises)
            total.premises[k] += v;
        recipe.emit(std::move(r));
    }
    auto cov = recipe.start("coverage");
    bool exercised = true;
    for (const auto& [k, v] : total.premises)
        exercised = exercised && v > 0;
    cov.outcome = pass_if(colourings >= 100 && pairs_used >= 10 && exercised && total.violations == 0);
    cov.detail = {{"colourings", colourings}, {"pairs", pairs_used}, {"edge_sets", total.sets},
                  {"violations", total.violations}, {"premises", total.premises}};
    recipe.emit(std::move(cov));
    return recipe.finish();
}

VerificationReport corpus_recipe(Recipe recipe, const std::string& host, const CheckSink& sink)
{
    CorpusOptions options;
    options.host = host;
    options.node_limit = recipe.u64("node_limit", options.node_limit);
    options.threads = recipe.u64("threads", 0);
    options.resume_from = recipe.u64("resume_from", 1);
    const auto path = recipe.text("file");
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::Io, "cannot open " + path);
    auto report = run_corpus(in, options, [&](const CheckResult& c) {
        if (sink) {
            CheckResult named = c;
            named.recipe = recipe.report().recipe;
            sink(named);
        }
    });
    for (auto& c : report.checks)
        c.recipe = recipe.report().recipe;
    report.recipe = recipe.report().recipe;
    return report;
}

bool bridgeless_cubic(const Multigraph& g, std::string& why)
{
    if (!g.is_simple())
        why = "not simple";
    else if (g.vertex_count() == 0 || !is_regular(g, 3))
        why = "not cubic";
    else if (!is_connected(g))
        why = "not connected";
    else if (!bridges(g).empty())
        why = "has a bridge";
    else
        return true;
    return false;
}

} // namespace

std::vector<std::string> recipe_names()
{
    return {"corpus-p",   "corpus-s4",      "j4-exclusion", "k5-images", "lemma24-props", "p-matching-cuts",
            "petersen-images", "s10-images", "s12-images",  "s12kM-rigidity", "thm44"};
}

VerificationReport run_recipe(const std::string& name, const json& params, const CheckSink& sink)
{
    if (!params.is_object())
        fail(ErrorCode::InvalidArgument, "recipe parameters must be a JSON object");
    Recipe recipe(name, params, sink);
    if (name == "petersen-images")
        return petersen_images(std::move(recipe));
    if (name == "s10-images")
        return s10_images(std::move(recipe));
    if (name == "s12-images")
        return s12_images(std::move(recipe));
    if (name == "s12kM-rigidity")
        return s12km_rigidity(std::move(recipe));
    if (name == "p-matching-cuts")
        return p_matching_cuts(std::move(recipe));
    if (name == "k5-images")
        return k5_images(std::move(recipe));
    if (name == "j4-exclusion")
        return j4_exclusion(std::move(recipe));
    if (name == "thm44")
        return thm44(std::move(recipe));
    if (name == "lemma24-props")
        return lemma24_props(std::move(recipe));
    if (name == "corpus-s4")
        return corpus_recipe(std::move(recipe), "s4", sink);
    if (name == "corpus-p")
        return corpus_recipe(std::move(recipe), "petersen", sink);
    fail(ErrorCode::UnknownRecipe, "unknown recipe '" + name + "'");
}

std::size_t default_thread_count()
{
    if (const char* env = std::getenv("HCOLOR_THREADS")) {
        char* end = nullptr;
        const auto v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport run_corpus(std::istream& in, const CorpusOptions& options, const CheckSink& sink)
{
    const auto host = generate_named(options.host, options.host_params).graph;
    const std::string recipe = "corpus";
    const std::size_t threads = options.threads ? options.threads : default_thread_count();
    constexpr std::size_t batch_size = 256;

    VerificationReport report;
    report.recipe = recipe;
    std::size_t counts[4] = {0, 0, 0, 0};
    std::size_t witnesses = 0, invalid = 0;

    std::vector<Graph6Record> batch;
    auto flush = [&]() {
        std::vector<CheckResult> results(batch.size());
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (std::size_t i; (i = next++) < batch.size();) {
                const auto& rec = batch[i];
                auto t0 = Clock::now();
                CheckResult& r = results[i];
                r.recipe = recipe;
                r.check = "entry-" + std::to_string(rec.line_number);
                r.detail = {{"line", rec.line_number}, {"host", options.host}};
                std::string why;
                if (!rec.graph) {
                    r.outcome = Outcome::Unknown;
                    r.detail["error"] = rec.error;
                } else if (!bridgeless_cubic(*rec.graph, why)) {
                    r.outcome = Outcome::Skip;
                    r.detail["skipped"] = why;
                } else {
                    SolveLimits limits;
                    limits.node_limit = options.node_limit;
                    try {
                        auto res = solve(host, *rec.graph, SolveMode::First, limits);
                        r.outcome = from_solve(res.status, true);
                        r.nodes = res.stats.nodes;
                        r.detail["status"] = to_string(res.status);
                        r.detail["graph6"] = encode_graph6(*rec.graph);
                        for (auto& c : res.colourings) {
                            r.detail["certificate"] = colouring_json(c);
                            r.witnesses.push_back(std::move(c));
                        }
                    } catch (const Error& err) {
                        r.outcome = Outcome::Unknown;
                        r.detail["error"] = err.what();
                    }
                }
                r.seconds = seconds_since(t0);
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < std::min(threads, batch.size()); ++t)
            pool.emplace_back(work);
        work();
        for (auto& t : pool)
            t.join();
        // Separate pass over the certificates before anything is reported.
        for (auto& r : results) {
            for (const auto& w : r.witnesses) {
                ++witnesses;
                if (!check_colouring(w).valid) {
                    ++invalid;
                    r.outcome = Outcome::Fail;
                    r.detail["certificate_invalid"] = true;
                }
            }
            r.witnesses.clear();
            ++counts[static_cast<int>(r.outcome)];
            if (sink)
                sink(r);
            report.checks.push_back(std::move(r));
        }
        batch.clear();
    };

    std::size_t index = 0;
    ingest_graph6(in, [&](const Graph6Record& rec) {
        if (++index < options.resume_from)
            return true;
        batch.push_back(rec);
        if (batch.size() == batch_size)
            flush();
        return true;
    });
    flush();

    CheckResult summary;
    summary.recipe = recipe;
    summary.check = "summary";
    summary.outcome = invalid ? Outcome::Fail : Outcome::Skip;
    summary.detail = {{"host", options.host},
                      {"resume_from", options.resume_from},
                      {"pass", counts[0]},
                      {"fail", counts[1]},
                      {"unknown", counts[2]},
                      {"skipped", counts[3]},
                      {"certificates_checked", witnesses},
                      {"certificates_invalid", invalid}};
    if (sink)
        sink(summary);
    report.checks.push_back(std::move(summary));
    return report;
}

} // namespace hcolor
