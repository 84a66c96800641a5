#pragma once

#include "hcolour.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcolor {

enum class Outcome { Pass, Fail, Unknown, Skip };

const char* to_string(Outcome o);
/// Fail beats Unknown beats Pass; Skip is neutral.
Outcome combine(Outcome a, Outcome b);

/// One line of a report.
struct CheckResult {
    std::string recipe;
    std::string check;
    Outcome outcome = Outcome::Unknown;
    nlohmann::json detail = nlohmann::json::object();
    std::uint64_t nodes = 0;
    /// Wall-clock time. Kept out of the JSON line so reports stay byte-identical.
    double seconds = 0;

    /// Colourings claimed by this check, re-validated in a separate pass.
    std::vector<Colouring> witnesses;

    nlohmann::json to_json() const;
};

using CheckSink = std::function<void(const CheckResult&)>;

struct VerificationReport {
    std::string recipe;
    std::vector<CheckResult> checks;

    Outcome outcome() const;
};

/// Source digest of the library build, stamped into every report line.
const char* version_digest();

std::vector<std::string> recipe_names();

/// Runs a named recipe. Each check is passed to `sink` as soon as it is
/// final; the last check is always the witness re-validation pass.
/// Parameters are recipe-specific (node_limit, max_order, k, seed, ...).
VerificationReport run_recipe(const std::string& name, const nlohmann::json& params = nlohmann::json::object(),
                              const CheckSink& sink = {});

struct CorpusOptions {
    /// Host generator name and its parameters (e.g. "s4", "petersen").
    std::string host = "s4";
    std::vector<int> host_params;
    std::uint64_t node_limit = 100'000'000;
    /// 0: HCOLOR_THREADS, else hardware concurrency.
    std::size_t threads = 0;
    /// 1-based input record index to start from; earlier records are skipped.
    std::size_t resume_from = 1;
};

std::size_t default_thread_count();

/// Solves every bridgeless cubic simple graph of a graph6/sparse6 stream
/// against the host. One check per input line, emitted in input order.
/// Other graphs are reported as skipped; malformed lines as unknown.
VerificationReport run_corpus(std::istream& in, const CorpusOptions& options, const CheckSink& sink = {});

/// Writes one JSON object per line.
void write_report_line(std::ostream& out, const CheckResult& check);

} // namespace hcolor
