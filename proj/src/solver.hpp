#pragma once

#include "hcolour.hpp"

#include <cstdint>
#include <functional>

namespace hcolor {

enum class SolveMode { First, All, Count };
enum class SolveStatus { Sat, Unsat, Unknown };

const char* to_string(SolveStatus status);

struct SolveLimits {
    /// 0 means unlimited.
    std::uint64_t node_limit = 0;
    double time_limit_seconds = 0;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    /// Witnesses: one in First mode, all in All mode, none in Count mode.
    std::vector<Colouring> colourings;
    std::uint64_t count = 0;
    SolveStats stats;
    /// A node or time limit stopped the search.
    bool aborted = false;
};

inline constexpr std::size_t solver_host_cap = 64;

/// Exact search for H-colourings of `guest` by a fixed `host` (at most 64
/// vertices and 64 edges). Unknown is returned only when a limit cut the
/// search short; Unsat only after exhausting it.
SolveResult solve(const Multigraph& host, const Multigraph& guest, SolveMode mode, const SolveLimits& limits = {});

/// Streaming form: visit each colouring's edge map; return false to stop.
SolveResult solve_each(const Multigraph& host, const Multigraph& guest, const SolveLimits& limits,
                       const std::function<bool(const std::vector<EdgeId>&)>& visit);

/// tK_2 colours G iff G is t-regular and t-edge-colourable.
bool tk2_colourable(const Multigraph& guest, std::size_t t);

} // namespace hcolor
