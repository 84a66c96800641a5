#pragma once

// Small hosts and guests for exhaustive cross-checks.

#include "named_graphs.hpp"

#include <string>
#include <vector>

namespace fixtures {

using hcolor::Multigraph;

struct Named {
    std::string name;
    Multigraph graph;
};

// Hosts with at most 6 edges.
inline std::vector<Named> small_hosts()
{
    using namespace hcolor;
    return {
        {"K3", complete(3).graph},
        {"K4", complete(4).graph},
        {"S4", s4().graph},
        {"K1,3", star(3).graph},
        {"3K2", t_k2(3).graph},
        {"P3", Multigraph(3, {{0, 1}, {1, 2}})},
        {"C4", Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})},
        {"digon+pendant", Multigraph(3, {{0, 1}, {0, 1}, {1, 2}})},
        {"triangle with a double edge", Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})},
        {"doubled triangle", Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}})},
        {"C4 with a doubled matching", Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}})},
        {"dumbbell", Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}})},
        {"K4-e", complete_minus_edge(4).graph},
        {"K2,3", Multigraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})},
    };
}

// Connected guests with at most 8 edges and more than two vertices.
inline std::vector<Named> small_guests()
{
    using namespace hcolor;
    return {
        {"K4", complete(4).graph},
        {"S4", s4().graph},
        {"C5", Multigraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})},
        {"K1,3", star(3).graph},
        {"P4", Multigraph(4, {{0, 1}, {1, 2}, {2, 3}})},
        {"K4-e", complete_minus_edge(4).graph},
        {"dumbbell", Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}})},
        {"doubled triangle", Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}})},
        {"C4 with a doubled matching", Multigraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 0}})},
        {"K2,3", Multigraph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})},
        {"theta plus tail", Multigraph(4, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3}})},
        {"C6 with a chord pair", Multigraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}})},
    };
}

} // namespace fixtures
