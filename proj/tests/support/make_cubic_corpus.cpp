// Writes every connected cubic simple graph on 4..14 vertices as graph6,
// after checking the counts against the published sequence.

#include "io.hpp"
#include "named_graphs.hpp"
#include "structure.hpp"

#include <fstream>
#include <iostream>
#include <set>

int main(int argc, char** argv)
{
    using namespace hcolor;
    if (argc != 2) {
        std::cerr << "usage: make_cubic_corpus <out.g6>\n";
        return 2;
    }
    const std::size_t expected[] = {1, 2, 5, 19, 85, 509};
    std::ofstream out(argv[1]);
    std::size_t total = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        const std::size_t n = 4 + 2 * i;
        std::set<CanonicalForm> forms;
        std::size_t count = 0;
        bool bad = false;
        enumerate_connected_regular_multigraphs(n, 3, 1, [&](const Multigraph& g) {
            bad = bad || !g.is_simple() || !is_regular(g, 3) || !is_connected(g);
            forms.insert(canonical_form(g));
            out << encode_graph6(g) << '\n';
            ++count;
            return true;
        });
        if (bad || count != expected[i] || forms.size() != count) {
            std::cerr << "n=" << n << ": got " << count << " graphs (" << forms.size() << " distinct), expected "
                      << expected[i] << "\n";
            return 1;
        }
        total += count;
    }
    std::cout << "wrote " << total << " graphs to " << argv[1] << "\n";
    return out ? 0 : 1;
}
