#include "eil/regularity.hpp"

#include "eil/complex.hpp"
#include "eil/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eil {

namespace {

// A vertex with no neighbor inside w is a cone point of Ind(G_w): the
// complex is contractible and contributes nothing. Skipping these keeps
// the boundary matrices small even for sparse graphs near the vertex cap.
bool has_isolated_vertex_within(const Graph& g, VertexSet w) {
    for (int v : w)
        if (!g.neighbors(v).intersects(w)) return true;
    return false;
}

int scan_subsets(const Graph& g, const FieldSpec& k, std::uint64_t first, std::uint64_t last,
                 bool check_boundaries) {
    int best = 0;
    for (std::uint64_t bits = first; bits < last; ++bits) {
        VertexSet w(bits);
        if (has_isolated_vertex_within(g, w)) continue;
        SimplicialComplex c = independence_complex(induced_subgraph(g, w));
        if (check_boundaries && !verify_boundary_squares_to_zero(c))
            throw std::logic_error("boundary composition is nonzero");
        std::vector<int> betti = reduced_betti(c, k);
        for (int j = 0; j + 1 < static_cast<int>(betti.size()); ++j)
            if (betti[static_cast<std::size_t>(j) + 1] != 0) best = std::max(best, j + 1);
    }
    return best;
}

} // namespace

int regularity(const Graph& g, const FieldSpec& k, const RegularityOptions& opts) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("regularity of an edgeless edge ideal");
    int n = g.vertex_count();
    if (n > opts.max_vertices)
        throw ResourceError("regularity subset scan capped at " +
                            std::to_string(opts.max_vertices) + " vertices");

    std::uint64_t total = std::uint64_t{1} << n;
    int workers = std::max(1, opts.workers);
    if (workers == 1 || total < 1024)
        return scan_subsets(g, k, 1, total, opts.check_boundaries);

    // partition the subset range; max-reduction is order-independent
    std::vector<int> results(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    std::uint64_t step = total / static_cast<std::uint64_t>(workers) + 1;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = std::max<std::uint64_t>(1, step * static_cast<std::uint64_t>(w));
        std::uint64_t hi = std::min(total, step * static_cast<std::uint64_t>(w + 1));
        if (lo >= hi) continue;
        threads.emplace_back([&, w, lo, hi] {
            results[static_cast<std::size_t>(w)] =
                scan_subsets(g, k, lo, hi, opts.check_boundaries);
        });
    }
    for (auto& t : threads) t.join();
    return *std::max_element(results.begin(), results.end());
}

int regularity_chordal(const Graph& g) {
    if (!is_chordal(g)) throw std::invalid_argument("graph is not chordal");
    return induced_matching_number(g);
}

} // namespace eil
