#include "eil/enumerate.hpp"

#include "eil/graph6.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace eil {

namespace {

// Backtracking search for the minimal upper-triangle bit string. Invariant:
// best[0 .. pos*(pos-1)/2) is realized by perm[0..pos). Placing a vertex at
// position pos appends the column of adjacency bits against the earlier
// positions; a column above the best segment prunes the branch, a column
// below it overwrites best from here on (suffix padded with ones so any
// completion improves on it).
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best;
    std::vector<int> perm;
    std::uint64_t used = 0;

    explicit CanonicalSearch(const Graph& graph)
        : g(graph), n(graph.vertex_count()), best(static_cast<std::size_t>(n) * (n - 1) / 2, 1),
          perm(static_cast<std::size_t>(n), -1) {}

    std::uint64_t column_of(int v, int pos) const {
        std::uint64_t col = 0;
        for (int t = 0; t < pos; ++t)
            col = (col << 1) | (g.adjacent(v, perm[static_cast<std::size_t>(t)]) ? 1 : 0);
        return col;
    }

    std::uint64_t best_segment(std::size_t base, int pos) const {
        std::uint64_t seg = 0;
        for (int t = 0; t < pos; ++t) seg = (seg << 1) | best[base + static_cast<std::size_t>(t)];
        return seg;
    }

    void descend(int pos) {
        if (pos == n) return; // best prefix is complete and realized
        std::size_t base = static_cast<std::size_t>(pos) * (pos - 1) / 2;

        std::vector<std::pair<std::uint64_t, int>> cands;
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1)) cands.emplace_back(column_of(v, pos), v);
        std::sort(cands.begin(), cands.end());

        for (auto [col, v] : cands) {
            std::uint64_t seg = best_segment(base, pos);
            if (col > seg) break; // candidates are sorted
            if (col < seg) {
                for (int t = pos - 1; t >= 0; --t)
                    best[base + static_cast<std::size_t>(t)] = (col >> (pos - 1 - t)) & 1;
                std::fill(best.begin() + static_cast<std::ptrdiff_t>(base) + pos, best.end(), 1);
            }
            perm[static_cast<std::size_t>(pos)] = v;
            used |= std::uint64_t{1} << v;
            descend(pos + 1);
            used &= ~(std::uint64_t{1} << v);
        }
    }
};

std::string pack_graph6(int n, const std::vector<std::uint8_t>& bits) {
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int acc = 0, k = 0;
    for (std::uint8_t b : bits) {
        acc = (acc << 1) | b;
        if (++k == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            k = 0;
        }
    }
    if (k > 0) out.push_back(static_cast<char>((acc << (6 - k)) + 63));
    return out;
}

} // namespace

std::string canonical_graph6(const Graph& g) {
    CanonicalSearch search(g);
    search.descend(0);
    return pack_graph6(g.vertex_count(), search.best);
}

namespace detail {

std::vector<std::string> enumerate_canonical_g6(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    std::vector<std::string> level{write_graph6(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        // bucket by sorted degree sequence: only graphs sharing it can collide
        std::map<std::vector<int>, std::set<std::string>> buckets;
        for (const std::string& code : level) {
            Graph parent = parse_graph6(code);
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
                Graph child(k);
                for (int v = 0; v < k - 1; ++v)
                    for (int u : parent.neighbors(v))
                        if (u > v) child.add_edge(v, u);
                for (int v = 0; v < k - 1; ++v)
                    if ((mask >> v) & 1) child.add_edge(v, k - 1);
                std::vector<int> degrees(static_cast<std::size_t>(k));
                for (int v = 0; v < k; ++v) degrees[static_cast<std::size_t>(v)] = child.degree(v);
                std::sort(degrees.begin(), degrees.end());
                buckets[degrees].insert(canonical_graph6(child));
            }
        }
        level.clear();
        for (auto& [degrees, codes] : buckets)
            level.insert(level.end(), codes.begin(), codes.end());
        std::sort(level.begin(), level.end());
    }
    return level;
}

} // namespace detail

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n > 7)
        throw std::invalid_argument(
            "built-in enumeration is capped at 7 vertices; supply a .g6 file for larger n");
    std::vector<Graph> out;
    for (const std::string& code : detail::enumerate_canonical_g6(n)) {
        Graph g = parse_graph6(code);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

} // namespace eil
