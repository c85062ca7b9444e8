#include "doctest.h"

#include "eil/enumerate.hpp"
#include "eil/graph6.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace eil;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) h.add_edge(perm[static_cast<std::size_t>(v)],
                                  perm[static_cast<std::size_t>(u)]);
    return h;
}

} // namespace

TEST_CASE("canonical form is a relabeling invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g(n);
        std::bernoulli_distribution coin(0.4);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) g.add_edge(i, j);
        std::string canon = canonical_graph6(g);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_graph6(permuted(g, perm)) == canon);
        // canonical representative is a fixpoint
        CHECK(canonical_graph6(parse_graph6(canon)) == canon);
        // minimality: the canonical string never exceeds the labeled one
        CHECK(canon <= write_graph6(g));
    }
}

TEST_CASE("enumerator counts") {
    CHECK(enumerate_graphs(1, false).size() == 1);
    CHECK(enumerate_graphs(2, false).size() == 2);
    CHECK(enumerate_graphs(3, false).size() == 4);
    CHECK(enumerate_graphs(4, false).size() == 11);
    CHECK(enumerate_graphs(5, false).size() == 34);
    CHECK(enumerate_graphs(6, false).size() == 156);
    CHECK(enumerate_graphs(4, true).size() == 6);
    CHECK(enumerate_graphs(5, true).size() == 21);
    CHECK(enumerate_graphs(6, true).size() == 112);
    CHECK(enumerate_graphs(7, false).size() == 1044);
    CHECK(enumerate_graphs(7, true).size() == 853);
    CHECK_THROWS_AS(enumerate_graphs(8, false), std::invalid_argument);
}

TEST_CASE("enumerator is duplicate-free and canonical") {
    for (int n = 2; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const Graph& g : enumerate_graphs(n, false)) {
            std::string code = write_graph6(g);
            CHECK(code == canonical_graph6(g));
            CHECK(seen.insert(code).second);
        }
    }
}

TEST_CASE("enumerator matches the all-masks oracle for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> classes;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < i; ++j) {
                    if ((mask >> bit) & 1) g.add_edge(j, i);
                    ++bit;
                }
            classes.insert(canonical_graph6(g));
        }
        CHECK(classes.size() == enumerate_graphs(n, false).size());
    }
}
