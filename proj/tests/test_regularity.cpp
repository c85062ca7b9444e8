#include "doctest.h"

#include "eil/catalog.hpp"
#include "eil/enumerate.hpp"
#include "eil/regularity.hpp"

#include "eil/complex.hpp"

#include <random>

using namespace eil;

TEST_CASE("regularity of small graphs") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::prime(2);
    CHECK(regularity(Graph::complete(2), q) == 1);
    CHECK(regularity(Graph::complete(2), f2) == 1);
    CHECK(regularity(Graph::cycle(4), q) == 1);
    CHECK(regularity(Graph::cycle(5), q) == 2); // Ind(C5) is a circle
    CHECK(regularity(paper_graph("fig3"), q) == 1);
    CHECK(regularity(paper_graph("fig8"), q) == 2);
}

TEST_CASE("regularity preconditions") {
    CHECK_THROWS_AS(regularity(Graph(3), FieldSpec::rationals()), std::invalid_argument);
    CHECK_THROWS_AS(regularity(Graph::path(14), FieldSpec::rationals()), ResourceError);
    RegularityOptions wide;
    wide.max_vertices = 14;
    CHECK_NOTHROW(regularity(Graph::path(14), FieldSpec::rationals(), wide));
}

TEST_CASE("chordal shortcut") {
    CHECK(regularity_chordal(Graph::path(5)) == 2);
    CHECK(regularity_chordal(paper_graph("fig8")) == 2);
    CHECK(regularity_chordal(Graph::complete(2)) == 1);
    CHECK_THROWS_AS(regularity_chordal(Graph::cycle(4)), std::invalid_argument);
}

TEST_CASE("homology regularity equals nu on chordal graphs, n <= 6") {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::prime(2);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            if (!is_chordal(g) || g.edge_count() == 0) continue;
            int nu = regularity_chordal(g);
            CHECK(regularity(g, q) == nu);
            CHECK(regularity(g, f2) == nu);
        }
}

TEST_CASE("homology regularity equals nu on sampled chordal graphs, n = 9") {
    // grow a chordal graph by attaching each new vertex to a clique
    auto random_chordal = [](std::mt19937_64& rng, int n) {
        Graph g(n);
        for (int v = 1; v < n; ++v) {
            int anchor = static_cast<int>(rng() % v);
            VertexSet clique = VertexSet::single(anchor);
            for (int u : g.neighbors(anchor) & VertexSet::full(v)) {
                if (rng() % 2 == 0) continue;
                if (clique.subset_of(g.closed_neighborhood(u))) clique = clique.with(u);
            }
            if (rng() % 4 == 0) continue; // occasional isolated-at-insertion vertex
            for (int u : clique) g.add_edge(v, u);
        }
        return g;
    };
    std::mt19937_64 rng(2029);
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::prime(2);
    int done = 0;
    while (done < 25) {
        Graph g = random_chordal(rng, 9);
        if (g.edge_count() == 0) continue;
        REQUIRE(is_chordal(g));
        int nu = regularity_chordal(g);
        CHECK(regularity(g, q) == nu);
        CHECK(regularity(g, f2) == nu);
        ++done;
    }
}

TEST_CASE("cycle regularity matches the classical formula") {
    // reg of an n-cycle is floor(n/3), plus one when n = 2 mod 3
    FieldSpec q = FieldSpec::rationals();
    for (int n = 4; n <= 13; ++n) {
        int expected = n / 3 + (n % 3 == 2 ? 1 : 0);
        CHECK(regularity(Graph::cycle(n), q) == expected);
    }
}

TEST_CASE("nu <= regularity <= n - alpha envelope, n <= 6") {
    FieldSpec q = FieldSpec::rationals();
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            if (g.edge_count() == 0) continue;
            int reg = regularity(g, q);
            CHECK(induced_matching_number(g) <= reg);
            CHECK(reg <= n - independence_number(g));
        }
}

TEST_CASE("regularity adds over disjoint unions of chordal graphs") {
    std::mt19937_64 rng(13);
    FieldSpec q = FieldSpec::rationals();
    int done = 0;
    while (done < 10) {
        int n1 = 2 + static_cast<int>(rng() % 4);
        int n2 = 2 + static_cast<int>(rng() % 4);
        Graph a = Graph::path(n1);
        Graph b = rng() % 2 ? Graph::star(n2) : Graph::complete(n2);
        Graph both = disjoint_union(a, b);
        CHECK(regularity(both, q) == regularity(a, q) + regularity(b, q));
        ++done;
    }
}

TEST_CASE("parallel subset scan matches single-threaded") {
    Graph g = paper_graph("fig5");
    RegularityOptions serial;
    RegularityOptions parallel;
    parallel.workers = 4;
    CHECK(regularity(g, FieldSpec::rationals(), serial) ==
          regularity(g, FieldSpec::rationals(), parallel));
    CHECK(regularity(g, FieldSpec::rationals(), serial) == 3);
}

TEST_CASE("fig1 regularity depends on the characteristic") {
    // the 11-vertex minimal graph: reg 2 over Q, 3 over F2
    Graph g = paper_graph("fig1");
    RegularityOptions opts;
    opts.workers = 2;
    opts.check_boundaries = true;
    CHECK(regularity(g, FieldSpec::rationals(), opts) == 2);
    CHECK(regularity(g, FieldSpec::prime(2), opts) == 3);
}
