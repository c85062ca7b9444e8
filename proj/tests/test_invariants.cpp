#include "doctest.h"

#include "eil/catalog.hpp"
#include "eil/enumerate.hpp"
#include "eil/invariants.hpp"
#include "oracles.hpp"

#include <random>

using namespace eil;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.4) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("f-vector examples") {
    for (int n = 2; n <= 7; ++n) {
        FVector f = f_vector(Graph::complete(n));
        REQUIRE(f.counts.size() == 2);
        CHECK(f.counts[0] == 1);
        CHECK(f.counts[1] == n);
    }
    FVector star = f_vector(paper_graph("fig3"));
    CHECK(star.counts == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(3), BigInt(1)});

    // frozen from the all-subsets oracle
    FVector c4 = f_vector(Graph::cycle(4));
    CHECK(c4.counts == oracles::independent_counts(Graph::cycle(4)));
    CHECK(c4.counts == std::vector<BigInt>{BigInt(1), BigInt(4), BigInt(2)});
}

TEST_CASE("f-vector equals all-subsets counting") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 11));
        CHECK(f_vector(g).counts == oracles::independent_counts(g));
    }
}

TEST_CASE("hilbert series of the catalog graphs") {
    HilbertSeries fig1 = hilbert_series(paper_graph("fig1"));
    CHECK(fig1.numerator == IntPolynomial({BigInt(1), BigInt(8), BigInt(11)}));
    CHECK(fig1.pole_order == 3);
    CHECK(fig1.to_string() == "(1 + 8*t + 11*t^2)/(1-t)^3");

    // deleting x1..x5 leaves series (1 + 4t + t^2)/(1-t)^2
    HilbertSeries rest = hilbert_series(delete_vertices(paper_graph("fig1"), VertexSet(0x1f)));
    CHECK(rest.numerator == IntPolynomial({BigInt(1), BigInt(4), BigInt(1)}));
    CHECK(rest.pole_order == 2);

    for (int n = 2; n <= 12; ++n) {
        HilbertSeries kn = hilbert_series(Graph::complete(n));
        CHECK(kn.numerator == IntPolynomial({BigInt(1), BigInt(n - 1)}));
        CHECK(kn.pole_order == 1);

        HilbertSeries star = hilbert_series(Graph::star(n));
        IntPolynomial expected = IntPolynomial::constant(1) +
                                 IntPolynomial::one_minus_t_pow(n - 2).shifted(1);
        CHECK(star.numerator == expected);
        CHECK(star.pole_order == n - 1);
    }
}

TEST_CASE("edgeless conventions") {
    Graph isolated(5);
    HilbertSeries s = hilbert_series(isolated);
    CHECK(s.numerator == IntPolynomial::constant(1));
    CHECK(s.pole_order == 5);
    CHECK(deg_h(isolated) == 0);
    CHECK(leading_coefficient(isolated) == 1);
    CHECK(v_number(isolated) == 0);
    CHECK_THROWS_AS(v_witness(isolated), std::invalid_argument);
}

TEST_CASE("numerator at 1 counts maximum independent sets") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 8));
        HilbertSeries s = hilbert_series(g);
        FVector f = f_vector(g);
        CHECK(s.numerator.evaluate_one() == f.counts.back());
        CHECK(s.numerator.evaluate_one() > 0);
    }
    CHECK(hilbert_reduction_count() == 0);
}

TEST_CASE("series coefficients") {
    std::vector<BigInt> k2 = series_coefficients(hilbert_series(Graph::complete(2)), 3);
    CHECK(k2 == std::vector<BigInt>{BigInt(1), BigInt(2), BigInt(2), BigInt(2)});

    std::vector<BigInt> unit = series_coefficients(HilbertSeries{IntPolynomial::constant(1), 0}, 4);
    CHECK(unit == std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(0)});
}

TEST_CASE("series coefficients count monomials with independent support") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            HilbertSeries s = hilbert_series(g);
            std::vector<BigInt> coeffs = series_coefficients(s, 4);
            for (int d = 0; d <= 4; ++d)
                CHECK(coeffs[static_cast<std::size_t>(d)] == oracles::monomial_count(g, d));
        }
}

TEST_CASE("v-number examples") {
    CHECK(v_number(paper_graph("fig1")) == 3);
    CHECK(v_number(paper_graph("fig3")) == 1);
    CHECK(v_number(delete_vertices(paper_graph("fig1"), VertexSet(0x1f))) == 2);
    CHECK(v_number(Graph::complete(2)) == 1);
}

TEST_CASE("v-witness is deterministic and minimal") {
    CHECK(v_witness(paper_graph("fig3")) == VertexSet::single(0));
    CHECK(v_witness(Graph::path(5)) == VertexSet::single(2)); // middle of P5
    CHECK(v_witness(Graph::cycle(4)).count() == 1);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 7));
        if (g.edge_count() == 0) continue;
        VertexSet w = v_witness(g);
        CHECK(is_independent(g, w));
        CHECK(is_minimal_vertex_cover(g, neighborhood(g, w)));
        CHECK(w.count() == oracles::v_number(g));
    }
}

TEST_CASE("deg_h bounds for all graphs with n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, false)) {
            int alpha = independence_number(g);
            int d = deg_h(g);
            int v = v_number(g);
            CHECK(d <= alpha);
            CHECK(v <= vertex_cover_number(g));
            CHECK(v + d <= n);
        }
}

TEST_CASE("disjoint unions: series multiply, deg and v add") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 40) {
        int n1 = 2 + static_cast<int>(rng() % 7);
        int n2 = 2 + static_cast<int>(rng() % 7);
        Graph a = random_graph(rng, n1);
        Graph b = random_graph(rng, n2);
        Graph both = disjoint_union(a, b);
        HilbertSeries sa = hilbert_series(a), sb = hilbert_series(b);
        HilbertSeries sc = hilbert_series(both);
        CHECK(sc.numerator == sa.numerator * sb.numerator);
        CHECK(sc.pole_order == sa.pole_order + sb.pole_order);
        CHECK(v_number(both) == v_number(a) + v_number(b));
        ++done;
    }
    // frozen value for the K2 pair
    CHECK(v_number(disjoint_union(Graph::complete(2), Graph::complete(2))) == 2);
}
