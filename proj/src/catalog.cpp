#include "eil/catalog.hpp"

#include <stdexcept>

namespace eil {

namespace {

// 11 vertices, 25 edges; the first minimal graph with v = 3 > deg h = 2.
Graph fig1() {
    return Graph::from_edges(11, {
        {0, 1}, {0, 5}, {0, 6}, {0, 4},
        {1, 7}, {1, 9}, {1, 8}, {1, 4},
        {2, 4}, {2, 3}, {2, 9}, {2, 10},
        {3, 4}, {3, 5}, {3, 7}, {3, 8},
        {5, 6}, {5, 7}, {5, 9},
        {6, 8}, {6, 10},
        {7, 8}, {7, 9},
        {8, 10}, {9, 10},
    });
}

// 11 vertices, 25 edges; the second minimal graph with v = 3 > deg h = 2.
Graph fig2() {
    return Graph::from_edges(11, {
        {0, 3}, {0, 4}, {0, 7}, {0, 8},
        {1, 4}, {1, 5}, {1, 7}, {1, 9}, {1, 10},
        {2, 5}, {2, 8}, {2, 6}, {2, 9},
        {3, 6}, {3, 7}, {3, 10},
        {4, 8}, {4, 9}, {4, 10},
        {5, 7}, {5, 8}, {5, 10},
        {6, 9}, {6, 10},
        {8, 10},
    });
}

// two triangles sharing x3, an edge x6x7, and an apex x8 adjacent to
// x1..x6; x7 stays a pendant, which is what pushes deg h below alpha
Graph fig7() {
    return Graph::from_edges(8, {
        {0, 1}, {2, 0}, {2, 1},
        {3, 4}, {2, 3}, {2, 4},
        {5, 6},
        {7, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5},
    });
}

// fig7 base with a triangle of apexes x8, x9, x10, each adjacent to x1..x6
Graph fig5() {
    return Graph::from_edges(10, {
        {0, 1}, {2, 0}, {2, 1},
        {3, 4}, {2, 3}, {2, 4},
        {5, 6},
        {7, 8}, {7, 9}, {8, 9},
        {7, 0}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5},
        {8, 0}, {8, 1}, {8, 2}, {8, 3}, {8, 4}, {8, 5},
        {9, 0}, {9, 1}, {9, 2}, {9, 3}, {9, 4}, {9, 5},
    });
}

// two triangles sharing x3 plus an apex adjacent to x1..x5
Graph fig8() {
    return Graph::from_edges(6, {
        {0, 1}, {2, 0}, {2, 1},
        {3, 4}, {2, 3}, {2, 4},
        {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
    });
}

// z1..z5 = 0..4 (two triangles sharing z3), y4 = 5 and y5 = 6 each adjacent
// to every z; y4 and y5 are not adjacent here
Graph fig10() {
    return Graph::from_edges(7, {
        {0, 1}, {2, 0}, {2, 1},
        {3, 4}, {2, 3}, {2, 4},
        {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
        {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4},
    });
}

// fig1 plus k extra vertices each joined to x1..x4
Graph fig1_with_apexes(int k) {
    Graph base = fig1();
    Graph g(11 + k);
    for (int v = 0; v < 11; ++v)
        for (int u : base.neighbors(v))
            if (u > v) g.add_edge(v, u);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < 4; ++a) g.add_edge(11 + i, a);
    return g;
}

// H_3 of the thm35 family joined with fig10 by completing y1..y5 to a K5
Graph ex5_11() {
    Graph h3 = hn_thm35(3); // 36 vertices, y1..y3 = 33..35
    Graph z = fig10();      // 7 vertices, y4 = 5, y5 = 6
    Graph g(43);
    for (int v = 0; v < 36; ++v)
        for (int u : h3.neighbors(v))
            if (u > v) g.add_edge(v, u);
    for (int v = 0; v < 7; ++v)
        for (int u : z.neighbors(v))
            if (u > v) g.add_edge(36 + v, 36 + u);
    int ys[5] = {33, 34, 35, 41, 42};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!g.adjacent(ys[i], ys[j])) g.add_edge(ys[i], ys[j]);
    return g;
}

} // namespace

std::vector<ConstructionPart> thm35_parts(int n) {
    if (n < 1) throw std::invalid_argument("family needs n >= 1");
    return std::vector<ConstructionPart>(static_cast<std::size_t>(n),
                                         ConstructionPart{fig1(), VertexSet(0x1f)});
}

std::vector<ConstructionPart> ex510_parts(int n) {
    if (n < 1) throw std::invalid_argument("family needs n >= 1");
    return std::vector<ConstructionPart>(static_cast<std::size_t>(n),
                                         ConstructionPart{fig1(), VertexSet::full(11)});
}

Graph hn_thm35(int n) { return build_hn(thm35_parts(n)); }
Graph hn_ex510(int n) { return build_hn(ex510_parts(n)); }

Graph paper_graph(const std::string& name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig3") return Graph::star(4);
    if (name == "fig5") return fig5();
    if (name == "fig6") return Graph::path(5);
    if (name == "fig7") return fig7();
    if (name == "fig8") return fig8();
    if (name == "fig9") return Graph::complete(2);
    if (name == "fig10") return fig10();
    if (name == "ex5_8") return fig1_with_apexes(1);
    if (name == "ex5_9") return fig1_with_apexes(2);
    if (name == "ex5_11") return ex5_11();
    throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
    return {"fig1", "fig2", "fig3", "fig5", "fig6", "fig7", "fig8", "fig9",
            "fig10", "ex5_8", "ex5_9", "ex5_11"};
}

CatalogExpected catalog_expected(const std::string& name) {
    if (name == "fig1") return {3, 2, 2, 3};
    if (name == "fig2") return {3, 2, {}, {}};
    if (name == "fig3") return {1, 3, 1, 1};
    if (name == "fig5") return {1, 1, 3, 3};
    if (name == "fig6") return {1, 3, 2, 2};
    if (name == "fig7") return {1, 2, 3, 3};
    if (name == "fig8") return {1, 2, 2, 2};
    if (name == "fig9") return {1, 1, 1, 1};
    if (name == "fig10") return {};
    if (name == "ex5_8") return {3, 3, 2, {}};
    if (name == "ex5_9") return {3, 4, 2, {}};
    if (name == "ex5_11") return {10, 8, 9, {}}; // reg documented, not recomputed
    throw std::invalid_argument("unknown catalog graph: " + name);
}

} // namespace eil
