#ifndef EIL_GRAPH_HPP
#define EIL_GRAPH_HPP

#include "eil/vertex_set.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace eil {

// Finite simple graph on 1..64 vertices, stored as one adjacency bitmask per
// vertex. Irreflexive and symmetric by construction. Treated as immutable
// once built; every operation below is a pure function of its inputs.
class Graph {
public:
    explicit Graph(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Complete graph, star K_{1,n-1} centered at vertex 0, path, cycle.
    static Graph complete(int n);
    static Graph star(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    void add_edge(int u, int v);

    int vertex_count() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const { return adj_[v].with(v); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<VertexSet> adj_;
};

// N_G(A): union of neighbourhoods of the vertices of a. May intersect a.
VertexSet neighborhood(const Graph& g, VertexSet a);

bool is_independent(const Graph& g, VertexSet a);
bool is_vertex_cover(const Graph& g, VertexSet c);
bool is_minimal_vertex_cover(const Graph& g, VertexSet c);

// G_W, vertices relabeled 0..|w|-1 in increasing original index. w must be
// non-empty: this codebase has no 0-vertex graphs.
Graph induced_subgraph(const Graph& g, VertexSet w);

// G \ a, i.e. the induced subgraph on the complement of a.
Graph delete_vertices(const Graph& g, VertexSet a);

// Relabels g2's vertices above g1's; no cross edges.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// alpha(G), by branch and bound with a max-degree pivot (ties to the lowest
// index).
int independence_number(const Graph& g);

// beta(G) = n - alpha(G).
int vertex_cover_number(const Graph& g);

// nu(G): largest matching M such that the subgraph induced on the endpoints
// of M has no edges besides M.
int induced_matching_number(const Graph& g);

// Lex-BFS + perfect-elimination-ordering verification.
bool is_chordal(const Graph& g);

bool is_connected(const Graph& g);

// True iff every component is a star K_{1,k} with k >= 1. A graph with an
// isolated vertex is rejected.
bool is_disjoint_union_of_stars(const Graph& g);

// Vertex sets of the connected components of the subgraph induced on
// `within`, in order of their lowest vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

} // namespace eil

#endif
