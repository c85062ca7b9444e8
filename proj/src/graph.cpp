#include "eil/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace eil {

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) s += ", ";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n > 0 ? n : 0)) {
    if (n < 1 || n > 64) throw std::invalid_argument("graph must have 1..64 vertices");
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::star(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= VertexSet::single(v);
    adj_[v] |= VertexSet::single(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n_; ++i) total += adj_[i].count();
    return total / 2;
}

VertexSet neighborhood(const Graph& g, VertexSet a) {
    VertexSet nb;
    for (int v : a) nb |= g.neighbors(v);
    return nb;
}

bool is_independent(const Graph& g, VertexSet a) {
    for (int v : a)
        if (g.neighbors(v).intersects(a)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
    VertexSet outside = c.complement(g.vertex_count());
    for (int v : outside)
        if (g.neighbors(v).intersects(outside)) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, VertexSet c) {
    if (!is_vertex_cover(g, c)) return false;
    for (int v : c)
        if (is_vertex_cover(g, c.without(v))) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
    if (w.empty()) throw std::invalid_argument("induced subgraph on the empty set");
    if (!w.subset_of(g.vertices())) throw std::invalid_argument("vertex set not within graph");
    std::array<int, 64> relabel{};
    int k = 0;
    for (int v : w) relabel[v] = k++;
    Graph h(k);
    for (int v : w)
        for (int u : g.neighbors(v) & w)
            if (u > v) h.add_edge(relabel[v], relabel[u]);
    return h;
}

Graph delete_vertices(const Graph& g, VertexSet a) {
    return induced_subgraph(g, a.complement(g.vertex_count()));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    int n = n1 + g2.vertex_count();
    if (n > 64) throw std::invalid_argument("disjoint union exceeds 64 vertices");
    Graph h(n);
    for (int v = 0; v < n1; ++v)
        for (int u : g1.neighbors(v))
            if (u > v) h.add_edge(v, u);
    for (int v = 0; v < g2.vertex_count(); ++v)
        for (int u : g2.neighbors(v))
            if (u > v) h.add_edge(n1 + v, n1 + u);
    return h;
}

namespace {

// Max independent set size within `avail`, given `current` already chosen.
void alpha_search(const Graph& g, VertexSet avail, int current, int& best) {
    while (true) {
        if (current + avail.count() <= best) return;
        if (avail.empty()) {
            best = std::max(best, current);
            return;
        }
        int pivot = -1, pivot_deg = -1;
        for (int v : avail) {
            int d = (g.neighbors(v) & avail).count();
            if (d > pivot_deg) { pivot_deg = d; pivot = v; }
        }
        if (pivot_deg == 0) {
            // remaining vertices are pairwise non-adjacent
            best = std::max(best, current + avail.count());
            return;
        }
        alpha_search(g, avail - g.closed_neighborhood(pivot), current + 1, best);
        avail = avail.without(pivot);
    }
}

} // namespace

int independence_number(const Graph& g) {
    int best = 0;
    alpha_search(g, g.vertices(), 0, best);
    return best;
}

int vertex_cover_number(const Graph& g) {
    return g.vertex_count() - independence_number(g);
}

namespace {

void matching_search(const Graph& g, VertexSet avail, int from, int count, int& best) {
    best = std::max(best, count);
    if (count + avail.count() / 2 <= best) return;
    for (int v = from; v < g.vertex_count(); ++v) {
        if (!avail.contains(v)) continue;
        for (int u : g.neighbors(v) & avail) {
            if (u <= v) continue;
            // endpoints of later edges must avoid both closed neighborhoods,
            // otherwise the induced subgraph picks up an extra edge
            VertexSet blocked = g.closed_neighborhood(v) | g.closed_neighborhood(u);
            matching_search(g, avail - blocked, v + 1, count + 1, best);
        }
        avail = avail.without(v);
    }
}

} // namespace

int induced_matching_number(const Graph& g) {
    int best = 0;
    matching_search(g, g.vertices(), 0, 0, best);
    return best;
}

namespace {

// Lex-BFS order with ties broken by lowest vertex index. Label of v is the
// set of already-visited neighbors, weighted so that earlier visits are more
// significant; comparing labels as integers is then the lexicographic
// comparison of the visit sequences.
std::vector<int> lex_bfs_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> label(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (pick == -1 || label[v] > label[pick])) pick = v;
        visited[pick] = true;
        order.push_back(pick);
        std::uint64_t weight = std::uint64_t{1} << (63 - step);
        for (int u : g.neighbors(pick))
            if (!visited[u]) label[u] |= weight;
    }
    return order;
}

} // namespace

bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order = lex_bfs_order(g);
    // reverse of the Lex-BFS order is a perfect elimination ordering iff
    // the graph is chordal
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        // neighbors of v earlier in the Lex-BFS order (later eliminated)
        VertexSet earlier;
        for (int u : g.neighbors(v))
            if (pos[u] < i) earlier = earlier.with(u);
        if (earlier.empty()) continue;
        int parent = -1;
        for (int u : earlier)
            if (parent == -1 || pos[u] > pos[parent]) parent = u;
        VertexSet rest = earlier.without(parent);
        if (!rest.subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

bool is_connected(const Graph& g) {
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        frontier = next - seen;
        seen |= next;
    }
    return seen == g.vertices();
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet rest = within;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.lowest());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v) & rest;
            frontier = next - comp;
            comp |= next;
        }
        comps.push_back(comp);
        rest = rest - comp;
    }
    return comps;
}

bool is_disjoint_union_of_stars(const Graph& g) {
    for (VertexSet comp : components_within(g, g.vertices())) {
        int c = comp.count();
        if (c < 2) return false; // isolated vertex
        int edges = 0, max_deg = 0;
        for (int v : comp) {
            int d = (g.neighbors(v) & comp).count();
            edges += d;
            max_deg = std::max(max_deg, d);
        }
        edges /= 2;
        if (edges != c - 1 || max_deg != c - 1) return false;
    }
    return true;
}

} // namespace eil
