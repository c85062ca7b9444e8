#ifndef EIL_CONSTRUCTIONS_HPP
#define EIL_CONSTRUCTIONS_HPP

#include "eil/graph.hpp"

#include <optional>
#include <vector>

namespace eil {

// One building block: a graph G_i together with the attachment set
// A_i subseteq V(G_i) its clique vertex y_i gets joined to.
struct ConstructionPart {
    Graph graph;
    VertexSet attach_set;
};

struct PredictedInvariants {
    int dim = 0;
    std::optional<int> deg_h;
    std::optional<int> v;
};

// H_n: the disjoint parts plus a clique y_1..y_n (highest labels, in order),
// each y_i joined to A_i. Parts must be non-empty graphs; the combined
// vertex count must stay within 64.
Graph build_hn(const std::vector<ConstructionPart>& parts);

// Degree construction preconditions: t_i = alpha(G_i) - alpha(G_i \ A_i) is
// odd and >= 1, deg drops by exactly t_i - 1, and all leading coefficients
// of the h-polynomials involved share one sign.
bool check_construction1(const std::vector<ConstructionPart>& parts);

// dim = sum alpha(G_i), deg_h = 1 + sum deg(G_i); nullopt when
// check_construction1 fails.
std::optional<PredictedInvariants> predict_deg(const std::vector<ConstructionPart>& parts);

// v-number construction precondition: v(I(G_i)) >= 1 + v(I(G_i \ A_i)).
bool check_construction2(const std::vector<ConstructionPart>& parts);

// v = min_i { 1 + v(G_i \ A_i) + sum_{j != i} v(G_j) }; stated only for
// n >= 2 (n = 1 is computed directly, not predicted). nullopt when
// check_construction2 fails.
std::optional<PredictedInvariants> predict_v(const std::vector<ConstructionPart>& parts);

// H(v,d) for 1 <= v <= d: v triangles {x_i,y_i,w_i}, a star on x_1..x_v,
// and d-v leaves on w_1. Labels: x_i,y_i,w_i = 3(i-1)+0,1,2 and
// z_j = 3v+(j-1).
Graph build_hvd(int v, int d);

} // namespace eil

#endif
