#ifndef EIL_REGULARITY_HPP
#define EIL_REGULARITY_HPP

#include "eil/field.hpp"
#include "eil/graph.hpp"

namespace eil {

struct RegularityOptions {
    // 2^n induced subcomplexes are scanned; refuse larger inputs
    int max_vertices = 13;
    int workers = 1;
    // verify boundary-of-boundary = 0 on every complex built
    bool check_boundaries = false;
};

// Castelnuovo-Mumford regularity of R/I(G) over k, via reduced homology of
// the independence complexes of all induced subgraphs: the maximum of j+1
// over non-empty W and j >= 0 with H~_j(Ind(G_W); k) != 0. Requires at least
// one edge.
int regularity(const Graph& g, const FieldSpec& k, const RegularityOptions& opts = {});

// reg = nu(G) for chordal graphs, any field. Requires is_chordal(g).
int regularity_chordal(const Graph& g);

} // namespace eil

#endif
