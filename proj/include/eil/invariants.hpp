#ifndef EIL_INVARIANTS_HPP
#define EIL_INVARIANTS_HPP

#include "eil/graph.hpp"
#include "eil/polynomial.hpp"

#include <atomic>
#include <string>
#include <vector>

namespace eil {

// counts[i] = f_{i-1} = number of independent sets of cardinality i,
// for i = 0..alpha(G). counts[0] = 1 (the empty set).
struct FVector {
    std::vector<BigInt> counts;
    int alpha() const { return static_cast<int>(counts.size()) - 1; }
    BigInt total() const;
    bool operator==(const FVector& o) const { return counts == o.counts; }
};

// H_{R/I(G)}(t) = numerator / (1-t)^pole_order, with numerator(1) != 0.
// For edge ideals the pole order is alpha(G).
struct HilbertSeries {
    IntPolynomial numerator;
    int pole_order = 0;

    // "(1 + 8*t + 11*t^2)/(1-t)^3"
    std::string to_string() const;
    bool operator==(const HilbertSeries& o) const {
        return numerator == o.numerator && pole_order == o.pole_order;
    }
};

// Exact independent-set counts by cardinality, via branch on a max-degree
// vertex with connected-component splitting.
FVector f_vector(const Graph& g);

// numerator = sum_i f_{i-1} t^i (1-t)^(alpha-i), pole order alpha. A
// defensive reduction loop divides out (1-t) while numerator(1) = 0; for
// edge ideals numerator(1) = f_{alpha-1} > 0 and the loop never runs
// (hilbert_reduction_count() records if it ever does).
HilbertSeries hilbert_series(const Graph& g);
std::size_t hilbert_reduction_count();

int deg_h(const Graph& g);
BigInt leading_coefficient(const Graph& g);

// first upto+1 Taylor coefficients of numerator/(1-t)^pole_order
std::vector<BigInt> series_coefficients(const HilbertSeries& s, int upto);

// v-number and a witness: the smallest independent set A with N_G(A) a
// (minimal) vertex cover. Search is by increasing cardinality, sets of one
// cardinality in lexicographic order, so the witness is deterministic.
// Edgeless graphs have v = 0; v_witness requires at least one edge.
int v_number(const Graph& g);
VertexSet v_witness(const Graph& g);

} // namespace eil

#endif
