#ifndef EIL_ENUMERATE_HPP
#define EIL_ENUMERATE_HPP

#include "eil/graph.hpp"

#include <string>
#include <vector>

namespace eil {

// graph6 string of the canonical labeling: the lexicographically minimal
// upper-triangle bit string over all relabelings, found by backtracking
// with prefix pruning.
std::string canonical_graph6(const Graph& g);

// Exactly one representative per isomorphism class on exactly n vertices,
// in canonical-string order. The built-in enumerator is capped at n = 7;
// larger n must come from externally generated .g6 files.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

namespace detail {

// Uncapped level-by-level enumeration (extend every (k-1)-vertex class by
// one vertex, dedup by canonical form within degree-sequence buckets).
// O(n!)-flavored per candidate; used by the offline generator tool.
std::vector<std::string> enumerate_canonical_g6(int n);

} // namespace detail

} // namespace eil

#endif
