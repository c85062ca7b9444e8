#ifndef EIL_CATALOG_HPP
#define EIL_CATALOG_HPP

#include "eil/constructions.hpp"
#include "eil/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eil {

// Fixed catalog of the named graphs. Unknown names throw.
Graph paper_graph(const std::string& name);
std::vector<std::string> catalog_names();

// Parametric families: n copies of the fig1 graph with the clique vertex of
// copy i joined to x_1..x_5 (thm35) or to all eleven vertices (ex510).
std::vector<ConstructionPart> thm35_parts(int n);
std::vector<ConstructionPart> ex510_parts(int n);
Graph hn_thm35(int n);
Graph hn_ex510(int n);

// Documented invariant values for a catalog graph, used for construct
// sidecars. reg values are field-tagged where they differ.
struct CatalogExpected {
    std::optional<int> v, deg_h, reg_q, reg_f2;
};
CatalogExpected catalog_expected(const std::string& name);

} // namespace eil

#endif
