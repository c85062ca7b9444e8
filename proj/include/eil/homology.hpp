#ifndef EIL_HOMOLOGY_HPP
#define EIL_HOMOLOGY_HPP

#include "eil/bigint.hpp"
#include "eil/complex.hpp"
#include "eil/field.hpp"

#include <vector>

namespace eil {

// dim_k of the reduced homology groups of c over k, indexed j = -1..dim(c)
// (entry [j+1]). Rank over F_p by dense elimination mod p; over the
// rationals by fraction-free (Bareiss) elimination on the integer matrix.
std::vector<int> reduced_betti(const SimplicialComplex& c, const FieldSpec& k);

int rank_mod_p(const BoundaryMatrix& m, int p);
int rank_rational(const BoundaryMatrix& m);

} // namespace eil

#endif
