#ifndef EIL_COMPLEX_HPP
#define EIL_COMPLEX_HPP

#include "eil/graph.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eil {

// Budget overruns (too many faces, subset scan too large) are resource
// errors, distinct from bad input.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Faces grouped by cardinality: faces[k] holds the faces with k vertices as
// bitmasks sorted by integer value, faces[0] = {empty face}. Closed under
// subsets.
struct SimplicialComplex {
    int n = 0; // ambient vertex count
    std::vector<std::vector<std::uint64_t>> faces;

    int dim() const { return static_cast<int>(faces.size()) - 2; }
    std::size_t face_count() const;
};

// Signed incidence between faces of adjacent cardinality: column = face with
// k vertices, row = face with k-1; the entry for dropping the i-th smallest
// vertex is (-1)^i. Satisfies boundary-of-boundary = 0.
struct BoundaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<signed char> entries; // row-major

    signed char at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// Ind(G): faces are the independent sets of g. Face counts by cardinality
// match f_vector(g).
SimplicialComplex independence_complex(const Graph& g, std::size_t max_faces = 1u << 22);

// Boundary from card-k faces down to card-(k-1) faces, 1 <= k < faces.size().
// k = 1 is the augmentation to the empty face.
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k);

// boundary(k) * boundary(k+1) == 0 for every valid k
bool verify_boundary_squares_to_zero(const SimplicialComplex& c);

} // namespace eil

#endif
