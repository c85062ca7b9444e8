#include "eil/complex.hpp"

#include <algorithm>

namespace eil {

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& level : faces) total += level.size();
    return total;
}

namespace {

void collect_independent(const Graph& g, VertexSet current, VertexSet candidates,
                         std::vector<std::vector<std::uint64_t>>& out, std::size_t max_faces,
                         std::size_t& count) {
    if (++count > max_faces)
        throw ResourceError("independence complex exceeds face budget");
    std::size_t card = static_cast<std::size_t>(current.count());
    if (out.size() <= card) out.resize(card + 1);
    out[card].push_back(current.bits());
    for (int v : candidates) {
        VertexSet above(v + 1 >= 64 ? 0 : ~std::uint64_t{0} << (v + 1));
        collect_independent(g, current.with(v), (candidates & above) - g.neighbors(v), out,
                            max_faces, count);
    }
}

} // namespace

SimplicialComplex independence_complex(const Graph& g, std::size_t max_faces) {
    SimplicialComplex c;
    c.n = g.vertex_count();
    std::size_t count = 0;
    collect_independent(g, VertexSet(), g.vertices(), c.faces, max_faces, count);
    for (auto& level : c.faces) std::sort(level.begin(), level.end());
    return c;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k >= static_cast<int>(c.faces.size()))
        throw std::invalid_argument("boundary index out of range");
    const auto& cols = c.faces[static_cast<std::size_t>(k)];
    const auto& rows = c.faces[static_cast<std::size_t>(k) - 1];
    BoundaryMatrix b;
    b.rows = static_cast<int>(rows.size());
    b.cols = static_cast<int>(cols.size());
    b.entries.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
    for (int j = 0; j < b.cols; ++j) {
        VertexSet face(cols[static_cast<std::size_t>(j)]);
        int position = 0;
        for (int v : face) {
            std::uint64_t sub = face.without(v).bits();
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            int i = static_cast<int>(it - rows.begin());
            b.entries[static_cast<std::size_t>(i) * b.cols + j] = (position % 2 == 0) ? 1 : -1;
            ++position;
        }
    }
    return b;
}

bool verify_boundary_squares_to_zero(const SimplicialComplex& c) {
    for (int k = 1; k + 1 < static_cast<int>(c.faces.size()); ++k) {
        BoundaryMatrix a = boundary_matrix(c, k);
        BoundaryMatrix b = boundary_matrix(c, k + 1);
        for (int i = 0; i < a.rows; ++i)
            for (int j = 0; j < b.cols; ++j) {
                int sum = 0;
                for (int t = 0; t < a.cols; ++t) sum += a.at(i, t) * b.at(t, j);
                if (sum != 0) return false;
            }
    }
    return true;
}

} // namespace eil
