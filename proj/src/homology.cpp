#include "eil/homology.hpp"

namespace eil {

int rank_mod_p(const BoundaryMatrix& m, int p) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows),
                                    std::vector<int>(static_cast<std::size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((m.at(i, j) % p) + p) % p;

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        // scale pivot row to 1 via Fermat inverse
        long long inv = 1, base = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int e = p - 2; e > 0; e >>= 1) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
        }
        for (int j = col; j < m.cols; ++j) {
            auto& row = a[static_cast<std::size_t>(rank)];
            row[static_cast<std::size_t>(j)] =
                static_cast<int>(row[static_cast<std::size_t>(j)] * inv % p);
        }
        for (int i = rank + 1; i < m.rows; ++i) {
            int factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = col; j < m.cols; ++j) {
                long long v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              static_cast<long long>(factor) *
                                  a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] % p;
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    static_cast<int>(((v % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

int rank_rational(const BoundaryMatrix& m) {
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(m.rows),
                                       std::vector<BigInt>(static_cast<std::size_t>(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);

    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
        const BigInt piv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int i = rank + 1; i < m.rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const auto& prow = a[static_cast<std::size_t>(rank)];
            const BigInt lead = row[static_cast<std::size_t>(col)];
            for (int j = col; j < m.cols; ++j) {
                // fraction-free update: division by the previous pivot is exact
                row[static_cast<std::size_t>(j)] =
                    (row[static_cast<std::size_t>(j)] * piv -
                     lead * prow[static_cast<std::size_t>(j)]) / prev;
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::vector<int> reduced_betti(const SimplicialComplex& c, const FieldSpec& k) {
    int levels = static_cast<int>(c.faces.size()); // cardinalities 0..levels-1
    std::vector<int> ranks(static_cast<std::size_t>(levels) + 1, 0);
    for (int card = 1; card < levels; ++card) {
        BoundaryMatrix b = boundary_matrix(c, card);
        ranks[static_cast<std::size_t>(card)] =
            k.rational ? rank_rational(b) : rank_mod_p(b, k.p);
    }
    // H~_{d} with d = card-1: dim = #faces_card - rank(d_card) - rank(d_card+1)
    std::vector<int> betti(static_cast<std::size_t>(levels), 0);
    for (int card = 0; card < levels; ++card) {
        int faces = static_cast<int>(c.faces[static_cast<std::size_t>(card)].size());
        betti[static_cast<std::size_t>(card)] = faces -
                                                ranks[static_cast<std::size_t>(card)] -
                                                ranks[static_cast<std::size_t>(card) + 1];
    }
    return betti;
}

} // namespace eil
