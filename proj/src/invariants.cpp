#include "eil/invariants.hpp"

#include <cassert>
#include <stdexcept>

namespace eil {

BigInt FVector::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

namespace {

// Independent-set counts by cardinality within `avail`.
std::vector<BigInt> count_independent(const Graph& g, VertexSet avail) {
    if (avail.empty()) return {BigInt(1)};

    auto comps = components_within(g, avail);
    if (comps.size() > 1) {
        // counts multiply across components (as polynomials in t)
        std::vector<BigInt> acc{BigInt(1)};
        for (VertexSet comp : comps) {
            std::vector<BigInt> part = count_independent(g, comp);
            std::vector<BigInt> next(acc.size() + part.size() - 1, 0);
            for (std::size_t i = 0; i < acc.size(); ++i)
                for (std::size_t j = 0; j < part.size(); ++j)
                    next[i + j] += acc[i] * part[j];
            acc = std::move(next);
        }
        return acc;
    }

    int pivot = -1, pivot_deg = -1;
    for (int v : avail) {
        int d = (g.neighbors(v) & avail).count();
        if (d > pivot_deg) { pivot_deg = d; pivot = v; }
    }
    if (pivot_deg == 0) {
        // k isolated vertices: binomial counts
        int k = avail.count();
        std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
        c[0] = 1;
        for (int i = 1; i <= k; ++i) c[i] = c[i - 1] * (k - i + 1) / i;
        return c;
    }

    std::vector<BigInt> excl = count_independent(g, avail.without(pivot));
    std::vector<BigInt> incl = count_independent(g, avail - g.closed_neighborhood(pivot));
    if (excl.size() < incl.size() + 1) excl.resize(incl.size() + 1, 0);
    for (std::size_t i = 0; i < incl.size(); ++i) excl[i + 1] += incl[i];
    return excl;
}

std::atomic<std::size_t> g_reduction_count{0};

} // namespace

FVector f_vector(const Graph& g) {
    FVector f{count_independent(g, g.vertices())};
    while (!f.counts.empty() && f.counts.back() == 0) f.counts.pop_back();
    return f;
}

HilbertSeries hilbert_series(const Graph& g) {
    FVector f = f_vector(g);
    int alpha = f.alpha();
    IntPolynomial numerator;
    for (int i = 0; i <= alpha; ++i) {
        IntPolynomial term = IntPolynomial::constant(f.counts[static_cast<std::size_t>(i)]) *
                             IntPolynomial::one_minus_t_pow(alpha - i);
        numerator = numerator + term.shifted(i);
    }
    int pole = alpha;
    // never expected to run for edge ideals: numerator(1) = f_{alpha-1} > 0
    while (pole > 0 && numerator.evaluate_one() == 0) {
        numerator = numerator.divided_by_one_minus_t();
        --pole;
        ++g_reduction_count;
        assert(false && "hilbert numerator reduction fired for an edge ideal");
    }
    return HilbertSeries{std::move(numerator), pole};
}

std::size_t hilbert_reduction_count() { return g_reduction_count.load(); }

std::string HilbertSeries::to_string() const {
    std::string s = "(" + numerator.to_string() + ")";
    if (pole_order > 0) {
        s += "/(1-t)";
        if (pole_order > 1) s += "^" + std::to_string(pole_order);
    }
    return s;
}

int deg_h(const Graph& g) {
    return hilbert_series(g).numerator.degree();
}

BigInt leading_coefficient(const Graph& g) {
    return hilbert_series(g).numerator.leading_coefficient();
}

std::vector<BigInt> series_coefficients(const HilbertSeries& s, int upto) {
    if (upto < 0) throw std::invalid_argument("negative coefficient count");
    std::vector<BigInt> c(static_cast<std::size_t>(upto) + 1, 0);
    for (int i = 0; i <= upto; ++i) c[static_cast<std::size_t>(i)] = s.numerator.coeff(i);
    // each division by (1-t) is a running prefix sum
    for (int k = 0; k < s.pole_order; ++k)
        for (int i = 1; i <= upto; ++i)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i) - 1];
    return c;
}

namespace {

// Lexicographically first independent set of cardinality k whose
// neighborhood covers the graph. Candidates are vertices >= `from` not
// adjacent to the current set.
bool witness_search(const Graph& g, int k, int from, VertexSet current, VertexSet blocked,
                    VertexSet& out) {
    if (current.count() == k) {
        if (is_vertex_cover(g, neighborhood(g, current))) {
            out = current;
            return true;
        }
        return false;
    }
    int need = k - current.count();
    if (from >= g.vertex_count()) return false;
    VertexSet candidates = (g.vertices() - blocked) & VertexSet(~std::uint64_t{0} << from);
    if (candidates.count() < need) return false;
    for (int v : candidates) {
        if (g.vertex_count() - v < need) break;
        if (witness_search(g, k, v + 1, current.with(v), blocked | g.closed_neighborhood(v), out))
            return true;
    }
    return false;
}

} // namespace

VertexSet v_witness(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("v-witness of an edgeless graph");
    for (int k = 1; k <= g.vertex_count(); ++k) {
        VertexSet out;
        if (witness_search(g, k, 0, VertexSet(), VertexSet(), out)) return out;
    }
    // any maximal independent set qualifies, so this is unreachable
    throw std::logic_error("v-number search exhausted all cardinalities");
}

int v_number(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    return v_witness(g).count();
}

} // namespace eil
