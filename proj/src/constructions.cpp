#include "eil/constructions.hpp"

#include "eil/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace eil {

namespace {

// Invariants of G_i and of G_i \ A_i. Removing every vertex leaves the
// 0-vertex ring: alpha = deg = v = 0 and h = 1, handled here so nothing
// downstream ever builds a 0-vertex graph.
struct PartSummary {
    int alpha, deg, v;
    BigInt lead;
    int alpha_rest, deg_rest, v_rest;
    BigInt lead_rest;
};

PartSummary summarize(const ConstructionPart& part) {
    PartSummary s{};
    const Graph& g = part.graph;
    HilbertSeries hs = hilbert_series(g);
    s.alpha = hs.pole_order;
    s.deg = hs.numerator.degree();
    s.lead = hs.numerator.leading_coefficient();
    s.v = v_number(g);
    if (part.attach_set == g.vertices()) {
        s.alpha_rest = 0;
        s.deg_rest = 0;
        s.v_rest = 0;
        s.lead_rest = 1;
    } else {
        Graph rest = delete_vertices(g, part.attach_set);
        HilbertSeries hr = hilbert_series(rest);
        s.alpha_rest = hr.pole_order;
        s.deg_rest = hr.numerator.degree();
        s.lead_rest = hr.numerator.leading_coefficient();
        s.v_rest = v_number(rest);
    }
    return s;
}

void validate_parts(const std::vector<ConstructionPart>& parts) {
    if (parts.empty()) throw std::invalid_argument("construction needs at least one part");
    for (const auto& part : parts) {
        if (part.graph.edge_count() == 0)
            throw std::invalid_argument("construction parts must be non-empty graphs");
        if (!part.attach_set.subset_of(part.graph.vertices()))
            throw std::invalid_argument("attach set not within its part");
    }
}

} // namespace

Graph build_hn(const std::vector<ConstructionPart>& parts) {
    validate_parts(parts);
    int total = static_cast<int>(parts.size());
    for (const auto& part : parts) total += part.graph.vertex_count();
    if (total > 64) throw std::invalid_argument("construction exceeds 64 vertices");

    Graph h(total);
    int offset = 0;
    int y = total - static_cast<int>(parts.size());
    for (const auto& part : parts) {
        const Graph& g = part.graph;
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int u : g.neighbors(v))
                if (u > v) h.add_edge(offset + v, offset + u);
        for (int a : part.attach_set) h.add_edge(y, offset + a);
        offset += g.vertex_count();
        ++y;
    }
    int y0 = total - static_cast<int>(parts.size());
    for (int i = y0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) h.add_edge(i, j);
    return h;
}

bool check_construction1(const std::vector<ConstructionPart>& parts) {
    validate_parts(parts);
    int sign = 0;
    for (const auto& part : parts) {
        PartSummary s = summarize(part);
        int t = s.alpha - s.alpha_rest;
        if (t < 1 || t % 2 == 0) return false;
        if (s.deg - s.deg_rest != t - 1) return false;
        for (const BigInt& lead : {s.lead, s.lead_rest}) {
            int this_sign = lead > 0 ? 1 : -1;
            if (sign == 0) sign = this_sign;
            if (sign != this_sign) return false;
        }
    }
    return true;
}

std::optional<PredictedInvariants> predict_deg(const std::vector<ConstructionPart>& parts) {
    if (!check_construction1(parts)) return std::nullopt;
    PredictedInvariants p;
    int deg = 1;
    for (const auto& part : parts) {
        PartSummary s = summarize(part);
        p.dim += s.alpha;
        deg += s.deg;
    }
    p.deg_h = deg;
    return p;
}

bool check_construction2(const std::vector<ConstructionPart>& parts) {
    validate_parts(parts);
    for (const auto& part : parts) {
        PartSummary s = summarize(part);
        if (s.v < 1 + s.v_rest) return false;
    }
    return true;
}

std::optional<PredictedInvariants> predict_v(const std::vector<ConstructionPart>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("v-number prediction is stated only for n >= 2");
    if (!check_construction2(parts)) return std::nullopt;

    std::vector<PartSummary> s;
    s.reserve(parts.size());
    for (const auto& part : parts) s.push_back(summarize(part));

    int v_sum = 0;
    int alpha_sum = 0;
    for (const auto& part : s) {
        v_sum += part.v;
        alpha_sum += part.alpha;
    }
    int best = -1;
    for (const auto& part : s) {
        int candidate = 1 + part.v_rest + (v_sum - part.v);
        if (best < 0 || candidate < best) best = candidate;
    }
    PredictedInvariants p;
    p.dim = alpha_sum;
    p.v = best;
    return p;
}

Graph build_hvd(int v, int d) {
    if (v < 1 || v > d) throw std::invalid_argument("H(v,d) needs 1 <= v <= d");
    int n = 3 * v + (d - v);
    if (n > 64) throw std::invalid_argument("H(v,d) exceeds 64 vertices");
    Graph g(n);
    auto x = [](int i) { return 3 * (i - 1); };
    auto y = [](int i) { return 3 * (i - 1) + 1; };
    auto w = [](int i) { return 3 * (i - 1) + 2; };
    for (int i = 1; i <= v; ++i) {
        g.add_edge(x(i), y(i));
        g.add_edge(y(i), w(i));
        g.add_edge(w(i), x(i));
    }
    for (int i = 2; i <= v; ++i) g.add_edge(x(1), x(i));
    for (int j = 1; j <= d - v; ++j) g.add_edge(w(1), 3 * v + (j - 1));
    return g;
}

} // namespace eil
