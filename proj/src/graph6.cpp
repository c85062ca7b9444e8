#include "eil/graph6.hpp"

#include <istream>

namespace eil {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int body_bytes(int n) {
    int pairs = n * (n - 1) / 2;
    return (pairs + 5) / 6;
}

int decode_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < kBias || b > kMaxByte)
        throw Graph6Error(Graph6ErrorKind::NonPrintableByte,
                          "graph6 byte out of range 63..126");
    return b - kBias;
}

} // namespace

Graph parse_graph6(std::string_view code) {
    if (code.empty())
        throw Graph6Error(Graph6ErrorKind::MalformedHeader, "empty graph6 code");

    std::size_t pos = 0;
    long n;
    if (code[0] == '~') {
        if (code.size() >= 2 && code[1] == '~')
            throw Graph6Error(Graph6ErrorKind::TooManyVertices,
                              "graph6 8-byte order form exceeds 64 vertices");
        if (code.size() < 4)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader,
                              "graph6 long header shorter than 4 bytes");
        n = (static_cast<long>(decode_byte(code[1])) << 12) |
            (decode_byte(code[2]) << 6) | decode_byte(code[3]);
        pos = 4;
        if (n < 63)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader,
                              "graph6 long header used for n < 63");
    } else {
        n = decode_byte(code[0]);
        pos = 1;
    }
    if (n > 64)
        throw Graph6Error(Graph6ErrorKind::TooManyVertices,
                          "graph6 order " + std::to_string(n) + " exceeds 64");
    if (n < 1)
        throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6 order is zero");

    int nv = static_cast<int>(n);
    int need = body_bytes(nv);
    if (static_cast<int>(code.size() - pos) < need)
        throw Graph6Error(Graph6ErrorKind::TruncatedBody, "graph6 body truncated");
    if (static_cast<int>(code.size() - pos) > need)
        throw Graph6Error(Graph6ErrorKind::MalformedHeader, "trailing bytes after graph6 body");

    Graph g(nv);
    int bits = 0, value = 0;
    for (int i = 1; i < nv; ++i) {
        for (int j = 0; j < i; ++j) {
            if (bits == 0) {
                value = decode_byte(code[pos++]);
                bits = 6;
            }
            if (value & 0x20) g.add_edge(j, i);
            value = (value << 1) & 0x3f;
            --bits;
        }
    }
    if (value != 0)
        throw Graph6Error(Graph6ErrorKind::MalformedHeader, "nonzero graph6 padding bits");
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int bits = 0, value = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            value = (value << 1) | (g.adjacent(j, i) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + kBias));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + kBias));
    return out;
}

std::optional<std::string> Graph6Reader::next_line() {
    std::string line;
    while (std::getline(in_, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>", 0) == 0) continue;
        return line;
    }
    return std::nullopt;
}

std::optional<Graph> Graph6Reader::next() {
    auto line = next_line();
    if (!line) return std::nullopt;
    return parse_graph6(*line);
}

} // namespace eil
