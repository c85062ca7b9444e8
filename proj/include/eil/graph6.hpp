#ifndef EIL_GRAPH6_HPP
#define EIL_GRAPH6_HPP

#include "eil/graph.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eil {

enum class Graph6ErrorKind {
    MalformedHeader,
    TooManyVertices, // n > 64
    NonPrintableByte,
    TruncatedBody,
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const { return kind_; }

private:
    Graph6ErrorKind kind_;
};

// McKay graph6. Header byte n+63 for n <= 62, '~' + 3 bytes for 63..64; body
// bits enumerate the pairs (0,1),(0,2),(1,2),(0,3),... six bits per byte,
// big-endian within the byte, value+63 as ASCII, zero padding to a byte
// boundary.
Graph parse_graph6(std::string_view code);
std::string write_graph6(const Graph& g);

// Line-by-line reader for .g6 files: one code per line, lines starting with
// ">>" skipped.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}
    // next non-header line, or nullopt at end of input
    std::optional<std::string> next_line();
    std::optional<Graph> next();

private:
    std::istream& in_;
};

} // namespace eil

#endif
