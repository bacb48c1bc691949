#include "trigen/graph6.hpp"

#include <istream>
#include <ostream>

#include "trigen/errors.hpp"

namespace trigen {

std::string graph6_encode(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxVertices) throw BadParameterError("graph6_encode: more than 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty line");
    if (line[0] == 126) throw ParseError("graph6: long form (>= 63 vertices) not supported");
    int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 0 || n > kMaxVertices) throw ParseError("graph6: bad vertex count byte");
    long long pair_bits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t need = 1 + static_cast<std::size_t>((pair_bits + 5) / 6);
    if (line.size() != need)
        throw ParseError("graph6: wrong length for " + std::to_string(n) + " vertices");
    Graph g(n);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int c = static_cast<unsigned char>(line[1 + static_cast<std::size_t>(bit / 6)]);
            if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
            int b = (c - 63) >> (5 - bit % 6) & 1;
            if (b) g.link(i, j);
        }
    }
    if (pair_bits % 6 != 0) {
        int c = static_cast<unsigned char>(line.back()) - 63;
        int pad = static_cast<int>(6 - pair_bits % 6);
        if ((c & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

} // namespace trigen
