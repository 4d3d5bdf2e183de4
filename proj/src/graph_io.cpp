#include <charconv>
#include <sstream>

#include "permlab/error.hpp"
#include "permlab/graph.hpp"
#include "text_util.hpp"

namespace permlab {

namespace {

constexpr std::size_t kGraph6MaxOrder = 62;

}  // namespace

std::string to_graph6(const Graph& g) {
    const auto n = g.order();
    if (n > kGraph6MaxOrder) {
        throw ParameterError("graph6 encoding supports at most 62 vertices, got " + std::to_string(n));
    }
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input", 0);
    for (std::size_t k = 0; k < text.size(); ++k) {
        auto c = static_cast<unsigned char>(text[k]);
        if (c < 63 || c > 126) {
            throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(k) +
                                 " is outside the printable range 63..126",
                             k);
        }
    }
    const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder) {
        throw ParseError("graph6: offset 0 encodes a multi-byte order; only n <= 62 is supported", 0);
    }
    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) {
        std::size_t where = std::min(text.size(), 1 + nbytes);
        throw ParseError("graph6: expected " + std::to_string(1 + nbytes) + " bytes for n=" +
                             std::to_string(n) + ", got " + std::to_string(text.size()) +
                             " (offset " + std::to_string(where) + ")",
                         where);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t bit = 0;
    auto bit_at = [&](std::size_t k) {
        int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
        return (byte >> (5 - k % 6)) & 1;
    };
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (bit_at(bit)) edges.emplace_back(i, j);
        }
    }
    for (; bit < nbytes * 6; ++bit) {
        if (bit_at(bit)) {
            throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(1 + bit / 6),
                             1 + bit / 6);
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    auto lines = detail::split_content_lines(text);
    if (lines.empty()) throw ParseError("edge list: missing 'n <count>' header", 1);

    auto header = detail::split_ws(lines.front().text);
    if (header.size() != 2 || header[0] != "n") {
        throw ParseError("edge list: line " + std::to_string(lines.front().number) +
                             ": expected 'n <count>'",
                         lines.front().number);
    }
    const auto n = detail::parse_size(header[1], "edge list", lines.front().number);

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        auto tok = detail::split_ws(line.text);
        if (tok.size() != 2) {
            throw ParseError("edge list: line " + std::to_string(line.number) + ": expected 'u v'",
                             line.number);
        }
        auto u = detail::parse_size(tok[0], "edge list", line.number);
        auto v = detail::parse_size(tok[1], "edge list", line.number);
        if (u >= n || v >= n || u == v) {
            throw ParseError("edge list: line " + std::to_string(line.number) + ": invalid edge " +
                                 std::to_string(u) + " " + std::to_string(v),
                             line.number);
        }
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const ParameterError& e) {
        throw ParseError(std::string("edge list: ") + e.what(), lines.back().number);
    }
}

}  // namespace permlab
