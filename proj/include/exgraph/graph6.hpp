#ifndef EXGRAPH_GRAPH6_HPP
#define EXGRAPH_GRAPH6_HPP

#include <string>
#include <string_view>

#include "exgraph/graph.hpp"

namespace exg {

class Graph6Error : public std::runtime_error {
public:
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline constexpr std::string_view kGraph6Header = ">>graph6<<";
}

/// graph6 text encoding: size prefix, then the upper adjacency triangle in
/// column order, 6 bits per printable byte (offset 63). One byte encodes
/// n <= 62; the '~'-prefixed 18-bit form covers n <= 258047.
inline std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw Graph6Error("graph6_encode: vertex count above 258047 not supported");
    }
    int bit = 5;
    char cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.has_edge(row, col)) cur |= char(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + cur));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(63 + cur));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.substr(0, detail::kGraph6Header.size()) == detail::kGraph6Header)
        text.remove_prefix(detail::kGraph6Header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6_decode: empty input");

    for (char c : text)
        if (c < 63 || c > 126) throw Graph6Error("graph6_decode: byte outside printable range 63..126");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 4 && text[1] == '~')
            throw Graph6Error("graph6_decode: 36-bit size prefix not supported");
        if (text.size() < 4) throw Graph6Error("graph6_decode: truncated size prefix");
        n = (static_cast<long long>(text[1] - 63) << 12) | (static_cast<long long>(text[2] - 63) << 6) |
            static_cast<long long>(text[3] - 63);
        if (n <= 62) throw Graph6Error("graph6_decode: non-minimal size prefix");
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }

    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos != nbytes)
        throw Graph6Error("graph6_decode: expected " + std::to_string(nbytes) + " data bytes, got " +
                          std::to_string(text.size() - pos));

    GraphBuilder b(static_cast<int>(n));
    long long idx = 0;
    int row = 0, col = 1;
    for (std::size_t i = pos; i < text.size(); ++i) {
        int v = text[i] - 63;
        for (int bit = 5; bit >= 0; --bit, ++idx) {
            if (idx >= nbits) {
                if ((v >> bit) & 1) throw Graph6Error("graph6_decode: nonzero padding bits");
                continue;
            }
            if ((v >> bit) & 1) b.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return std::move(b).build();
}

}  // namespace exg

#endif
