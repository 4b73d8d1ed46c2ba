#include <string>

#include "probemr/graph.hpp"

namespace probemr {

namespace {
constexpr int kLo = 63;  // '?'
constexpr int kHi = 126; // '~'
} // namespace

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    size_t pos = 0;
    long n;
    auto next_sextet = [&](const char* what) {
        if (pos >= text.size()) throw ParseError(std::string("truncated ") + what, pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kLo || c > kHi)
            throw ParseError(std::string("byte out of graph6 range in ") + what, pos);
        ++pos;
        return static_cast<long>(c - kLo);
    };
    long first = next_sextet("header");
    if (first < 63) {
        n = first;
    } else {
        // long form: '~' then three sextets; the 8-byte huge form is rejected
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kHi)
            throw ParseError("graph6 order beyond supported range", pos);
        long a = next_sextet("header");
        long b = next_sextet("header");
        long c = next_sextet("header");
        n = (a << 12) | (b << 6) | c;
    }
    if (n > kMaxVertices) throw ParseError("graph6 order beyond supported range", 0);

    Graph g(static_cast<int>(n));
    long cur = 0;
    int cur_bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (cur_bits == 0) {
                cur = next_sextet("bit payload");
                cur_bits = 6;
            }
            if ((cur >> (cur_bits - 1)) & 1) g.add_edge(u, v);
            --cur_bits;
        }
    while (cur_bits > 0) {
        if ((cur >> (cur_bits - 1)) & 1) throw ParseError("nonzero padding bits", pos - 1);
        --cur_bits;
    }
    if (pos != text.size()) throw ParseError("trailing bytes after graph6 payload", pos);
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kLo));
        out.push_back(static_cast<char>((n & 0x3f) + kLo));
    }
    int cur = 0, cur_bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++cur_bits == 6) {
                out.push_back(static_cast<char>(cur + kLo));
                cur = 0;
                cur_bits = 0;
            }
        }
    if (cur_bits > 0) out.push_back(static_cast<char>((cur << (6 - cur_bits)) + kLo));
    return out;
}

} // namespace probemr
