#pragma once

// graph6 line codec. Header byte 63+n for n <= 62, '~' plus an 18-bit
// big-endian count for larger n; edge bits packed column-major over the
// upper triangle into 6-bit chunks offset by 63. Decoding is strict:
// wrong length, out-of-range bytes and nonzero padding all fail, so
// encode(decode(s)) == s on every accepted string.

#include <string>
#include <string_view>

#include "turan/errors.hpp"
#include "turan/graph.hpp"

namespace turan {

inline std::string g6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

inline Graph g6_decode(std::string_view line) {
    if (line.empty()) throw parse_error("empty graph6 string", 0);
    size_t pos = 0;
    auto sextet = [&](size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126)
            throw parse_error("byte outside graph6 range", at);
        return c - 63;
    };
    long long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw parse_error("vertex counts above 258047 are not supported", 1);
        if (line.size() < 4)
            throw parse_error("truncated vertex count", line.size());
        n = (static_cast<long long>(sextet(1)) << 12) |
            (static_cast<long long>(sextet(2)) << 6) | sextet(3);
        if (n <= 62) throw parse_error("non-canonical long vertex count", 1);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxVertices)
        throw capacity_error("graph6 vertex count " + std::to_string(n) +
                             " exceeds the representation limit " +
                             std::to_string(kMaxVertices));
    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - pos < need)
        throw parse_error("graph6 bit stream too short", line.size());
    if (line.size() - pos > need)
        throw parse_error("graph6 bit stream too long", pos + need);

    GraphBuilder b(static_cast<int>(n));
    long long bit_index = 0;
    // Bits enumerate (i, j) column-major over the upper triangle:
    // columns j = 1..n-1, rows i = 0..j-1.
    int i = 0, j = 1;
    for (size_t k = 0; k < need; ++k) {
        int v = sextet(pos + k);
        for (int t = 5; t >= 0; --t, ++bit_index) {
            int bit = (v >> t) & 1;
            if (bit_index >= bits) {
                if (bit) throw parse_error("nonzero padding bits", pos + k);
                continue;
            }
            if (bit) b.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return std::move(b).build();
}

}  // namespace turan
