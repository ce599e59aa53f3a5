#include "ramsey/graph6.hpp"

#include "ramsey/error.hpp"

#include <cstdint>

namespace ramsey {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, std::uint64_t n) {
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
        }
    }
}

int sextet(char c) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) {
        throw ParseError("graph6: invalid character '" + std::string(1, c) + "'");
    }
    return value;
}

} // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    const auto n = g.order();
    append_order(out, n);
    int bits = 0;
    int acc = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) {
        out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    }
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    const auto read_digits = [&](int count) {
        if (text.size() < pos + static_cast<std::size_t>(count)) {
            throw ParseError("graph6: truncated order field");
        }
        std::uint64_t value = 0;
        for (int k = 0; k < count; ++k) {
            value = (value << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
        }
        return value;
    };
    if (text[0] != '~') {
        n = read_digits(1);
    } else if (text.size() > 1 && text[1] == '~') {
        pos = 2;
        n = read_digits(6);
    } else {
        pos = 1;
        n = read_digits(3);
    }

    const std::uint64_t pair_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t body_len = (pair_bits + 5) / 6;
    if (text.size() - pos != body_len) {
        throw ParseError("graph6: expected " + std::to_string(body_len) + " data bytes for order " +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos));
    }

    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t bit_index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit_index) {
            const int byte = sextet(text[pos + bit_index / 6]);
            if ((byte >> (5 - bit_index % 6)) & 1) {
                b.add_edge(i, j);
            }
        }
    }
    if (bit_index % 6 != 0) {
        const int byte = sextet(text[pos + bit_index / 6]);
        const int padding_mask = (1 << (6 - bit_index % 6)) - 1;
        if ((byte & padding_mask) != 0) {
            throw ParseError("graph6: non-zero padding bits");
        }
    }
    return std::move(b).build();
}

} // namespace ramsey
