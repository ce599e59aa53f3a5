#include "ramsey/vertex_set.hpp"

namespace ramsey {

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) {
        s.words_[w] = ~std::uint64_t{0};
    }
    if (universe % 64 != 0) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

VertexSet VertexSet::range(std::size_t universe, Vertex first, Vertex last) {
    VertexSet s(universe);
    for (Vertex v = first; v < last; ++v) {
        s.set(v);
    }
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const noexcept {
    for (auto w : words_) {
        if (w != 0) {
            return false;
        }
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
            return true;
        }
    }
    return false;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

Vertex VertexSet::next_from(Vertex v) const noexcept {
    if (v >= universe_) {
        return npos;
    }
    std::size_t w = v >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
        if (bits != 0) {
            return static_cast<Vertex>(w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
        }
        if (++w == words_.size()) {
            return npos;
        }
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

} // namespace ramsey
