#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey {

using Vertex = std::uint32_t;

/// Dynamic bitset over the vertex universe 0..universe-1.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    static constexpr Vertex npos = static_cast<Vertex>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe);
    static VertexSet range(std::size_t universe, Vertex first, Vertex last);

    std::size_t universe() const noexcept { return universe_; }

    bool test(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(Vertex v) noexcept { words_[v >> 6] |= bit(v); }
    void reset(Vertex v) noexcept { words_[v >> 6] &= ~bit(v); }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    bool intersects(const VertexSet& other) const noexcept;
    std::size_t intersection_count(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }

    /// Smallest member, or npos.
    Vertex first() const noexcept { return next_from(0); }
    /// Smallest member >= v, or npos.
    Vertex next_from(Vertex v) const noexcept;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto b = static_cast<unsigned>(std::countr_zero(bits));
                f(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool operator==(const VertexSet&) const = default;

private:
    static constexpr std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ramsey
