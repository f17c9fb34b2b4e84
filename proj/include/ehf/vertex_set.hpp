#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ehf {

/// Subset of {0..63}, one bit per vertex. Vertices are dense integer indices
/// of a host graph; all set algebra compiles down to single-word operations.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet of(std::initializer_list<int> vs) {
        std::uint64_t b = 0;
        for (int v : vs) b |= std::uint64_t{1} << v;
        return VertexSet(b);
    }

    /// {0, 1, ..., n-1}. n = 64 yields the full word.
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// Every index strictly greater than v (up to 63).
    static constexpr VertexSet above(int v) { return VertexSet(~range(v + 1).bits()); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool contains_all(VertexSet other) const { return (other.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    /// Lowest vertex; undefined on the empty set.
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Iterates set members in increasing order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t bits) : bits_(bits) {}
        constexpr int operator*() const { return std::countr_zero(bits_); }
        constexpr iterator& operator++() { bits_ &= bits_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        std::uint64_t bits_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace ehf
