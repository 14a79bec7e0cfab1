#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace rootdom {

using Vertex = int;

// Upper bound on graph order; vertex sets are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// A subset of the dense vertex ids 0..n-1 of some graph, stored as a bitmask.
///
/// The set does not remember the order of the graph it belongs to; operations
/// that need it (complement, validation) take the order explicitly.
class VertexSet {
public:
    using Word = std::uint64_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(Word rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Word rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Word bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet from_vector(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~Word{0} : ((Word{1} << n) - 1));
    }

    static constexpr VertexSet single(Vertex v) { return VertexSet(Word{1} << v); }

    constexpr Word bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(Vertex v) { bits_ |= Word{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(Word{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr VertexSet complement(int n) const { return VertexSet(~bits_ & full(n).bits_); }

    /// True iff every member is a valid id of a graph of order n.
    constexpr bool fits(int n) const { return is_subset_of(full(n)); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    std::string to_string() const {
        std::string out = "{";
        bool first_item = true;
        for (Vertex v : *this) {
            if (!first_item) out += ",";
            out += std::to_string(v);
            first_item = false;
        }
        return out + "}";
    }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Lexicographic order on the sorted member sequences, for equal-size sets.
    /// Matches include-first search order over ascending ids.
    static bool lex_less(VertexSet a, VertexSet b) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (*ia != *ib) return *ia < *ib;
        }
        return ia == a.end() && ib != b.end();
    }

private:
    Word bits_ = 0;
};

}  // namespace rootdom
