#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace alphawidth {

/// Maximum vertex count of the bitset tier.
inline constexpr int kMaxBitsetVertices = 64;

/// A set of vertices drawn from {0..63}, stored as a single machine word.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
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
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    constexpr VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet from_vector(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Smallest element; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }
    constexpr int highest() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    /// "{0,3,5}"
    std::string to_string() const;

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element sequences ({0,1} < {0,1,2} < {0,2} < {1}).
bool lex_less(VertexSet a, VertexSet b);

/// Canonical element order used for certificates: by lowest vertex, then by mask.
inline bool canonical_less(VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
    return a.bits() < b.bits();
}

/// Calls fn(S) for every subset S of `universe` with |S| == size, in lexicographic order.
/// Stops early when fn returns true; returns whether it stopped.
template <typename Fn>
bool for_each_subset_of_size(VertexSet universe, int size, Fn&& fn) {
    const std::vector<int> pool = universe.to_vector();
    const int m = static_cast<int>(pool.size());
    if (size < 0 || size > m) return false;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.insert(pool[i]);
        if (fn(s)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Subsets of `universe` in order of increasing size, lexicographic within a size.
template <typename Fn>
bool for_each_subset_by_size(VertexSet universe, Fn&& fn) {
    for (int size = 0; size <= universe.size(); ++size)
        if (for_each_subset_of_size(universe, size, fn)) return true;
    return false;
}

/// All subsets of `universe` in mask (Gray-free, numeric) order.
template <typename Fn>
void for_each_subset(VertexSet universe, Fn&& fn) {
    std::uint64_t sub = 0;
    const std::uint64_t all = universe.bits();
    while (true) {
        fn(VertexSet(sub));
        if (sub == all) break;
        sub = (sub - all) & all;
    }
}

}  // namespace alphawidth
