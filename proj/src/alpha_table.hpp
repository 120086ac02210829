#pragma once

#include <cstdint>
#include <vector>

#include "alphawidth/errors.hpp"
#include "alphawidth/graph.hpp"

namespace alphawidth::detail {

/// alpha(G[S]) for every subset S of V(G), by the recurrence
/// alpha(S) = max(alpha(S - v), 1 + alpha(S - N[v])) on the lowest vertex v.
class AlphaTable {
public:
    static constexpr int kCap = 22;

    explicit AlphaTable(const Graph& g) : values_(std::size_t{1} << check(g.order())) {
        const int n = g.order();
        std::vector<std::uint64_t> closed(n);
        for (int v = 0; v < n; ++v) closed[v] = g.neighbors(v).bits() | (std::uint64_t{1} << v);
        for (std::uint64_t mask = 1; mask < values_.size(); ++mask) {
            const int v = __builtin_ctzll(mask);
            const std::uint8_t skip = values_[mask & (mask - 1)];
            const std::uint8_t take = static_cast<std::uint8_t>(1 + values_[mask & ~closed[v]]);
            values_[mask] = skip > take ? skip : take;
        }
    }

    int operator()(VertexSet s) const { return values_[s.bits()]; }

private:
    static int check(int n) {
        if (n > kCap) throw SizeCapError("subset table limited to " + std::to_string(kCap) + " vertices");
        return n;
    }
    std::vector<std::uint8_t> values_;
};

}  // namespace alphawidth::detail
