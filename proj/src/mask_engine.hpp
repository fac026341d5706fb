#pragma once

#include "psdt/graph.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace psdt::detail {

/* Bitmask propagation engine for the exhaustive searches (n <= 62).
 * Semantics match the general engine in forcing.cpp exactly; the searches
 * only need the time, not the schedule. */
class MaskEngine {
public:
    static constexpr int kInfinite = -1;
    static constexpr int kOverLimit = -2;

    explicit MaskEngine(const Graph& g) : n_(g.vertex_count()) {
        full_ = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
        adj_.assign(n_, 0);
        for (auto [u, v] : g.edges()) {
            adj_[u] |= 1ull << v;
            adj_[v] |= 1ull << u;
        }
    }

    int vertex_count() const { return n_; }

    // Forces valid in one time-step, as a mask.
    std::uint64_t step(std::uint64_t blue) const {
        std::uint64_t forced = 0;
        std::uint64_t rest = full_ & ~blue;
        while (rest) {
            std::uint64_t comp = grow_component(rest & (~rest + 1), rest);
            rest &= ~comp;
            std::uint64_t b = blue;
            while (b) {
                int v = std::countr_zero(b);
                b &= b - 1;
                std::uint64_t m = adj_[v] & comp;
                if (m != 0 && (m & (m - 1)) == 0) forced |= m;
            }
        }
        return forced;
    }

    /* Propagation time of blue, or kInfinite. Stops early and returns
     * kOverLimit once the time is known to exceed `limit`. */
    int time(std::uint64_t blue, int limit = std::numeric_limits<int>::max()) const {
        int t = 0;
        while (blue != full_) {
            if (t >= limit) return kOverLimit;
            std::uint64_t f = step(blue);
            if (!f) return kInfinite;
            blue |= f;
            ++t;
        }
        return t;
    }

    bool forces_all(std::uint64_t blue) const { return time(blue) >= 0; }

private:
    std::uint64_t grow_component(std::uint64_t seed, std::uint64_t within) const {
        std::uint64_t comp = seed;
        std::uint64_t frontier = seed;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj_[v];
            }
            frontier = next & within & ~comp;
            comp |= frontier;
        }
        return comp;
    }

    int n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> adj_;
};

}  // namespace psdt::detail
