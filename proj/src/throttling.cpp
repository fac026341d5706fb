#include "psdt/throttling.hpp"

#include "mask_engine.hpp"
#include "psdt/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace psdt {

namespace {

constexpr long long kNoBest = std::numeric_limits<long long>::max();

/* Exhaustive minimization of cost(B) + pt(B) over subsets B containing
 * opts.required. Cardinality classes run in increasing order; a class k is
 * skipped once no member can still improve (cost >= k since weights are
 * >= 1, and pt >= 1 unless B is the whole vertex set). Within a class the
 * enumeration is lexicographic on the sorted vertex tuple, so ties keep the
 * earliest witness. */
template <typename CostFn>
ThrottleResult search_min(const Graph& g, const SearchOptions& opts, long long min_unit_cost,
                          CostFn cost_of) {
    detail::effective_cap(g, opts);
    int n = g.vertex_count();
    if (n == 0) return {0, {}, 0};
    detail::MaskEngine engine(g);

    std::uint64_t required = 0;
    for (int v : opts.required) {
        if (v < 0 || v >= n) throw std::invalid_argument("required vertex out of range");
        required |= 1ull << v;
    }
    int required_count = std::popcount(required);

    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (!(required & (1ull << v))) free_vertices.push_back(v);
    int m = static_cast<int>(free_vertices.size());

    long long best = kNoBest;
    ThrottleResult result;

    auto consider = [&](std::uint64_t mask, int k) {
        long long cost = cost_of(mask);
        long long pt_floor = (k == n) ? 0 : 1;
        if (best != kNoBest && cost + pt_floor >= best) return;
        int limit = best == kNoBest ? std::numeric_limits<int>::max()
                                    : static_cast<int>(std::min<long long>(
                                          best - cost - 1, std::numeric_limits<int>::max()));
        int t = engine.time(mask, limit);
        if (t < 0) return;  // infinite or already over the bound
        long long value = cost + t;
        if (value < best) {
            best = value;
            result.value = value;
            result.propagation_time = t;
            result.witness.clear();
            for (int v = 0; v < n; ++v)
                if (mask & (1ull << v)) result.witness.push_back(v);
        }
    };

    std::vector<int> idx;
    for (int extra = (required_count == 0 ? 1 : 0); extra <= m; ++extra) {
        int k = required_count + extra;
        long long class_floor = static_cast<long long>(k) * min_unit_cost + (k == n ? 0 : 1);
        if (best != kNoBest && class_floor >= best) continue;
        idx.resize(extra);
        for (int i = 0; i < extra; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = required;
            for (int i : idx) mask |= 1ull << free_vertices[i];
            consider(mask, k);
            int i = extra - 1;
            while (i >= 0 && idx[i] == m - extra + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < extra; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    if (best == kNoBest)
        throw std::logic_error("throttling search found no forcing set");  // cannot happen
    return result;
}

}  // namespace

std::optional<long long> th_plus_of_set(const Graph& g, const std::vector<int>& blue) {
    auto t = propagation_time(g, blue);
    if (!t) return std::nullopt;
    auto member = detail::to_membership(g, blue);
    long long size = std::count(member.begin(), member.end(), true);
    return size + *t;
}

std::optional<long long> th_plus_weighted_of_set(const Graph& g, const WeightMap& w,
                                                 const std::vector<int>& blue) {
    if (w.size() != g.vertex_count())
        throw std::invalid_argument("th_plus_weighted_of_set: weight domain mismatch");
    auto t = propagation_time(g, blue);
    if (!t) return std::nullopt;
    auto member = detail::to_membership(g, blue);
    long long cost = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (member[v]) cost += w.of(v);
    return cost + *t;
}

ThrottleResult th_plus(const Graph& g, const SearchOptions& opts) {
    return th_plus_weighted(g, WeightMap::ones(g.vertex_count()), opts);
}

ThrottleResult th_plus_weighted(const Graph& g, const WeightMap& w, const SearchOptions& opts) {
    if (w.size() != g.vertex_count())
        throw std::invalid_argument("th_plus_weighted: weight domain mismatch");
    long long min_w = 1;
    if (!w.values().empty())
        min_w = *std::min_element(w.values().begin(), w.values().end());
    return search_min(g, opts, min_w, [&](std::uint64_t mask) {
        long long cost = 0;
        std::uint64_t b = mask;
        while (b) {
            cost += w.of(std::countr_zero(b));
            b &= b - 1;
        }
        return cost;
    });
}

ThrottleResult th_plus_omega(const Graph& g, long long omega, const SearchOptions& opts) {
    if (omega < 1) throw std::invalid_argument("th_plus_omega: omega must be >= 1");
    return search_min(g, opts, omega, [&](std::uint64_t mask) {
        return omega * static_cast<long long>(std::popcount(mask));
    });
}

}  // namespace psdt
