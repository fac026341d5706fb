#include "psdt/forcing.hpp"

#include "mask_engine.hpp"
#include "psdt/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace psdt {

namespace detail {

std::vector<bool> to_membership(const Graph& g, const std::vector<int>& blue) {
    std::vector<bool> member(g.vertex_count(), false);
    for (int v : blue) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("blue set: vertex out of range");
        member[v] = true;
    }
    return member;
}

int effective_cap(const Graph& g, const SearchOptions& opts) {
    int cap = opts.cap;
    if (cap > 31 && !opts.cap_override)
        throw std::invalid_argument("cap above 31 requires the override flag");
    if (cap > 62) throw std::invalid_argument("cap above 62 is not supported");
    if (g.vertex_count() > cap)
        throw BudgetError("graph has " + std::to_string(g.vertex_count()) +
                          " vertices, over the brute-force cap of " + std::to_string(cap));
    return cap;
}

}  // namespace detail

std::vector<Force> step_ccr_zplus(const Graph& g, const std::vector<bool>& blue) {
    int n = g.vertex_count();
    if (static_cast<int>(blue.size()) != n)
        throw std::invalid_argument("step_ccr_zplus: blue size mismatch");

    // White components of g - blue.
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int s = 0; s < n; ++s) {
        if (blue[s] || comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = comp_count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!blue[w] && comp[w] < 0) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    // v forces w when w is v's only white neighbor within w's component.
    std::vector<int> forcer_of(n, -1);
    std::vector<int> count_in(comp_count);
    std::vector<int> single_in(comp_count);
    std::vector<int> touched;
    for (int v = 0; v < n; ++v) {
        if (!blue[v]) continue;
        touched.clear();
        for (int w : g.neighbors(v)) {
            if (blue[w]) continue;
            int c = comp[w];
            if (count_in[c] == 0) touched.push_back(c);
            ++count_in[c];
            single_in[c] = w;
        }
        for (int c : touched) {
            if (count_in[c] == 1) {
                int w = single_in[c];
                if (forcer_of[w] < 0) forcer_of[w] = v;
            }
            count_in[c] = 0;
        }
    }

    std::vector<Force> forces;
    for (int w = 0; w < n; ++w)
        if (forcer_of[w] >= 0) forces.push_back({forcer_of[w], w});
    return forces;
}

ForcingSchedule propagate(const Graph& g, const std::vector<int>& blue) {
    auto member = detail::to_membership(g, blue);
    int blue_count = static_cast<int>(std::count(member.begin(), member.end(), true));

    ForcingSchedule sched;
    while (blue_count < g.vertex_count()) {
        auto forces = step_ccr_zplus(g, member);
        if (forces.empty()) return sched;  // stalled: total_time stays empty
        for (const auto& f : forces) {
            member[f.forced] = true;
            ++blue_count;
        }
        sched.rounds.push_back(std::move(forces));
    }
    sched.total_time = static_cast<int>(sched.rounds.size());
    return sched;
}

std::optional<int> propagation_time(const Graph& g, const std::vector<int>& blue) {
    return propagate(g, blue).total_time;
}

bool is_psd_forcing_set(const Graph& g, const std::vector<int>& blue) {
    return propagation_time(g, blue).has_value();
}

int z_plus(const Graph& g, const SearchOptions& opts) {
    detail::effective_cap(g, opts);
    int n = g.vertex_count();
    if (n == 0) return 0;
    detail::MaskEngine engine(g);

    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ull << i;
            if (engine.forces_all(mask)) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n;  // unreachable: the full vertex set always forces
}

}  // namespace psdt
