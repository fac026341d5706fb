#include "psdt/census.hpp"

#include "psdt/spider_formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psdt {

bool spidthrot(std::vector<int> legs, bool center_colored, int s, int p) {
    if (s < 0 || p < 0) throw std::invalid_argument("spidthrot: s and p must be >= 0");
    std::sort(legs.begin(), legs.end());  // ascending; longest at the back
    if (!legs.empty() && legs.front() < 1)
        throw std::invalid_argument("spidthrot: leg lengths must be >= 1");

    if (legs.empty() && (center_colored || s > 0)) return true;
    if (legs.empty()) return false;
    if (s == 0) return false;

    int longest = legs.back();
    if (longest > 2 * p + 1) {  // one choice shortens it by 2p+1
        legs.back() = longest - (2 * p + 1);
        return spidthrot(std::move(legs), center_colored, s - 1, p);
    }
    if (longest == 2 * p + 1) {  // finished exactly, center not reached
        legs.pop_back();
        return spidthrot(std::move(legs), center_colored, s - 1, p);
    }
    if (longest == 2 * p) {  // finished and the wave reaches the center
        legs.pop_back();
        return spidthrot(std::move(legs), true, s - 1, p);
    }
    if (longest > p) {  // covering it also sweeps short legs via the center
        legs.pop_back();
        auto kept = std::upper_bound(legs.begin(), legs.end(), 2 * p - longest);
        legs.erase(legs.begin(), kept);
        return spidthrot(std::move(legs), true, s - 1, p);
    }
    return true;  // one choice to spare: the center finishes every leg
}

int spider_throttle(const SpiderPartition& part) {
    int n = part.order();
    for (int t = 1; t <= n; ++t)
        for (int s = 1; s <= t; ++s)
            if (spidthrot(part.legs(), false, s, t - s)) return t;
    throw std::logic_error("spider_throttle: no value up to n");  // unreachable
}

SpiderEnumerator::SpiderEnumerator(int n) {
    if (n < 4) throw std::invalid_argument("SpiderEnumerator: n must be >= 4");
    parts_ = {n - 1};
}

void SpiderEnumerator::advance() {
    // reverse-lex successor: decrement the last part > 1, refill greedily
    int i = static_cast<int>(parts_.size()) - 1;
    while (i >= 0 && parts_[i] == 1) --i;
    if (i < 0) {  // all ones: sequence exhausted
        parts_.clear();
        return;
    }
    long long rest = std::accumulate(parts_.begin() + i, parts_.end(), 0LL);
    int d = parts_[i] - 1;
    parts_.resize(i);
    for (; rest >= d; rest -= d) parts_.push_back(d);
    if (rest > 0) parts_.push_back(static_cast<int>(rest));
}

std::optional<SpiderPartition> SpiderEnumerator::next() {
    while (!parts_.empty()) {
        if (parts_.size() >= 3) {
            SpiderPartition out(parts_);
            advance();
            return out;
        }
        advance();
    }
    return std::nullopt;
}

std::vector<SpiderPartition> enumerate_spiders(int n) {
    SpiderEnumerator en(n);
    std::vector<SpiderPartition> out;
    while (auto p = en.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

bool forced_within(const std::vector<int>& legs, int t) {
    for (int s = 1; s <= t; ++s)
        if (spidthrot(legs, false, s, t - s)) return true;
    return false;
}

}  // namespace

CensusRow census(int n, const CensusOptions& opts) {
    if (n < 4) throw std::invalid_argument("census: n must be >= 4");
    if (opts.extra_budget < 0) throw std::invalid_argument("census: extra_budget must be >= 0");
    if (opts.example_cap < 1) throw std::invalid_argument("census: example_cap must be >= 1");

    CensusRow row;
    row.n = n;
    row.path_value = path_throttle(n);

    SpiderEnumerator en(n);
    while (auto part = en.next()) {
        if (forced_within(part->legs(), row.path_value)) continue;
        ++row.super_count;
        row.examples.push_back(std::move(*part));
        bool pinned = false;
        for (int t = row.path_value + 1; t <= row.path_value + opts.extra_budget; ++t)
            if (forced_within(row.examples.back().legs(), t)) {
                pinned = true;
                break;
            }
        if (!pinned) row.budget_exceeded = true;
    }

    std::sort(row.examples.begin(), row.examples.end());
    if (!opts.full_examples &&
        static_cast<int>(row.examples.size()) > opts.example_cap) {
        row.examples.erase(row.examples.begin() + opts.example_cap, row.examples.end());
        row.truncated = true;
    }
    return row;
}

std::vector<CensusRow> census_range(int n_lo, int n_hi, const CensusOptions& opts) {
    if (n_lo > n_hi) throw std::invalid_argument("census_range: empty range");
    std::vector<CensusRow> rows;
    for (int n = std::max(4, n_lo); n <= n_hi; ++n) {
        CensusRow row = census(n, opts);
        if (row.super_count > 0) rows.push_back(std::move(row));
    }
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out = "n,path_throttle,super_count,examples\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.path_value) + "," +
               std::to_string(row.super_count) + ",";
        for (std::size_t i = 0; i < row.examples.size(); ++i) {
            if (i) out += "|";
            out += row.examples[i].to_string();
        }
        if (row.truncated) out += "|...";
        if (row.budget_exceeded) out += "|budget-exceeded";
        out += "\n";
    }
    return out;
}

}  // namespace psdt
