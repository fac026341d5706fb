#include "psdt/spider_formulas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psdt {

int path_throttle(long long n) {
    if (n < 1) throw std::invalid_argument("path_throttle: n must be >= 1");
    // smallest t >= 1 with t(t+1) >= 2n; equals ceil(sqrt(2n) - 1/2)
    long long t = isqrt_floor(2 * n);
    while (t > 1 && (t - 1) * t >= 2 * n) --t;
    while (t * (t + 1) < 2 * n) ++t;
    return static_cast<int>(t);
}

long long triangle_number(int t) {
    if (t < 0) throw std::invalid_argument("triangle_number: t must be >= 0");
    return static_cast<long long>(t) * (t + 1) / 2;
}

PathPlan path_optimal_set(long long n) {
    if (n < 1) throw std::invalid_argument("path_optimal_set: n must be >= 1");
    if (n > 100'000'000) throw std::invalid_argument("path_optimal_set: n too large");
    long long q = 0;
    while (2 * (q + 1) * (q + 1) <= n) ++q;

    const long long block = 2 * q + 1;
    PathPlan plan;
    plan.n = n;
    plan.q = static_cast<int>(q);
    plan.b = static_cast<int>(ceil_div(n, block));
    for (long long start = 0; start < n; start += block) {
        long long len = std::min(block, n - start);
        plan.witness_set.push_back(static_cast<int>(start + (len - 1) / 2));
    }

    // pt on a path is the largest distance to the nearest blue vertex
    long long pt = 0;
    std::size_t j = 0;
    for (long long v = 0; v < n; ++v) {
        while (j + 1 < plan.witness_set.size() &&
               std::llabs(plan.witness_set[j + 1] - v) <= std::llabs(plan.witness_set[j] - v))
            ++j;
        pt = std::max(pt, std::llabs(plan.witness_set[j] - v));
    }
    plan.value = static_cast<int>(plan.b + pt);
    if (plan.value != path_throttle(n))
        throw std::logic_error("path_optimal_set: plan does not meet the closed form");
    return plan;
}

std::optional<int> leg_propagation_time(int beta, int s, bool center_chosen) {
    if (beta < 0) throw std::invalid_argument("leg_propagation_time: beta must be >= 0");
    if (s < 0) throw std::invalid_argument("leg_propagation_time: s must be >= 0");
    if (s == 0 && !center_chosen) return std::nullopt;  // nothing ever forces
    long long t = center_chosen ? ceil_div(beta - s, 2LL * s + 1)
                                : ceil_div(beta + 1LL - s, 2LL * s);
    return static_cast<int>(std::max(0LL, t));
}

Rational cost_g(int alpha, const Rational& beta, int s) {
    if (alpha < 3) throw std::invalid_argument("cost_g: alpha must be >= 3");
    if (s < 1) throw std::invalid_argument("cost_g: s must be >= 1");
    return Rational(static_cast<long long>(alpha) * s) +
           (beta + Rational(1 - static_cast<long long>(s))) / Rational(2LL * s);
}

Rational cost_h(int alpha, const Rational& beta, int s) {
    if (alpha < 3) throw std::invalid_argument("cost_h: alpha must be >= 3");
    if (s < 0) throw std::invalid_argument("cost_h: s must be >= 0");
    return Rational(1 + static_cast<long long>(alpha) * s) +
           (beta - Rational(s)) / Rational(2LL * s + 1);
}

Rational beta_breakpoint(int alpha, int s) {
    if (alpha < 3) throw std::invalid_argument("beta_breakpoint: alpha must be >= 3");
    if (s < 1) throw std::invalid_argument("beta_breakpoint: s must be >= 1");
    return Rational(4LL * alpha * s * s - alpha - 1, 2);
}

BalancedSpiderPlan balanced_spider_throttle(int alpha, int beta) {
    if (alpha < 3)
        throw std::invalid_argument("balanced_spider_throttle: alpha must be >= 3 (two legs form a path)");
    if (beta < 1) throw std::invalid_argument("balanced_spider_throttle: beta must be >= 1");

    // s_hat = floor(sqrt((2b+a+1)/(4a))), decided by 4a s^2 <= 2b+a+1
    const long long bound = 2LL * beta + alpha + 1;
    long long s = isqrt_floor(bound / (4LL * alpha));
    while (4LL * alpha * (s + 1) * (s + 1) <= bound) ++s;
    while (s > 0 && 4LL * alpha * s * s > bound) --s;

    BalancedSpiderPlan plan;
    plan.alpha = alpha;
    plan.beta = beta;
    plan.s_hat = s;
    plan.t = ceil_div(beta - s, 2 * s + 1);
    plan.value = 1 + alpha * s + plan.t;
    return plan;
}

Rational t_s(int alpha, const Rational& beta) {
    if (alpha < 3) throw std::invalid_argument("t_s: alpha must be >= 3");
    if (beta < Rational(0)) throw std::invalid_argument("t_s: beta must be >= 0");
    long long s = floor_sqrt_rational((2 * beta + Rational(alpha + 1)) / Rational(4LL * alpha));
    return Rational(1 + alpha * s) + (beta + Rational(1, 2)) / Rational(2 * s + 1) - Rational(1, 2);
}

double t_p(int alpha, const Rational& beta) {
    if (alpha < 3) throw std::invalid_argument("t_p: alpha must be >= 3");
    if (beta < Rational(0)) throw std::invalid_argument("t_p: beta must be >= 0");
    Rational under = 2 * (Rational(alpha) * beta + 1) + Rational(1, 4);
    return std::sqrt(to_double(under)) - 0.5;
}

bool t_s_exceeds_t_p(int alpha, const Rational& beta) {
    // t_S > t_P  <=>  (t_S + 1/2)^2 > 2(alpha*beta+1) + 1/4, both sides exact
    Rational under = 2 * (Rational(alpha) * beta + 1) + Rational(1, 4);
    return exceeds_sqrt(t_s(alpha, beta) + Rational(1, 2), under);
}

SuperSpiderScan balanced_super_spider_scan(int alpha_max, int beta_max) {
    if (alpha_max < 3 || beta_max < 1)
        throw std::invalid_argument("balanced_super_spider_scan: bounds must be >= 3, >= 1");
    SuperSpiderScan scan;
    for (int a = 3; a <= alpha_max; ++a)
        for (int b = 1; b <= beta_max; ++b) {
            Rational ts = t_s(a, Rational(b));
            if (ceil_of(ts) > path_throttle(static_cast<long long>(a) * b + 1))
                scan.violations.emplace_back(a, b);
            if (t_s_exceeds_t_p(a, Rational(b)))
                scan.continuous_exceedances.emplace_back(a, b);
        }
    return scan;
}

}  // namespace psdt
