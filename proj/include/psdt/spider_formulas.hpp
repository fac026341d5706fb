#pragma once

#include "psdt/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace psdt {

/* Closed forms for paths and balanced spiders, plus the continuous
 * analogues t_S / t_P used to compare a balanced spider against the path on
 * the same number of vertices. Every floor/ceil of a square root below is
 * decided in integer arithmetic. */

// Smallest t >= 1 with t(t+1) >= 2n, i.e. ceil(sqrt(2n) - 1/2). n >= 1.
int path_throttle(long long n);

// n_t = t(t+1)/2, the largest path order with throttling value t.
long long triangle_number(int t);

/* Concrete optimal initial set for P_n: b blocks of length <= 2q+1 with a
 * blue vertex centered in each. value is b plus the measured propagation
 * time and always equals path_throttle(n). */
struct PathPlan {
    long long n;
    int q;                     // floor(sqrt(n/2)), the per-block radius
    int b;                     // number of blocks, in {q, q+1, q+2}
    int value;
    std::vector<int> witness_set;
};
PathPlan path_optimal_set(long long n);

/* Rounds for one leg of length beta to finish when s of its vertices are
 * chosen blue (evenly spread); nullopt = never finishes (s = 0 and the
 * center not chosen). */
std::optional<int> leg_propagation_time(int beta, int s, bool center_chosen);

/* Continuous per-spider cost of choosing s vertices per leg:
 *   g(alpha,beta,s) = alpha*s + (beta+1-s)/(2s)        (center not chosen)
 *   h(alpha,beta,s) = 1 + alpha*s + (beta-s)/(2s+1)    (center chosen)
 * beta may be rational; g needs s >= 1, h needs s >= 0, alpha >= 3. */
Rational cost_g(int alpha, const Rational& beta, int s);
Rational cost_h(int alpha, const Rational& beta, int s);

// beta_s = 2*alpha*s^2 - (alpha+1)/2: leg length where the optimal per-leg
// choice count steps from s-1 to s. alpha >= 3, s >= 1.
Rational beta_breakpoint(int alpha, int s);

/* th_+ of the balanced spider with alpha >= 3 legs of length beta >= 1:
 * value = 1 + alpha*s_hat + t with s_hat = floor(sqrt((2b+a+1)/(4a))) and
 * t = ceil((b-s_hat)/(2*s_hat+1)). (Two legs make a path: use
 * path_throttle(2*beta+1) instead; alpha < 3 is rejected here.) */
struct BalancedSpiderPlan {
    int alpha;
    int beta;
    long long s_hat;
    long long t;
    long long value;
};
BalancedSpiderPlan balanced_spider_throttle(int alpha, int beta);

/* Continuous envelope of the balanced-spider cost at integer choice counts:
 * t_S = 1 + alpha*s_hat + (beta+1/2)/(2*s_hat+1) - 1/2, exact; and the path
 * analogue t_P = sqrt(2(alpha*beta+1)+1/4) - 1/2 (irrational, double).
 * ceil(t_S) equals balanced_spider_throttle(alpha,beta).value for integer
 * beta >= 1; beta = 0 is admitted for continuity checks. */
Rational t_s(int alpha, const Rational& beta);
double t_p(int alpha, const Rational& beta);

// Exact comparison t_S(alpha,beta) > t_P(alpha,beta), decided by squaring.
bool t_s_exceeds_t_p(int alpha, const Rational& beta);

/* Scan alpha in [3, alpha_max], beta in [1, beta_max]. violations collects
 * (alpha,beta) with ceil(t_S) > path_throttle(alpha*beta+1) -- expected
 * empty; continuous_exceedances collects the (alpha,beta) where the
 * continuous bound t_S > t_P fails, the near-miss candidates. */
struct SuperSpiderScan {
    std::vector<std::pair<int, int>> violations;
    std::vector<std::pair<int, int>> continuous_exceedances;
};
SuperSpiderScan balanced_super_spider_scan(int alpha_max, int beta_max);

}  // namespace psdt
