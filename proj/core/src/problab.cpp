#include "antimagic/problab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace antimagic {

namespace {

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::complex<double> root_power(std::int64_t k, std::int64_t p) {
  k %= p;
  if (k < 0) k += p;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

// x < sqrt(d)  <=>  x^2 < d for non-negative integers.
bool below_root(std::int64_t x, int d) { return x * x < d; }

}  // namespace

std::int64_t modulus_for(int t, int d) {
  return isqrt(static_cast<std::int64_t>(t) * t * d);
}

PairSample make_pair_sample(int t, std::vector<std::array<int, 2>> pairs) {
  if (t < 2) throw PreconditionError("t must be at least 2");
  if (pairs.empty()) throw PreconditionError("at least one pair is required");
  if (2 * pairs.size() > static_cast<std::size_t>(t)) throw PreconditionError("2d exceeds t");
  std::vector<char> seen(t + 1, 0);
  for (const auto& pr : pairs) {
    for (int a : pr) {
      if (a < 1 || a > t) throw PreconditionError("pair element outside 1..t");
      if (seen[a]) throw PreconditionError("pair elements are not distinct");
      seen[a] = 1;
    }
  }
  PairSample s;
  s.t = t;
  s.d = static_cast<int>(pairs.size());
  s.p = modulus_for(t, s.d);
  s.pairs = std::move(pairs);
  return s;
}

PairSample sample_pairs(int t, int d, std::mt19937_64& rng) {
  if (d < 1 || 2 * d > t) throw PreconditionError("need 1 <= d and 2d <= t");
  std::vector<int> rest(t);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < d; ++i) {
    const auto k = rest.size();
    std::size_t a = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, k - 2)(rng);
    if (b >= a) ++b;
    pairs.push_back({std::min(rest[a], rest[b]), std::max(rest[a], rest[b])});
    if (a < b) std::swap(a, b);
    rest[a] = rest.back();
    rest.pop_back();
    rest[b] = rest.back();
    rest.pop_back();
  }
  return make_pair_sample(t, std::move(pairs));
}

std::complex<double> character_value(const PairSample& s, std::int64_t x) {
  if (x < 0 || x >= s.p) throw PreconditionError("x must lie in 0..p-1");
  std::complex<double> prod(1.0, 0.0);
  for (const auto& [a1, a2] : s.pairs) prod *= (root_power(a1 * x, s.p) + root_power(a2 * x, s.p)) * 0.5;
  return prod;
}

double character_product(const PairSample& s, std::int64_t x) { return std::abs(character_value(s, x)); }

CharacterBoundReport check_character_bounds(const PairSample& s) {
  CharacterBoundReport rep;
  const double far_bound = 1.0 / (static_cast<double>(s.t) * s.t);
  for (std::int64_t x = 1; x < s.p; ++x) {
    const std::int64_t near_dist = std::min(x, s.p - x);
    const double mag = character_product(s, x);
    if (below_root(near_dist, s.d)) {
      const double ratio = mag / std::exp(-static_cast<double>(near_dist * near_dist));
      if (rep.worst_near_x < 0 || ratio > rep.near_ratio) {
        rep.near_ratio = ratio;
        rep.worst_near_x = x;
      }
    } else {
      const double ratio = mag / far_bound;
      if (rep.worst_far_x < 0 || ratio > rep.far_ratio) {
        rep.far_ratio = ratio;
        rep.worst_far_x = x;
      }
    }
  }
  rep.ok_near = rep.worst_near_x < 0 || rep.near_ratio <= 1.0;
  rep.ok_far = rep.worst_far_x < 0 || rep.far_ratio <= 1.0;
  return rep;
}

std::uint64_t DistributionTable::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

DistributionTable sum_distribution(const PairSample& s) {
  if (s.d > kMaxDistributionPairs) throw ResourceError("too many pairs for an exact distribution table");
  DistributionTable table;
  table.d = s.d;
  table.counts = {1};
  for (const auto& [a1, a2] : s.pairs) {
    const int lo = std::min(a1, a2);
    const int gap = std::abs(a2 - a1);
    table.min_sum += lo;
    std::vector<std::uint64_t> next(table.counts.size() + gap, 0);
    for (std::size_t i = 0; i < table.counts.size(); ++i) {
      next[i] += table.counts[i];
      next[i + gap] += table.counts[i];
    }
    table.counts = std::move(next);
  }
  return table;
}

Rational max_point_probability(const DistributionTable& table) {
  const std::uint64_t top = *std::max_element(table.counts.begin(), table.counts.end());
  const std::uint64_t den = std::uint64_t{1} << table.d;
  const std::uint64_t g = std::gcd(top, den);
  return {top / g, den / g};
}

double residue_probability(const DistributionTable& table, std::int64_t p, std::int64_t s) {
  if (p < 1) throw PreconditionError("modulus must be positive");
  std::int64_t r = s % p;
  if (r < 0) r += p;
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < table.counts.size(); ++i) {
    std::int64_t q = (table.min_sum + static_cast<std::int64_t>(i)) % p;
    if (q == r) hits += table.counts[i];
  }
  return static_cast<double>(hits) / std::ldexp(1.0, table.d);
}

double residue_probability_fourier(const PairSample& s, std::int64_t residue) {
  std::complex<double> acc(0.0, 0.0);
  for (std::int64_t x = 0; x < s.p; ++x) {
    acc += character_value(s, x) * root_power(-((residue % s.p) * x % s.p), s.p);
  }
  return acc.real() / static_cast<double>(s.p);
}

CharacterBoundSummary run_character_bound_experiment(int t, int d, int trials, std::uint64_t seed) {
  CharacterBoundSummary sum;
  sum.t = t;
  sum.d = d;
  sum.trials = trials;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const auto rep = check_character_bounds(sample_pairs(t, d, rng));
    sum.near_pass += rep.ok_near;
    sum.far_pass += rep.ok_far;
    sum.both_pass += rep.ok_near && rep.ok_far;
    sum.worst_near_ratio = std::max(sum.worst_near_ratio, rep.near_ratio);
    sum.worst_far_ratio = std::max(sum.worst_far_ratio, rep.far_ratio);
    sum.per_trial.push_back(rep);
  }
  return sum;
}

PointProbabilitySummary run_point_probability_experiment(int t, int d, int trials, std::uint64_t seed) {
  PointProbabilitySummary sum;
  sum.t = t;
  sum.d = d;
  sum.trials = trials;
  std::mt19937_64 rng(seed);
  const double scale = t * std::sqrt(static_cast<double>(d));
  for (int i = 0; i < trials; ++i) {
    const double v = max_point_probability(sum_distribution(sample_pairs(t, d, rng))).value() * scale;
    sum.per_trial_scaled.push_back(v);
    sum.worst_scaled = std::max(sum.worst_scaled, v);
  }
  return sum;
}

}  // namespace antimagic
