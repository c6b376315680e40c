#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {

// d disjoint pairs from {1..t}; p = floor(t * sqrt(d)).
struct PairSample {
  int t = 0;
  int d = 0;
  std::int64_t p = 0;
  std::vector<std::array<int, 2>> pairs;
};

std::int64_t modulus_for(int t, int d);

// Validates distinctness and range; throws PreconditionError.
PairSample make_pair_sample(int t, std::vector<std::array<int, 2>> pairs);

// Sequential scheme: pick a uniform unordered pair from what is left, remove it, repeat.
PairSample sample_pairs(int t, int d, std::mt19937_64& rng);

// T(x) as a complex product; 0 <= x < p.
std::complex<double> character_value(const PairSample& s, std::int64_t x);
double character_product(const PairSample& s, std::int64_t x);

struct CharacterBoundReport {
  bool ok_near = true;
  bool ok_far = true;
  // Largest |T(x)| / bound in each region, with its x; -1 when the region is empty.
  std::int64_t worst_near_x = -1;
  std::int64_t worst_far_x = -1;
  double near_ratio = 0.0;
  double far_ratio = 0.0;
};

// Near region: 0 < x < sqrt(d) or p - sqrt(d) < x < p, bound exp(-min(x, p-x)^2).
// Far region: the remaining x in 1..p-1, bound 1/t^2.
CharacterBoundReport check_character_bounds(const PairSample& s);

// Exact distribution of Q = sum of one uniformly chosen element per pair.
struct DistributionTable {
  int d = 0;
  std::int64_t min_sum = 0;
  std::vector<std::uint64_t> counts;  // counts[i] is the number of choices with Q = min_sum + i

  std::int64_t max_sum() const { return min_sum + static_cast<std::int64_t>(counts.size()) - 1; }
  std::uint64_t total() const;
};

constexpr int kMaxDistributionPairs = 30;

// Throws ResourceError when d > kMaxDistributionPairs.
DistributionTable sum_distribution(const PairSample& s);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational max_point_probability(const DistributionTable& table);

// Pr[Q = S mod p] from the exact table, and from the character sum (1/p) sum_x T(x) w^{-Sx}.
double residue_probability(const DistributionTable& table, std::int64_t p, std::int64_t s);
double residue_probability_fourier(const PairSample& s, std::int64_t residue);

struct CharacterBoundSummary {
  int t = 0, d = 0, trials = 0;
  int near_pass = 0, far_pass = 0, both_pass = 0;
  double worst_near_ratio = 0.0, worst_far_ratio = 0.0;
  std::vector<CharacterBoundReport> per_trial;
};

CharacterBoundSummary run_character_bound_experiment(int t, int d, int trials, std::uint64_t seed);

struct PointProbabilitySummary {
  int t = 0, d = 0, trials = 0;
  double worst_scaled = 0.0;              // max over samples of max point probability * t * sqrt(d)
  std::vector<double> per_trial_scaled;
};

PointProbabilitySummary run_point_probability_experiment(int t, int d, int trials, std::uint64_t seed);

}  // namespace antimagic
