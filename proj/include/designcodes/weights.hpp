#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "designcodes/bigint.hpp"
#include "designcodes/linear_code.hpp"

namespace dcodes {

/// Default enumeration budget, in codewords.
inline const BigInt& default_budget() {
  static const BigInt b = BigInt(1) << 27;
  return b;
}

/// A coordinate permutation: coordinate j moves to position perm[j].
using Permutation = std::vector<std::size_t>;

struct ComputeOptions {
  BigInt budget = default_budget();
  /// Worker count for codeword enumeration; 0 means hardware concurrency.
  unsigned threads = 0;
  /// Optional generators of a transitive group of code automorphisms. They
  /// are verified before use and let the minimum-distance search work with a
  /// single information set.
  std::vector<Permutation> automorphisms;
  /// Weight of some known nonzero codeword, or 0. When set, the
  /// minimum-distance search starts from it and refuses up front when the
  /// work needed to certify it exceeds the budget.
  std::size_t known_upper = 0;
};

/// Exact weight distribution A_0..A_n of an [n, k] code over GF(q).
struct WeightDistribution {
  std::size_t n = 0;
  std::uint64_t q = 2;
  std::size_t k = 0;
  std::vector<BigInt> counts;

  /// Least nonzero weight with a nonzero count, or 0 for the zero code.
  std::size_t min_nonzero_weight() const;
  /// Weights i in [1, n] with A_i != 0.
  std::vector<std::size_t> support() const;
  BigInt total() const;

  std::string to_json() const;
  static WeightDistribution from_json(const std::string& text);

  bool operator==(const WeightDistribution&) const = default;
};

/// Exhaustive if q^k fits the budget, else via the dual and the MacWilliams
/// transform if q^(n-k) fits, else BudgetExceeded.
WeightDistribution weight_distribution(const LinearCode& code, const ComputeOptions& opts = {});

/// Enumerates every codeword regardless of budget.
WeightDistribution enumerate_weight_distribution(const LinearCode& code, unsigned threads = 0);

/// Weight distribution of the dual code from that of the code.
WeightDistribution macwilliams_transform(const WeightDistribution& wd);

/// Exact minimum distance. Uses the weight distribution when it fits the
/// budget and falls back to an information-set search otherwise.
std::size_t min_distance(const LinearCode& code, const ComputeOptions& opts = {});

struct DistanceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact() const { return lower == upper; }
};

/// Information-set (Brouwer-Zimmermann) search that stops as soon as the
/// lower bound reaches `stop_at` or meets the upper bound. Work is counted in
/// codewords visited and capped by opts.budget.
DistanceBounds min_distance_bounds(const LinearCode& code, std::size_t stop_at, const ComputeOptions& opts = {});

/// True when every generator maps the code to itself and together they act
/// transitively on the coordinates.
bool is_transitive_automorphism_group(const LinearCode& code, const std::vector<Permutation>& generators);

/// Sorted, deduplicated supports (as bitsets of ceil(n/64) words) of all
/// codewords of weight exactly w. Needs q^k within the budget.
std::vector<std::vector<std::uint64_t>> codeword_supports(const LinearCode& code, std::size_t w,
                                                          const ComputeOptions& opts = {});

/// q^k as a big integer.
BigInt code_size(const LinearCode& code);

}  // namespace dcodes
