#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "designcodes/bigint.hpp"
#include "designcodes/linear_code.hpp"
#include "designcodes/matrix.hpp"
#include "designcodes/weights.hpp"

namespace dcodes {

using Block = std::vector<std::uint32_t>;

/// A simple incidence structure on points {0..v-1} whose blocks all have the
/// same size k. Blocks are sorted and deduplicated, and kept in lexicographic
/// order.
class Design {
 public:
  /// Normalizes and validates the blocks: every point must be < v and every
  /// block must have the same size. Throws EmptyInput for no blocks and
  /// BadParams otherwise.
  static Design make(std::size_t v, std::vector<Block> blocks, std::vector<std::string> labels = {});

  std::size_t v() const noexcept { return v_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t b() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool operator==(const Design& o) const { return v_ == o.v_ && blocks_ == o.blocks_; }

 private:
  Design(std::size_t v, std::size_t k, std::vector<Block> blocks, std::vector<std::string> labels)
      : v_(v), k_(k), blocks_(std::move(blocks)), labels_(std::move(labels)) {}

  std::size_t v_;
  std::size_t k_;
  std::vector<Block> blocks_;
  std::vector<std::string> labels_;
};

struct DesignParams {
  unsigned t = 0;
  std::size_t v = 0;
  std::size_t k = 0;
  BigInt lambda = 0;
  std::size_t b = 0;
  BigInt lambda1 = 0;
};

/// Design formed by the distinct supports of the weight-w codewords.
/// Throws NoSuchWeight when there are none, BudgetExceeded when the code is
/// too large to enumerate.
Design support_design(const LinearCode& code, std::size_t w, const ComputeOptions& opts = {});

/// Default cap on C(v, t) * b for the t-design oracle.
inline BigInt default_design_cap() { return BigInt(10000000000ULL); }

/// Counts, for every t-subset of points, the blocks containing it; returns the
/// common count, or nothing when counts differ. Throws Infeasible when
/// C(v, t) * b exceeds `cap`, OutOfRange unless 1 <= t <= k.
std::optional<BigInt> is_t_design(const Design& d, unsigned t, const BigInt& cap = default_design_cap());

/// Replaces every block by its complement. With `check_t`, the input is first
/// verified as a t-design and the complement's index is checked against
/// lambda * C(v-t, k) / C(v-t, k-t); a mismatch raises TheoremViolation.
Design complement_design(const Design& d, std::optional<unsigned> check_t = std::nullopt);

/// lambda^c of the complementary design.
BigInt complement_lambda(std::size_t v, std::size_t k, unsigned t, const BigInt& lambda);

/// lambda_1 = lambda * C(v-1, t-1) / C(k-1, t-1).
BigInt lambda_one(std::size_t v, std::size_t k, unsigned t, const BigInt& lambda);

/// Parameters of a design verified as a t-design; throws NotATDesign.
DesignParams design_params(const Design& d, unsigned t, const BigInt& cap = default_design_cap());

/// b x v 0/1 matrix, rows in block order.
Matrix incidence_matrix(const Design& d, const FieldPtr& field);

/// Text form: "v b k", then one line of k sorted point indices per block.
std::string design_to_text(const Design& d);
Design design_from_text(const std::string& text);

/// {"v","b","k","t_checked","lambda"} with lambda null when not a t-design.
std::string design_summary_json(const Design& d, unsigned t_checked, const std::optional<BigInt>& lambda);

}  // namespace dcodes
