#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "designcodes/designs.hpp"
#include "designcodes/linear_code.hpp"
#include "designcodes/weights.hpp"

namespace dcodes {

using Json = nlohmann::ordered_json;

/// Outcome of the Assmus-Mattson test on a code. `s_count` is the number of
/// nonzero dual weights in [1, v - t].
struct AMReport {
  unsigned t = 0;
  std::size_t d = 0;
  std::size_t d_dual = 0;
  std::size_t w_big = 0;
  std::size_t w_big_dual = 0;
  std::size_t s_count = 0;
  bool holds = false;
  std::vector<std::size_t> design_weights;
  std::vector<std::size_t> design_weights_dual;
  /// Claimed weights whose supports the brute-force oracle confirmed, and
  /// those it could not check within its caps.
  std::vector<std::size_t> confirmed;
  std::vector<std::size_t> confirmed_dual;
  std::vector<std::size_t> unchecked;
  std::vector<std::size_t> unchecked_dual;

  Json to_json() const;
};

/// Throws TNotLessThanD unless t < d, BudgetExceeded when either weight
/// distribution is out of reach. A claimed design the oracle refutes raises
/// TheoremViolation.
AMReport assmus_mattson(const LinearCode& code, unsigned t, const ComputeOptions& opts = {},
                        const BigInt& design_cap = default_design_cap());

/// Largest w <= v with w - floor((w + q - 2) / (q - 1)) < d.
std::size_t am_weight_bound(std::size_t v, std::uint64_t q, std::size_t d);

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct Report {
  std::string claim_id;
  Params params;
  Json expected = Json::object();
  Json computed = Json::object();
  bool pass = false;
  std::string citation;
  double runtime_ms = 0;
  /// Set when the computation was refused, e.g. "budget_exceeded".
  std::string error;

  Json to_json() const;
};

/// Lower and upper bounds on the minimum distance with the route used.
struct Distance {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string method;
  bool exact() const { return lower == upper; }
};

/// Certified bounds on d. Uses the weight distribution when it fits the
/// budget; otherwise an information-set search, with `automorphisms` when they
/// verify as a transitive group, seeded by the lightest of `candidates` and of
/// simple combinations of them. Stops once the lower bound reaches `stop_at`.
Distance certify_distance(const LinearCode& code, std::size_t stop_at, const ComputeOptions& opts,
                          const std::vector<Permutation>& automorphisms = {},
                          const std::vector<std::vector<Elem>>& candidates = {});

std::vector<std::string> claim_ids();

/// Parameter names a claim takes, e.g. {"q", "m"}.
std::vector<std::string> claim_parameters(const std::string& claim_id);

/// Every parameter point of a claim with q^m <= 729, and m <= 7 when q = 2.
std::vector<Params> claim_grid(const std::string& claim_id);

/// Builds the objects of the claim, computes, and compares with the closed
/// form. Refusals (budget, size caps) are reported with pass = false and
/// `error` set rather than thrown. Throws BadParams for unknown claims or
/// parameters.
Report verify_theorem(const std::string& claim_id, const Params& params, const ComputeOptions& opts = {});

/// Recomputes both columns of each row of table 1 or 2.
std::vector<Report> reproduce_table(int which, const ComputeOptions& opts = {});

/// Plain-text table mirroring the layout of the original tables.
std::string format_table(int which, const std::vector<Report>& rows);

std::vector<std::pair<std::uint64_t, std::uint32_t>> default_conjecture_grid();

/// C1: d(C_p(D)) = 2q^(m-2); C2: d(C_p(D)^perp) = q + 1, for the simplex
/// design D. `pass` is the verdict; `error` is set if the run did not complete.
std::vector<Report> check_conjecture(const std::string& id,
                                     const std::vector<std::pair<std::uint64_t, std::uint32_t>>& grid,
                                     const ComputeOptions& opts = {});

/// Parameters of C_p(D_i(R_q(l, m))) for every weight i of R_q(l, m), or only
/// for `weight` when nonzero.
std::vector<Report> sweep(std::uint64_t q, std::uint64_t l, std::uint32_t m, std::size_t weight = 0,
                          const ComputeOptions& opts = {});

}  // namespace dcodes
