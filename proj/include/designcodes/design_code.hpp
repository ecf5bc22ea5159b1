#pragma once

#include <string>

#include <boost/rational.hpp>

#include "designcodes/designs.hpp"
#include "designcodes/linear_code.hpp"

namespace dcodes {

using Rational = boost::rational<BigInt>;

/// Row span of the incidence matrix over `field`, with the design's labels.
LinearCode code_of_design(const Design& d, const FieldPtr& field);

/// Which of C(D), C(D^c) contain the all-one vector.
enum class RelationCase { DHasOneOnly, DcHasOneOnly, BothHaveOne, NeitherHasOne };

std::string to_string(RelationCase c);

struct RelationVerdict {
  RelationCase case_id;
  std::size_t dim_d = 0;
  std::size_t dim_dc = 0;
  /// "equal", "C(D) contains C(Dc)", "C(Dc) contains C(D)" or "incomparable".
  std::string inclusion;
  /// Whether the observations agree with the relation predicted for case_id.
  bool consistent = false;
};

/// Sum and intersection of two codes of the same length over the same field.
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);

/// Compares C(D) and C(D^c) over `field`. In the neither case also checks that
/// their intersection is spanned by the differences g_1 - g_i of incidence rows.
RelationVerdict classify_relation(const Design& d, const FieldPtr& field);

/// For a verified t-design (t >= 2): returns whether lambda_1 is nonzero mod
/// p. When it is, the all-one vector must lie in C(D); TheoremViolation
/// otherwise. Throws NotATDesign.
bool check_all_one_criterion(const Design& d, unsigned t, const FieldPtr& field);

/// (v-1)/(k-1) + 1 for a 2-design with k < v whose code is not the full
/// space. Throws NotATDesign, BadParams (k = v or k = 1), FullSpace.
Rational dual_min_weight_bound(const Design& d, const FieldPtr& field);

}  // namespace dcodes
