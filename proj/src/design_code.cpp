#include "designcodes/design_code.hpp"

namespace dcodes {

namespace {

std::vector<std::vector<Elem>> rows_of(const LinearCode& c) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < c.k(); ++i) out.push_back(c.generator().row_vector(i));
  return out;
}

LinearCode span_or_zero(const FieldPtr& f, const std::vector<std::vector<Elem>>& rows, std::size_t n) {
  return rows.empty() ? LinearCode::zero(f, n) : LinearCode::from_generators(f, rows);
}

}  // namespace

LinearCode code_of_design(const Design& d, const FieldPtr& field) {
  auto c = LinearCode::from_matrix(incidence_matrix(d, field));
  if (!d.labels().empty()) c = c.with_labels(d.labels());
  return c;
}

std::string to_string(RelationCase c) {
  switch (c) {
    case RelationCase::DHasOneOnly: return "D_has_1_only";
    case RelationCase::DcHasOneOnly: return "Dc_has_1_only";
    case RelationCase::BothHaveOne: return "both_have_1";
    case RelationCase::NeitherHasOne: return "neither_has_1";
  }
  return "?";
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw BadParams("codes have different lengths");
  auto rows = rows_of(a);
  for (auto& r : rows_of(b)) rows.push_back(std::move(r));
  return span_or_zero(a.field(), rows, a.n());
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  return code_sum(a.dual(), b.dual()).dual();
}

RelationVerdict classify_relation(const Design& d, const FieldPtr& field) {
  const auto cd = code_of_design(d, field);
  const auto dc = complement_design(d);
  const auto cdc = code_of_design(dc, field);
  const bool one_d = cd.all_one_in(), one_dc = cdc.all_one_in();
  const bool d_in_dc = cd.is_subcode_of(cdc), dc_in_d = cdc.is_subcode_of(cd);

  RelationVerdict v;
  v.dim_d = cd.k();
  v.dim_dc = cdc.k();
  v.inclusion = d_in_dc && dc_in_d ? "equal"
                : dc_in_d          ? "C(D) contains C(Dc)"
                : d_in_dc          ? "C(Dc) contains C(D)"
                                   : "incomparable";
  if (one_d && !one_dc) {
    v.case_id = RelationCase::DHasOneOnly;
    v.consistent = dc_in_d && v.dim_d == v.dim_dc + 1;
  } else if (one_dc && !one_d) {
    v.case_id = RelationCase::DcHasOneOnly;
    v.consistent = d_in_dc && v.dim_dc == v.dim_d + 1;
  } else if (one_d && one_dc) {
    v.case_id = RelationCase::BothHaveOne;
    v.consistent = d_in_dc && dc_in_d;
  } else {
    v.case_id = RelationCase::NeitherHasOne;
    // sum b_i (1 - g_i) with sum b_i = 0 is spanned by (1 - g_i) - (1 - g_1) = g_1 - g_i.
    const Matrix inc = incidence_matrix(d, field);
    const Field& f = *field;
    std::vector<std::vector<Elem>> diffs;
    const auto g1 = inc.row_vector(0);
    for (std::size_t i = 1; i < inc.rows(); ++i) {
      auto gi = inc.row_vector(i);
      for (std::size_t j = 0; j < gi.size(); ++j) gi[j] = f.sub(g1[j], gi[j]);
      diffs.push_back(std::move(gi));
    }
    const auto rhs = span_or_zero(field, diffs, d.v());
    v.consistent = !d_in_dc && !dc_in_d && code_intersection(cd, cdc) == rhs;
  }
  return v;
}

bool check_all_one_criterion(const Design& d, unsigned t, const FieldPtr& field) {
  if (t < 2) throw BadParams("the all-one criterion needs t >= 2");
  const auto params = design_params(d, t);
  const bool nonzero = params.lambda1 % field->p() != 0;
  if (nonzero && !code_of_design(d, field).all_one_in())
    throw TheoremViolation("lambda_1 is nonzero mod p but the all-one vector is not in the code");
  return nonzero;
}

Rational dual_min_weight_bound(const Design& d, const FieldPtr& field) {
  if (d.k() >= d.v() || d.k() < 2) throw BadParams("the dual bound needs 2 <= k < v");
  design_params(d, 2);
  if (code_of_design(d, field).k() == d.v()) throw FullSpace();
  return Rational(BigInt(d.v() - 1), BigInt(d.k() - 1)) + 1;
}

}  // namespace dcodes
