#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "designcodes/designs.hpp"
#include "designcodes/finite_field.hpp"
#include "designcodes/linear_code.hpp"
#include "designcodes/weights.hpp"

namespace dcodes {

/// GF(q) inside GF(q^m), with the primitive element alpha of GF(q^m).
struct FieldTower {
  FieldPtr sub;
  FieldPtr big;
  FieldEmbedding embedding;
  std::uint32_t m;

  Elem alpha() const { return big->generator(); }
};

FieldTower field_tower(std::uint64_t q, std::uint32_t m);

/// (q^m - 1) / (q - 1).
std::size_t projective_length(std::uint64_t q, std::uint32_t m);

/// "a^0", ..., "a^(v-1)": the projective points as powers of alpha.
std::vector<std::string> projective_labels(std::uint64_t q, std::uint32_t m);
/// "a^0", ..., "a^(q^m-2)", "0": the field elements, zero last.
std::vector<std::string> affine_labels(std::uint64_t q, std::uint32_t m);

/// alpha^i -> alpha^(i+1) on projective points: a cyclic shift. It preserves
/// codes defined through normalized coordinates or point sets, but not
/// simplex(q, m) for q > 2, whose coordinates are unnormalized.
Permutation projective_rotation(std::uint64_t q, std::uint32_t m);
/// x -> alpha x and x -> x + 1 on GF(q^m) in the affine labelling; together
/// they generate a transitive group.
std::vector<Permutation> affine_generators(std::uint64_t q, std::uint32_t m);
/// alpha^i -> alpha^(i+1) on GF(q^m)^*: the cyclic shift of length q^m - 1.
Permutation punctured_rotation(std::uint64_t q, std::uint32_t m);

/// (Tr(a alpha^i))_{i<v}, a in GF(q^m): the [(q^m-1)/(q-1), m, q^(m-1)] code.
LinearCode simplex(std::uint64_t q, std::uint32_t m);

/// Length q^m - 1 cyclic code over GF(q) whose zeros are alpha^j for j in
/// `zeros` (which must be closed under multiplication by q modulo q^m - 1).
LinearCode cyclic_code(std::uint64_t q, std::uint32_t m, const std::vector<std::uint64_t>& zeros);

/// Dimension of R_q(l, m) from the alternating double sum.
BigInt grm_dimension(std::uint64_t q, std::uint64_t l, std::uint32_t m);

/// Punctured GRM code R_q(l, m)^*, zeros alpha^j with wt_q(j) < (q-1)m - l.
LinearCode grm_punctured(std::uint64_t q, std::uint64_t l, std::uint32_t m);
/// R_q(l, m), the extension of grm_punctured.
LinearCode grm(std::uint64_t q, std::uint64_t l, std::uint32_t m);

/// |{0 <= i <= q^m - 1 : wt_q(i) <= m(q-1) - t}|.
std::uint64_t mt_dimension(std::uint64_t q, std::uint32_t m, std::uint64_t t);
/// Cyclic code M^t with defining set {1 <= i <= q^m - 1 : wt_q(i) < t}, or
/// its extension.
LinearCode mt_code(std::uint64_t q, std::uint32_t m, std::uint64_t t, bool extended);

/// Exponent vectors (i_0..i_{m-1}) with sum divisible by q-1 and
/// 0 < sum <= r(q-1), each entry at most q-1 (higher powers give the same
/// function on GF(q)).
std::vector<std::vector<std::uint32_t>> prm_monomials(std::uint64_t q, std::uint64_t r, std::uint32_t m);
/// The evaluations of those monomials (and of the constant 1 first, when
/// `constants`) at the projective points, one row each.
std::vector<std::vector<Elem>> prm_evaluations(std::uint64_t q, std::uint64_t r, std::uint32_t m, bool constants);
/// Evaluation code of PP(r, m-1, q) plus constants at the projective points.
LinearCode prm(std::uint64_t q, std::uint64_t r, std::uint32_t m);
/// Same without the constants.
LinearCode prm_star(std::uint64_t q, std::uint64_t r, std::uint32_t m);

/// Points and (d+1)-dimensional subspaces of GF(q)^m, i.e. projective
/// d-flats of PG(m-1, q). Points are labelled as in projective_labels.
Design pg_design(std::uint64_t q, std::uint32_t m, std::uint32_t d);
/// Points and d-flats of AG(m, q), labelled as in affine_labels.
Design ag_design(std::uint64_t q, std::uint32_t m, std::uint32_t d);

struct DmtCode {
  LinearCode code;
  /// The exponent e in u x^e that produced the expected weight enumerator.
  std::uint64_t exponent;
  /// Whether that was 1 + 2^(m-1), the exponent as printed.
  bool printed_exponent;
};

/// The binary code {(f_(a,b,h)(x))_x} on GF(2^(2m)) with
/// f = Tr_m(a Tr_{2m/m}(u x^e)) + Tr_{2m}(b x) + h. Tries e = 1 + 2^(m-1)
/// and then e = 2^m + 1, and throws WeightEnumeratorMismatch when neither
/// gives the four-term enumerator.
DmtCode dmt_example_code(std::uint32_t m);

/// The expected weight distribution of dmt_example_code(m).
std::vector<BigInt> dmt_expected_counts(std::uint32_t m);

}  // namespace dcodes
