#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "designcodes/finite_field.hpp"
#include "designcodes/matrix.hpp"

namespace dcodes {

/// A linear [n, k] code over GF(q), held as the canonical reduced row-echelon
/// generator matrix. Two codes are equal iff their fields, lengths and RREF
/// generators agree.
class LinearCode {
 public:
  /// Span of the given rows. Throws EmptyInput for an empty list and
  /// RaggedRows when lengths differ.
  static LinearCode from_generators(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
  static LinearCode from_matrix(Matrix m);
  static LinearCode zero(FieldPtr field, std::size_t n);
  static LinearCode full(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return gen_.field(); }
  std::size_t n() const noexcept { return gen_.cols(); }
  std::size_t k() const noexcept { return gen_.rows(); }
  const Matrix& generator() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Optional human-readable point labels, one per coordinate.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  LinearCode with_labels(std::vector<std::string> labels) const;

  LinearCode dual() const;
  /// Appends an overall parity coordinate so every codeword sums to zero.
  LinearCode extend() const;
  /// Deletes coordinate `position`.
  LinearCode puncture(std::size_t position) const;

  bool contains(std::span<const Elem> v) const;
  bool all_one_in() const;
  /// True when every generator of *this lies in `other`.
  bool is_subcode_of(const LinearCode& other) const;

  std::vector<Elem> encode(std::span<const Elem> message) const;

  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

 private:
  explicit LinearCode(Matrix rref_gen, std::vector<std::size_t> pivots)
      : gen_(std::move(rref_gen)), pivots_(std::move(pivots)) {}

  Matrix gen_;
  std::vector<std::size_t> pivots_;
  std::vector<std::string> labels_;
};

inline bool contains(const LinearCode& c, std::span<const Elem> v) { return c.contains(v); }
inline bool all_one_in(const LinearCode& c) { return c.all_one_in(); }
inline bool is_subcode(const LinearCode& a, const LinearCode& b) { return a.is_subcode_of(b); }

/// Text form: "q n k", then the k rows of the RREF generator as
/// space-separated digit encodings.
std::string code_to_text(const LinearCode& c);
/// Reads the text form; the rows may be dependent, the code is their span.
LinearCode code_from_text(const std::string& text);

/// Codewords of a GF(p^s) code whose coordinates all lie in GF(p), as a code
/// over `prime`.
LinearCode subfield_subcode(const LinearCode& code, const FieldPtr& prime);

/// GF(p)-span of the coordinate-wise absolute traces of the codewords.
LinearCode trace_code(const LinearCode& code, const FieldPtr& prime);

/// Reinterprets a code whose entries are all in {0,...,p-1} over the prime
/// field; throws NotASubfield otherwise.
LinearCode restrict_to_prime(const LinearCode& code, const FieldPtr& prime);

}  // namespace dcodes
