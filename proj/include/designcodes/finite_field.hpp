#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "designcodes/bigint.hpp"
#include "designcodes/errors.hpp"

namespace dcodes {

/// Field elements are stored by their digit encoding: the element
/// c_0 + c_1 x + ... + c_{s-1} x^{s-1} is the integer sum c_i p^i.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^s) in the monomial basis over a stored monic irreducible modulus.
/// Immutable once built; instances from `Field::get` are shared.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Shared field of order p^s. The modulus comes from the built-in table of
  /// Conway polynomials when available, otherwise from a deterministic search.
  static FieldPtr get(std::uint32_t p, std::uint32_t s);

  /// Field of order q, which must be a prime power.
  static FieldPtr of_order(std::uint64_t q);

  /// Field over an explicit modulus (monic, coefficients low-to-high).
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t s() const noexcept { return s_; }
  std::uint32_t q() const noexcept { return q_; }
  bool is_prime() const noexcept { return s_ == 1; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_table_[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_table_[log_table_[a] + log_table_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::int64_t e) const;

  /// generator^k for any integer k.
  Elem exp(std::int64_t k) const noexcept;
  /// Discrete logarithm base the generator; `a` must be nonzero.
  std::uint32_t log(Elem a) const;

  /// Embedding of a residue c in [0, p) as a prime-field element.
  Elem from_int(std::int64_t c) const noexcept;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Absolute trace Tr_{p^s/p}; the result is a residue in [0, p).
  Elem trace_to_prime(Elem a) const;

  bool same_as(const Field& other) const noexcept {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_ && generator_ == other.generator_);
  }

  std::string name() const;

  Field(std::uint32_t p, std::vector<std::uint32_t> modulus, bool require_primitive_x);

 private:
  Elem add_slow(Elem a, Elem b) const noexcept;

  std::uint32_t p_;
  std::uint32_t s_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_table_;  // length 2(q-1)
  std::vector<std::uint32_t> log_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;  // q*q when q is small and p odd
  std::vector<Elem> trace_table_;
};

/// Value type pairing an element with its field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  static FieldElement zero(FieldPtr f) { return {std::move(f), 0}; }
  static FieldElement one(FieldPtr f) { return {std::move(f), 1}; }

  const FieldPtr& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->digits(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Elem value_;
};

/// Fixed embedding of GF(q) into GF(q^m) together with the relative trace.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr sub, FieldPtr big);

  const FieldPtr& sub() const noexcept { return sub_; }
  const FieldPtr& big() const noexcept { return big_; }
  std::uint32_t degree() const noexcept { return degree_; }

  Elem embed(Elem a) const { return to_big_.at(a); }
  /// Inverse of embed; throws NotASubfield when `b` is outside the image.
  Elem restrict(Elem b) const;
  bool in_subfield(Elem b) const noexcept { return from_big_[b] >= 0; }

  /// Tr_{q^m/q}(x) = sum_{i<m} x^{q^i}, returned in the subfield's own encoding.
  Elem trace(Elem x) const;

 private:
  FieldPtr sub_;
  FieldPtr big_;
  std::uint32_t degree_;
  std::vector<Elem> to_big_;
  std::vector<std::int32_t> from_big_;
};

/// Sum of the base-q digits of j, for 0 <= j <= q^m - 1.
std::uint64_t q_weight(std::uint64_t j, std::uint64_t q, std::uint32_t m);

/// Gaussian binomial [n choose i]_q.
BigInt gaussian_binomial(std::int64_t n, std::int64_t i, std::uint64_t q);

/// Decomposes q = p^s; throws BadParams if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace dcodes
