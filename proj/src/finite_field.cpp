#include "designcodes/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace dcodes {

namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials (monic, low-to-high). Every entry is re-verified when a
// field is built; a bad entry would only trigger the search fallback.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 1, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::uint32_t poly_degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<std::uint32_t>(i);
  return 0;
}

bool poly_is_zero(const Poly& a) {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo monic-or-not divisor b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::uint32_t db = poly_degree(b);
  const std::uint32_t lead_inv = inv_mod(b[db], p);
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const std::uint64_t f = std::uint64_t{a[i]} * lead_inv % p;
    for (std::uint32_t j = 0; j <= db; ++j) {
      const std::size_t idx = i - db + j;
      a[idx] = static_cast<std::uint32_t>((a[idx] + (p - f) * b[j]) % p);
    }
  }
  a.resize(db);
  return a;
}

bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  const std::uint32_t s = static_cast<std::uint32_t>(modulus.size() - 1);
  if (s <= 1) return true;
  for (std::uint32_t d = 1; d <= s / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    Poly div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t x = c;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_is_zero(poly_mod(modulus, div, p))) return false;
    }
  }
  return true;
}

// Arithmetic on digit vectors of length s modulo the field modulus; used only
// while building tables.
struct SlowArith {
  std::uint32_t p;
  std::uint32_t s;
  const Poly& modulus;

  Poly mul(const Poly& a, const Poly& b) const {
    Poly prod(2 * s, 0);
    for (std::uint32_t i = 0; i < s; ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < s; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    if (s == 1) {
      prod.resize(1);
      return prod;
    }
    return poly_mod(std::move(prod), modulus, p);
  }

  Poly pow(Poly a, std::uint64_t e) const {
    Poly r(s, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly digits_of(std::uint64_t a, std::uint32_t p, std::uint32_t s) {
  Poly d(s);
  for (std::uint32_t i = 0; i < s; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p);
    a /= p;
  }
  return d;
}

std::uint64_t encode(const Poly& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

bool is_primitive(const Poly& g, const SlowArith& ar, std::uint64_t order) {
  if (poly_is_zero(g)) return false;
  for (auto r : prime_factors(order)) {
    Poly t = ar.pow(g, order / r);
    Poly one(ar.s, 0);
    one[0] = 1;
    if (t == one) return false;
  }
  return true;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw BadParams("characteristic " + std::to_string(p) + " is not prime");
  if (s == 0) throw BadParams("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > Field::kMaxOrder) throw BadParams("field order exceeds 2^20");
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw BadParams(std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t s = 0;
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  if (x != 1) throw BadParams(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), s};
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus, bool require_primitive_x)
    : p_(p), s_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(checked_order(p_, s_));
  if (modulus_.back() != 1) throw BadParams("modulus must be monic");
  for (auto c : modulus_)
    if (c >= p_) throw BadParams("modulus coefficient out of range");
  if (!is_irreducible(modulus_, p_)) throw BadParams("modulus is reducible");

  const SlowArith ar{p_, s_, modulus_};
  const std::uint64_t order = q_ - 1;
  bool found = false;
  if (s_ >= 2) {
    Poly x(s_, 0);
    x[1] = 1;
    if (is_primitive(x, ar, order)) {
      generator_ = p_;
      found = true;
    } else if (require_primitive_x) {
      throw BadParams("x is not primitive for this modulus");
    }
  }
  for (std::uint64_t cand = 1; !found && cand < q_; ++cand) {
    if (is_primitive(digits_of(cand, p_, s_), ar, order)) {
      generator_ = static_cast<Elem>(cand);
      found = true;
    }
  }
  if (q_ == 2) generator_ = 1;

  exp_table_.resize(2 * std::size_t{order});
  log_table_.assign(q_, 0);
  const Poly g = digits_of(generator_, p_, s_);
  Poly cur(s_, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    const auto e = static_cast<Elem>(encode(cur, p_));
    exp_table_[i] = e;
    exp_table_[i + order] = e;
    log_table_[e] = static_cast<std::uint32_t>(i);
    cur = ar.mul(cur, g);
  }

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Poly d = digits_of(a, p_, s_);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[a] = static_cast<Elem>(encode(d, p_));
  }
  if (p_ != 2 && q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_slow(a, b);
  }

  // Tr(x^i) for the monomial basis, then extend linearly.
  std::vector<Elem> basis_trace(s_);
  for (std::uint32_t i = 0; i < s_; ++i) {
    Poly xi(s_, 0);
    xi[i] = 1;
    Poly sum(s_, 0);
    Poly y = xi;
    for (std::uint32_t k = 0; k < s_; ++k) {
      for (std::uint32_t c = 0; c < s_; ++c) sum[c] = (sum[c] + y[c]) % p_;
      y = ar.pow(y, p_);
    }
    for (std::uint32_t c = 1; c < s_; ++c)
      if (sum[c] != 0) throw Error("trace left the prime field; modulus inconsistent");
    basis_trace[i] = sum[0];
  }
  trace_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    std::uint64_t t = 0;
    Elem x = a;
    for (std::uint32_t i = 0; i < s_; ++i) {
      t += std::uint64_t{x % p_} * basis_trace[i];
      x /= p_;
    }
    trace_table_[a] = static_cast<Elem>(t % p_);
  }
}

Elem Field::add_slow(Elem a, Elem b) const noexcept {
  Elem r = 0, scale = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero();
  return exp_table_[(q_ - 1 - log_table_[a]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw DivisionByZero();
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DivisionByZero();
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_table_[a]) * (e % order)) % order;
  if (k < 0) k += order;
  return exp_table_[static_cast<std::size_t>(k)];
}

Elem Field::exp(std::int64_t k) const noexcept {
  const std::int64_t order = q_ - 1;
  k %= order;
  if (k < 0) k += order;
  return exp_table_[static_cast<std::size_t>(k)];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw DivisionByZero();
  return log_table_[a];
}

Elem Field::from_int(std::int64_t c) const noexcept {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const { return digits_of(a, p_, s_); }

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != s_) throw OutOfRange("digit vector has wrong length");
  Elem v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw OutOfRange("digit out of range");
    v = v * p_ + digits[i];
  }
  return v;
}

Elem Field::trace_to_prime(Elem a) const { return trace_table_.at(a); }

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  return std::make_shared<const Field>(p, std::move(modulus), false);
}

FieldPtr Field::get(std::uint32_t p, std::uint32_t s) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  const std::uint64_t q = checked_order(p, s);
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, s}); it != cache.end()) return it->second;

  FieldPtr field;
  if (s == 1) {
    field = std::make_shared<const Field>(p, Poly{0, 1}, false);
  } else {
    if (auto it = conway_table().find({p, s}); it != conway_table().end()) {
      try {
        field = std::make_shared<const Field>(p, it->second, true);
      } catch (const BadParams&) {
        field = nullptr;
      }
    }
    // First monic polynomial in coefficient order whose root x is primitive.
    for (std::uint64_t c = 0; !field && c < q; ++c) {
      Poly mod = digits_of(c, p, s);
      mod.push_back(1);
      if (mod[0] == 0 || !is_irreducible(mod, p)) continue;
      try {
        field = std::make_shared<const Field>(p, mod, true);
      } catch (const BadParams&) {
      }
    }
  }
  cache.emplace(std::make_pair(p, s), field);
  return field;
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto [p, s] = prime_power(q);
  return get(p, s);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->q()) throw OutOfRange("element encoding out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_->same_as(*o.field_) && value_ == o.value_;
}

FieldEmbedding::FieldEmbedding(FieldPtr sub, FieldPtr big) : sub_(std::move(sub)), big_(std::move(big)) {
  if (sub_->p() != big_->p() || big_->s() % sub_->s() != 0)
    throw NotASubfield(sub_->name() + " does not embed in " + big_->name());
  degree_ = big_->s() / sub_->s();
  const std::uint32_t q = sub_->q();
  to_big_.resize(q);
  if (sub_->is_prime()) {
    for (Elem a = 0; a < q; ++a) to_big_[a] = a;
  } else {
    // Image of x: the first root of the subfield modulus among the powers of
    // generator^{(Q-1)/(q-1)}.
    const std::uint64_t step = (big_->q() - 1) / (q - 1);
    const auto& mod = sub_->modulus();
    Elem beta = 0;
    for (std::uint64_t j = 1; j < q && beta == 0; ++j) {
      const Elem cand = big_->exp(static_cast<std::int64_t>(j * step));
      Elem val = 0, pw = 1;
      for (auto c : mod) {
        val = big_->add(val, big_->mul(c, pw));
        pw = big_->mul(pw, cand);
      }
      if (val == 0) beta = cand;
    }
    if (beta == 0) throw NotASubfield("no root of the subfield modulus found");
    for (Elem a = 0; a < q; ++a) {
      const auto d = sub_->digits(a);
      Elem v = 0, pw = 1;
      for (auto c : d) {
        v = big_->add(v, big_->mul(c, pw));
        pw = big_->mul(pw, beta);
      }
      to_big_[a] = v;
    }
  }
  from_big_.assign(big_->q(), -1);
  for (Elem a = 0; a < q; ++a) from_big_[to_big_[a]] = static_cast<std::int32_t>(a);
}

Elem FieldEmbedding::restrict(Elem b) const {
  const std::int32_t a = from_big_.at(b);
  if (a < 0) throw NotASubfield("element is not in the embedded subfield");
  return static_cast<Elem>(a);
}

Elem FieldEmbedding::trace(Elem x) const {
  Elem sum = 0, y = x;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    sum = big_->add(sum, y);
    y = big_->pow(y, sub_->q());
  }
  return restrict(sum);
}

std::uint64_t q_weight(std::uint64_t j, std::uint64_t q, std::uint32_t m) {
  if (q < 2) throw OutOfRange("q must be at least 2");
  std::uint64_t qm = 1;
  for (std::uint32_t i = 0; i < m; ++i) qm *= q;
  if (j >= qm) throw OutOfRange("q_weight argument exceeds q^m - 1");
  std::uint64_t w = 0;
  while (j) {
    w += j % q;
    j /= q;
  }
  return w;
}

BigInt gaussian_binomial(std::int64_t n, std::int64_t i, std::uint64_t q) {
  if (i < 0 || n < 0 || i > n) throw OutOfRange("gaussian_binomial requires 0 <= i <= n");
  BigInt num = 1, den = 1;
  for (std::int64_t j = 0; j < i; ++j) {
    num *= ipow(q, static_cast<unsigned>(n - j)) - 1;
    den *= ipow(q, static_cast<unsigned>(i - j)) - 1;
  }
  return num / den;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace dcodes
