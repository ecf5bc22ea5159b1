#include "designcodes/linear_code.hpp"

#include <algorithm>
#include <sstream>

namespace dcodes {

LinearCode LinearCode::from_matrix(Matrix m) {
  auto pivots = rref(m);
  return LinearCode(std::move(m), std::move(pivots));
}

LinearCode LinearCode::from_generators(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  if (rows.empty()) throw EmptyInput();
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw RaggedRows();
  return from_matrix(Matrix::from_rows(std::move(field), rows, n));
}

LinearCode LinearCode::zero(FieldPtr field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n), {}); }

LinearCode LinearCode::full(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
    piv[i] = i;
  }
  return LinearCode(std::move(m), std::move(piv));
}

LinearCode LinearCode::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n()) throw OutOfRange("label count differs from code length");
  LinearCode c = *this;
  c.labels_ = std::move(labels);
  return c;
}

LinearCode LinearCode::dual() const {
  const Field& f = *field();
  const std::size_t len = n();
  std::vector<char> is_pivot(len, 0);
  for (auto c : pivots_) is_pivot[c] = 1;

  Matrix h(field(), 0, len);
  std::vector<Elem> v(len);
  for (std::size_t col = 0; col < len; ++col) {
    if (is_pivot[col]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[col] = 1;
    for (std::size_t i = 0; i < pivots_.size(); ++i) v[pivots_[i]] = f.neg(gen_.at(i, col));
    h.append_row(v);
  }
  // Orthogonality of every dual row against every generator.
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < k(); ++j) {
      Elem dot = 0;
      for (std::size_t c = 0; c < len; ++c) dot = f.add(dot, f.mul(h.at(i, c), gen_.at(j, c)));
      if (dot != 0) throw Error("dual construction produced a non-orthogonal row");
    }
  LinearCode d = from_matrix(std::move(h));
  d.labels_ = labels_;
  return d;
}

LinearCode LinearCode::extend() const {
  const Field& f = *field();
  Matrix m(field(), 0, n() + 1);
  std::vector<Elem> v(n() + 1);
  for (std::size_t i = 0; i < k(); ++i) {
    Elem sum = 0;
    for (std::size_t c = 0; c < n(); ++c) {
      v[c] = gen_.at(i, c);
      sum = f.add(sum, v[c]);
    }
    v[n()] = f.neg(sum);
    m.append_row(v);
  }
  LinearCode e = from_matrix(std::move(m));
  if (!labels_.empty()) {
    e.labels_ = labels_;
    e.labels_.push_back("inf");
  }
  return e;
}

LinearCode LinearCode::puncture(std::size_t position) const {
  if (position >= n()) throw OutOfRange("puncture position out of range");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n(); ++c)
    if (c != position) keep.push_back(c);
  LinearCode p = from_matrix(gen_.select_columns(keep));
  if (!labels_.empty())
    for (auto c : keep) p.labels_.push_back(labels_[c]);
  return p;
}

bool LinearCode::contains(std::span<const Elem> v) const {
  if (v.size() != n()) return false;
  const Field& f = *field();
  std::vector<Elem> r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    auto g = gen_.row(i);
    for (std::size_t j = pivots_[i]; j < n(); ++j)
      if (g[j] != 0) r[j] = f.add(r[j], f.mul(nc, g[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool LinearCode::all_one_in() const {
  std::vector<Elem> ones(n(), 1);
  return contains(ones);
}

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  if (!field()->same_as(*other.field()) || n() != other.n()) return false;
  for (std::size_t i = 0; i < k(); ++i)
    if (!other.contains(gen_.row(i))) return false;
  return true;
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (message.size() != k()) throw OutOfRange("message length differs from dimension");
  const Field& f = *field();
  std::vector<Elem> out(n(), 0);
  for (std::size_t i = 0; i < k(); ++i) {
    if (message[i] == 0) continue;
    auto g = gen_.row(i);
    for (std::size_t j = 0; j < n(); ++j) out[j] = f.add(out[j], f.mul(message[i], g[j]));
  }
  return out;
}

namespace {

void check_prime_target(const LinearCode& code, const FieldPtr& prime) {
  if (!prime->is_prime() || prime->p() != code.field()->p())
    throw NotASubfield(prime->name() + " is not the prime subfield of " + code.field()->name());
}

// Rows x^l * g_i for every generator row and every monomial basis element:
// a GF(p)-spanning set of the code.
std::vector<std::vector<Elem>> additive_generators(const LinearCode& code) {
  const Field& f = *code.field();
  std::vector<std::vector<Elem>> out;
  Elem xl = 1;
  for (std::uint32_t l = 0; l < f.s(); ++l, xl *= f.p())
    for (std::size_t i = 0; i < code.k(); ++i) {
      std::vector<Elem> v(code.n());
      for (std::size_t j = 0; j < code.n(); ++j) v[j] = f.mul(xl, code.generator().at(i, j));
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace

LinearCode restrict_to_prime(const LinearCode& code, const FieldPtr& prime) {
  check_prime_target(code, prime);
  Matrix m(prime, 0, code.n());
  for (std::size_t i = 0; i < code.k(); ++i) {
    auto r = code.generator().row(i);
    for (auto e : r)
      if (e >= prime->q()) throw NotASubfield("generator entry outside the prime field");
    m.append_row(r);
  }
  return LinearCode::from_matrix(std::move(m)).with_labels(code.labels());
}

LinearCode subfield_subcode(const LinearCode& code, const FieldPtr& prime) {
  check_prime_target(code, prime);
  const Field& f = *code.field();
  const std::size_t n = code.n();
  if (f.is_prime()) return restrict_to_prime(code, prime);
  if (code.k() == 0) return LinearCode::zero(prime, n);

  const auto gens = additive_generators(code);
  const std::uint32_t p = f.p(), s = f.s();
  // digit[t][d][j]: digit d of coordinate j of generator t.
  std::vector<std::vector<std::vector<std::uint32_t>>> digit(gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    digit[t].assign(s, std::vector<std::uint32_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
      Elem e = gens[t][j];
      for (std::uint32_t d = 0; d < s; ++d) {
        digit[t][d][j] = e % p;
        e /= p;
      }
    }
  }
  // Unknowns y_t in GF(p); the non-constant digits of sum y_t gens[t] vanish.
  Matrix constraints(prime, (s - 1) * n, gens.size());
  for (std::uint32_t d = 1; d < s; ++d)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < gens.size(); ++t) constraints.at((d - 1) * n + j, t) = digit[t][d][j];
  const Matrix sols = nullspace(constraints);

  Matrix rows(prime, 0, n);
  std::vector<Elem> v(n);
  for (std::size_t r = 0; r < sols.rows(); ++r) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t t = 0; t < gens.size(); ++t) {
      const Elem y = sols.at(r, t);
      if (y == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Elem>((v[j] + y * digit[t][0][j]) % p);
    }
    rows.append_row(v);
  }
  return LinearCode::from_matrix(std::move(rows)).with_labels(code.labels());
}

LinearCode trace_code(const LinearCode& code, const FieldPtr& prime) {
  check_prime_target(code, prime);
  const Field& f = *code.field();
  if (f.is_prime()) return restrict_to_prime(code, prime);
  if (code.k() == 0) return LinearCode::zero(prime, code.n());
  Matrix rows(prime, 0, code.n());
  for (auto& g : additive_generators(code)) {
    for (auto& e : g) e = f.trace_to_prime(e);
    rows.append_row(g);
  }
  return LinearCode::from_matrix(std::move(rows)).with_labels(code.labels());
}

std::string code_to_text(const LinearCode& c) {
  std::ostringstream out;
  out << c.field()->q() << ' ' << c.n() << ' ' << c.k() << '\n';
  for (std::size_t i = 0; i < c.k(); ++i) {
    const auto r = c.generator().row(i);
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  }
  return out.str();
}

LinearCode code_from_text(const std::string& text) {
  std::istringstream in(text);
  std::uint64_t q = 0;
  std::size_t n = 0, k = 0;
  if (!(in >> q >> n >> k)) throw BadParams("code header must be 'q n k'");
  const auto field = Field::of_order(q);
  if (k == 0) return LinearCode::zero(field, n);
  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n));
  for (auto& r : rows)
    for (auto& x : r) {
      std::uint64_t v = 0;
      if (!(in >> v)) throw BadParams("truncated code file");
      if (v >= q) throw OutOfRange("entry " + std::to_string(v) + " is not an element of GF(" + std::to_string(q) + ")");
      x = static_cast<Elem>(v);
    }
  std::string extra;
  if (in >> extra) throw BadParams("trailing data in code file");
  return LinearCode::from_generators(field, rows);
}

}  // namespace dcodes
