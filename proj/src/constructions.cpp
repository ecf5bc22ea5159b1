#include "designcodes/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dcodes {

namespace {

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

void check_dimension(const LinearCode& c, const BigInt& expected, const std::string& what) {
  if (BigInt(c.k()) != expected)
    throw ConstructionMismatch(what + ": dimension " + std::to_string(c.k()) + ", expected " + expected.str());
}

// Index of a nonzero point y of GF(q^m) in the projective labelling.
std::size_t projective_index(const Field& big, Elem y, std::size_t v) { return big.log(y) % v; }

// Index of y in the affine labelling: alpha^i -> i, 0 -> q^m - 1.
std::size_t affine_index(const Field& big, Elem y) { return y == 0 ? big.q() - 1 : big.log(y); }

// Every r x m matrix over GF(q) in reduced row-echelon form with full rank,
// each passed to `fn` as its list of rows.
void for_each_subspace(const Field& f, std::uint32_t m, std::uint32_t r,
                       const std::function<void(const std::vector<std::vector<Elem>>&)>& fn) {
  std::vector<std::uint32_t> piv(r);
  for (std::uint32_t i = 0; i < r; ++i) piv[i] = i;
  for (;;) {
    // Free positions: (row i, column c) with c > piv[i] and c not a pivot.
    std::vector<char> is_piv(m, 0);
    for (auto c : piv) is_piv[c] = 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t c = piv[i] + 1; c < m; ++c)
        if (!is_piv[c]) free.emplace_back(i, c);
    std::vector<std::vector<Elem>> rows(r, std::vector<Elem>(m, 0));
    for (std::uint32_t i = 0; i < r; ++i) rows[i][piv[i]] = 1;
    std::vector<Elem> vals(free.size(), 0);
    for (;;) {
      for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = vals[t];
      fn(rows);
      std::size_t t = 0;
      while (t < vals.size() && vals[t] == f.q() - 1) vals[t++] = 0;
      if (t == vals.size()) break;
      ++vals[t];
    }
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && piv[i] == m - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (std::uint32_t j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
}

// Elements of the GF(q)-span of `basis` (elements of GF(q^m)).
std::vector<Elem> span_elements(const FieldTower& t, const std::vector<Elem>& basis) {
  std::vector<Elem> out{0};
  for (auto b : basis) {
    std::vector<Elem> next;
    next.reserve(out.size() * t.sub->q());
    for (auto x : out)
      for (Elem c = 0; c < t.sub->q(); ++c) next.push_back(t.big->add(x, t.big->mul(t.embedding.embed(c), b)));
    out.swap(next);
  }
  return out;
}

// The element sum_j c_j alpha^j for a coordinate vector over GF(q).
Elem from_coords(const FieldTower& t, const std::vector<Elem>& coords) {
  Elem y = 0;
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j]) y = t.big->add(y, t.big->mul(t.embedding.embed(coords[j]), t.big->exp(static_cast<std::int64_t>(j))));
  return y;
}

}  // namespace

FieldTower field_tower(std::uint64_t q, std::uint32_t m) {
  require(m >= 1, "extension degree must be positive");
  auto [p, s] = prime_power(q);
  const std::uint64_t big_order = upow(q, m);
  require(big_order <= Field::kMaxOrder, "field GF(q^m) too large");
  auto sub = Field::get(p, s);
  auto big = Field::get(p, s * m);
  return FieldTower{sub, big, FieldEmbedding(sub, big), m};
}

std::size_t projective_length(std::uint64_t q, std::uint32_t m) { return (upow(q, m) - 1) / (q - 1); }

std::vector<std::string> projective_labels(std::uint64_t q, std::uint32_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < projective_length(q, m); ++i) out.push_back("a^" + std::to_string(i));
  return out;
}

std::vector<std::string> affine_labels(std::uint64_t q, std::uint32_t m) {
  std::vector<std::string> out;
  const std::uint64_t n = upow(q, m);
  for (std::uint64_t i = 0; i + 1 < n; ++i) out.push_back("a^" + std::to_string(i));
  out.push_back("0");
  return out;
}

Permutation projective_rotation(std::uint64_t q, std::uint32_t m) {
  const std::size_t v = projective_length(q, m);
  Permutation p(v);
  for (std::size_t i = 0; i < v; ++i) p[i] = (i + 1) % v;
  return p;
}

Permutation punctured_rotation(std::uint64_t q, std::uint32_t m) {
  const std::size_t n = upow(q, m) - 1;
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

std::vector<Permutation> affine_generators(std::uint64_t q, std::uint32_t m) {
  auto t = field_tower(q, m);
  const std::size_t n = upow(q, m);
  Permutation mul(n), shift(n);
  for (std::size_t i = 0; i + 1 < n; ++i) mul[i] = (i + 1) % (n - 1);
  mul[n - 1] = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Elem x = i + 1 == n ? 0 : t.big->exp(static_cast<std::int64_t>(i));
    shift[i] = affine_index(*t.big, t.big->add(x, 1));
  }
  return {mul, shift};
}

LinearCode simplex(std::uint64_t q, std::uint32_t m) {
  require(m >= 2, "simplex code needs m >= 2");
  auto t = field_tower(q, m);
  const std::size_t v = projective_length(q, m);
  std::vector<std::vector<Elem>> rows(m, std::vector<Elem>(v));
  for (std::uint32_t b = 0; b < m; ++b)
    for (std::size_t i = 0; i < v; ++i)
      rows[b][i] = t.embedding.trace(t.big->exp(static_cast<std::int64_t>(b + i)));
  auto c = LinearCode::from_generators(t.sub, rows).with_labels(projective_labels(q, m));
  check_dimension(c, m, "simplex");
  return c;
}

LinearCode cyclic_code(std::uint64_t q, std::uint32_t m, const std::vector<std::uint64_t>& zeros) {
  auto t = field_tower(q, m);
  const std::uint64_t n = upow(q, m) - 1;
  std::set<std::uint64_t> z;
  for (auto j : zeros) z.insert(j % n);
  for (auto j : z)
    if (!z.count(j * q % n)) throw ConstructionMismatch("defining set is not closed under multiplication by q");

  // One representative per q-cyclotomic coset; each contributes the m
  // GF(q)-linear conditions Tr(alpha^b c(alpha^j)) = 0.
  std::set<std::uint64_t> covered;
  Matrix cons(t.sub, 0, n);
  std::vector<Elem> row(n);
  for (auto j : z) {
    if (covered.count(j)) continue;
    for (std::uint64_t x = j; covered.insert(x).second; x = x * q % n) {
    }
    for (std::uint32_t b = 0; b < m; ++b) {
      for (std::uint64_t i = 0; i < n; ++i)
        row[i] = t.embedding.trace(t.big->exp(static_cast<std::int64_t>(b + (i * j) % n)));
      cons.append_row(row);
    }
  }
  if (cons.rows() == 0) return LinearCode::full(t.sub, n);
  Matrix basis = nullspace(cons);
  if (basis.rows() == 0) return LinearCode::zero(t.sub, n);
  return LinearCode::from_matrix(std::move(basis));
}

BigInt grm_dimension(std::uint64_t q, std::uint64_t l, std::uint32_t m) {
  BigInt total = 0;
  for (std::int64_t i = 0; i <= static_cast<std::int64_t>(l); ++i)
    for (std::int64_t j = 0; j <= m; ++j) {
      const std::int64_t a = i - j * static_cast<std::int64_t>(q);
      if (a < 0) continue;
      const BigInt term = binomial(m, j) * binomial(a + m - 1, a);
      if (j % 2) total -= term;
      else total += term;
    }
  return total;
}

LinearCode grm_punctured(std::uint64_t q, std::uint64_t l, std::uint32_t m) {
  require(m >= 1 && l >= 1 && l < (q - 1) * m, "punctured GRM code needs 1 <= l < (q-1)m");
  const std::uint64_t n = upow(q, m) - 1;
  std::vector<std::uint64_t> zeros;
  for (std::uint64_t j = 1; j < n; ++j)
    if (q_weight(j, q, m) < (q - 1) * m - l) zeros.push_back(j);
  auto c = cyclic_code(q, m, zeros);
  check_dimension(c, grm_dimension(q, l, m), "punctured GRM");
  auto labels = affine_labels(q, m);
  labels.pop_back();
  return c.with_labels(std::move(labels));
}

LinearCode grm(std::uint64_t q, std::uint64_t l, std::uint32_t m) {
  auto c = grm_punctured(q, l, m).extend();
  auto labels = affine_labels(q, m);
  return c.with_labels(std::move(labels));
}

std::uint64_t mt_dimension(std::uint64_t q, std::uint32_t m, std::uint64_t t) {
  const std::uint64_t n = upow(q, m), top = m * (q - 1);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) count += q_weight(i, q, m) + t <= top;
  return count;
}

LinearCode mt_code(std::uint64_t q, std::uint32_t m, std::uint64_t t, bool extended) {
  require(t > 0 && t <= m * (q - 1), "M^t needs 0 < t <= m(q-1)");
  const std::uint64_t n = upow(q, m) - 1;
  std::vector<std::uint64_t> zeros;
  for (std::uint64_t i = 1; i <= n; ++i)
    if (q_weight(i, q, m) < t) zeros.push_back(i);
  auto c = cyclic_code(q, m, zeros);
  auto labels = affine_labels(q, m);
  if (!extended) {
    labels.pop_back();
    return c.with_labels(std::move(labels));
  }
  auto e = c.extend().with_labels(std::move(labels));
  check_dimension(e, mt_dimension(q, m, t), "extended M^t");
  return e;
}

std::vector<std::vector<std::uint32_t>> prm_monomials(std::uint64_t q, std::uint64_t r, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> e(m, 0);
  for (;;) {
    std::uint64_t sum = 0;
    for (auto x : e) sum += x;
    if (sum > 0 && sum % (q - 1) == 0 && sum <= r * (q - 1)) out.push_back(e);
    std::uint32_t j = 0;
    while (j < m && e[j] == q - 1) e[j++] = 0;
    if (j == m) break;
    ++e[j];
  }
  return out;
}

namespace {

// Homogeneous coordinates of each projective point, scaled so the first
// nonzero coordinate is 1. Coordinates are taken in the basis dual to
// 1, alpha, ..., alpha^(m-1), i.e. x_j = Tr(alpha^j y).
std::vector<std::vector<Elem>> projective_points(const FieldTower& t) {
  const std::size_t v = projective_length(t.sub->q(), t.m);
  std::vector<std::vector<Elem>> pts(v, std::vector<Elem>(t.m));
  for (std::size_t i = 0; i < v; ++i) {
    auto& x = pts[i];
    for (std::uint32_t j = 0; j < t.m; ++j) x[j] = t.embedding.trace(t.big->exp(static_cast<std::int64_t>(i + j)));
    const auto lead = std::find_if(x.begin(), x.end(), [](Elem e) { return e != 0; });
    const Elem inv = t.sub->inv(*lead);
    for (auto& e : x) e = t.sub->mul(e, inv);
  }
  return pts;
}

}  // namespace

std::vector<std::vector<Elem>> prm_evaluations(std::uint64_t q, std::uint64_t r, std::uint32_t m, bool constants) {
  auto t = field_tower(q, m);
  const auto pts = projective_points(t);
  std::vector<std::vector<Elem>> rows;
  if (constants) rows.emplace_back(pts.size(), 1);
  for (const auto& e : prm_monomials(q, r, m)) {
    std::vector<Elem> row(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Elem val = 1;
      for (std::uint32_t j = 0; j < m && val; ++j)
        if (e[j]) val = t.sub->mul(val, t.sub->pow(pts[i][j], e[j]));
      row[i] = val;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

LinearCode prm_code(std::uint64_t q, std::uint64_t r, std::uint32_t m, bool constants) {
  auto f = Field::of_order(q);
  const auto rows = prm_evaluations(q, r, m, constants);
  if (rows.empty()) return LinearCode::zero(f, projective_length(q, m)).with_labels(projective_labels(q, m));
  return LinearCode::from_generators(f, rows).with_labels(projective_labels(q, m));
}

}  // namespace

LinearCode prm(std::uint64_t q, std::uint64_t r, std::uint32_t m) {
  require(m >= 2 && r <= m - 1, "PRM(r, m-1, q) needs 0 <= r <= m-1");
  return prm_code(q, r, m, true);
}

LinearCode prm_star(std::uint64_t q, std::uint64_t r, std::uint32_t m) {
  require(m >= 2 && r >= 1 && r <= m - 1, "PRM*(r, m-1, q) needs 1 <= r <= m-1");
  return prm_code(q, r, m, false);
}

Design pg_design(std::uint64_t q, std::uint32_t m, std::uint32_t d) {
  require(m >= 2 && d + 2 <= m, "PG design needs 0 <= d <= m-2");
  auto t = field_tower(q, m);
  const std::size_t v = projective_length(q, m);
  std::vector<Block> blocks;
  for_each_subspace(*t.sub, m, d + 1, [&](const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> basis;
    for (const auto& r : rows) basis.push_back(from_coords(t, r));
    std::set<std::uint32_t> pts;
    for (auto y : span_elements(t, basis))
      if (y != 0) pts.insert(static_cast<std::uint32_t>(projective_index(*t.big, y, v)));
    blocks.emplace_back(pts.begin(), pts.end());
  });
  auto des = Design::make(v, std::move(blocks), projective_labels(q, m));
  if (BigInt(des.b()) != gaussian_binomial(m, d + 1, q))
    throw ConstructionMismatch("PG design has the wrong number of blocks");
  if (des.k() != projective_length(q, d + 1)) throw ConstructionMismatch("PG design has the wrong block size");
  return des;
}

Design ag_design(std::uint64_t q, std::uint32_t m, std::uint32_t d) {
  require(m >= 2 && d >= 1 && d + 1 <= m, "AG design needs 1 <= d <= m-1");
  auto t = field_tower(q, m);
  const std::size_t v = upow(q, m);
  std::vector<Block> blocks;
  for_each_subspace(*t.sub, m, d, [&](const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> basis;
    std::vector<char> is_piv(m, 0);
    for (const auto& r : rows) {
      basis.push_back(from_coords(t, r));
      is_piv[std::find_if(r.begin(), r.end(), [](Elem e) { return e != 0; }) - r.begin()] = 1;
    }
    const auto sub = span_elements(t, basis);
    // Coset representatives: vectors vanishing on the pivot coordinates.
    std::vector<Elem> rep_basis;
    for (std::uint32_t j = 0; j < m; ++j)
      if (!is_piv[j]) rep_basis.push_back(t.big->exp(j));
    for (auto rep : span_elements(t, rep_basis)) {
      Block blk;
      for (auto y : sub) blk.push_back(static_cast<std::uint32_t>(affine_index(*t.big, t.big->add(y, rep))));
      blocks.push_back(std::move(blk));
    }
  });
  auto des = Design::make(v, std::move(blocks), affine_labels(q, m));
  if (BigInt(des.b()) != ipow(q, m - d) * gaussian_binomial(m, d, q))
    throw ConstructionMismatch("AG design has the wrong number of blocks");
  if (des.k() != upow(q, d)) throw ConstructionMismatch("AG design has the wrong block size");
  return des;
}

std::vector<BigInt> dmt_expected_counts(std::uint32_t m) {
  const std::uint64_t n = upow(2, 2 * m), half = n / 2, off = upow(2, m - 1);
  std::vector<BigInt> c(n + 1, 0);
  c[0] = 1;
  c[half - off] = BigInt(upow(2, m) - 1) * n;
  c[half] = BigInt(2) * (n - 1);
  c[half + off] = BigInt(upow(2, m) - 1) * n;
  c[n] = 1;
  return c;
}

DmtCode dmt_example_code(std::uint32_t m) {
  require(m >= 2, "the example code needs m >= 2");
  auto f2 = Field::get(2, 1);
  auto mid = Field::get(2, m);
  auto big = Field::get(2, 2 * m);
  FieldEmbedding mid_in_big(mid, big);
  // u: the first power of the generator outside GF(2^m).
  std::int64_t ue = 0;
  while (mid_in_big.in_subfield(big->exp(ue))) ++ue;
  const Elem u = big->exp(ue);
  const std::size_t n = big->q();
  auto point = [&](std::size_t i) { return i + 1 == n ? Elem{0} : big->exp(static_cast<std::int64_t>(i)); };
  std::vector<std::string> labels = affine_labels(2, 2 * m);

  const auto expected = dmt_expected_counts(m);
  for (std::uint64_t e : {upow(2, m - 1) + 1, upow(2, m) + 1}) {
    std::vector<std::vector<Elem>> rows;
    for (std::uint32_t j = 0; j < m; ++j) {
      const Elem a = Elem{1} << j;
      std::vector<Elem> r(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Elem inner = mid_in_big.trace(big->mul(u, big->pow(point(i), static_cast<std::int64_t>(e))));
        r[i] = mid->trace_to_prime(mid->mul(a, inner));
      }
      rows.push_back(std::move(r));
    }
    for (std::uint32_t j = 0; j < 2 * m; ++j) {
      const Elem b = Elem{1} << j;
      std::vector<Elem> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = big->trace_to_prime(big->mul(b, point(i)));
      rows.push_back(std::move(r));
    }
    rows.emplace_back(n, 1);
    auto c = LinearCode::from_generators(f2, rows).with_labels(labels);
    if (c.k() != 3 * m + 1) continue;
    if (enumerate_weight_distribution(c).counts != expected) continue;
    return {c, e, e == upow(2, m - 1) + 1};
  }
  throw WeightEnumeratorMismatch("neither exponent gives the expected weight enumerator");
}

}  // namespace dcodes
