#include <doctest.h>

#include <set>

#include "designcodes/constructions.hpp"
#include "oracles.hpp"

using namespace dcodes;

namespace {

std::vector<BigInt> as_big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

std::vector<BigInt> wd(const LinearCode& c) { return enumerate_weight_distribution(c).counts; }

void check_params(const LinearCode& c, std::size_t n, std::size_t k, std::size_t d) {
  CHECK(c.n() == n);
  CHECK(c.k() == k);
  CHECK(min_distance(c) == d);
}

}  // namespace

TEST_CASE("simplex codes") {
  check_params(simplex(2, 2), 3, 2, 2);
  check_params(simplex(2, 3), 7, 3, 4);
  check_params(simplex(3, 3), 13, 3, 9);
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{4, 2}, {5, 3}, {8, 2}, {9, 2}, {2, 5}}) {
    auto c = simplex(q, m);
    const auto a = wd(c);
    const std::size_t w = ipow(q, m - 1).convert_to<std::size_t>();
    CHECK(a[w] == ipow(q, m) - 1);
    CHECK(a[0] == 1);
    CHECK(enumerate_weight_distribution(c).support() == std::vector<std::size_t>{w});
    CHECK(c.labels().front() == "a^0");
  }
}

TEST_CASE("GRM codes against polynomial evaluation") {
  check_params(grm(3, 1, 2), 9, 3, 6);
  check_params(grm(3, 2, 3), 27, 10, 9);
  check_params(grm_punctured(2, 1, 3), 7, 4, 3);
  CHECK(grm(3, 1, 2).labels().back() == "0");
  for (auto [p, l, m] : std::vector<std::array<std::uint32_t, 3>>{
           {2, 1, 3}, {2, 2, 4}, {3, 1, 2}, {3, 2, 2}, {3, 3, 2}, {3, 2, 3}, {5, 2, 2}, {5, 1, 2}, {7, 1, 2}, {2, 1, 4}}) {
    CAPTURE(p);
    CAPTURE(l);
    CAPTURE(m);
    auto f = Field::of_order(p);
    auto rows = oracle::monomial_evaluations(*f, m, 0, l);
    auto words = oracle::span(*f, rows, ipow(p, m).convert_to<std::size_t>());
    auto c = grm(p, l, m);
    CHECK(c.k() == oracle::log_q(words.size(), p));
    CHECK(BigInt(c.k()) == grm_dimension(p, l, m));
    CHECK(wd(c) == as_big(oracle::weights(words, c.n())));
  }
}

TEST_CASE("GRM dimension formula against monomial count") {
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      for (std::uint64_t l = 0; l <= (q - 1) * m; ++l) {
        std::uint64_t count = 0;
        std::vector<std::uint64_t> e(m, 0);
        for (;;) {
          std::uint64_t s = 0;
          for (auto x : e) s += x;
          count += s <= l;
          std::size_t j = 0;
          while (j < m && e[j] == q - 1) e[j++] = 0;
          if (j == m) break;
          ++e[j];
        }
        CHECK(grm_dimension(q, l, m) == count);
      }
    }
  }
}

TEST_CASE("GRM over non-prime fields") {
  auto c = grm(4, 1, 2);
  CHECK(c.k() == 3);
  CHECK(min_distance(c) == 12);
  auto d = grm(4, 2, 2);
  CHECK(d.k() == 6);
  CHECK(min_distance(d) == 8);
  CHECK_THROWS_AS(grm_punctured(3, 4, 2), BadParams);
  CHECK_THROWS_AS(grm_punctured(3, 0, 2), BadParams);
}

TEST_CASE("cyclic code checks its defining set") {
  CHECK_THROWS_AS(cyclic_code(2, 3, {1}), ConstructionMismatch);
  auto c = cyclic_code(2, 3, {1, 2, 4});
  check_params(c, 7, 4, 3);
  // Cyclic: shifting every generator stays in the code.
  for (std::size_t i = 0; i < c.k(); ++i) {
    auto r = c.generator().row_vector(i);
    std::rotate(r.begin(), r.begin() + 1, r.end());
    CHECK(c.contains(r));
  }
}

TEST_CASE("M^t codes") {
  auto e = mt_code(2, 3, 2, true);
  CHECK(e == grm(2, 1, 3));
  CHECK(mt_dimension(3, 2, 2) == 6);
  auto c = mt_code(3, 2, 2, true);
  CHECK(c.k() == 6);
  CHECK(min_distance(c) == 3);
  CHECK(min_distance(e) == 4);
  for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    for (std::uint64_t t = 1; t <= m * (q - 1); ++t) {
      auto x = mt_code(q, m, t, true);
      CHECK(x.n() == ipow(q, m));
      CHECK(x.k() == mt_dimension(q, m, t));
      // t = a(q-1) + b with 0 <= b < q-1.
      const std::uint64_t a = t / (q - 1), b = t % (q - 1);
      CHECK(min_distance(x) == (b + 1) * ipow(q, a));
      auto y = mt_code(q, m, t, false);
      CHECK(y.n() == ipow(q, m) - 1);
    }
  }
  CHECK_THROWS_AS(mt_code(2, 3, 0, true), BadParams);
  CHECK_THROWS_AS(mt_code(2, 3, 4, true), BadParams);
}

TEST_CASE("projective Reed-Muller codes") {
  auto c = prm(3, 1, 3);
  CHECK(c.n() == 13);
  CHECK(min_distance(c) == 4);
  CHECK(min_distance(prm_star(3, 1, 3)) == 6);
  CHECK(prm(2, 1, 3).dual() == prm_star(2, 1, 3));
  CHECK(prm_star(2, 1, 3) == simplex(2, 3));
  // PRM* over a prime field equals the span of the degree-(q-1) monomials,
  // which as functions on points of GF(q)^m are independent of scaling.
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 3}, {5, 3}, {3, 4}}) {
    auto f = Field::of_order(p);
    auto rows = oracle::monomial_evaluations(*f, m, p - 1, p - 1);
    auto x = prm_star(p, 1, m);
    CHECK(x.k() == rows.size());
    CHECK(x.n() == projective_length(p, m));
  }
  CHECK_THROWS_AS(prm_star(3, 0, 3), BadParams);
  CHECK_THROWS_AS(prm(3, 3, 3), BadParams);
}

TEST_CASE("monomial list") {
  auto mons = prm_monomials(3, 1, 3);
  CHECK(mons.size() == 6);
  for (const auto& e : mons) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    CHECK(s == 2);
  }
  CHECK(prm_monomials(2, 2, 3).size() == 6);
}

TEST_CASE("PG and AG designs") {
  auto fano = pg_design(2, 3, 1);
  CHECK(fano.v() == 7);
  CHECK(fano.b() == 7);
  CHECK(fano.k() == 3);
  CHECK(is_t_design(fano, 2) == BigInt(1));

  auto ag = ag_design(3, 2, 1);
  CHECK(ag.v() == 9);
  CHECK(ag.b() == 12);
  CHECK(is_t_design(ag, 2) == BigInt(1));

  auto s348 = ag_design(2, 3, 2);
  CHECK(s348.b() == 14);
  CHECK(is_t_design(s348, 3) == BigInt(1));

  for (auto [q, m, d] : std::vector<std::array<std::uint32_t, 3>>{{2, 4, 1}, {2, 4, 2}, {3, 3, 1}, {4, 3, 1}, {3, 4, 2}}) {
    auto g = pg_design(q, m, d);
    CHECK(is_t_design(g, 2) == gaussian_binomial(m - 2, d - 1, q));
    auto a = ag_design(q, m, d);
    CHECK(is_t_design(a, 2) == gaussian_binomial(m - 1, d - 1, q));
  }
  auto points = pg_design(3, 3, 0);
  CHECK(points.k() == 1);
  CHECK(points.b() == 13);
}

TEST_CASE("affine flats are closed under affine combinations") {
  auto t = field_tower(3, 3);
  auto a = ag_design(3, 3, 2);
  auto elem = [&](std::uint32_t i) { return i + 1 == a.v() ? Elem{0} : t.big->exp(i); };
  for (const auto& blk : a.blocks()) {
    std::set<Elem> s;
    for (auto i : blk) s.insert(elem(i));
    for (auto x : s)
      for (auto y : s)
        for (Elem c = 0; c < 3; ++c) {
          // x + c (y - x) with c in GF(3) = {0, 1, 2} embedded as 0, 1, -1.
          Elem cc = c == 0 ? 0 : c == 1 ? 1 : t.big->neg(1);
          CHECK(s.count(t.big->add(x, t.big->mul(cc, t.big->sub(y, x)))) == 1);
        }
  }
}

TEST_CASE("automorphism helpers preserve the codes") {
  auto check = [](const LinearCode& c, const Permutation& p) {
    CAPTURE(c.n());
    for (std::size_t i = 0; i < c.k(); ++i) {
      auto r = c.generator().row_vector(i);
      std::vector<Elem> img(r.size());
      for (std::size_t j = 0; j < r.size(); ++j) img[p[j]] = r[j];
      CHECK(c.contains(img));
    }
  };
  check(simplex(2, 4), projective_rotation(2, 4));
  check(prm_star(3, 1, 3), projective_rotation(3, 3));
  for (const auto& g : affine_generators(3, 3)) check(grm(3, 2, 3), g);
  for (const auto& g : affine_generators(4, 2)) check(grm(4, 2, 2), g);
  check(grm_punctured(3, 2, 3), punctured_rotation(3, 3));
  CHECK(is_transitive_automorphism_group(grm(3, 2, 3), affine_generators(3, 3)));
}

TEST_CASE("four-weight binary code example") {
  for (std::uint32_t m : {2u, 3u}) {
    auto x = dmt_example_code(m);
    CHECK(x.code.n() == ipow(2, 2 * m));
    CHECK(x.code.k() == 3 * m + 1);
    CHECK(wd(x.code) == dmt_expected_counts(m));
    const std::size_t dmin = (1u << (2 * m - 1)) - (1u << (m - 1));
    CHECK(min_distance(x.code) == dmin);
  }
  auto x = dmt_example_code(2);
  auto d8 = support_design(x.code, 8);
  CHECK(is_t_design(d8, 3).has_value());
  // The minimum weight words span the code.
  std::vector<std::vector<Elem>> rows;
  auto d6 = support_design(x.code, 6);
  for (const auto& blk : d6.blocks()) {
    std::vector<Elem> r(16, 0);
    for (auto i : blk) r[i] = 1;
    rows.push_back(r);
  }
  CHECK(LinearCode::from_generators(x.code.field(), rows) == x.code);
}
