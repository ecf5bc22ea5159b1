#include <doctest.h>

#include <set>

#include "designcodes/constructions.hpp"
#include "designcodes/designs.hpp"
#include "oracles.hpp"

using namespace dcodes;

namespace {

// Lambda by brute force over all t-subsets, written independently of the
// library's colex counting: subsets are generated by bitmask.
std::optional<std::uint64_t> lambda_by_masks(const Design& d, unsigned t) {
  std::vector<std::uint64_t> masks;
  for (const auto& b : d.blocks()) {
    std::uint64_t m = 0;
    for (auto p : b) m |= std::uint64_t{1} << p;
    masks.push_back(m);
  }
  std::optional<std::uint64_t> lambda;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << d.v()); ++s) {
    if (static_cast<unsigned>(__builtin_popcountll(s)) != t) continue;
    std::uint64_t c = 0;
    for (auto m : masks) c += (m & s) == s;
    if (lambda && *lambda != c) return std::nullopt;
    lambda = c;
  }
  return lambda;
}

Design fano() { return Design::make(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}); }

}  // namespace

TEST_CASE("design normalization and validation") {
  auto d = Design::make(5, {{3, 1}, {1, 3}, {0, 4}});
  CHECK(d.b() == 2);
  CHECK(d.k() == 2);
  CHECK(d.blocks().front() == Block{0, 4});
  CHECK_THROWS_AS(Design::make(5, {}), EmptyInput);
  CHECK_THROWS_AS(Design::make(5, {{0, 1}, {2}}), BadParams);
  CHECK_THROWS_AS(Design::make(3, {{0, 5}}), BadParams);
}

TEST_CASE("support designs") {
  auto s = support_design(simplex(2, 3), 4);
  CHECK(s.v() == 7);
  CHECK(s.b() == 7);
  CHECK(s.k() == 4);
  CHECK(is_t_design(s, 2) == BigInt(2));

  auto g = support_design(grm(3, 1, 2), 6);
  CHECK(g.b() == 12);
  CHECK(is_t_design(g, 2) == BigInt(5));

  auto all = support_design(grm(3, 1, 2), 9);
  CHECK(all.b() == 1);
  CHECK(all.blocks().front().size() == 9);

  CHECK(is_t_design(support_design(simplex(3, 3), 9), 2) == BigInt(6));
  CHECK_THROWS_AS(support_design(simplex(2, 3), 3), NoSuchWeight);
  CHECK_THROWS_AS(support_design(simplex(2, 3), 0), NoSuchWeight);
  CHECK_THROWS_AS(support_design(simplex(2, 3), 8), NoSuchWeight);

  // Supports counted directly: over GF(4) each support carries q-1 = 3 words.
  auto c = simplex(4, 2);
  auto d = support_design(c, 4);
  CHECK(BigInt(d.b()) * 3 == enumerate_weight_distribution(c).counts[4]);
}

TEST_CASE("support design against brute-force codeword list") {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 5 + trial % 4;
      auto gens = oracle::random_rows(rng, *f, 3, n);
      auto words = oracle::span(*f, gens, n);
      auto code = LinearCode::from_generators(f, gens);
      std::map<std::size_t, std::set<Block>> by_weight;
      for (const auto& w : words) {
        Block b;
        for (std::size_t i = 0; i < n; ++i)
          if (w[i]) b.push_back(static_cast<std::uint32_t>(i));
        if (!b.empty()) by_weight[b.size()].insert(b);
      }
      for (const auto& [w, blocks] : by_weight) {
        auto d = support_design(code, w);
        CHECK(std::set<Block>(d.blocks().begin(), d.blocks().end()) == blocks);
      }
    }
  }
}

TEST_CASE("t-design oracle") {
  CHECK(is_t_design(fano(), 2) == BigInt(1));
  CHECK(is_t_design(fano(), 1) == BigInt(3));
  CHECK_FALSE(is_t_design(fano(), 3).has_value());
  CHECK(is_t_design(ag_design(2, 3, 2), 3) == BigInt(1));
  CHECK_THROWS_AS(is_t_design(fano(), 0), OutOfRange);
  CHECK_THROWS_AS(is_t_design(fano(), 4), OutOfRange);
  CHECK_THROWS_AS(is_t_design(fano(), 2, BigInt(10)), Infeasible);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t v = 4 + trial % 7;
    const std::size_t k = 1 + trial % (v - 1);
    std::vector<Block> blocks;
    const int nb = 1 + trial % 6;
    for (int i = 0; i < nb; ++i) {
      std::vector<std::uint32_t> pts(v);
      std::iota(pts.begin(), pts.end(), 0);
      std::shuffle(pts.begin(), pts.end(), rng);
      blocks.emplace_back(pts.begin(), pts.begin() + k);
    }
    auto d = Design::make(v, blocks);
    for (unsigned t = 1; t <= std::min<std::size_t>(k, 3); ++t) {
      auto got = is_t_design(d, t);
      auto want = lambda_by_masks(d, t);
      CHECK(got.has_value() == want.has_value());
      if (got && want) CHECK(*got == *want);
    }
  }
}

TEST_CASE("complements") {
  auto f = fano();
  CHECK(complement_design(complement_design(f)) == f);
  auto c = complement_design(f, 2u);
  CHECK(c.k() == 4);
  CHECK(is_t_design(c, 2) == complement_lambda(7, 3, 2, BigInt(1)));
  CHECK(complement_lambda(7, 3, 2, BigInt(1)) == 2);

  CHECK(complement_design(support_design(simplex(2, 3), 4)) == pg_design(2, 3, 1));
  CHECK(complement_design(support_design(grm(3, 1, 2), 6)) == ag_design(3, 2, 1));
  CHECK(complement_design(support_design(simplex(3, 3), 9)) == pg_design(3, 3, 1));

  CHECK_THROWS_AS(complement_design(Design::make(3, {{0, 1, 2}})), BadParams);
  auto not_design = Design::make(5, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(complement_design(not_design, 2u), NotATDesign);
  CHECK(complement_design(not_design).k() == 3);

  for (auto [q, m, d] : std::vector<std::array<std::uint32_t, 3>>{{2, 3, 1}, {2, 4, 1}, {3, 3, 1}, {2, 4, 2}}) {
    auto g = pg_design(q, m, d);
    for (unsigned t = 1; t <= 2; ++t) {
      auto gc = complement_design(g, t);
      CHECK(is_t_design(gc, t).has_value());
    }
  }
}

TEST_CASE("parameters and incidence") {
  auto p = design_params(fano(), 2);
  CHECK(p.lambda == 1);
  CHECK(p.lambda1 == 3);
  CHECK(p.b == 7);
  CHECK_THROWS_AS(design_params(fano(), 3), NotATDesign);

  for (const auto& d : {fano(), ag_design(3, 2, 1), pg_design(2, 4, 1), ag_design(2, 3, 2), pg_design(3, 3, 1)}) {
    auto par = design_params(d, 2);
    // b C(k, t) = lambda C(v, t).
    CHECK(BigInt(par.b) * binomial(par.k, 2) == par.lambda * binomial(par.v, 2));
    auto m = incidence_matrix(d, Field::of_order(2));
    CHECK(m.rows() == d.b());
    for (std::size_t j = 0; j < d.v(); ++j) {
      std::size_t col = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) col += m.at(i, j);
      CHECK(par.lambda1 == col);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t row = 0;
      for (std::size_t j = 0; j < d.v(); ++j) row += m.at(i, j);
      CHECK(row == d.k());
    }
  }
  CHECK(rank(incidence_matrix(fano(), Field::of_order(2))) == 4);
  auto one = incidence_matrix(Design::make(4, {{1, 2}}), Field::of_order(3));
  CHECK(one.row_vector(0) == std::vector<Elem>{0, 1, 1, 0});
}

TEST_CASE("symmetric PG designs") {
  for (auto [q, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 3}, {4, 3}, {3, 4}})
    CHECK(pg_design(q, m, m - 2).b() == pg_design(q, m, m - 2).v());
}

TEST_CASE("text and JSON forms") {
  auto d = ag_design(3, 2, 1);
  auto text = design_to_text(d);
  CHECK(text.rfind("9 12 3\n", 0) == 0);
  CHECK(design_from_text(text) == d);
  auto j = design_summary_json(d, 2, BigInt(1));
  CHECK(j.find("\"lambda\"") != std::string::npos);
  CHECK_THROWS(design_from_text("3 1 2\n0 7\n"));
}
