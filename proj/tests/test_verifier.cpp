#include <doctest.h>

#include "designcodes/constructions.hpp"
#include "designcodes/verifier.hpp"
#include "oracles.hpp"

using namespace dcodes;

TEST_CASE("Assmus-Mattson on the binary simplex code") {
  const auto r = assmus_mattson(simplex(2, 3), 2);
  CHECK(r.d == 4);
  CHECK(r.d_dual == 3);
  CHECK(r.s_count == 2);
  CHECK(r.holds);
  CHECK(r.design_weights == std::vector<std::size_t>{4});
  CHECK(r.design_weights_dual == std::vector<std::size_t>{3, 4});
  CHECK(r.confirmed == r.design_weights);
  CHECK(r.confirmed_dual == r.design_weights_dual);
  CHECK(r.unchecked.empty());
  CHECK_THROWS_AS(assmus_mattson(simplex(2, 3), 4), TNotLessThanD);
}

TEST_CASE("Assmus-Mattson weight bound") {
  // Brute force over the defining inequality.
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::size_t v = 1; v <= 30; ++v)
      for (std::size_t d = 1; d <= v; ++d) {
        std::size_t want = 0;
        for (std::size_t w = 0; w <= v; ++w)
          if (w - (w + q - 2) / (q - 1) < d) want = w;
        CHECK(am_weight_bound(v, q, d) == want);
      }
  CHECK(am_weight_bound(7, 2, 3) == 7);
}

TEST_CASE("certify_distance agrees with exhaustive search") {
  for (auto [q, l, m] : {std::tuple{2u, 2u, 6u}, {3u, 2u, 4u}, {2u, 3u, 6u}}) {
    const auto c = grm(q, l, m);
    ComputeOptions small;
    small.budget = 200000;
    const auto d = certify_distance(c, c.n() + 1, small, affine_generators(q, m));
    CHECK(d.exact());
    CHECK(d.upper == weight_distribution(c).min_nonzero_weight());
  }
}

TEST_CASE("claims pass at small points") {
  const std::vector<std::pair<std::string, Params>> cases{
      {"T16iv", {{"q", 3}, {"m", 3}}},           {"T18", {{"q", 3}, {"m", 3}}},
      {"T20", {{"q", 4}, {"m", 3}}},             {"T22", {{"q", 3}, {"m", 3}}},
      {"T24", {{"q", 3}, {"m", 3}, {"t", 4}}},   {"T25", {{"q", 3}, {"m", 3}, {"r", 1}}},
      {"T26", {{"q", 3}, {"l", 2}, {"m", 3}}},   {"T27", {{"q", 4}, {"m", 2}}},
      {"T28", {{"q", 3}, {"l", 3}, {"m", 3}}},   {"CORO1", {{"q", 4}, {"m", 2}}},
      {"T29", {{"q", 3}, {"m", 2}}},             {"T30", {{"q", 3}, {"m", 2}}},
      {"T31", {{"q", 3}, {"m", 2}}},             {"T32", {{"q", 3}, {"m", 3}}},
      {"T33", {{"m", 3}}},
  };
  CHECK(claim_ids().size() == cases.size());
  for (const auto& [id, ps] : cases) {
    const auto r = verify_theorem(id, ps);
    INFO(r.to_json().dump());
    CHECK(r.pass);
    CHECK(!r.citation.empty());
  }
  CHECK_THROWS_AS(verify_theorem("T99", {}), BadParams);
  CHECK_THROWS_AS(verify_theorem("T20", {{"q", 3}}), BadParams);
  CHECK_THROWS_AS(verify_theorem("T20", {{"q", 6}, {"m", 2}}), BadParams);
}

TEST_CASE("T28 count matches an enumeration") {
  // Minimum weight words of R_3(1,2) are the nonconstant affine functions
  // vanishing on a line: count them directly.
  const auto c = grm(3, 1, 2);
  const auto wd = weight_distribution(c);
  const auto r = verify_theorem("T28", {{"q", 3}, {"l", 1}, {"m", 2}});
  CHECK(r.computed["A_d"] == wd.counts[6].str());
  CHECK(r.expected["A_d"] == "24");
}

TEST_CASE("budget refusals are reported") {
  ComputeOptions tiny;
  tiny.budget = 16;
  const auto r = verify_theorem("T24", {{"q", 2}, {"m", 7}, {"t", 3}}, tiny);
  CHECK(!r.pass);
  CHECK(r.error.rfind("budget_exceeded", 0) == 0);
}

TEST_CASE("claim grids") {
  CHECK(claim_grid("T33").size() == 3);
  CHECK(claim_grid("T20").size() == 31);
  for (const auto& ps : claim_grid("T26")) {
    const auto q = ps[0].second, l = ps[1].second, m = ps[2].second;
    CHECK(l >= 1);
    CHECK(l < (q - 1) * m);
  }
}

TEST_CASE("table rows at small sizes") {
  const auto t2 = reproduce_table(2);
  REQUIRE(t2.size() == 7);
  for (const auto& r : t2) {
    INFO(r.to_json().dump());
    CHECK(r.pass);
  }
  const auto text = format_table(2, t2);
  CHECK(text.find("[25,15,5]") != std::string::npos);
}

TEST_CASE("conjectures and sweep") {
  const auto c1 = check_conjecture("C1", {{4, 2}});
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].error.empty());
  CHECK(c1[0].computed["d"] == 2);
  const auto c2 = check_conjecture("C2", {{3, 3}});
  CHECK(c2[0].pass);
  CHECK_THROWS_AS(check_conjecture("C3", {}), BadParams);

  const auto s = sweep(2, 1, 3);
  REQUIRE(s.size() == 1);
  CHECK(s[0].computed["code"] == Json::array({8, 4, 4}));
  CHECK_THROWS_AS(sweep(2, 1, 3, 5), NoSuchWeight);
}
