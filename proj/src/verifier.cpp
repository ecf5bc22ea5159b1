#include "designcodes/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "designcodes/constructions.hpp"
#include "designcodes/design_code.hpp"

namespace dcodes {

namespace {

std::string str(const BigInt& x) { return x.str(); }

Json weights_json(const std::vector<std::size_t>& w) {
  Json out = Json::array();
  for (auto x : w) out.push_back(x);
  return out;
}

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Assmus-Mattson

std::size_t am_weight_bound(std::size_t v, std::uint64_t q, std::size_t d) {
  for (std::size_t w = v;; --w) {
    if (w - (w + q - 2) / (q - 1) < d) return w;
    if (w == 0) return 0;
  }
}

Json AMReport::to_json() const {
  Json j;
  j["t"] = t;
  j["d"] = d;
  j["d_dual"] = d_dual;
  j["w_big"] = w_big;
  j["w_big_dual"] = w_big_dual;
  j["s_count"] = s_count;
  j["holds"] = holds;
  j["design_weights"] = weights_json(design_weights);
  j["design_weights_dual"] = weights_json(design_weights_dual);
  j["confirmed"] = weights_json(confirmed);
  j["confirmed_dual"] = weights_json(confirmed_dual);
  j["unchecked"] = weights_json(unchecked);
  j["unchecked_dual"] = weights_json(unchecked_dual);
  return j;
}

namespace {

// Runs the t-design oracle on each claimed weight that fits the caps.
void confirm_designs(const LinearCode& code, unsigned t, const std::vector<std::size_t>& weights,
                     const ComputeOptions& opts, const BigInt& cap, std::vector<std::size_t>& confirmed,
                     std::vector<std::size_t>& unchecked) {
  for (auto w : weights) {
    if (code_size(code) > opts.budget || w < t) {
      unchecked.push_back(w);
      continue;
    }
    const auto d = support_design(code, w, opts);
    if (binomial(d.v(), t) * d.b() > cap) {
      unchecked.push_back(w);
      continue;
    }
    if (!is_t_design(d, t, cap))
      throw TheoremViolation("supports of weight " + std::to_string(w) + " do not form a " + std::to_string(t) +
                             "-design");
    confirmed.push_back(w);
  }
}

}  // namespace

AMReport assmus_mattson(const LinearCode& code, unsigned t, const ComputeOptions& opts, const BigInt& design_cap) {
  const auto wd = weight_distribution(code, opts);
  const auto wd_dual = macwilliams_transform(wd);
  const std::size_t v = code.n();
  const std::uint64_t q = code.field()->q();

  AMReport r;
  r.t = t;
  r.d = wd.min_nonzero_weight();
  r.d_dual = wd_dual.min_nonzero_weight();
  if (r.d == 0) throw ZeroCode();
  if (t == 0 || t >= r.d) throw TNotLessThanD("t = " + std::to_string(t) + " is not below d = " + std::to_string(r.d));
  r.w_big = am_weight_bound(v, q, r.d);
  r.w_big_dual = r.d_dual ? am_weight_bound(v, q, r.d_dual) : 0;
  for (std::size_t i = 1; i + t <= v; ++i) r.s_count += wd_dual.counts[i] != 0;
  r.holds = r.s_count + t <= r.d;
  if (!r.holds) return r;
  for (std::size_t i = r.d; i <= r.w_big; ++i)
    if (wd.counts[i] != 0) r.design_weights.push_back(i);
  if (r.d_dual)
    for (std::size_t i = r.d_dual; i <= std::min(v - t, r.w_big_dual); ++i)
      if (wd_dual.counts[i] != 0) r.design_weights_dual.push_back(i);

  confirm_designs(code, t, r.design_weights, opts, design_cap, r.confirmed, r.unchecked);
  if (!r.design_weights_dual.empty())
    confirm_designs(code.dual(), t, r.design_weights_dual, opts, design_cap, r.confirmed_dual, r.unchecked_dual);
  return r;
}

// ---------------------------------------------------------------------------
// Reports and distances

Json Report::to_json() const {
  Json j;
  j["claim_id"] = claim_id;
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["expected"] = expected;
  j["computed"] = computed;
  j["pass"] = pass;
  j["citation"] = citation;
  j["runtime_ms"] = runtime_ms;
  if (!error.empty()) j["error"] = error;
  return j;
}

namespace {

std::size_t weight_of(const std::vector<Elem>& v) {
  std::size_t w = 0;
  for (auto e : v) w += e != 0;
  return w;
}

// Lightest nonzero word among the rows and the combinations r_i - a r_j for
// the first few i.
std::size_t lightest(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  std::size_t best = 0;
  auto consider = [&](std::size_t w) {
    if (w && (!best || w < best)) best = w;
  };
  for (const auto& r : rows) consider(weight_of(r));
  const std::size_t heads = std::min<std::size_t>(rows.size(), 16);
  std::vector<Elem> tmp;
  for (std::size_t i = 0; i < heads; ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      for (Elem a = 1; a < f.q(); ++a) {
        tmp = rows[i];
        for (std::size_t c = 0; c < tmp.size(); ++c) tmp[c] = f.sub(tmp[c], f.mul(a, rows[j][c]));
        consider(weight_of(tmp));
      }
  return best;
}

std::vector<std::vector<Elem>> rows_of(const LinearCode& c) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < c.k(); ++i) out.push_back(c.generator().row_vector(i));
  return out;
}

std::vector<std::vector<Elem>> incidence_rows(const Design& d) {
  std::vector<std::vector<Elem>> out;
  for (const auto& b : d.blocks()) {
    std::vector<Elem> r(d.v(), 0);
    for (auto i : b) r[i] = 1;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Distance certify_distance(const LinearCode& code, std::size_t stop_at, const ComputeOptions& opts,
                          const std::vector<Permutation>& automorphisms,
                          const std::vector<std::vector<Elem>>& candidates) {
  if (code.k() == 0) throw ZeroCode();
  const BigInt q = code.field()->q();
  if (ipow(q, static_cast<unsigned>(code.k())) <= opts.budget ||
      ipow(q, static_cast<unsigned>(code.n() - code.k())) <= opts.budget) {
    const std::size_t d = weight_distribution(code, opts).min_nonzero_weight();
    return {d, d, "weight distribution"};
  }
  ComputeOptions o = opts;
  o.automorphisms.clear();
  if (!automorphisms.empty() && is_transitive_automorphism_group(code, automorphisms)) o.automorphisms = automorphisms;
  auto pool = rows_of(code);
  pool.insert(pool.end(), candidates.begin(), candidates.end());
  o.known_upper = lightest(*code.field(), pool);
  const auto b = min_distance_bounds(code, stop_at, o);
  return {b.lower, b.upper, o.automorphisms.empty() ? "disjoint information sets" : "information set and automorphisms"};
}

// ---------------------------------------------------------------------------
// Claim catalog

namespace {

struct Point {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
};

// (q, m) with q a prime power, m >= 2, q^m <= 729, and m <= 7 for q = 2.
std::vector<Point> base_grid() {
  std::vector<Point> out;
  for (std::uint32_t m = 2; m <= 10; ++m)
    for (std::uint64_t q = 2; upow(q, m) <= 729; ++q) {
      bool ok = true;
      try {
        prime_power(q);
      } catch (const BadParams&) {
        ok = false;
      }
      if (!ok) continue;
      if (q == 2 && m > 7) continue;
      out.push_back({q, m});
    }
  return out;
}

std::int64_t param(const Params& ps, const std::string& name) {
  for (const auto& [k, v] : ps)
    if (k == name) return v;
  throw BadParams("missing parameter " + name);
}

struct Ctx {
  const Params& params;
  const ComputeOptions& opts;
  Report& report;
};

struct Field2 {
  std::uint64_t q, p;
  std::uint32_t s, m;
  FieldPtr fp, fq;
};

Field2 fields(std::int64_t q_in, std::int64_t m_in, std::uint32_t min_m = 2) {
  if (q_in < 2 || m_in < min_m || m_in > 32) throw BadParams("need q >= 2 and m >= " + std::to_string(min_m));
  const auto q = static_cast<std::uint64_t>(q_in);
  const auto [p, s] = prime_power(q);
  if (upow(q, static_cast<std::uint32_t>(m_in)) > Field::kMaxOrder) throw BadParams("q^m too large");
  return {q, p, s, static_cast<std::uint32_t>(m_in), Field::get(p, 1), Field::get(p, s)};
}

// Refuses designs whose incidence matrix would exceed the budget in entries.
void guard_design(const BigInt& blocks, std::uint64_t v, const ComputeOptions& opts) {
  if (blocks * v > opts.budget) throw BudgetExceeded("design incidence matrix exceeds the budget", blocks * v);
}

Design simplex_design(const Field2& F, const ComputeOptions& opts) {
  return support_design(simplex(F.q, F.m), upow(F.q, F.m - 1), opts);
}

Design grm1_design(const Field2& F, const ComputeOptions& opts) {
  return support_design(grm(F.q, 1, F.m), (F.q - 1) * upow(F.q, F.m - 1), opts);
}

BigInt binom_pow(std::uint64_t p, std::uint32_t m, std::uint32_t s, std::int64_t top_extra, std::int64_t bottom) {
  return ipow(binomial(static_cast<std::int64_t>(p) + top_extra, bottom), s);
}

// Records d: exact when `exact_claim`, else whether the lower bound `bound`
// is certified (capped at the bound).
void put_distance(Ctx& c, const std::string& key, const LinearCode& code, std::size_t claim, bool exact_claim,
                  const std::vector<Permutation>& autos, const std::vector<std::vector<Elem>>& candidates) {
  if (exact_claim) {
    const auto d = certify_distance(code, code.n() + 1, c.opts, autos, candidates);
    c.report.expected[key] = claim;
    c.report.computed[key] = d.upper;
    c.report.computed[key + "_method"] = d.method;
    c.report.expected[key + "_method"] = d.method;
  } else {
    const auto d = certify_distance(code, claim, c.opts, autos, candidates);
    const std::string k = key + "_lower_bound";
    c.report.expected[k] = claim;
    c.report.computed[k] = d.lower >= claim ? claim : d.lower;
  }
}

void claim_t16iv(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto d = pg_design(F.q, F.m, F.m - 2);
  const auto code = code_of_design(d, F.fp);
  c.report.expected["n"] = projective_length(F.q, F.m);
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 2, F.m - 1) + 1);
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  c.report.citation = "dim C_p(PG_{m-2}(m-1,q)) = C(p+m-2, m-1)^s + 1";
}

void claim_t18(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto code = prm_star(F.q, 1, F.m);
  c.report.expected["n"] = projective_length(F.q, F.m);
  c.report.computed["n"] = code.n();
  put_distance(c, "d", code, 2 * upow(F.q, F.m - 2), true, {projective_rotation(F.q, F.m)},
               prm_evaluations(F.q, 1, F.m, false));
  c.report.citation = "PRM*(1, m-1, q) has minimum weight 2q^(m-2)";
}

void claim_t20(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto d = simplex_design(F, c.opts);
  const auto code = code_of_design(d, F.fp);
  c.report.expected["n"] = projective_length(F.q, F.m);
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 2, F.m - 1));
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  put_distance(c, "d", code, 2 * upow(F.q, F.m - 2), F.q == F.p, {projective_rotation(F.q, F.m)},
               incidence_rows(d));
  c.report.citation =
      "C_p(D) of the simplex design: [(q^m-1)/(q-1), C(p+m-2, m-1)^s, d], d >= 2q^(m-2), equality when q = p";
}

void claim_t22(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto d = simplex_design(F, c.opts);
  const auto dual = code_of_design(d, F.fp).dual();
  const std::size_t v = projective_length(F.q, F.m);
  c.report.expected["n"] = v;
  c.report.expected["k"] = str(BigInt(v) - binom_pow(F.p, F.m, F.s, F.m - 2, F.m - 1));
  c.report.computed["n"] = dual.n();
  c.report.computed["k"] = std::to_string(dual.k());
  const std::vector<Permutation> autos{projective_rotation(F.q, F.m)};
  if (F.q == F.p) {
    put_distance(c, "d", dual, F.p + 1, true, autos, {});
    c.report.expected["d_lower_bound"] = 3;
    c.report.computed["d_lower_bound"] = std::min<std::size_t>(c.report.computed["d"].get<std::size_t>(), 3);
  } else {
    put_distance(c, "d", dual, 3, false, autos, {});
  }
  c.report.citation = "C_p(D)^perp: [v, v - C(p+m-2, m-1)^s, d'], d' >= 3, d' = p + 1 when q = p";
}

void claim_t24(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"), 1);
  const std::int64_t t = param(c.params, "t");
  if (t < 1 || t > static_cast<std::int64_t>(F.m * (F.q - 1)) - 1) throw BadParams("need 1 <= t < m(q-1)");
  const std::uint64_t a = t / (F.q - 1), b = t % (F.q - 1);
  const auto code = mt_code(F.q, F.m, t, true);
  c.report.expected["n"] = upow(F.q, F.m);
  c.report.expected["k"] = mt_dimension(F.q, F.m, t);
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = code.k();
  put_distance(c, "d", code, (b + 1) * upow(F.q, a), true, affine_generators(F.q, F.m), {});
  c.report.citation = "extended M^t: length q^m, dim |{i : wt_q(i) <= m(q-1)-t}|, min weight (b+1)q^a, t = a(q-1)+b";
}

void claim_t25(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const std::int64_t r = param(c.params, "r");
  if (r < 1 || r >= F.m) throw BadParams("need 1 <= r <= m-1");
  guard_design(ipow(F.q, F.m - r) * gaussian_binomial(F.m, r, F.q), upow(F.q, F.m), c.opts);
  const auto d = ag_design(F.q, F.m, r);
  const auto code = code_of_design(d, F.fq);
  const auto mt = mt_code(F.q, F.m, r * (F.q - 1), true);
  c.report.expected["equals_extended_M"] = true;
  c.report.expected["k"] = mt_dimension(F.q, F.m, r * (F.q - 1));
  c.report.computed["equals_extended_M"] = code == mt;
  c.report.computed["k"] = code.k();
  put_distance(c, "d", code, upow(F.q, r), true, affine_generators(F.q, F.m), incidence_rows(d));
  c.report.citation = "C_q(AG_r(m,q)) is the extended M^(r(q-1)), min weight q^r";
}

std::pair<std::uint64_t, std::uint64_t> split_l(std::uint64_t l, std::uint64_t q) { return {l / (q - 1), l % (q - 1)}; }

void claim_t26(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"), 1);
  const std::int64_t l = param(c.params, "l");
  if (l < 1 || l >= static_cast<std::int64_t>((F.q - 1) * F.m)) throw BadParams("need 1 <= l < (q-1)m");
  const auto [l1, l0] = split_l(l, F.q);
  const auto code = grm_punctured(F.q, l, F.m);
  c.report.expected["n"] = upow(F.q, F.m) - 1;
  c.report.expected["k"] = str(grm_dimension(F.q, l, F.m));
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  put_distance(c, "d", code, (F.q - l0) * upow(F.q, F.m - l1 - 1) - 1, true, {punctured_rotation(F.q, F.m)}, {});
  c.report.citation = "R_q(l,m)*: length q^m-1, dim by the alternating double sum, d = (q-l0)q^(m-l1-1) - 1";
}

Json wd_json(const WeightDistribution& wd) {
  Json j = Json::object();
  for (std::size_t i = 0; i < wd.counts.size(); ++i)
    if (wd.counts[i] != 0) j[std::to_string(i)] = str(wd.counts[i]);
  return j;
}

void claim_t27(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"), 1);
  const std::uint64_t q = F.q, qm = upow(q, F.m), top = (q - 1) * upow(q, F.m - 1);
  const auto code = grm_punctured(q, 1, F.m);
  const auto wd = weight_distribution(code, c.opts);
  const auto dual = macwilliams_transform(wd);
  WeightDistribution want{qm - 1, q, F.m + 1, std::vector<BigInt>(qm, 0)};
  want.counts[0] += 1;
  want.counts[top - 1] += BigInt(q - 1) * (qm - 1);
  want.counts[top] += qm - 1;
  want.counts[qm - 1] += q - 1;
  c.report.expected["n"] = qm - 1;
  c.report.expected["k"] = F.m + 1;
  c.report.expected["d"] = top - 1;
  c.report.expected["weight_distribution"] = wd_json(want);
  c.report.expected["dual_k"] = qm - F.m - 2;
  if (qm - 1 > F.m + 1) c.report.expected["dual_d"] = q == 2 ? 4 : 3;
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = code.k();
  c.report.computed["d"] = wd.min_nonzero_weight();
  c.report.computed["weight_distribution"] = wd_json(wd);
  c.report.computed["dual_k"] = code.n() - code.k();
  if (code.k() < code.n()) c.report.computed["dual_d"] = dual.min_nonzero_weight();
  c.report.citation = "R_q(1,m)*: [q^m-1, m+1, (q-1)q^(m-1)-1], three nonzero weights; dual d = 4 if q = 2 else 3";
}

void claim_t28(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"), 1);
  const std::int64_t l = param(c.params, "l");
  if (l < 1 || l >= static_cast<std::int64_t>((F.q - 1) * F.m)) throw BadParams("need 1 <= l < (q-1)m");
  const auto [l1, l0] = split_l(l, F.q);
  const std::uint64_t q = F.q;
  const std::uint32_t m = F.m;
  BigInt num = BigInt(q - 1) * ipow(q, l1), den = 1;
  for (std::uint32_t i = l1 + 1; i <= m; ++i) num *= ipow(q, i) - 1;
  for (std::uint32_t i = 1; i <= m - l1; ++i) den *= ipow(q, i) - 1;
  BigInt count = num / den;
  if (l0 > 0) count = count * binomial(q, l0) * ((ipow(q, m - l1) - 1) / (q - 1));
  const std::size_t d = (q - l0) * upow(q, m - l1 - 1);
  const auto code = grm(q, l, m);
  const auto wd = weight_distribution(code, c.opts);
  c.report.expected["d"] = d;
  c.report.expected["A_d"] = str(count);
  c.report.computed["d"] = wd.min_nonzero_weight();
  c.report.computed["A_d"] = str(wd.counts[wd.min_nonzero_weight()]);
  c.report.citation = "number of minimum weight codewords of R_q(l,m)";
}

void claim_coro1(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  guard_design(ipow(F.q, 1) * gaussian_binomial(F.m, F.m - 1, F.q), upow(F.q, F.m), c.opts);
  const auto d = ag_design(F.q, F.m, F.m - 1);
  const auto code = code_of_design(d, F.fq);
  c.report.expected["n"] = upow(F.q, F.m);
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 1, F.m));
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  put_distance(c, "d", code, upow(F.q, F.m - 1), true, affine_generators(F.q, F.m), incidence_rows(d));
  c.report.citation = "C_q(AG_{m-1}(m,q)): length q^m, min weight q^(m-1), dim C(m+p-1, m)^s";
}

void claim_t29(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto d = grm1_design(F, c.opts);
  const auto code = code_of_design(d, F.fp);
  const auto ag = code_of_design(ag_design(F.q, F.m, F.m - 1), F.fp);
  c.report.expected["equals_code_of_AG"] = true;
  c.report.expected["n"] = upow(F.q, F.m);
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 1, F.m));
  c.report.computed["equals_code_of_AG"] = code == ag;
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  put_distance(c, "d", code, upow(F.q, F.m - 1), true, affine_generators(F.q, F.m), incidence_rows(complement_design(d)));
  c.report.citation = "C_p(D_{(q-1)q^(m-1)}(R_q(1,m))) = C_p(AG_{m-1}(m,q)), [q^m, C(p+m-1, m)^s, q^(m-1)]";
}

void claim_t30(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const std::size_t w = (F.q - 1) * upow(F.q, F.m - 1);
  const auto dstar = support_design(grm_punctured(F.q, 1, F.m), w - 1, c.opts);
  const auto code = code_of_design(dstar, F.fp);
  const auto ext = code_of_design(grm1_design(F, c.opts), F.fp);
  c.report.expected["is_punctured_code"] = true;
  c.report.expected["n"] = upow(F.q, F.m) - 1;
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 1, F.m));
  c.report.computed["is_punctured_code"] = code == ext.puncture(ext.n() - 1);
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  put_distance(c, "d", code, upow(F.q, F.m - 1) - 1, true, {punctured_rotation(F.q, F.m)}, incidence_rows(dstar));
  c.report.citation = "C_p(D_{(q-1)q^(m-1)-1}(R_q(1,m)*)): [q^m-1, C(p+m-1, m)^s, q^(m-1)-1]";
}

void claim_t31(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const auto dual = code_of_design(grm1_design(F, c.opts), F.fp).dual();
  const std::uint64_t n = upow(F.q, F.m);
  c.report.expected["n"] = n;
  c.report.expected["k"] = str(BigInt(n) - binom_pow(F.p, F.m, F.s, F.m - 1, F.m));
  c.report.computed["n"] = dual.n();
  c.report.computed["k"] = std::to_string(dual.k());
  if (F.s == 1) put_distance(c, "d", dual, 2 * F.p, true, affine_generators(F.q, F.m), {});
  else put_distance(c, "d", dual, F.q + 2, false, affine_generators(F.q, F.m), {});
  c.report.citation = "dual of C_p(D_{(q-1)q^(m-1)}(R_q(1,m))): d >= q+2 if s > 1, d = 2p if s = 1";
}

void claim_t32(Ctx& c) {
  auto F = fields(param(c.params, "q"), param(c.params, "m"));
  const std::size_t w = (F.q - 1) * upow(F.q, F.m - 1);
  const auto d2 = support_design(grm_punctured(F.q, 1, F.m), w, c.opts);
  const auto code = code_of_design(d2, F.fp);
  const auto sd = simplex_design(F, c.opts);
  const auto base = code_of_design(sd, F.fp);
  const auto d1 = certify_distance(base, base.n() + 1, c.opts, {projective_rotation(F.q, F.m)}, incidence_rows(sd));
  c.report.expected["n"] = upow(F.q, F.m) - 1;
  c.report.expected["k"] = str(binom_pow(F.p, F.m, F.s, F.m - 2, F.m - 1));
  c.report.computed["n"] = code.n();
  c.report.computed["k"] = std::to_string(code.k());
  c.report.computed["d_simplex_design_code"] = d1.upper;
  c.report.expected["d_simplex_design_code"] = d1.upper;
  put_distance(c, "d", code, (F.q - 1) * d1.upper, true, {punctured_rotation(F.q, F.m)}, incidence_rows(d2));
  c.report.citation = "C_p(D_{(q-1)q^(m-1)}(R_q(1,m)*)): [q^m-1, C(p+m-2, m-1)^s, (q-1) d(C_p(D))]";
}

void claim_t33(Ctx& c) {
  const std::int64_t m = param(c.params, "m");
  if (m < 2 || m > 6) throw BadParams("need 2 <= m <= 6");
  const auto r = grm(3, 2, m);
  const auto d = support_design(r, upow(3, m - 1), c.opts);
  const auto code = code_of_design(d, Field::get(3, 1));
  c.report.expected["identical"] = true;
  c.report.expected["k"] = r.k();
  c.report.computed["identical"] = code == r;
  c.report.computed["k"] = code.k();
  c.report.citation = "R_3(2,m) and C_3(D_{3^(m-1)}(R_3(2,m))) are identical";
}

struct ClaimDef {
  std::vector<std::string> params;
  std::function<void(Ctx&)> run;
};

const std::map<std::string, ClaimDef>& catalog() {
  static const std::map<std::string, ClaimDef> c{
      {"T16iv", {{"q", "m"}, claim_t16iv}}, {"T18", {{"q", "m"}, claim_t18}},
      {"T20", {{"q", "m"}, claim_t20}},     {"T22", {{"q", "m"}, claim_t22}},
      {"T24", {{"q", "m", "t"}, claim_t24}}, {"T25", {{"q", "m", "r"}, claim_t25}},
      {"T26", {{"q", "l", "m"}, claim_t26}}, {"T27", {{"q", "m"}, claim_t27}},
      {"T28", {{"q", "l", "m"}, claim_t28}}, {"CORO1", {{"q", "m"}, claim_coro1}},
      {"T29", {{"q", "m"}, claim_t29}},     {"T30", {{"q", "m"}, claim_t30}},
      {"T31", {{"q", "m"}, claim_t31}},     {"T32", {{"q", "m"}, claim_t32}},
      {"T33", {{"m"}, claim_t33}},
  };
  return c;
}

template <class F>
Report timed(const std::string& id, const Params& params, F&& body) {
  Report r;
  r.claim_id = id;
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
    r.pass = r.error.empty() && r.expected == r.computed;
  } catch (const BudgetExceeded& e) {
    r.error = std::string("budget_exceeded: ") + e.what();
  } catch (const Infeasible& e) {
    r.error = std::string("infeasible: ") + e.what();
  } catch (const ConstructionMismatch& e) {
    r.error = std::string("construction_mismatch: ") + e.what();
  } catch (const TheoremViolation& e) {
    r.error = std::string("theorem_violation: ") + e.what();
  } catch (const WeightEnumeratorMismatch& e) {
    r.error = std::string("weight_enumerator_mismatch: ") + e.what();
  }
  if (!r.error.empty()) r.pass = false;
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& [k, v] : catalog()) out.push_back(k);
  return out;
}

std::vector<std::string> claim_parameters(const std::string& claim_id) {
  auto it = catalog().find(claim_id);
  if (it == catalog().end()) throw BadParams("unknown claim " + claim_id);
  return it->second.params;
}

std::vector<Params> claim_grid(const std::string& claim_id) {
  claim_parameters(claim_id);
  std::vector<Params> out;
  if (claim_id == "T33") {
    for (std::int64_t m : {2, 3, 4}) out.push_back({{"m", m}});
    return out;
  }
  for (const auto& pt : base_grid()) {
    const auto q = static_cast<std::int64_t>(pt.q), m = static_cast<std::int64_t>(pt.m);
    if (claim_id == "T24") {
      for (std::int64_t t = 1; t < m * (q - 1); ++t) out.push_back({{"q", q}, {"m", m}, {"t", t}});
    } else if (claim_id == "T25") {
      for (std::int64_t r = 1; r < m; ++r) out.push_back({{"q", q}, {"m", m}, {"r", r}});
    } else if (claim_id == "T26" || claim_id == "T28") {
      for (std::int64_t l = 1; l < m * (q - 1); ++l) out.push_back({{"q", q}, {"l", l}, {"m", m}});
    } else {
      out.push_back({{"q", q}, {"m", m}});
    }
  }
  return out;
}

Report verify_theorem(const std::string& claim_id, const Params& params, const ComputeOptions& opts) {
  auto it = catalog().find(claim_id);
  if (it == catalog().end()) throw BadParams("unknown claim " + claim_id);
  for (const auto& name : it->second.params) param(params, name);
  return timed(claim_id, params, [&](Report& r) {
    Ctx c{params, opts, r};
    it->second.run(c);
  });
}

// ---------------------------------------------------------------------------
// Tables

namespace {

Json nkd(std::size_t n, std::size_t k, std::size_t d) { return Json::array({n, k, d}); }

struct Table1Row {
  std::uint64_t q;
  std::uint32_t m;
  std::array<std::size_t, 3> left, right;
};

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows{
      {3, 2, {4, 3, 2}, {4, 4, 1}},         {3, 3, {13, 6, 6}, {13, 7, 4}},     {3, 4, {40, 10, 18}, {40, 11, 13}},
      {3, 5, {121, 15, 54}, {121, 16, 40}}, {4, 2, {5, 4, 2}, {5, 5, 1}},       {4, 3, {21, 9, 8}, {21, 10, 5}},
      {4, 4, {85, 16, 32}, {85, 17, 21}},   {5, 2, {6, 5, 2}, {6, 6, 1}},       {5, 3, {31, 15, 10}, {31, 16, 6}},
  };
  return rows;
}

struct Table2Row {
  std::uint64_t p;
  std::uint32_t m, r;
  std::array<std::size_t, 3> left, right;
};

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows{
      {3, 2, 1, {9, 3, 6}, {9, 6, 3}},       {3, 3, 1, {27, 4, 18}, {27, 10, 9}}, {3, 4, 1, {81, 5, 54}, {81, 15, 27}},
      {3, 3, 2, {27, 10, 9}, {27, 10, 9}},   {3, 4, 2, {81, 15, 27}, {81, 15, 27}}, {5, 2, 2, {25, 6, 15}, {25, 15, 5}},
      {3, 3, 3, {27, 17, 6}, {27, 23, 3}},
  };
  return rows;
}

Json params_of(const LinearCode& c, const ComputeOptions& opts, const std::vector<Permutation>& autos,
               const std::vector<std::vector<Elem>>& candidates) {
  const auto d = certify_distance(c, c.n() + 1, opts, autos, candidates);
  return nkd(c.n(), c.k(), d.upper);
}

}  // namespace

std::vector<Report> reproduce_table(int which, const ComputeOptions& opts) {
  std::vector<Report> out;
  if (which == 1) {
    for (const auto& row : table1_rows()) {
      Params ps{{"q", static_cast<std::int64_t>(row.q)}, {"m", row.m}};
      out.push_back(timed("table1", ps, [&](Report& r) {
        auto F = fields(row.q, row.m);
        const auto rot = projective_rotation(row.q, row.m);
        const auto sd = simplex_design(F, opts);
        const auto pg = pg_design(row.q, row.m, row.m - 2);
        r.expected["C_p(D)"] = nkd(row.left[0], row.left[1], row.left[2]);
        r.expected["C_p(PG)"] = nkd(row.right[0], row.right[1], row.right[2]);
        r.computed["C_p(D)"] = params_of(code_of_design(sd, F.fp), opts, {rot}, incidence_rows(sd));
        r.computed["C_p(PG)"] = params_of(code_of_design(pg, F.fp), opts, {rot}, incidence_rows(pg));
        r.citation = "parameters of C_p(D) and C_p(PG_{m-2}(m-1,q))";
      }));
    }
  } else if (which == 2) {
    for (const auto& row : table2_rows()) {
      Params ps{{"p", static_cast<std::int64_t>(row.p)}, {"m", row.m}, {"r", row.r}};
      out.push_back(timed("table2", ps, [&](Report& r) {
        const auto autos = affine_generators(row.p, row.m);
        const auto code = grm(row.p, row.r, row.m);
        r.expected["R_p(r,m)"] = nkd(row.left[0], row.left[1], row.left[2]);
        r.expected["C_p(D_d)"] = nkd(row.right[0], row.right[1], row.right[2]);
        const auto left = params_of(code, opts, autos, {});
        r.computed["R_p(r,m)"] = left;
        const auto d = support_design(code, left[2].get<std::size_t>(), opts);
        r.computed["C_p(D_d)"] = params_of(code_of_design(d, Field::get(row.p, 1)), opts, autos, incidence_rows(d));
        r.citation = "parameters of R_p(r,m) and C_p(D_d(R_p(r,m)))";
      }));
    }
  } else {
    throw BadParams("table must be 1 or 2");
  }
  return out;
}

namespace {

std::string bracket(const Json& a) {
  if (!a.is_array()) return "?";
  std::ostringstream s;
  s << "[" << a[0].get<std::size_t>() << "," << a[1].get<std::size_t>() << "," << a[2].get<std::size_t>() << "]";
  return s.str();
}

}  // namespace

std::string format_table(int which, const std::vector<Report>& rows) {
  const char* left = which == 1 ? "C_p(D)" : "R_p(r,m)";
  const char* right = which == 1 ? "C_p(PG)" : "C_p(D_d)";
  std::ostringstream s;
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-16s %-16s %-16s %-16s %s\n", which == 1 ? "(q,m)" : "(p,m,r)", left,
                "computed", right, "computed", "pass");
  s << line;
  for (const auto& r : rows) {
    std::string key = "(";
    for (std::size_t i = 0; i < r.params.size(); ++i) key += (i ? "," : "") + std::to_string(r.params[i].second);
    key += ")";
    const Json none;
    std::snprintf(line, sizeof line, "%-10s %-16s %-16s %-16s %-16s %s\n", key.c_str(),
                  bracket(r.expected.value(left, none)).c_str(), bracket(r.computed.value(left, none)).c_str(),
                  bracket(r.expected.value(right, none)).c_str(), bracket(r.computed.value(right, none)).c_str(),
                  r.pass ? "yes" : (r.error.empty() ? "NO" : "error"));
    s << line;
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// Conjectures and sweeps

std::vector<std::pair<std::uint64_t, std::uint32_t>> default_conjecture_grid() {
  return {{4, 2}, {4, 3}, {8, 2}, {9, 2}, {8, 3}, {9, 3}, {16, 2}};
}

std::vector<Report> check_conjecture(const std::string& id,
                                     const std::vector<std::pair<std::uint64_t, std::uint32_t>>& grid,
                                     const ComputeOptions& opts) {
  if (id != "C1" && id != "C2") throw BadParams("conjecture must be C1 or C2");
  std::vector<Report> out;
  for (const auto& [q, m] : grid) {
    Params ps{{"q", static_cast<std::int64_t>(q)}, {"m", m}};
    out.push_back(timed(id, ps, [&](Report& r) {
      auto F = fields(q, m);
      const auto sd = simplex_design(F, opts);
      auto code = code_of_design(sd, F.fp);
      const std::vector<Permutation> autos{projective_rotation(q, m)};
      if (id == "C1") {
        const auto d = certify_distance(code, code.n() + 1, opts, autos, incidence_rows(sd));
        r.expected["d"] = 2 * upow(q, m - 2);
        r.computed["d"] = d.upper;
        r.citation = "conjecture: d(C_p(D)) = 2q^(m-2) for the simplex design D";
      } else {
        const auto dual = code.dual();
        const auto d = certify_distance(dual, dual.n() + 1, opts, autos, {});
        r.expected["d_dual"] = q + 1;
        r.computed["d_dual"] = d.upper;
        r.citation = "conjecture: d(C_p(D)^perp) = q + 1 for the simplex design D";
      }
    }));
  }
  return out;
}

std::vector<Report> sweep(std::uint64_t q, std::uint64_t l, std::uint32_t m, std::size_t weight,
                          const ComputeOptions& opts) {
  auto F = fields(q, m, 1);
  const auto code = grm(q, l, m);
  const auto wd = weight_distribution(code, opts);
  std::vector<std::size_t> weights;
  for (auto w : wd.support())
    if (w < code.n() && (weight == 0 || w == weight)) weights.push_back(w);
  if (weight && weights.empty()) throw NoSuchWeight("no codewords of weight " + std::to_string(weight));
  const auto autos = affine_generators(q, m);
  std::vector<Report> out;
  for (auto w : weights) {
    Params ps{{"q", static_cast<std::int64_t>(q)}, {"l", static_cast<std::int64_t>(l)}, {"m", m},
              {"i", static_cast<std::int64_t>(w)}};
    out.push_back(timed("sweep", ps, [&](Report& r) {
      const auto d = support_design(code, w, opts);
      const auto c = code_of_design(d, F.fp);
      const auto dist = certify_distance(c, c.n() + 1, opts, autos, incidence_rows(d));
      r.computed["blocks"] = d.b();
      r.computed["lambda_2"] = Json();
      if (binomial(d.v(), 2) * d.b() <= default_design_cap()) {
        const auto lam = is_t_design(d, 2);
        if (lam) r.computed["lambda_2"] = str(*lam);
      }
      r.computed["code"] = nkd(c.n(), c.k(), dist.upper);
      r.computed["dual_k"] = c.n() - c.k();
      r.expected = r.computed;
      r.citation = "parameters of C_p(D_i(R_q(l,m)))";
    }));
  }
  return out;
}

}  // namespace dcodes
