#include "designcodes/designs.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dcodes {

Design Design::make(std::size_t v, std::vector<Block> blocks, std::vector<std::string> labels) {
  if (blocks.empty()) throw EmptyInput();
  if (!labels.empty() && labels.size() != v) throw BadParams("label count differs from point count");
  for (auto& blk : blocks) {
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) throw BadParams("block repeats a point");
    if (!blk.empty() && blk.back() >= v) throw BadParams("block point out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  const std::size_t k = blocks.front().size();
  for (const auto& blk : blocks)
    if (blk.size() != k) throw BadParams("blocks have different sizes");
  if (k == 0) throw BadParams("empty blocks");
  return Design(v, k, std::move(blocks), std::move(labels));
}

Design support_design(const LinearCode& code, std::size_t w, const ComputeOptions& opts) {
  if (w == 0 || w > code.n()) throw NoSuchWeight("weight " + std::to_string(w) + " out of range");
  const auto supports = codeword_supports(code, w, opts);
  if (supports.empty()) throw NoSuchWeight("no codewords of weight " + std::to_string(w));
  std::vector<Block> blocks;
  blocks.reserve(supports.size());
  for (const auto& bits : supports) {
    Block blk;
    for (std::size_t j = 0; j < code.n(); ++j)
      if ((bits[j / 64] >> (j % 64)) & 1) blk.push_back(static_cast<std::uint32_t>(j));
    blocks.push_back(std::move(blk));
  }
  return Design::make(code.n(), std::move(blocks), code.labels());
}

namespace {

// C(a, b) for small arguments, as 64-bit integers; rows up to v.
std::vector<std::vector<std::uint64_t>> binomial_table(std::size_t v, unsigned t) {
  std::vector<std::vector<std::uint64_t>> c(v + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (std::size_t a = 0; a <= v; ++a) {
    c[a][0] = 1;
    for (unsigned b = 1; b <= t && b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
  }
  return c;
}

}  // namespace

std::optional<BigInt> is_t_design(const Design& d, unsigned t, const BigInt& cap) {
  if (t < 1 || t > d.k()) throw OutOfRange("t must satisfy 1 <= t <= k");
  const BigInt subsets = binomial(static_cast<std::int64_t>(d.v()), t);
  if (subsets * d.b() > cap) throw Infeasible("t-design check exceeds the subset budget");
  const auto c = binomial_table(d.v(), t);
  std::vector<std::uint32_t> count(static_cast<std::size_t>(subsets), 0);

  // Every t-subset of each block, ranked in colex order.
  std::vector<unsigned> idx(t);
  for (const auto& blk : d.blocks()) {
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    for (;;) {
      std::uint64_t rank = 0;
      for (unsigned i = 0; i < t; ++i) rank += c[blk[idx[i]]][i + 1];
      ++count[rank];
      int i = static_cast<int>(t) - 1;
      while (i >= 0 && idx[i] == d.k() - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (unsigned j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  const std::uint32_t first = count.front();
  for (auto x : count)
    if (x != first) return std::nullopt;
  return BigInt(first);
}

BigInt complement_lambda(std::size_t v, std::size_t k, unsigned t, const BigInt& lambda) {
  const auto vt = static_cast<std::int64_t>(v) - t;
  const BigInt num = lambda * binomial(vt, static_cast<std::int64_t>(k));
  const BigInt den = binomial(vt, static_cast<std::int64_t>(k) - t);
  if (den == 0 || num % den != 0) throw BadParams("complementary index is not an integer");
  return num / den;
}

BigInt lambda_one(std::size_t v, std::size_t k, unsigned t, const BigInt& lambda) {
  if (t == 0) throw OutOfRange("lambda_1 needs t >= 1");
  const BigInt num = lambda * binomial(static_cast<std::int64_t>(v) - 1, t - 1);
  const BigInt den = binomial(static_cast<std::int64_t>(k) - 1, t - 1);
  if (den == 0 || num % den != 0) throw BadParams("lambda_1 is not an integer");
  return num / den;
}

Design complement_design(const Design& d, std::optional<unsigned> check_t) {
  if (d.k() == d.v()) throw BadParams("complement of a full block is empty");
  std::optional<BigInt> lambda;
  if (check_t) {
    lambda = is_t_design(d, *check_t);
    if (!lambda) throw NotATDesign("input is not a " + std::to_string(*check_t) + "-design");
  }
  std::vector<Block> blocks;
  blocks.reserve(d.b());
  for (const auto& blk : d.blocks()) {
    Block c;
    std::size_t i = 0;
    for (std::uint32_t x = 0; x < d.v(); ++x) {
      if (i < blk.size() && blk[i] == x) ++i;
      else c.push_back(x);
    }
    blocks.push_back(std::move(c));
  }
  Design out = Design::make(d.v(), std::move(blocks), d.labels());
  if (check_t && *check_t <= out.k()) {
    const auto lc = is_t_design(out, *check_t);
    if (!lc || *lc != complement_lambda(d.v(), d.k(), *check_t, *lambda))
      throw TheoremViolation("complementary design index disagrees with the complement formula");
  }
  return out;
}

DesignParams design_params(const Design& d, unsigned t, const BigInt& cap) {
  const auto lambda = is_t_design(d, t, cap);
  if (!lambda) throw NotATDesign("not a " + std::to_string(t) + "-design");
  DesignParams p;
  p.t = t;
  p.v = d.v();
  p.k = d.k();
  p.lambda = *lambda;
  p.b = d.b();
  p.lambda1 = lambda_one(d.v(), d.k(), t, *lambda);
  return p;
}

Matrix incidence_matrix(const Design& d, const FieldPtr& field) {
  Matrix m(field, d.b(), d.v());
  for (std::size_t i = 0; i < d.b(); ++i)
    for (auto x : d.blocks()[i]) m.at(i, x) = 1;
  return m;
}

std::string design_to_text(const Design& d) {
  std::ostringstream out;
  out << d.v() << ' ' << d.b() << ' ' << d.k() << '\n';
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i];
    out << '\n';
  }
  return out.str();
}

Design design_from_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t v = 0, b = 0, k = 0;
  if (!(in >> v >> b >> k)) throw BadParams("design header must be 'v b k'");
  std::vector<Block> blocks(b, Block(k));
  for (auto& blk : blocks)
    for (auto& x : blk)
      if (!(in >> x)) throw BadParams("truncated design file");
  Design d = Design::make(v, std::move(blocks));
  if (d.b() != b) throw BadParams("design file repeats a block");
  return d;
}

std::string design_summary_json(const Design& d, unsigned t_checked, const std::optional<BigInt>& lambda) {
  nlohmann::ordered_json j;
  j["v"] = d.v();
  j["b"] = d.b();
  j["k"] = d.k();
  j["t_checked"] = t_checked;
  if (lambda) j["lambda"] = lambda->str();
  else j["lambda"] = nullptr;
  return j.dump();
}

}  // namespace dcodes
