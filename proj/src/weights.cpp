#include "designcodes/weights.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "packed.hpp"

namespace dcodes {

namespace {

using detail::PackedSet;
using detail::Word;

struct WordsHash {
  std::size_t operator()(const std::vector<Word>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : v) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

unsigned resolve_threads(unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

std::uint64_t upow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Enumerates one representative of every projective class of nonzero
// codewords: the codewords whose first nonzero message coordinate is 1.
// Leading row i contributes g_i plus every GF(p)-combination of
// {x^l g_j : j > i, l < s}, walked in modular Gray-code order so each step
// adds exactly one packed generator.
template <class K>
class ProjectiveWalk {
 public:
  ProjectiveWalk(const LinearCode& code, const K& kernel)
      : kernel_(kernel), p_(code.field()->p()), s_(code.field()->s()), k_(code.k()), rows_(kernel), gens_(kernel) {
    const Field& f = *code.field();
    std::vector<Elem> v(code.n());
    for (std::size_t i = 0; i < k_; ++i) {
      auto g = code.generator().row(i);
      rows_.push(g);
      Elem xl = 1;
      for (std::uint32_t l = 0; l < s_; ++l, xl *= p_) {
        for (std::size_t j = 0; j < g.size(); ++j) v[j] = f.mul(xl, g[j]);
        gens_.push(v);
      }
    }
    unsigned bits_per_digit = 1;
    while ((1u << bits_per_digit) < p_) ++bits_per_digit;
    chunk_cap_ = std::max<std::size_t>(1, 18 / bits_per_digit);
    for (std::size_t i = 0; i < k_; ++i) {
      const std::size_t free = s_ * (k_ - 1 - i);
      const std::size_t c = std::min(free, chunk_cap_);
      leads_.push_back({i, free, c, upow(p_, free - c)});
    }
  }

  std::uint64_t task_count() const {
    std::uint64_t t = 0;
    for (const auto& l : leads_) t += l.chunks;
    return t;
  }

  /// Runs `visit(acc)` over every codeword of task `task`.
  template <class Visit>
  void run_task(std::uint64_t task, std::vector<Word>& acc, Visit& visit) const {
    std::size_t li = 0;
    while (task >= leads_[li].chunks) task -= leads_[li++].chunks;
    const Lead& lead = leads_[li];
    const std::size_t words = kernel_.words();
    auto gen = [&](std::size_t j) { return gens_[(lead.row + 1) * s_ + j]; };

    acc.assign(rows_[lead.row], rows_[lead.row] + words);
    // Gray digits of t0 = task * p^c: g_j = t_j - t_{j+1} (mod p).
    std::vector<std::uint32_t> t(lead.free + 1, 0);
    std::uint64_t x = task;
    for (std::size_t j = lead.chunk_digits; j < lead.free; ++j) {
      t[j] = static_cast<std::uint32_t>(x % p_);
      x /= p_;
    }
    for (std::size_t j = 0; j < lead.free; ++j) {
      const std::uint32_t g = (t[j] + p_ - t[j + 1]) % p_;
      for (std::uint32_t r = 0; r < g; ++r) kernel_.add(acc.data(), gen(j));
    }
    visit(acc.data());

    const std::size_t c = lead.chunk_digits;
    if (c == 0) return;
    if (p_ == 2) {
      const std::uint64_t steps = std::uint64_t{1} << c;
      for (std::uint64_t tt = 1; tt < steps; ++tt) {
        kernel_.add(acc.data(), gen(static_cast<std::size_t>(std::countr_zero(tt))));
        visit(acc.data());
      }
      return;
    }
    std::vector<std::uint32_t> d(c + 1, 0);
    for (;;) {
      std::size_t j = 0;
      while (j < c && d[j] == p_ - 1) d[j++] = 0;
      if (j == c) break;
      ++d[j];
      kernel_.add(acc.data(), gen(j));
      visit(acc.data());
    }
  }

 private:
  struct Lead {
    std::size_t row;
    std::size_t free;
    std::size_t chunk_digits;
    std::uint64_t chunks;
  };

  const K& kernel_;
  std::uint32_t p_;
  std::uint32_t s_;
  std::size_t k_;
  PackedSet<K> rows_;
  PackedSet<K> gens_;
  std::size_t chunk_cap_ = 1;
  std::vector<Lead> leads_;
};

// Runs the projective walk across worker threads. `make` builds one visitor
// per worker; `merge` folds a finished visitor into the shared result.
template <class K, class Make, class Merge>
void parallel_walk(const LinearCode& code, const K& kernel, unsigned threads, Make make, Merge merge) {
  if (code.k() == 0) return;
  ProjectiveWalk<K> walk(code, kernel);
  const std::uint64_t tasks = walk.task_count();
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    auto visit = make();
    std::vector<Word> acc;
    for (std::uint64_t t; (t = next.fetch_add(1)) < tasks;) walk.run_task(t, acc, visit);
    std::lock_guard lock(mu);
    merge(visit);
  };
  const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), tasks));
  if (n <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

template <class K>
struct Histogram {
  const K* kernel;
  std::vector<std::uint64_t> counts;
  void operator()(const Word* acc) { ++counts[kernel->weight(acc)]; }
};

template <class K>
struct SupportCollector {
  const K* kernel;
  std::size_t weight;
  std::size_t words;
  std::unordered_set<std::vector<Word>, WordsHash> found;
  std::vector<Word> tmp;
  void operator()(const Word* acc) {
    if (kernel->weight(acc) != weight) return;
    tmp.resize(words);
    kernel->support(acc, tmp.data());
    found.insert(tmp);
  }
};

}  // namespace

BigInt code_size(const LinearCode& code) { return ipow(code.field()->q(), static_cast<unsigned>(code.k())); }

std::size_t WeightDistribution::min_nonzero_weight() const {
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) return i;
  return 0;
}

std::vector<std::size_t> WeightDistribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] != 0) out.push_back(i);
  return out;
}

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

std::string WeightDistribution::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["q"] = q;
  j["k"] = k;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : counts) arr.push_back(c.str());
  j["counts"] = arr;
  return j.dump();
}

WeightDistribution WeightDistribution::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  WeightDistribution wd;
  wd.n = j.at("n").get<std::size_t>();
  wd.q = j.at("q").get<std::uint64_t>();
  wd.k = j.at("k").get<std::size_t>();
  for (const auto& c : j.at("counts")) wd.counts.emplace_back(c.get<std::string>());
  if (wd.counts.size() != wd.n + 1) throw OutOfRange("weight distribution has wrong number of counts");
  return wd;
}

WeightDistribution enumerate_weight_distribution(const LinearCode& code, unsigned threads) {
  WeightDistribution wd;
  wd.n = code.n();
  wd.q = code.field()->q();
  wd.k = code.k();
  wd.counts.assign(code.n() + 1, 0);
  wd.counts[0] = 1;
  std::vector<std::uint64_t> total(code.n() + 1, 0);
  detail::with_kernel(code.n(), code.field()->p(), code.field()->s(), [&](const auto& kernel) {
    using K = std::decay_t<decltype(kernel)>;
    parallel_walk(
        code, kernel, threads, [&] { return Histogram<K>{&kernel, std::vector<std::uint64_t>(code.n() + 1, 0)}; },
        [&](const Histogram<K>& h) {
          for (std::size_t i = 0; i < total.size(); ++i) total[i] += h.counts[i];
        });
  });
  const BigInt scalars = wd.q - 1;
  for (std::size_t i = 1; i <= code.n(); ++i) wd.counts[i] = scalars * total[i];
  return wd;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd) {
  const std::size_t n = wd.n;
  const BigInt q = wd.q;
  const BigInt size = ipow(q, static_cast<unsigned>(wd.k));
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (std::size_t b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : BigInt(0));
  }
  std::vector<BigInt> qpow(n + 1);
  qpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);

  WeightDistribution out;
  out.n = n;
  out.q = wd.q;
  out.k = n - wd.k;
  out.counts.assign(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (wd.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_h (-1)^h (q-1)^(j-h) C(i,h) C(n-i,j-h)
      BigInt kr = 0;
      for (std::size_t h = 0; h <= std::min(i, j); ++h) {
        if (j - h > n - i) continue;
        BigInt term = qpow[j - h] * binom[i][h] * binom[n - i][j - h];
        if (h % 2) kr -= term;
        else kr += term;
      }
      acc += wd.counts[i] * kr;
    }
    if (acc % size != 0) throw Error("MacWilliams transform produced a non-integral count");
    out.counts[j] = acc / size;
  }
  return out;
}

WeightDistribution weight_distribution(const LinearCode& code, const ComputeOptions& opts) {
  const BigInt q = code.field()->q();
  const BigInt direct = ipow(q, static_cast<unsigned>(code.k()));
  if (direct <= opts.budget) return enumerate_weight_distribution(code, opts.threads);
  const BigInt via_dual = ipow(q, static_cast<unsigned>(code.n() - code.k()));
  if (via_dual <= opts.budget) return macwilliams_transform(enumerate_weight_distribution(code.dual(), opts.threads));
  throw BudgetExceeded("weight distribution exceeds the enumeration budget", std::min(direct, via_dual));
}

namespace {

struct InfoSet {
  Matrix gamma;       // systematic generator, identity on k pivot columns
  std::size_t rank;   // pivots inside this set's own (disjoint) columns
};

std::vector<InfoSet> information_sets(const LinearCode& code) {
  const std::size_t n = code.n(), k = code.k();
  std::vector<InfoSet> sets;
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  while (!remaining.empty()) {
    std::vector<char> in_rem(n, 0);
    for (auto c : remaining) in_rem[c] = 1;
    std::vector<std::size_t> order = remaining;
    for (std::size_t c = 0; c < n; ++c)
      if (!in_rem[c]) order.push_back(c);
    Matrix g = code.generator().select_columns(order);
    const auto piv = rref(g);
    std::size_t r = 0;
    std::vector<char> used(n, 0);
    for (auto pc : piv)
      if (pc < remaining.size()) {
        ++r;
        used[order[pc]] = 1;
      }
    if (r == 0) break;
    Matrix gamma(code.field(), k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0; c < n; ++c) gamma.at(i, order[c]) = g.at(i, c);
    sets.push_back({std::move(gamma), r});
    std::vector<std::size_t> next;
    for (auto c : remaining)
      if (!used[c]) next.push_back(c);
    remaining.swap(next);
  }
  return sets;
}

// Low-weight search over information sets. In the default mode the sets are
// pairwise disjoint and a codeword of weight d must put at most about d/#sets
// nonzeros on one of them (Brouwer-Zimmermann). With a transitive group of
// automorphisms a single set suffices: some image of any weight-d word meets
// it in at most floor(d k / n) positions.
template <class K>
class InfoSetSearch {
 public:
  InfoSetSearch(const LinearCode& code, const K& kernel, const ComputeOptions& opts, bool transitive)
      : kernel_(kernel), n_(code.n()), q_(code.field()->q()), k_(code.k()), budget_(opts.budget),
        transitive_(transitive), known_upper_(opts.known_upper) {
    const Field& f = *code.field();
    std::vector<InfoSet> sets;
    if (transitive) sets.push_back({code.generator(), k_});
    else sets = information_sets(code);
    std::vector<Elem> v(code.n());
    for (auto& set : sets) {
      PackedSet<K> mults(kernel);
      for (std::size_t r = 0; r < k_; ++r)
        for (Elem lam = 1; lam < q_; ++lam) {
          for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.mul(lam, set.gamma.at(r, j));
          mults.push(v);
        }
      ranks_.push_back(set.rank);
      mults_.push_back(std::move(mults));
    }
    stack_.assign((k_ + 1) * kernel.words(), 0);
  }

  DistanceBounds run(std::size_t stop_at) {
    const std::size_t sets = ranks_.size();
    std::vector<std::size_t> done(sets, 0);
    auto lower_bound = [&] {
      if (transitive_) return (done[0] + 1) * n_ / k_ + ((done[0] + 1) * n_ % k_ != 0);
      std::size_t lb = 0;
      for (std::size_t j = 0; j < sets; ++j) {
        const std::size_t need = done[j] + 1, deficit = k_ - ranks_[j];
        if (need > deficit) lb += need - deficit;
      }
      return std::max<std::size_t>(lb, 1);
    };
    upper_ = known_upper_ ? std::min(n_, known_upper_) : n_;
    if (known_upper_) precheck(std::min(stop_at, upper_), lower_bound, done);
    for (std::size_t w = 1; w <= k_; ++w) {
      for (std::size_t j = 0; j < sets; ++j) {
        // Sets too small to raise the bound at this level are skipped.
        if (w + 1 <= k_ - ranks_[j]) continue;
        const BigInt leaves = level_leaves(w);
        if (work_ + leaves > budget_)
          throw BudgetExceeded("minimum-distance search exceeds the budget", work_ + leaves);
        work_ += leaves;
        level_ = w;
        set_ = j;
        descend(0, 0);
        done[j] = w;
        if (ranks_[j] == k_ && w == k_) return {upper_, upper_};
        const std::size_t lb = lower_bound();
        if (lb >= upper_) return {upper_, upper_};
        if (lb >= stop_at) return {lb, upper_};
      }
    }
    return {upper_, upper_};
  }

 private:
  BigInt level_leaves(std::size_t w) const {
    return binomial(static_cast<std::int64_t>(k_), static_cast<std::int64_t>(w)) *
           ipow(q_ - 1, static_cast<unsigned>(w - 1));
  }

  // Work needed to lift the lower bound to `target` if no lighter word turns
  // up; throws when it exceeds the budget.
  template <class LB>
  void precheck(std::size_t target, const LB& lower_bound, std::vector<std::size_t>& done) {
    BigInt need = 0;
    bool reached = false;
    for (std::size_t w = 1; w <= k_ && !reached; ++w)
      for (std::size_t j = 0; j < ranks_.size() && !reached; ++j) {
        if (w + 1 <= k_ - ranks_[j]) continue;
        need += level_leaves(w);
        done[j] = w;
        reached = lower_bound() >= target || (ranks_[j] == k_ && w == k_);
      }
    std::fill(done.begin(), done.end(), 0);
    if (need > budget_) throw BudgetExceeded("minimum-distance search exceeds the budget", need);
  }

  void descend(std::size_t depth, std::size_t start) {
    const std::size_t words = kernel_.words();
    Word* acc = stack_.data() + depth * words;
    Word* next = acc + words;
    const PackedSet<K>& m = mults_[set_];
    const std::size_t step = q_ - 1;
    for (std::size_t r = start; r + (level_ - depth) <= k_; ++r) {
      const Elem hi = depth == 0 ? 2 : static_cast<Elem>(q_);
      for (Elem lam = 1; lam < hi; ++lam) {
        std::copy(acc, acc + words, next);
        kernel_.add(next, m[r * step + (lam - 1)]);
        if (depth + 1 == level_) {
          const std::size_t wt = kernel_.weight(next);
          if (wt < upper_) upper_ = wt;
        } else {
          descend(depth + 1, r + 1);
        }
      }
    }
  }

  const K& kernel_;
  std::size_t n_;
  std::uint64_t q_;
  std::size_t k_;
  BigInt budget_;
  bool transitive_;
  std::size_t known_upper_;
  BigInt work_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<PackedSet<K>> mults_;
  std::vector<Word> stack_;
  std::size_t level_ = 0;
  std::size_t set_ = 0;
  std::size_t upper_ = 0;
};

// True when every permutation maps the code onto itself and the group they
// generate is transitive on coordinates.
bool transitive_automorphisms(const LinearCode& code, const std::vector<Permutation>& gens) {
  const std::size_t n = code.n();
  std::vector<Elem> img(n);
  for (const auto& g : gens) {
    if (g.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (auto x : g) {
      if (x >= n || hit[x]) return false;
      hit[x] = 1;
    }
    for (std::size_t i = 0; i < code.k(); ++i) {
      auto row = code.generator().row(i);
      for (std::size_t j = 0; j < n; ++j) img[g[j]] = row[j];
      if (!code.contains(img)) return false;
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> todo{0};
  seen[0] = 1;
  std::size_t reached = n > 0;
  while (!todo.empty()) {
    const std::size_t x = todo.back();
    todo.pop_back();
    for (const auto& g : gens)
      if (!seen[g[x]]) {
        seen[g[x]] = 1;
        ++reached;
        todo.push_back(g[x]);
      }
  }
  return reached == n;
}

}  // namespace

bool is_transitive_automorphism_group(const LinearCode& code, const std::vector<Permutation>& generators) {
  return !generators.empty() && transitive_automorphisms(code, generators);
}

DistanceBounds min_distance_bounds(const LinearCode& code, std::size_t stop_at, const ComputeOptions& opts) {
  if (code.k() == 0) throw ZeroCode();
  bool transitive = false;
  if (!opts.automorphisms.empty()) {
    if (!transitive_automorphisms(code, opts.automorphisms))
      throw BadParams("supplied permutations do not generate a transitive automorphism group");
    transitive = true;
  }
  return detail::with_kernel(code.n(), code.field()->p(), code.field()->s(), [&](const auto& kernel) {
    using K = std::decay_t<decltype(kernel)>;
    InfoSetSearch<K> search(code, kernel, opts, transitive);
    return search.run(stop_at);
  });
}

std::size_t min_distance(const LinearCode& code, const ComputeOptions& opts) {
  if (code.k() == 0) throw ZeroCode();
  const BigInt q = code.field()->q();
  if (ipow(q, static_cast<unsigned>(code.k())) <= opts.budget ||
      ipow(q, static_cast<unsigned>(code.n() - code.k())) <= opts.budget)
    return weight_distribution(code, opts).min_nonzero_weight();
  return min_distance_bounds(code, code.n() + 1, opts).upper;
}

std::vector<std::vector<std::uint64_t>> codeword_supports(const LinearCode& code, std::size_t w,
                                                          const ComputeOptions& opts) {
  const BigInt size = code_size(code);
  if (size > opts.budget) throw BudgetExceeded("codeword enumeration exceeds the budget", size);
  std::unordered_set<std::vector<Word>, WordsHash> all;
  detail::with_kernel(code.n(), code.field()->p(), code.field()->s(), [&](const auto& kernel) {
    using K = std::decay_t<decltype(kernel)>;
    const std::size_t words = detail::words_for_bits(code.n());
    parallel_walk(
        code, kernel, opts.threads, [&] { return SupportCollector<K>{&kernel, w, words, {}, {}}; },
        [&](SupportCollector<K>& c) { all.merge(c.found); });
  });
  std::vector<std::vector<std::uint64_t>> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dcodes
