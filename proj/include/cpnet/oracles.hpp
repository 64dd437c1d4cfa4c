#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cpnet/axioms.hpp"
#include "cpnet/generators.hpp"
#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"

namespace cpnet {

/// Reference block computation, independent of both the edge-list scan and
/// the incremental diagram path: walks the CSR adjacency, counting each
/// non-loop edge from its smaller endpoint.
inline InfluenceBlock brute_force_block(const Graph& g, const Partition& p) {
  if (p.n() != g.n()) throw std::invalid_argument("partition size mismatch");
  InfluenceBlock b;
  b.m_total = g.m_total();
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (u <= v) continue;
      int c = (p.in_elite[u] ? 1 : 0) + (p.in_elite[v] ? 1 : 0);
      if (c == 2)
        ++b.i_ee;
      else if (c == 1)
        ++b.i_ep;
      else
        ++b.i_pp;
    }
    Count lc = g.loop_count(v);
    if (p.in_elite[v])
      b.i_ee += lc;
    else
      b.i_pp += lc;
  }
  return b;
}

struct MinEliteResult {
  bool found = false;
  std::size_t size = 0;
  std::vector<Vertex> elite;  // lexicographically first witness
  InfluenceBlock block;
};

/// Exhaustive minimal-elite search: smallest proper nonempty subset
/// satisfying (A1) and (A2), enumerated size class by size class in
/// lexicographic order. The full vertex set is excluded (it satisfies both
/// axioms vacuously). Limited to small n.
inline MinEliteResult min_elite_exhaustive(const Graph& g, const AxiomConfig& cfg) {
  cfg.validate();
  const std::uint32_t n = g.n();
  if (n > 24) throw std::invalid_argument("exhaustive search limited to n <= 24");
  if (n < 2) throw std::invalid_argument("graph too small");
  MinEliteResult out;
  std::vector<Vertex> combo;
  for (std::uint32_t s = 1; s < n && !out.found; ++s) {
    combo.resize(s);
    for (std::uint32_t i = 0; i < s; ++i) combo[i] = i;
    while (true) {
      Partition p = Partition::from_elite(n, combo);
      InfluenceBlock b = influence_block(g, p);
      if (axiom_a1(b, cfg) && axiom_a2(b, cfg)) {
        out.found = true;
        out.size = s;
        out.elite = combo;
        out.block = b;
        break;
      }
      // next combination
      std::int64_t i = static_cast<std::int64_t>(s) - 1;
      while (i >= 0 && combo[i] == n - s + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (std::size_t j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return out;
}

struct MonteCarloEstimate {
  double mean_ep = 0, mean_ee = 0, mean_pp = 0;
  double stderr_ep = 0, stderr_ee = 0, stderr_pp = 0;
  std::uint64_t trials = 0;
};

namespace detail {

struct McSums {
  std::uint64_t ep = 0, ee = 0, pp = 0;
  std::uint64_t ep2 = 0, ee2 = 0, pp2 = 0;

  void merge(const McSums& o) {
    ep += o.ep;
    ee += o.ee;
    pp += o.pp;
    ep2 += o.ep2;
    ee2 += o.ee2;
    pp2 += o.pp2;
  }
};

// One pairing trial. Counting happens directly on the stub array: loops land
// once in their own block, so the tallies match the influence convention of
// a none-mode graph.
inline void mc_trial(std::vector<Vertex>& stubs, const std::vector<Vertex>& master,
                     std::size_t prefix, std::uint64_t trial_seed, McSums& acc) {
  stubs = master;
  std::mt19937_64 rng(trial_seed);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::uint64_t ep = 0, ee = 0, pp = 0;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    bool ue = stubs[i] < prefix;
    bool ve = stubs[i + 1] < prefix;
    if (ue && ve)
      ++ee;
    else if (!ue && !ve)
      ++pp;
    else
      ++ep;
  }
  acc.ep += ep;
  acc.ee += ee;
  acc.pp += pp;
  acc.ep2 += ep * ep;
  acc.ee2 += ee * ee;
  acc.pp2 += pp * pp;
}

}  // namespace detail

/// Monte-Carlo estimate of the prefix-partition block expectations over
/// independent uniform pairings of the stub set. Integer accumulation plus
/// counter-derived per-trial seeds make the result identical for any worker
/// count under a fixed seed.
inline MonteCarloEstimate monte_carlo_expected_influence(const DegreeSequence& seq,
                                                         std::size_t i, std::uint64_t trials,
                                                         std::uint64_t seed,
                                                         unsigned threads = 1) {
  if (!seq.even_sum()) throw std::invalid_argument("degree sum must be even");
  if (i < 1 || i > seq.n()) throw std::invalid_argument("prefix index out of range");
  if (trials < 1) throw std::invalid_argument("need at least one trial");

  std::vector<Vertex> master;
  master.reserve(seq.stub_total());
  for (std::size_t v = 0; v < seq.n(); ++v)
    for (std::uint32_t j = 0; j < seq.d[v]; ++j) master.push_back(static_cast<Vertex>(v));

  auto trial_seed = [seed](std::uint64_t t) {
    return detail::splitmix64(seed ^ detail::splitmix64(t + 1));
  };

  detail::McSums total;
  if (threads <= 1) {
    std::vector<Vertex> buf;
    for (std::uint64_t t = 0; t < trials; ++t)
      detail::mc_trial(buf, master, i, trial_seed(t), total);
  } else {
    unsigned workers = std::min<std::uint64_t>(threads, trials);
    std::vector<detail::McSums> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<Vertex> buf;
        for (std::uint64_t t = w; t < trials; t += workers)
          detail::mc_trial(buf, master, i, trial_seed(t), partial[w]);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& p : partial) total.merge(p);
  }

  auto finish = [trials](std::uint64_t sum, std::uint64_t sumsq, double& mean, double& se) {
    double t = static_cast<double>(trials);
    mean = static_cast<double>(sum) / t;
    if (trials > 1) {
      double var = (static_cast<double>(sumsq) - static_cast<double>(sum) * mean) / (t - 1.0);
      se = std::sqrt(std::max(var, 0.0) / t);
    }
  };
  MonteCarloEstimate est;
  est.trials = trials;
  finish(total.ep, total.ep2, est.mean_ep, est.stderr_ep);
  finish(total.ee, total.ee2, est.mean_ee, est.stderr_ee);
  finish(total.pp, total.pp2, est.mean_pp, est.stderr_pp);
  return est;
}

}  // namespace cpnet
