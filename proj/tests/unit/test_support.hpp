#pragma once

// Shared helpers for the test suites. The random-graph generator here is an
// independent Erdos-Renyi style sampler, deliberately not the library's
// configuration model, so oracle-equivalence tests do not share a code path
// with the implementation under test.

#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"

namespace test_support {

using namespace cpnet;

inline Graph random_graph(std::mt19937_64& rng, std::uint32_t max_n,
                          SelfLoopMode mode = SelfLoopMode::implicit,
                          bool allow_multi = true) {
  std::uniform_int_distribution<std::uint32_t> nd(2, max_n);
  std::uint32_t n = nd(rng);
  std::uniform_real_distribution<double> pd(0.02, 0.5);
  double p = pd(rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
      if (allow_multi && coin(rng) && coin(rng)) edges.emplace_back(u, v);
    }
  std::vector<std::uint32_t> loops;
  if (mode == SelfLoopMode::none) {
    loops.assign(n, 0);
    std::bernoulli_distribution loop_coin(0.2);
    for (Vertex v = 0; v < n; ++v)
      if (loop_coin(rng)) loops[v] = 1;
  }
  return Graph::build(n, std::move(edges), std::move(loops), mode);
}

inline Partition random_partition(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<std::uint32_t> kd(1, n - 1);
  std::uint32_t k = kd(rng);
  std::vector<Vertex> ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return Partition::from_elite(n, std::move(ids));
}

inline Graph star(std::uint32_t leaves, SelfLoopMode mode = SelfLoopMode::implicit) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::build(leaves + 1, std::move(edges), {}, mode);
}

inline Graph complete(std::uint32_t n, SelfLoopMode mode = SelfLoopMode::implicit) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges), {}, mode);
}

inline Graph from_text(const std::string& text, IngestOptions opts = {}) {
  std::istringstream in(text);
  return ingest_edge_list(in, opts);
}

}  // namespace test_support
