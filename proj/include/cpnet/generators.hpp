#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"

namespace cpnet {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Prescribed degree sequence (order matters: the prefix symmetry point and
/// the expected-influence formulas are order-dependent). All entries must be
/// positive.
struct DegreeSequence {
  std::vector<std::uint32_t> d;

  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::uint32_t> degrees) : d(std::move(degrees)) {
    if (d.empty()) throw std::invalid_argument("empty degree sequence");
    for (auto x : d)
      if (x == 0) throw std::invalid_argument("degree sequence entries must be positive");
  }

  std::size_t n() const { return d.size(); }

  Count stub_total() const {
    Count s = 0;
    for (auto x : d) s += x;
    return s;
  }

  Count m() const { return stub_total() / 2; }

  bool even_sum() const { return stub_total() % 2 == 0; }

  /// Parse "3,3,2,2,2".
  static DegreeSequence parse_inline(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      std::string tok = s.substr(i, j - i);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad degree list entry '" + tok + "'");
      out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      i = j + 1;
    }
    return DegreeSequence(std::move(out));
  }

  static DegreeSequence read(std::istream& in) {
    std::vector<std::uint32_t> out;
    std::int64_t x;
    while (in >> x) {
      if (x <= 0) throw std::invalid_argument("degree sequence entries must be positive");
      out.push_back(static_cast<std::uint32_t>(x));
    }
    return DegreeSequence(std::move(out));
  }
};

/// kappa(d): the prefix index j in 1..n minimizing |sum_{i<=j} d_i -
/// sum_{i>j} d_i|, ties toward smaller j.
inline std::size_t degree_symmetry_point(const DegreeSequence& seq) {
  Count total = seq.stub_total();
  Count prefix = 0;
  std::size_t best = 1;
  Count best_gap = ~Count{0};
  for (std::size_t j = 1; j <= seq.n(); ++j) {
    prefix += seq.d[j - 1];
    Count rest = total - prefix;
    Count gap = prefix > rest ? prefix - rest : rest - prefix;
    if (gap < best_gap) {
      best_gap = gap;
      best = j;
    }
  }
  return best;
}

struct ExpectedInfluence {
  double e_ep = 0;
  double e_ee = 0;
  double e_pp = 0;
};

/// Closed-form pairing expectations for the prefix partition at index i:
/// with D(k,l) = sum_{j=k..l} d_j / 2m, the cross block expects
/// 2 D(1,i) D(i+1,n) m, and the internal blocks D(1,i)^2 m and D(i+1,n)^2 m.
inline ExpectedInfluence expected_influence(const DegreeSequence& seq, std::size_t i) {
  if (i < 1 || i > seq.n()) throw std::invalid_argument("prefix index out of range");
  Count total = seq.stub_total();
  Count prefix = 0;
  for (std::size_t j = 0; j < i; ++j) prefix += seq.d[j];
  double m = static_cast<double>(total) / 2.0;
  double d1 = static_cast<double>(prefix) / static_cast<double>(total);
  double d2 = static_cast<double>(total - prefix) / static_cast<double>(total);
  return {2.0 * d1 * d2 * m, d1 * d1 * m, d2 * d2 * m};
}

/// Exact-integer argmax of the cross expectation e_ep(i) over i in 1..n,
/// ties toward smaller i. Maximizing 2 D (1-D) m is maximizing the integer
/// product S_i (2m - S_i), so no floating point is involved.
inline std::size_t expected_cross_argmax(const DegreeSequence& seq) {
  using W = unsigned __int128;
  Count total = seq.stub_total();
  Count prefix = 0;
  std::size_t best = 1;
  W best_prod = 0;
  for (std::size_t i = 1; i <= seq.n(); ++i) {
    prefix += seq.d[i - 1];
    W prod = static_cast<W>(prefix) * static_cast<W>(total - prefix);
    if (i == 1 || prod > best_prod) {
      best_prod = prod;
      best = i;
    }
  }
  return best;
}

/// Uniform configuration-model multigraph: the stub array is shuffled with a
/// seeded Fisher-Yates and paired consecutively, which is uniform over
/// pairings. Pairing two stubs of one vertex yields an explicit self-loop
/// (the output graph is in `none` self-loop mode); each loop contributes 2 to
/// its vertex's stub count but 1 to d_V.
inline Graph generate_configuration(const DegreeSequence& seq, std::uint64_t seed) {
  if (!seq.even_sum()) throw std::invalid_argument("degree sum must be even");
  const std::size_t n = seq.n();
  std::vector<Vertex> stubs;
  stubs.reserve(seq.stub_total());
  for (std::size_t v = 0; v < n; ++v)
    for (std::uint32_t i = 0; i < seq.d[v]; ++i) stubs.push_back(static_cast<Vertex>(v));
  std::mt19937_64 rng(seed);
  std::shuffle(stubs.begin(), stubs.end(), rng);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(stubs.size() / 2);
  std::vector<std::uint32_t> loops(n, 0);
  bool any_loop = false;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex u = stubs[i], v = stubs[i + 1];
    if (u == v) {
      ++loops[u];
      any_loop = true;
    } else {
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  if (!any_loop) loops.clear();
  return Graph::build(static_cast<std::uint32_t>(n), std::move(edges), std::move(loops),
                      SelfLoopMode::none);
}

/// Stub-degree of every vertex (loops count twice), for checking
/// configuration output against its prescribed sequence.
inline std::vector<Count> stub_degrees(const Graph& g) {
  std::vector<Count> d(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    ++d[u];
    ++d[v];
  }
  if (g.mode() == SelfLoopMode::none)
    for (Vertex v = 0; v < g.n(); ++v) d[v] += 2 * g.loop_count(v);
  return d;
}

/// Parameters of the purely elitistic family: elite clique size 4Z^3 - 1,
/// periphery 2bZ times larger with self-loops only, biregular cross edges
/// (elite side 2bZ^3, periphery side Z^2). The robustness axiom holds with
/// equality at c_r = 1/b.
struct ElitisticParams {
  std::uint32_t z = 1;
  std::uint32_t b = 1;
};

struct PlantedGraph {
  Graph graph;
  Partition partition;
};

/// Deterministic construction; the cross wiring assigns elite vertex i's
/// stubs t in [i*2bZ^3, (i+1)*2bZ^3) to periphery vertex t mod |P|, which is
/// simple (2bZ^3 <= |P|) and gives every periphery vertex exactly Z^2 elite
/// neighbors. Implicit self-loop mode.
inline PlantedGraph generate_elitistic(const ElitisticParams& params) {
  if (params.z < 1 || params.b < 1)
    throw std::invalid_argument("elitistic parameters must be >= 1");
  const Count z = params.z, b = params.b;
  const Count elite_size = 4 * z * z * z - 1;
  const Count periph_size = 2 * b * z * elite_size;
  const Count n = elite_size + periph_size;
  const Count cross_per_elite = 2 * b * z * z * z;

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(elite_size * (elite_size - 1) / 2 + elite_size * cross_per_elite);
  for (Count i = 0; i < elite_size; ++i)
    for (Count j = i + 1; j < elite_size; ++j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  for (Count i = 0; i < elite_size; ++i)
    for (Count t = i * cross_per_elite; t < (i + 1) * cross_per_elite; ++t)
      edges.emplace_back(static_cast<Vertex>(i),
                         static_cast<Vertex>(elite_size + t % periph_size));

  PlantedGraph out;
  out.graph = Graph::build(static_cast<std::uint32_t>(n), std::move(edges), {},
                           SelfLoopMode::implicit);
  std::vector<Vertex> elite(elite_size);
  for (Count i = 0; i < elite_size; ++i) elite[i] = static_cast<Vertex>(i);
  out.partition = Partition::from_elite(static_cast<std::uint32_t>(n), std::move(elite));
  return out;
}

/// side x side 4-neighbor lattice, implicit self-loops; 2*side*(side-1)
/// raw edges.
inline Graph generate_grid(std::uint32_t side) {
  if (side < 2) throw std::invalid_argument("grid side must be >= 2");
  const std::uint32_t n = side * side;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(2ull * side * (side - 1));
  for (std::uint32_t r = 0; r < side; ++r)
    for (std::uint32_t c = 0; c < side; ++c) {
      Vertex v = r * side + c;
      if (c + 1 < side) edges.emplace_back(v, v + 1);
      if (r + 1 < side) edges.emplace_back(v, v + side);
    }
  return Graph::build(n, std::move(edges), {}, SelfLoopMode::implicit);
}

/// Heavy-tailed degree sequence: n draws from P(d) proportional to d^-alpha
/// on [d_min, d_max], seeded, with the sum fixed up to be even.
inline DegreeSequence heavy_tailed_sequence(std::size_t n, double alpha, std::uint32_t d_min,
                                            std::uint32_t d_max, std::uint64_t seed) {
  if (n == 0 || d_min < 1 || d_max < d_min)
    throw std::invalid_argument("bad heavy-tail parameters");
  std::vector<double> cdf(d_max - d_min + 1);
  double acc = 0;
  for (std::uint32_t d = d_min; d <= d_max; ++d) {
    acc += std::pow(static_cast<double>(d), -alpha);
    cdf[d - d_min] = acc;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, acc);
  std::vector<std::uint32_t> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = uni(rng);
    auto it = std::lower_bound(cdf.begin(), cdf.end(), x);
    d[i] = d_min + static_cast<std::uint32_t>(it - cdf.begin());
  }
  Count sum = 0;
  for (auto v : d) sum += v;
  if (sum % 2 == 1) {
    if (d[0] < d_max)
      ++d[0];
    else
      --d[0];
  }
  return DegreeSequence(std::move(d));
}

/// Drop loops and collapse parallel edges, keeping mode and labels.
inline Graph simplify(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges(g.edges());
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::build(g.n(), std::move(edges), {}, g.mode(), g.labels());
}

/// Timestamped synthetic growth family: stage s contributes the edges of the
/// elitistic construction with Z = s (shared elite id block, shared periphery
/// id block), stamped with time s; repeated pairs keep their first stage.
/// Snapshots therefore grow from the Z = 1 layout toward Z = z_max, with the
/// elite-to-periphery balance of the elitistic family at every stage.
inline TimestampedEdgeList elitistic_growth(std::uint32_t z_max, std::uint32_t b = 1) {
  if (z_max < 1 || b < 1) throw std::invalid_argument("growth parameters must be >= 1");
  const Count elite_max = 4ull * z_max * z_max * z_max - 1;
  struct PairHash {
    std::size_t operator()(const std::pair<Vertex, Vertex>& p) const {
      return detail::splitmix64((static_cast<std::uint64_t>(p.first) << 32) | p.second);
    }
  };
  std::unordered_set<std::pair<Vertex, Vertex>, PairHash> seen;
  std::vector<TimedEdge> edges;
  Count n_final = 0;
  for (std::uint32_t s = 1; s <= z_max; ++s) {
    const Count z = s;
    const Count elite_size = 4 * z * z * z - 1;
    const Count periph_size = 2 * b * z * elite_size;
    const Count cross_per_elite = 2 * b * z * z * z;
    n_final = std::max(n_final, elite_max + periph_size);
    auto add = [&](Count u, Count v) {
      Vertex a = static_cast<Vertex>(std::min(u, v));
      Vertex b = static_cast<Vertex>(std::max(u, v));
      if (seen.insert({a, b}).second) edges.push_back({a, b, static_cast<std::int64_t>(s)});
    };
    for (Count i = 0; i < elite_size; ++i)
      for (Count j = i + 1; j < elite_size; ++j) add(i, j);
    for (Count i = 0; i < elite_size; ++i)
      for (Count t = i * cross_per_elite; t < (i + 1) * cross_per_elite; ++t)
        add(i, elite_max + t % periph_size);
  }
  std::vector<std::string> labels(n_final);
  for (Count v = 0; v < n_final; ++v) labels[v] = std::to_string(v);
  return TimestampedEdgeList(std::move(edges), std::move(labels));
}

}  // namespace cpnet
