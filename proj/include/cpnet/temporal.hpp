#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpnet/elites.hpp"
#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"

namespace cpnet {

/// One growth frame: the network snapshot at cutoff_time, its symmetry-point
/// elite size, the elite fraction r = k_sp / n, and the sqrt(m)/n trend.
struct Frame {
  std::size_t index = 0;  // 1-based
  std::int64_t cutoff_time = 0;
  std::uint32_t n = 0;
  Count m = 0;
  std::size_t k_sp = 0;
  double r = std::numeric_limits<double>::quiet_NaN();
  double sqrt_m_over_n = std::numeric_limits<double>::quiet_NaN();
  bool coincides_with_previous = false;
  bool skipped = false;  // snapshot too small to analyze
};

struct FrameSeries {
  std::size_t frame_count = 0;
  std::vector<Frame> frames;
};

/// Split the growth of a timestamped network into frames of equal vertex
/// growth. A vertex is born with its first incident edge; frame t's cutoff is
/// the earliest time at which at least ceil(t/frame_count * n_final) vertices
/// are born. Cutoffs are inclusive of their whole timestamp, so frames can
/// overshoot the target and coincide (flagged) when timestamps are coarse.
inline FrameSeries build_frames(const TimestampedEdgeList& tel, std::size_t frame_count = 20) {
  if (frame_count < 1) throw std::invalid_argument("frame count must be >= 1");
  if (tel.edges().empty()) throw std::invalid_argument("empty edge list");

  TimestampedEdgeList sorted = tel;
  sorted.normalize();

  // births in time order
  std::vector<std::int64_t> times;
  std::vector<std::uint32_t> born_by_then;  // cumulative distinct vertices
  {
    Membership seen(sorted.n(), 0);
    std::uint32_t born = 0;
    for (const TimedEdge& e : sorted.edges()) {
      for (Vertex v : {e.u, e.v})
        if (!seen[v]) {
          seen[v] = 1;
          ++born;
        }
      if (!times.empty() && times.back() == e.t)
        born_by_then.back() = born;
      else {
        times.push_back(e.t);
        born_by_then.push_back(born);
      }
    }
  }
  const std::uint32_t n_final = born_by_then.back();

  FrameSeries series;
  series.frame_count = frame_count;
  for (std::size_t t = 1; t <= frame_count; ++t) {
    std::uint32_t target = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(t) * n_final + frame_count - 1) / frame_count);
    std::size_t ix = 0;
    while (ix + 1 < times.size() && born_by_then[ix] < target) ++ix;
    Frame f;
    f.index = t;
    f.cutoff_time = times[ix];
    f.n = born_by_then[ix];
    f.coincides_with_previous =
        !series.frames.empty() && series.frames.back().cutoff_time == f.cutoff_time;
    series.frames.push_back(f);
  }
  return series;
}

/// Snapshot graph of all edges with time <= cutoff, vertex ids compacted in
/// ascending original-id order.
inline Graph snapshot_graph(const TimestampedEdgeList& tel, std::int64_t cutoff,
                            SelfLoopMode mode, bool dedup = false) {
  constexpr std::int64_t absent = -1, present = -2;
  std::vector<std::int64_t> new_id(tel.n(), absent);
  std::uint32_t next = 0;
  for (const TimedEdge& e : tel.edges()) {
    if (e.t > cutoff) continue;
    new_id[e.u] = present;
    new_id[e.v] = present;
  }
  for (Vertex v = 0; v < tel.n(); ++v)
    if (new_id[v] == present) new_id[v] = next++;

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::uint32_t> loops(next, 0);
  bool any_loop = false;
  std::vector<std::string> labels(next);
  for (Vertex v = 0; v < tel.n(); ++v)
    if (new_id[v] >= 0) labels[new_id[v]] = tel.labels()[v];
  for (const TimedEdge& e : tel.edges()) {
    if (e.t > cutoff) continue;
    Vertex u = static_cast<Vertex>(new_id[e.u]);
    Vertex v = static_cast<Vertex>(new_id[e.v]);
    if (u == v) {
      if (mode == SelfLoopMode::implicit)
        throw std::invalid_argument("explicit self-loop not allowed in implicit mode");
      ++loops[u];
      any_loop = true;
    } else {
      edges.emplace_back(u, v);
    }
  }
  if (dedup) {
    for (auto& e : edges)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto& c : loops)
      if (c > 1) c = 1;
  }
  if (!any_loop) loops.clear();
  return Graph::build(next, std::move(edges), std::move(loops), mode, std::move(labels));
}

namespace detail {

// Symmetry-point elite size of one snapshot. rich: the degree-ordering shift
// diagram. core: the c-core partition (over all thresholds) whose internal
// blocks balance best, ties toward the smaller core.
inline std::size_t snapshot_symmetry_size(const Graph& g, EliteMethod method) {
  if (method == EliteMethod::rich) {
    return shift_diagram(g, degree_ordering(g)).k_sp;
  }
  CoreDecomposition dec = core_decomposition(g);
  if (dec.max_coreness == 0) return 0;
  ShiftDiagram d = shift_diagram(g, coreness_ordering(g, dec));
  std::size_t best_k = 0;
  Count best_gap = ~Count{0};
  for (std::uint32_t c = dec.max_coreness; c >= 1; --c) {
    Count k = dec.size_by_threshold.at(c);
    const InfluenceBlock& b = d.curves[k];
    Count gap = b.i_ee > b.i_pp ? b.i_ee - b.i_pp : b.i_pp - b.i_ee;
    if (gap < best_gap || (gap == best_gap && k < best_k)) {
      best_gap = gap;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace detail

/// Fill a frame skeleton with per-snapshot analysis. Frames whose snapshot
/// has fewer than two vertices (or, for the core method, no core at all) are
/// skipped and flagged.
inline void analyze_frames(FrameSeries& series, const TimestampedEdgeList& tel,
                           EliteMethod method, SelfLoopMode mode, bool dedup = false) {
  TimestampedEdgeList sorted = tel;
  sorted.normalize();
  for (Frame& f : series.frames) {
    Graph g = snapshot_graph(sorted, f.cutoff_time, mode, dedup);
    f.n = g.n();
    f.m = g.m_total();
    if (g.n() < 2) {
      f.skipped = true;
      continue;
    }
    f.k_sp = detail::snapshot_symmetry_size(g, method);
    if (method == EliteMethod::core && f.k_sp == 0) {
      f.skipped = true;
      continue;
    }
    f.r = static_cast<double>(f.k_sp) / static_cast<double>(f.n);
    f.sqrt_m_over_n = std::sqrt(static_cast<double>(f.m)) / static_cast<double>(f.n);
  }
}

inline FrameSeries elite_fraction_series(const TimestampedEdgeList& tel,
                                         std::size_t frame_count, EliteMethod method,
                                         SelfLoopMode mode = SelfLoopMode::implicit,
                                         bool dedup = false) {
  FrameSeries series = build_frames(tel, frame_count);
  analyze_frames(series, tel, method, mode, dedup);
  return series;
}

}  // namespace cpnet
