#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpnet/graph.hpp"

namespace cpnet {

/// Elite/periphery bipartition of the vertex set.
struct Partition {
  Membership in_elite;         // size n
  std::vector<Vertex> elite;   // ascending ids

  static Partition from_elite(std::uint32_t n, std::vector<Vertex> ids) {
    Partition p;
    p.in_elite.assign(n, 0);
    for (Vertex v : ids) {
      if (v >= n) throw std::invalid_argument("elite vertex id out of range");
      if (p.in_elite[v]) throw std::invalid_argument("duplicate elite vertex id");
      p.in_elite[v] = 1;
    }
    std::sort(ids.begin(), ids.end());
    p.elite = std::move(ids);
    return p;
  }

  std::uint32_t n() const { return static_cast<std::uint32_t>(in_elite.size()); }
  std::size_t elite_size() const { return elite.size(); }
  std::size_t periphery_size() const { return in_elite.size() - elite.size(); }
};

/// The three block quantities of a partition: internal elite influence,
/// crossing influence, internal periphery influence. They always sum to
/// m_total (each edge falls in exactly one block).
struct InfluenceBlock {
  Count i_ee = 0;
  Count i_ep = 0;
  Count i_pp = 0;
  Count m_total = 0;

  Count elite_influence() const { return i_ee + i_ep; }      // I(E)
  Count periphery_influence() const { return i_pp + i_ep; }  // I(P)

  bool operator==(const InfluenceBlock&) const = default;
};

// I(X,Y): non-loop edges with one endpoint in X and the other in Y, counted
// once; a self-loop of v counts once iff v is in both X and Y. Symmetric in
// X and Y.
inline Count influence_between(const Graph& g, const Membership& x, const Membership& y) {
  if (x.size() != g.n() || y.size() != g.n())
    throw std::invalid_argument("membership size mismatch");
  Count total = 0;
  for (auto [u, v] : g.edges())
    if ((x[u] && y[v]) || (x[v] && y[u])) ++total;
  if (g.mode() == SelfLoopMode::implicit) {
    for (Vertex v = 0; v < g.n(); ++v)
      if (x[v] && y[v]) ++total;
  } else {
    for (Vertex v = 0; v < g.n(); ++v)
      if (x[v] && y[v]) total += g.loop_count(v);
  }
  return total;
}

inline Count influence_between(const Graph& g, const std::vector<Vertex>& x,
                               const std::vector<Vertex>& y) {
  return influence_between(g, membership_of(g.n(), x), membership_of(g.n(), y));
}

// I(X) = I(X,X) + I(X, V\X), computed in one edge pass.
inline Count total_influence(const Graph& g, const Membership& x) {
  if (x.size() != g.n()) throw std::invalid_argument("membership size mismatch");
  Count internal = 0, cross = 0;
  for (auto [u, v] : g.edges()) {
    int c = (x[u] ? 1 : 0) + (x[v] ? 1 : 0);
    if (c == 2)
      ++internal;
    else if (c == 1)
      ++cross;
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (x[v]) internal += g.loop_count(v);
  return internal + cross;
}

inline Count total_influence(const Graph& g, const std::vector<Vertex>& x) {
  return total_influence(g, membership_of(g.n(), x));
}

/// All three blocks plus the edge total, in one pass over the edge list.
inline InfluenceBlock influence_block(const Graph& g, const Partition& p) {
  if (p.n() != g.n()) throw std::invalid_argument("partition size mismatch");
  InfluenceBlock b;
  b.m_total = g.m_total();
  for (auto [u, v] : g.edges()) {
    int c = (p.in_elite[u] ? 1 : 0) + (p.in_elite[v] ? 1 : 0);
    if (c == 2)
      ++b.i_ee;
    else if (c == 1)
      ++b.i_ep;
    else
      ++b.i_pp;
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    Count lc = g.loop_count(v);
    if (lc == 0) continue;
    if (p.in_elite[v])
      b.i_ee += lc;
    else
      b.i_pp += lc;
  }
  return b;
}

/// Influence curves along a vertex ordering: curves[k] is the block of the
/// partition whose elite is the first k vertices of the ordering.
///
/// k_sp is the discrete power symmetry point, argmin over k of
/// |i_ee - i_pp| with ties toward smaller k; k_crossmax is the argmax of
/// i_ep, ties toward smaller k.
struct ShiftDiagram {
  std::vector<Vertex> ordering;
  std::vector<InfluenceBlock> curves;  // size n+1
  std::size_t k_sp = 0;
  std::size_t k_crossmax = 0;
};

/// Build the full diagram incrementally in O(n + m): moving v from periphery
/// to elite shifts v's elite-side edges from the cross block into i_ee, its
/// periphery-side edges from i_pp into the cross block, and its loop from
/// i_pp into i_ee.
inline ShiftDiagram shift_diagram(const Graph& g, std::vector<Vertex> ordering) {
  const std::uint32_t n = g.n();
  if (ordering.size() != n) throw std::invalid_argument("ordering is not a permutation");
  {
    Membership seen(n, 0);
    for (Vertex v : ordering) {
      if (v >= n || seen[v]) throw std::invalid_argument("ordering is not a permutation");
      seen[v] = 1;
    }
  }

  ShiftDiagram d;
  d.ordering = std::move(ordering);
  d.curves.resize(static_cast<std::size_t>(n) + 1);

  Membership in_elite(n, 0);
  InfluenceBlock cur;
  cur.m_total = g.m_total();
  cur.i_pp = g.m_total();
  d.curves[0] = cur;

  for (std::uint32_t k = 1; k <= n; ++k) {
    Vertex v = d.ordering[k - 1];
    Count d_elite = 0;
    for (Vertex u : g.neighbors(v))
      if (in_elite[u]) ++d_elite;
    Count d_rest = g.nonloop_degree(v) - d_elite;
    Count lc = g.loop_count(v);
    cur.i_ee += d_elite + lc;
    cur.i_pp -= d_rest + lc;
    cur.i_ep += d_rest;
    cur.i_ep -= d_elite;
    in_elite[v] = 1;
    d.curves[k] = cur;
  }

  auto abs_diff = [](Count a, Count b) { return a > b ? a - b : b - a; };
  d.k_sp = 0;
  d.k_crossmax = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (abs_diff(d.curves[k].i_ee, d.curves[k].i_pp) <
        abs_diff(d.curves[d.k_sp].i_ee, d.curves[d.k_sp].i_pp))
      d.k_sp = k;
    if (d.curves[k].i_ep > d.curves[d.k_crossmax].i_ep) d.k_crossmax = k;
  }
  return d;
}

struct SymmetryPoint {
  std::size_t k_sp = 0;
  InfluenceBlock block;
  Count elite_influence = 0;      // I(E) at the symmetry point
  Count periphery_influence = 0;  // I(P)
};

inline SymmetryPoint symmetry_point(const ShiftDiagram& d) {
  if (d.curves.empty()) throw std::invalid_argument("empty diagram");
  SymmetryPoint sp;
  sp.k_sp = d.k_sp;
  sp.block = d.curves[d.k_sp];
  sp.elite_influence = sp.block.elite_influence();
  sp.periphery_influence = sp.block.periphery_influence();
  return sp;
}

/// Partition whose elite is the first k vertices of an ordering.
inline Partition prefix_partition(const Graph& g, const std::vector<Vertex>& ordering,
                                  std::size_t k) {
  if (k > ordering.size()) throw std::invalid_argument("prefix length out of range");
  return Partition::from_elite(g.n(),
                               std::vector<Vertex>(ordering.begin(), ordering.begin() + k));
}

}  // namespace cpnet
