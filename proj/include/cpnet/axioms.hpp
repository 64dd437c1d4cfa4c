#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cpnet/elites.hpp"
#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"
#include "cpnet/rational.hpp"

namespace cpnet {

/// Dominance and robustness constants. Both must be positive; the default
/// (1, 1) matches plotting raw ratios against 1.
struct AxiomConfig {
  Rational c_d{1, 1};
  Rational c_r{1, 1};

  void validate() const {
    if (!c_d.positive() || !c_r.positive())
      throw std::invalid_argument("axiom constants must be positive");
  }
};

// (A1) dominance: I(E,P) >= c_d * I(P,P). Exact integer test.
inline bool axiom_a1(const InfluenceBlock& b, const AxiomConfig& cfg) {
  return geq_scaled(b.i_ep, cfg.c_d, b.i_pp);
}

// (A2) robustness: I(E,E) >= c_r * I(P,E). Exact integer test.
inline bool axiom_a2(const InfluenceBlock& b, const AxiomConfig& cfg) {
  return geq_scaled(b.i_ee, cfg.c_r, b.i_ep);
}

struct ObservedRatios {
  double dom = 0;  // I(E,P) / I(P,P)
  double rob = 0;  // I(E,E) / I(E,P); +infinity when I(E,P) = 0
};

/// Observed dominance and robustness ratios of a partition. The elite and
/// periphery must both be nonempty; dom is undefined when the periphery has
/// no internal influence, rob degenerates to an infinity marker when there
/// are no crossing edges.
inline ObservedRatios observed_ratios(const Graph& g, const Partition& p) {
  if (p.elite_size() == 0 || p.periphery_size() == 0)
    throw std::invalid_argument("degenerate partition: empty elite or periphery");
  InfluenceBlock b = influence_block(g, p);
  ObservedRatios r;
  if (b.i_pp == 0)
    throw std::invalid_argument("dominance ratio undefined: I(P,P) = 0");
  r.dom = static_cast<double>(b.i_ep) / static_cast<double>(b.i_pp);
  r.rob = b.i_ep == 0 ? std::numeric_limits<double>::infinity()
                      : static_cast<double>(b.i_ee) / static_cast<double>(b.i_ep);
  return r;
}

// delta_X = ln |E(X,X)| / ln |X|, internal edges counted in the graph's
// self-loop mode. |X| must be at least 2; an edgeless X yields -infinity.
inline double density(const Graph& g, const std::vector<Vertex>& x) {
  if (x.size() <= 1) throw std::invalid_argument("density undefined for singleton");
  Count internal = influence_between(g, x, x);
  return std::log(static_cast<double>(internal)) / std::log(static_cast<double>(x.size()));
}

inline double density_from_counts(Count internal_edges, Count size) {
  return std::log(static_cast<double>(internal_edges)) / std::log(static_cast<double>(size));
}

namespace detail {

// Block after moving elite vertex v to the periphery: v's elite-side edges
// join the cross block, its periphery-side edges and loop sink into i_pp.
inline InfluenceBlock block_after_removal(const Graph& g, const Partition& p,
                                          const InfluenceBlock& b, Vertex v) {
  Count to_elite = 0;
  for (Vertex u : g.neighbors(v))
    if (p.in_elite[u]) ++to_elite;
  Count to_periph = g.nonloop_degree(v) - to_elite;
  Count lc = g.loop_count(v);
  InfluenceBlock nb = b;
  nb.i_ee -= to_elite + lc;
  nb.i_ep += to_elite;
  nb.i_ep -= to_periph;
  nb.i_pp += to_periph + lc;
  return nb;
}

}  // namespace detail

struct CompactnessResult {
  bool compact = false;
  std::optional<Vertex> witness;  // a removable vertex when not compact
};

/// (A3) single-vertex minimality: the elite is compact iff moving any one of
/// its vertices to the periphery violates (A1) or (A2). The input partition
/// must itself satisfy (A1) and (A2). Removing the last elite vertex leaves
/// I(E,P) = 0, which violates (A1) whenever the periphery keeps any internal
/// influence.
inline CompactnessResult check_compactness(const Graph& g, const Partition& p,
                                           const AxiomConfig& cfg) {
  cfg.validate();
  InfluenceBlock b = influence_block(g, p);
  if (!axiom_a1(b, cfg) || !axiom_a2(b, cfg))
    throw std::invalid_argument("not an elite under config: (A1) or (A2) fails");
  CompactnessResult r;
  r.compact = true;
  for (Vertex v : p.elite) {
    InfluenceBlock nb = detail::block_after_removal(g, p, b, v);
    if (axiom_a1(nb, cfg) && axiom_a2(nb, cfg)) {
      r.compact = false;
      r.witness = v;
      break;
    }
  }
  return r;
}

/// Over-dominance: every single-vertex removal from the elite keeps (A1)
/// satisfied. Requires the partition to satisfy (A1) and (A2).
inline bool check_over_dominance(const Graph& g, const Partition& p, const AxiomConfig& cfg) {
  cfg.validate();
  InfluenceBlock b = influence_block(g, p);
  if (!axiom_a1(b, cfg) || !axiom_a2(b, cfg))
    throw std::invalid_argument("not an elite under config: (A1) or (A2) fails");
  for (Vertex v : p.elite) {
    InfluenceBlock nb = detail::block_after_removal(g, p, b, v);
    if (!axiom_a1(nb, cfg)) return false;
  }
  return true;
}

struct BoundChecks {
  bool sqrt_m_lb_ok = false;     // |E| >= sqrt(I(E,E)), exact integer test
  double m_inv_delta = 0;        // m^(1/delta_E)
  double size_vs_m_inv_delta = 0;  // |E| / m^(1/delta_E)
  double sublinear_exponent = 0;   // delta_V / delta_E
  double sublinear_bound = 0;      // n^(delta_V/delta_E)
  bool sublinear_holds = false;    // |E| <= n^(delta_V/delta_E)
};

inline BoundChecks check_bounds(const Graph& g, const Partition& p, const InfluenceBlock& b) {
  if (p.elite_size() < 2) throw std::invalid_argument("density undefined for singleton");
  BoundChecks out;
  using W = unsigned __int128;
  Count e = p.elite_size();
  out.sqrt_m_lb_ok = static_cast<W>(e) * static_cast<W>(e) >= static_cast<W>(b.i_ee);
  double delta_e = density_from_counts(b.i_ee, e);
  double delta_v = density_from_counts(g.m_total(), g.n());
  out.m_inv_delta = std::pow(static_cast<double>(g.m_total()), 1.0 / delta_e);
  out.size_vs_m_inv_delta = static_cast<double>(e) / out.m_inv_delta;
  out.sublinear_exponent = delta_v / delta_e;
  out.sublinear_bound = std::pow(static_cast<double>(g.n()), out.sublinear_exponent);
  out.sublinear_holds = static_cast<double>(e) <= out.sublinear_bound;
  return out;
}

inline BoundChecks check_bounds(const Graph& g, const Partition& p) {
  return check_bounds(g, p, influence_block(g, p));
}

/// Everything the empirical pipeline reports about one partition.
struct AxiomReport {
  SelfLoopMode mode = SelfLoopMode::implicit;
  AxiomConfig config;
  std::uint32_t n = 0;
  std::size_t elite_size = 0;
  InfluenceBlock block;
  double dom = 0;
  double rob = 0;  // infinity marker when I(E,P) = 0
  double delta_elite = 0;
  double delta_graph = 0;
  double dns = 0;  // (delta_E - delta_V) / delta_V
  bool a1_pass = false;
  bool a2_pass = false;
  bool a4_pass = false;
  std::optional<bool> compact;        // only evaluated when A1 and A2 hold
  std::optional<Vertex> compact_witness;
  std::optional<bool> over_dominant;  // likewise
  BoundChecks bounds;
};

inline AxiomReport check_axioms(const Graph& g, const Partition& p, const AxiomConfig& cfg) {
  cfg.validate();
  if (p.elite_size() == 0 || p.periphery_size() == 0)
    throw std::invalid_argument("degenerate partition: empty elite or periphery");
  if (p.elite_size() < 2) throw std::invalid_argument("density undefined for singleton elite");

  AxiomReport r;
  r.mode = g.mode();
  r.config = cfg;
  r.n = g.n();
  r.elite_size = p.elite_size();
  r.block = influence_block(g, p);
  if (r.block.i_pp == 0)
    throw std::invalid_argument("dominance ratio undefined: I(P,P) = 0");
  r.dom = static_cast<double>(r.block.i_ep) / static_cast<double>(r.block.i_pp);
  r.rob = r.block.i_ep == 0 ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(r.block.i_ee) / static_cast<double>(r.block.i_ep);
  r.delta_elite = density_from_counts(r.block.i_ee, r.elite_size);
  r.delta_graph = density_from_counts(g.m_total(), g.n());
  r.dns = (r.delta_elite - r.delta_graph) / r.delta_graph;
  r.a1_pass = axiom_a1(r.block, cfg);
  r.a2_pass = axiom_a2(r.block, cfg);
  r.a4_pass = r.delta_graph / r.delta_elite < 1.0;
  if (r.a1_pass && r.a2_pass) {
    auto c = check_compactness(g, p, cfg);
    r.compact = c.compact;
    r.compact_witness = c.witness;
    r.over_dominant = check_over_dominance(g, p, cfg);
  }
  r.bounds = check_bounds(g, p, r.block);
  return r;
}

/// One row of a dom/rob/dns sweep. Ratios use IEEE semantics: rob is +inf
/// when there are no crossing edges, dns is nan for k = 1.
struct SweepRow {
  Count k = 0;
  double x = 0;  // ln(k) / ln(n)
  double dom = 0;
  double rob = 0;
  double dns = 0;
  bool a1 = false;
  bool a2 = false;
  bool a4 = false;
  bool is_sqrt_m = false;
  bool is_sp = false;
};

struct SweepOptions {
  bool log_grid = false;      // rich method: log-spaced sizes instead of 1..n-1
  std::size_t points = 192;   // grid size when log_grid is set
};

namespace detail {

inline SweepRow sweep_row(const Graph& g, Count k, const InfluenceBlock& b,
                          const AxiomConfig& cfg, double delta_v, Count k_sqrt_m) {
  SweepRow row;
  row.k = k;
  row.x = std::log(static_cast<double>(k)) / std::log(static_cast<double>(g.n()));
  row.dom = static_cast<double>(b.i_ep) / static_cast<double>(b.i_pp);
  row.rob = b.i_ep == 0 ? std::numeric_limits<double>::infinity()
                        : static_cast<double>(b.i_ee) / static_cast<double>(b.i_ep);
  double delta_e = density_from_counts(b.i_ee, k);
  row.dns = (delta_e - delta_v) / delta_v;
  row.a1 = axiom_a1(b, cfg);
  row.a2 = axiom_a2(b, cfg);
  row.a4 = delta_v / delta_e < 1.0;
  row.is_sqrt_m = k == k_sqrt_m;
  return row;
}

}  // namespace detail

/// Sweep the observed ratios over elite sizes.
///
/// rich: prefixes of the degree ordering, either every k in 1..n-1 or a
/// log-spaced grid (which always includes ceil(sqrt(m)) and the symmetry
/// point). core: one row per threshold c from max_coreness down to 1, row key
/// k = |c-core|; thresholds that repeat a size are collapsed. The symmetry
/// marker flags the row minimizing |i_ee - i_pp| (rich: the diagram's
/// symmetry point).
inline std::vector<SweepRow> sweep_ratios(const Graph& g, EliteMethod method,
                                          const AxiomConfig& cfg, const SweepOptions& opts = {}) {
  cfg.validate();
  const std::uint32_t n = g.n();
  if (n < 2) throw std::invalid_argument("graph too small for a sweep");
  double delta_v = density_from_counts(g.m_total(), n);
  Count k_sqrt_m = ceil_isqrt(g.m_total());
  std::vector<SweepRow> rows;

  if (method == EliteMethod::rich) {
    ShiftDiagram d = shift_diagram(g, degree_ordering(g));
    std::vector<Count> ks;
    if (!opts.log_grid) {
      ks.resize(n - 1);
      for (Count k = 1; k <= n - 1; ++k) ks[k - 1] = k;
    } else {
      std::size_t points = std::max<std::size_t>(2, opts.points);
      for (std::size_t j = 0; j <= points; ++j) {
        double x = static_cast<double>(j) / static_cast<double>(points);
        Count k = static_cast<Count>(std::llround(std::pow(static_cast<double>(n), x)));
        ks.push_back(std::min<Count>(std::max<Count>(k, 1), n - 1));
      }
      if (k_sqrt_m >= 1 && k_sqrt_m <= n - 1) ks.push_back(k_sqrt_m);
      if (d.k_sp >= 1 && d.k_sp <= n - 1) ks.push_back(d.k_sp);
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    }
    for (Count k : ks) {
      SweepRow row = detail::sweep_row(g, k, d.curves[k], cfg, delta_v, k_sqrt_m);
      row.is_sp = k == d.k_sp;
      rows.push_back(row);
    }
  } else {
    CoreDecomposition dec = core_decomposition(g);
    if (dec.max_coreness == 0) return rows;
    ShiftDiagram d = shift_diagram(g, coreness_ordering(g, dec));
    Count prev_k = 0;
    for (std::uint32_t c = dec.max_coreness; c >= 1; --c) {
      Count k = dec.size_by_threshold.at(c);
      if (k == prev_k) continue;
      prev_k = k;
      rows.push_back(detail::sweep_row(g, k, d.curves[k], cfg, delta_v, k_sqrt_m));
    }
    // symmetry marker: the core partition whose blocks balance best
    if (!rows.empty()) {
      std::size_t best = 0;
      auto gap = [&](const SweepRow& r) {
        const InfluenceBlock& b = d.curves[r.k];
        return b.i_ee > b.i_pp ? b.i_ee - b.i_pp : b.i_pp - b.i_ee;
      };
      for (std::size_t i = 1; i < rows.size(); ++i)
        if (gap(rows[i]) < gap(rows[best])) best = i;
      rows[best].is_sp = true;
    }
  }
  return rows;
}

}  // namespace cpnet
