#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cpnet {

using Vertex = std::uint32_t;
using Count = std::uint64_t;

// Per-vertex membership flags for a vertex subset (1 = member).
using Membership = std::vector<std::uint8_t>;

// Self-loop convention. The influence model assumes every vertex carries
// exactly one self-loop; raw datasets usually ship none. `implicit` adds one
// loop per vertex, `none` keeps only loops present in the input.
enum class SelfLoopMode { implicit, none };

inline const char* to_string(SelfLoopMode m) {
  return m == SelfLoopMode::implicit ? "implicit" : "none";
}

// Exact integer ceil(sqrt(x)).
inline Count ceil_isqrt(Count x) {
  if (x == 0) return 0;
  Count r = static_cast<Count>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  while (r * r < x) ++r;
  return r;
}

/// Undirected multigraph with dense vertex ids 0..n-1.
///
/// Non-loop edges are kept both as a raw edge list (multi-edges retained) and
/// as a CSR adjacency; loops are tracked per vertex and never stored in the
/// adjacency. Degrees follow the influence convention: a self-loop contributes
/// one, so sum(degree) = 2*m_nonloop + m_loop. A Graph is immutable after
/// build() and safe for concurrent read-only use.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::uint32_t n,
                     std::vector<std::pair<Vertex, Vertex>> nonloop_edges,
                     std::vector<std::uint32_t> explicit_loops,
                     SelfLoopMode mode,
                     std::vector<std::string> labels = {}) {
    Graph g;
    g.n_ = n;
    g.mode_ = mode;
    g.edges_ = std::move(nonloop_edges);
    g.loops_ = std::move(explicit_loops);
    g.labels_ = std::move(labels);
    if (!g.labels_.empty() && g.labels_.size() != n)
      throw std::invalid_argument("label vector size does not match vertex count");
    if (!g.loops_.empty() && g.loops_.size() != n)
      throw std::invalid_argument("loop vector size does not match vertex count");
    for (auto [u, v] : g.edges_) {
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("loop passed as non-loop edge");
    }
    if (mode == SelfLoopMode::implicit) {
      for (auto c : g.loops_)
        if (c != 0)
          throw std::invalid_argument("explicit self-loops not allowed in implicit mode");
      g.loops_.clear();
      g.m_loop_ = n;
    } else {
      g.m_loop_ = 0;
      for (auto c : g.loops_) g.m_loop_ += c;
    }
    g.build_csr();
    return g;
  }

  std::uint32_t n() const { return n_; }
  SelfLoopMode mode() const { return mode_; }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  Count m_nonloop() const { return edges_.size(); }
  Count m_loop() const { return m_loop_; }
  Count m_total() const { return edges_.size() + m_loop_; }

  Count loop_count(Vertex v) const {
    check_vertex(v);
    if (mode_ == SelfLoopMode::implicit) return 1;
    return loops_.empty() ? 0 : loops_[v];
  }

  Count nonloop_degree(Vertex v) const {
    check_vertex(v);
    return adj_offsets_[v + 1] - adj_offsets_[v];
  }

  // d_V(v): every incident non-loop edge once, every self-loop once.
  Count degree(Vertex v) const { return nonloop_degree(v) + loop_count(v); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_.data() + adj_offsets_[v],
            static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
  }

  bool has_labels() const { return !labels_.empty(); }

  std::string label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  void check_vertex(Vertex v) const {
    if (v >= n_) throw std::invalid_argument("vertex id out of range");
  }

 private:
  void build_csr() {
    adj_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : edges_) {
      ++adj_offsets_[u + 1];
      ++adj_offsets_[v + 1];
    }
    for (std::size_t i = 1; i < adj_offsets_.size(); ++i)
      adj_offsets_[i] += adj_offsets_[i - 1];
    adj_.resize(adj_offsets_[n_]);
    std::vector<std::uint64_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (auto [u, v] : edges_) {
      adj_[cursor[u]++] = v;
      adj_[cursor[v]++] = u;
    }
  }

  std::uint32_t n_ = 0;
  SelfLoopMode mode_ = SelfLoopMode::implicit;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::uint32_t> loops_;  // explicit loops, none mode only
  std::vector<std::string> labels_;
  Count m_loop_ = 0;
  std::vector<std::uint64_t> adj_offsets_;
  std::vector<Vertex> adj_;
};

inline Membership membership_of(std::uint32_t n, std::span<const Vertex> ids) {
  Membership m(n, 0);
  for (Vertex v : ids) {
    if (v >= n) throw std::invalid_argument("vertex id out of range");
    m[v] = 1;
  }
  return m;
}

// d_X(v): edges from v into X, v's self-loop included iff v is in X.
inline Count degree_wrt(const Graph& g, Vertex v, const Membership& in_x) {
  g.check_vertex(v);
  if (in_x.size() != g.n()) throw std::invalid_argument("membership size mismatch");
  Count d = 0;
  for (Vertex u : g.neighbors(v))
    if (in_x[u]) ++d;
  if (in_x[v]) d += g.loop_count(v);
  return d;
}

inline Count degree_wrt(const Graph& g, Vertex v, const std::vector<Vertex>& x) {
  return degree_wrt(g, v, membership_of(g.n(), x));
}

// Degree-descending vertex ordering, ties broken by ascending id.
inline std::vector<Vertex> degree_ordering(const Graph& g) {
  std::vector<Vertex> order(g.n());
  for (std::uint32_t i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    Count da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  return order;
}

struct TimedEdge {
  Vertex u, v;
  std::int64_t t;
};

/// Edge list with per-edge creation times, vertex ids already densified.
class TimestampedEdgeList {
 public:
  TimestampedEdgeList() = default;
  TimestampedEdgeList(std::vector<TimedEdge> edges, std::vector<std::string> labels)
      : edges_(std::move(edges)), labels_(std::move(labels)) {
    sorted_ = std::is_sorted(edges_.begin(), edges_.end(),
                             [](const TimedEdge& a, const TimedEdge& b) { return a.t < b.t; });
  }

  std::uint32_t n() const { return static_cast<std::uint32_t>(labels_.size()); }
  const std::vector<TimedEdge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool sorted_by_time() const { return sorted_; }

  // Stable sort by timestamp; afterwards times are non-decreasing.
  void normalize() {
    if (!sorted_) {
      std::stable_sort(edges_.begin(), edges_.end(),
                       [](const TimedEdge& a, const TimedEdge& b) { return a.t < b.t; });
      sorted_ = true;
    }
  }

 private:
  std::vector<TimedEdge> edges_;
  std::vector<std::string> labels_;
  bool sorted_ = false;
};

struct IngestOptions {
  SelfLoopMode mode = SelfLoopMode::implicit;
  bool dedup = false;
};

namespace detail {

inline bool is_comment_or_blank(std::string_view line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  if (i == std::string_view::npos) return true;
  return line[i] == '#' || line[i] == '%';
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int64(std::string_view s, std::size_t line_no, const char* what) {
  std::int64_t value = 0;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size())
    throw std::invalid_argument("malformed " + std::string(what) + " at line " +
                                std::to_string(line_no));
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("malformed " + std::string(what) + " at line " +
                                  std::to_string(line_no));
    value = value * 10 + (s[i] - '0');
  }
  return neg ? -value : value;
}

struct ParsedEdgeLines {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> id_of;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // raw, loops included
  std::vector<std::int64_t> times;               // filled when timestamps requested
};

inline ParsedEdgeLines parse_edge_lines(std::istream& in, bool want_timestamps) {
  ParsedEdgeLines r;
  std::string line;
  std::size_t line_no = 0;
  auto id_for = [&](std::string_view name) -> Vertex {
    auto it = r.id_of.find(std::string(name));
    if (it != r.id_of.end()) return it->second;
    Vertex id = static_cast<Vertex>(r.labels.size());
    r.labels.emplace_back(name);
    r.id_of.emplace(r.labels.back(), id);
    return id;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    auto f = split_fields(line);
    if (f.size() < 2 || f.size() > 3)
      throw std::invalid_argument("malformed line " + std::to_string(line_no) +
                                  ": expected 'u v' or 'u v t'");
    if (want_timestamps && f.size() < 3)
      throw std::invalid_argument("missing timestamp at line " + std::to_string(line_no));
    Vertex u = id_for(f[0]);
    Vertex v = id_for(f[1]);
    r.pairs.emplace_back(u, v);
    if (want_timestamps) {
      std::int64_t t = parse_int64(f[2], line_no, "timestamp");
      if (t < 0)
        throw std::invalid_argument("negative timestamp at line " + std::to_string(line_no));
      r.times.push_back(t);
    }
  }
  if (r.pairs.empty()) throw std::invalid_argument("empty graph");
  return r;
}

}  // namespace detail

/// Parse whitespace-separated "u v" lines into a Graph. Vertex names are
/// arbitrary strings, mapped to dense ids in order of first appearance; lines
/// starting with '#' or '%' are skipped; a third field is ignored.
inline Graph ingest_edge_list(std::istream& in, const IngestOptions& opts = {}) {
  auto parsed = detail::parse_edge_lines(in, /*want_timestamps=*/false);
  std::uint32_t n = static_cast<std::uint32_t>(parsed.labels.size());

  std::vector<std::pair<Vertex, Vertex>> nonloop;
  std::vector<std::uint32_t> loops(n, 0);
  bool any_loop = false;
  nonloop.reserve(parsed.pairs.size());
  for (std::size_t i = 0; i < parsed.pairs.size(); ++i) {
    auto [u, v] = parsed.pairs[i];
    if (u == v) {
      if (opts.mode == SelfLoopMode::implicit)
        throw std::invalid_argument(
            "explicit self-loop on vertex '" + parsed.labels[u] +
            "' not allowed in implicit mode (use --self-loops none)");
      ++loops[u];
      any_loop = true;
    } else {
      nonloop.emplace_back(u, v);
    }
  }
  if (opts.dedup) {
    for (auto& e : nonloop)
      if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(nonloop.begin(), nonloop.end());
    nonloop.erase(std::unique(nonloop.begin(), nonloop.end()), nonloop.end());
    for (auto& c : loops)
      if (c > 1) c = 1;
  }
  if (!any_loop) loops.clear();
  return Graph::build(n, std::move(nonloop), std::move(loops), opts.mode,
                      std::move(parsed.labels));
}

/// Parse "u v t" lines; timestamps are required, non-negative integers.
inline TimestampedEdgeList ingest_timestamped_edge_list(std::istream& in) {
  auto parsed = detail::parse_edge_lines(in, /*want_timestamps=*/true);
  std::vector<TimedEdge> edges;
  edges.reserve(parsed.pairs.size());
  for (std::size_t i = 0; i < parsed.pairs.size(); ++i)
    edges.push_back({parsed.pairs[i].first, parsed.pairs[i].second, parsed.times[i]});
  return TimestampedEdgeList(std::move(edges), std::move(parsed.labels));
}

/// Serialize to the edge-list text format. Comment lines are emitted first,
/// each prefixed with "# ". Explicit loops are written as "v v" lines;
/// implicit loops are a mode property and are not written.
inline void write_edge_list(std::ostream& os, const Graph& g,
                            std::span<const std::string> comments = {}) {
  for (const auto& c : comments) os << "# " << c << '\n';
  for (auto [u, v] : g.edges()) os << g.label(u) << ' ' << g.label(v) << '\n';
  if (g.mode() == SelfLoopMode::none) {
    for (Vertex v = 0; v < g.n(); ++v)
      for (Count i = 0; i < g.loop_count(v); ++i) os << g.label(v) << ' ' << g.label(v) << '\n';
  }
}

}  // namespace cpnet
