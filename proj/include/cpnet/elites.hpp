#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"

namespace cpnet {

enum class EliteMethod { rich, core };

/// Elite of the k highest-degree vertices, ties broken by ascending id.
/// Equals the length-k prefix of degree_ordering(g).
inline Partition rich_club(const Graph& g, std::uint32_t k) {
  if (k < 1 || k > g.n()) throw std::invalid_argument("rich-club size out of range [1, n]");
  auto order = degree_ordering(g);
  return prefix_partition(g, order, k);
}

/// Result of k-core peeling. Coreness is computed on the non-loop skeleton:
/// loops are ignored, parallel edges each count toward degree.
struct CoreDecomposition {
  std::vector<std::uint32_t> coreness;
  std::uint32_t max_coreness = 0;
  std::map<std::uint32_t, Count> size_by_threshold;  // c -> |{v : coreness(v) >= c}|
};

/// Linear-time peeling (bin-sorted Batagelj-Zversnik).
inline CoreDecomposition core_decomposition(const Graph& g) {
  const std::uint32_t n = g.n();
  CoreDecomposition out;
  out.coreness.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.nonloop_degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<std::uint64_t> bin(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bin[deg[v]];
  std::uint64_t start = 0;
  for (std::uint32_t d = 0; d <= max_deg; ++d) {
    std::uint64_t num = bin[d];
    bin[d] = start;
    start += num;
  }
  std::vector<Vertex> vert(n);
  std::vector<std::uint64_t> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::uint32_t d = max_deg; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::uint64_t i = 0; i < n; ++i) {
    Vertex v = vert[i];
    out.coreness[v] = deg[v];
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        std::uint32_t du = deg[u];
        std::uint64_t pu = pos[u];
        std::uint64_t pw = bin[du];
        Vertex w = vert[pw];
        if (u != w) {
          std::swap(vert[pu], vert[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) out.max_coreness = std::max(out.max_coreness, out.coreness[v]);
  std::vector<Count> hist(out.max_coreness + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++hist[out.coreness[v]];
  Count cum = 0;
  for (std::uint32_t c = out.max_coreness; c >= 1; --c) {
    cum += hist[c];
    out.size_by_threshold[c] = cum;
  }
  return out;
}

/// Elite of all vertices with coreness >= c. The elite size k_c is determined
/// by the network structure.
inline Partition c_core_elite(const Graph& g, const CoreDecomposition& dec, std::uint32_t c) {
  if (dec.coreness.size() != g.n()) throw std::invalid_argument("decomposition size mismatch");
  if (c < 1 || c > dec.max_coreness)
    throw std::invalid_argument("core threshold out of range [1, " +
                                std::to_string(dec.max_coreness) + "]");
  std::vector<Vertex> elite;
  for (Vertex v = 0; v < g.n(); ++v)
    if (dec.coreness[v] >= c) elite.push_back(v);
  return Partition::from_elite(g.n(), std::move(elite));
}

/// Coreness-descending ordering (ties by ascending id). Its length-k_c prefix
/// is exactly the c-core elite for every threshold c.
inline std::vector<Vertex> coreness_ordering(const Graph& g, const CoreDecomposition& dec) {
  std::vector<Vertex> order(g.n());
  for (std::uint32_t i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (dec.coreness[a] != dec.coreness[b]) return dec.coreness[a] > dec.coreness[b];
    return a < b;
  });
  return order;
}

// Elite files: one vertex label per line.
inline void write_elite_file(std::ostream& os, const Graph& g, const Partition& p) {
  for (Vertex v : p.elite) os << g.label(v) << '\n';
}

inline Partition read_elite_file(std::istream& in, const Graph& g) {
  std::unordered_map<std::string, Vertex> id_of;
  for (Vertex v = 0; v < g.n(); ++v) id_of.emplace(g.label(v), v);
  std::vector<Vertex> elite;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    auto f = detail::split_fields(line);
    if (f.size() != 1)
      throw std::invalid_argument("malformed elite file line " + std::to_string(line_no));
    auto it = id_of.find(std::string(f[0]));
    if (it == id_of.end())
      throw std::invalid_argument("unknown vertex '" + std::string(f[0]) + "' in elite file");
    elite.push_back(it->second);
  }
  return Partition::from_elite(g.n(), std::move(elite));
}

/// CLI elite selector grammar: "rich:<k>", "core:<c>" or "file:<path>".
struct EliteSelector {
  enum class Kind { rich, core, file } kind = Kind::rich;
  std::uint64_t value = 0;  // k or c
  std::string path;
};

inline EliteSelector parse_elite_selector(const std::string& s) {
  EliteSelector sel;
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad elite selector '" + s + "': expected rich:<k>, core:<c> or file:<path>");
  std::string head = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  if (head == "file") {
    if (rest.empty()) throw std::invalid_argument("bad elite selector: empty path");
    sel.kind = EliteSelector::Kind::file;
    sel.path = rest;
    return sel;
  }
  if (head != "rich" && head != "core")
    throw std::invalid_argument("bad elite selector '" + s + "'");
  sel.kind = head == "rich" ? EliteSelector::Kind::rich : EliteSelector::Kind::core;
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad elite selector '" + s + "': expected a positive integer");
  sel.value = std::stoull(rest);
  if (sel.value == 0)
    throw std::invalid_argument("bad elite selector '" + s + "': size must be >= 1");
  return sel;
}

}  // namespace cpnet
