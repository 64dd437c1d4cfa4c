#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "cpnet/axioms.hpp"
#include "cpnet/graph.hpp"
#include "cpnet/influence.hpp"
#include "cpnet/oracles.hpp"
#include "cpnet/temporal.hpp"

namespace cpnet {

namespace detail {

inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Ratios are serialized as decimal strings; infinities become "inf".
inline std::string json_ratio(double v) { return "\"" + fmt_double(v) + "\""; }

inline std::string json_opt_bool(const std::optional<bool>& v) {
  if (!v.has_value()) return "null";
  return *v ? "true" : "false";
}

}  // namespace detail

/// Diagram CSV: one row per elite size k in 0..n, with the logarithmic-axis
/// coordinate x = ln(k)/ln(n) and both raw block counts and m-normalized
/// fractions. `max_rows` > 0 thins the output to about that many rows while
/// always keeping k = 0, the symmetry point, the cross maximum and k = n.
inline void write_shift_csv(std::ostream& os, const Graph& g, const ShiftDiagram& d,
                            std::size_t max_rows = 0) {
  os << "k,x,i_ee,i_ep,i_pp,i_ee_frac,i_ep_frac,i_pp_frac\n";
  const double log_n = std::log(static_cast<double>(g.n()));
  const double m = static_cast<double>(g.m_total());
  std::size_t stride = 1;
  if (max_rows > 0 && d.curves.size() > max_rows) stride = d.curves.size() / max_rows + 1;
  for (std::size_t k = 0; k < d.curves.size(); ++k) {
    if (stride > 1 && k % stride != 0 && k != d.k_sp && k != d.k_crossmax &&
        k + 1 != d.curves.size())
      continue;
    const InfluenceBlock& b = d.curves[k];
    double x = std::log(static_cast<double>(k)) / log_n;
    os << k << ',' << detail::fmt_double(x) << ',' << b.i_ee << ',' << b.i_ep << ',' << b.i_pp
       << ',' << detail::fmt_double(static_cast<double>(b.i_ee) / m) << ','
       << detail::fmt_double(static_cast<double>(b.i_ep) / m) << ','
       << detail::fmt_double(static_cast<double>(b.i_pp) / m) << '\n';
  }
}

/// Sidecar summary for a shift run.
inline std::string shift_sidecar_json(const Graph& g, const ShiftDiagram& d) {
  const double log_n = std::log(static_cast<double>(g.n()));
  double x_sp = std::log(static_cast<double>(d.k_sp)) / log_n;
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(g.n()) + ",\n";
  out += "  \"m_total\": " + std::to_string(g.m_total()) + ",\n";
  out += "  \"mode\": \"" + std::string(to_string(g.mode())) + "\",\n";
  out += "  \"k_sp\": " + std::to_string(d.k_sp) + ",\n";
  out += "  \"x_sp\": " + (std::isfinite(x_sp) ? detail::fmt_double(x_sp) : std::string("null")) +
         ",\n";
  out += "  \"k_crossmax\": " + std::to_string(d.k_crossmax) + ",\n";
  out += "  \"k_sqrt_m\": " + std::to_string(ceil_isqrt(g.m_total())) + "\n";
  out += "}\n";
  return out;
}

inline std::string axiom_report_json(const Graph& g, const AxiomReport& r) {
  std::string out = "{\n";
  out += "  \"mode\": \"" + std::string(to_string(r.mode)) + "\",\n";
  out += "  \"c_d\": \"" + r.config.c_d.str() + "\",\n";
  out += "  \"c_r\": \"" + r.config.c_r.str() + "\",\n";
  out += "  \"n\": " + std::to_string(r.n) + ",\n";
  out += "  \"elite_size\": " + std::to_string(r.elite_size) + ",\n";
  out += "  \"periphery_size\": " + std::to_string(r.n - r.elite_size) + ",\n";
  out += "  \"i_ee\": " + std::to_string(r.block.i_ee) + ",\n";
  out += "  \"i_ep\": " + std::to_string(r.block.i_ep) + ",\n";
  out += "  \"i_pp\": " + std::to_string(r.block.i_pp) + ",\n";
  out += "  \"m_total\": " + std::to_string(r.block.m_total) + ",\n";
  out += "  \"dom\": " + detail::json_ratio(r.dom) + ",\n";
  out += "  \"rob\": " + detail::json_ratio(r.rob) + ",\n";
  out += "  \"delta_elite\": " + detail::json_ratio(r.delta_elite) + ",\n";
  out += "  \"delta_graph\": " + detail::json_ratio(r.delta_graph) + ",\n";
  out += "  \"dns\": " + detail::json_ratio(r.dns) + ",\n";
  out += "  \"a1_pass\": " + std::string(r.a1_pass ? "true" : "false") + ",\n";
  out += "  \"a2_pass\": " + std::string(r.a2_pass ? "true" : "false") + ",\n";
  out += "  \"a4_pass\": " + std::string(r.a4_pass ? "true" : "false") + ",\n";
  out += "  \"compact\": " + detail::json_opt_bool(r.compact) + ",\n";
  out += "  \"compact_witness\": " +
         (r.compact_witness ? "\"" + detail::json_escape(g.label(*r.compact_witness)) + "\""
                            : std::string("null")) +
         ",\n";
  out += "  \"over_dominant\": " + detail::json_opt_bool(r.over_dominant) + ",\n";
  out += "  \"bounds\": {\n";
  out += "    \"sqrt_m_lb_ok\": " + std::string(r.bounds.sqrt_m_lb_ok ? "true" : "false") + ",\n";
  out += "    \"m_inv_delta\": " + detail::json_ratio(r.bounds.m_inv_delta) + ",\n";
  out += "    \"size_vs_m_inv_delta\": " + detail::json_ratio(r.bounds.size_vs_m_inv_delta) +
         ",\n";
  out += "    \"sublinear_exponent\": " + detail::json_ratio(r.bounds.sublinear_exponent) + ",\n";
  out += "    \"sublinear_bound\": " + detail::json_ratio(r.bounds.sublinear_bound) + ",\n";
  out += "    \"sublinear_holds\": " +
         std::string(r.bounds.sublinear_holds ? "true" : "false") + "\n";
  out += "  }\n";
  out += "}\n";
  return out;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "k,x,dom,rob,dns,a1,a2,a4,is_sqrt_m,is_sp\n";
  for (const SweepRow& r : rows) {
    os << r.k << ',' << detail::fmt_double(r.x) << ',' << detail::fmt_double(r.dom) << ','
       << detail::fmt_double(r.rob) << ',' << detail::fmt_double(r.dns) << ',' << (r.a1 ? 1 : 0)
       << ',' << (r.a2 ? 1 : 0) << ',' << (r.a4 ? 1 : 0) << ',' << (r.is_sqrt_m ? 1 : 0) << ','
       << (r.is_sp ? 1 : 0) << '\n';
  }
}

inline void write_frames_csv(std::ostream& os, const FrameSeries& series) {
  os << "t,cutoff_time,n,m,k_sp,r,sqrt_m_over_n\n";
  for (const Frame& f : series.frames) {
    os << f.index << ',' << f.cutoff_time << ',' << f.n << ',' << f.m << ',' << f.k_sp << ','
       << detail::fmt_double(f.r) << ',' << detail::fmt_double(f.sqrt_m_over_n) << '\n';
  }
}

inline std::string min_elite_json(const Graph& g, const MinEliteResult& r,
                                  const AxiomConfig& cfg) {
  std::string out = "{\n";
  out += "  \"c_d\": \"" + cfg.c_d.str() + "\",\n";
  out += "  \"c_r\": \"" + cfg.c_r.str() + "\",\n";
  out += "  \"found\": " + std::string(r.found ? "true" : "false") + ",\n";
  if (r.found) {
    out += "  \"size\": " + std::to_string(r.size) + ",\n";
    out += "  \"elite\": [";
    for (std::size_t i = 0; i < r.elite.size(); ++i) {
      if (i) out += ", ";
      out += "\"" + detail::json_escape(g.label(r.elite[i])) + "\"";
    }
    out += "],\n";
    out += "  \"i_ee\": " + std::to_string(r.block.i_ee) + ",\n";
    out += "  \"i_ep\": " + std::to_string(r.block.i_ep) + ",\n";
    out += "  \"i_pp\": " + std::to_string(r.block.i_pp) + "\n";
  } else {
    out += "  \"size\": null,\n";
    out += "  \"elite\": null\n";
  }
  out += "}\n";
  return out;
}

inline std::string expect_config_json(const DegreeSequence& seq, std::size_t i,
                                      const ExpectedInfluence& formula,
                                      const MonteCarloEstimate& mc, std::uint64_t seed) {
  std::string out = "{\n";
  out += "  \"n\": " + std::to_string(seq.n()) + ",\n";
  out += "  \"m\": " + std::to_string(seq.m()) + ",\n";
  out += "  \"i\": " + std::to_string(i) + ",\n";
  out += "  \"kappa\": " + std::to_string(degree_symmetry_point(seq)) + ",\n";
  out += "  \"formula\": {\"e_ep\": " + detail::json_ratio(formula.e_ep) +
         ", \"e_ee\": " + detail::json_ratio(formula.e_ee) +
         ", \"e_pp\": " + detail::json_ratio(formula.e_pp) + "},\n";
  out += "  \"monte_carlo\": {\"mean_ep\": " + detail::json_ratio(mc.mean_ep) +
         ", \"mean_ee\": " + detail::json_ratio(mc.mean_ee) +
         ", \"mean_pp\": " + detail::json_ratio(mc.mean_pp) +
         ", \"stderr_ep\": " + detail::json_ratio(mc.stderr_ep) +
         ", \"stderr_ee\": " + detail::json_ratio(mc.stderr_ee) +
         ", \"stderr_pp\": " + detail::json_ratio(mc.stderr_pp) + "},\n";
  out += "  \"trials\": " + std::to_string(mc.trials) + ",\n";
  out += "  \"seed\": " + std::to_string(seed) + "\n";
  out += "}\n";
  return out;
}

}  // namespace cpnet
