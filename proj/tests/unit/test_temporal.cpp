#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "cpnet/generators.hpp"
#include "cpnet/influence.hpp"
#include "cpnet/io.hpp"
#include "cpnet/temporal.hpp"
#include "test_support.hpp"

using namespace cpnet;
using Catch::Approx;

namespace {

TimestampedEdgeList growing_star(std::uint32_t leaves) {
  std::vector<TimedEdge> edges;
  std::vector<std::string> labels(leaves + 1);
  labels[0] = "hub";
  for (std::uint32_t i = 1; i <= leaves; ++i) {
    labels[i] = "v" + std::to_string(i);
    edges.push_back({0, i, static_cast<std::int64_t>(i)});
  }
  return TimestampedEdgeList(std::move(edges), std::move(labels));
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  std::vector<double> ra = ranks(a), rb = ranks(b);
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= ra.size();
  mb /= rb.size();
  double cov = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  return cov / std::sqrt(va * vb);
}

}  // namespace

TEST_CASE("frames follow 5% vertex-growth targets") {
  TimestampedEdgeList tel = growing_star(20);  // n grows 2, 3, ..., 21
  FrameSeries series = build_frames(tel, 20);
  REQUIRE(series.frames.size() == 20);
  const std::uint32_t n_final = 21;
  for (const Frame& f : series.frames) {
    std::uint32_t target = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(f.index) * n_final + 19) / 20);
    REQUIRE(f.n >= target);
  }
  REQUIRE(series.frames.back().n == n_final);
  for (std::size_t i = 1; i < series.frames.size(); ++i)
    REQUIRE(series.frames[i].cutoff_time >= series.frames[i - 1].cutoff_time);
}

TEST_CASE("single frame covers the whole graph") {
  TimestampedEdgeList tel = growing_star(10);
  FrameSeries series = build_frames(tel, 1);
  REQUIRE(series.frames.size() == 1);
  REQUIRE(series.frames[0].n == 11);
}

TEST_CASE("coarse timestamps make frames coincide, flagged") {
  std::vector<TimedEdge> edges{{0, 1, 5}, {1, 2, 5}, {0, 2, 5}};
  TimestampedEdgeList tel(std::move(edges), {"a", "b", "c"});
  FrameSeries series = elite_fraction_series(tel, 10, EliteMethod::rich);
  REQUIRE(series.frames.size() == 10);
  for (std::size_t i = 1; i < series.frames.size(); ++i) {
    REQUIRE(series.frames[i].coincides_with_previous);
    REQUIRE(series.frames[i].r == series.frames[0].r);  // static replay: r constant
  }
}

TEST_CASE("snapshots are monotone and satisfy the block identity") {
  TimestampedEdgeList tel = elitistic_growth(2, 1);
  FrameSeries series = build_frames(tel, 8);
  std::set<std::pair<std::string, std::string>> prev;
  for (const Frame& f : series.frames) {
    Graph g = snapshot_graph(tel, f.cutoff_time, SelfLoopMode::implicit);
    std::set<std::pair<std::string, std::string>> cur;
    for (auto [u, v] : g.edges()) cur.insert({g.label(u), g.label(v)});
    for (const auto& e : prev) REQUIRE(cur.count(e) == 1);
    prev = std::move(cur);

    Partition p = rich_club(g, std::max<std::uint32_t>(1, g.n() / 3));
    InfluenceBlock b = influence_block(g, p);
    REQUIRE(b.i_ee + b.i_ep + b.i_pp == g.m_total());
  }
}

TEST_CASE("elite fraction decreases along the elitistic growth family") {
  TimestampedEdgeList tel = elitistic_growth(4, 1);
  FrameSeries series = elite_fraction_series(tel, 20, EliteMethod::rich);
  REQUIRE(series.frames.size() == 20);
  std::vector<double> r, trend;
  for (const Frame& f : series.frames) {
    REQUIRE_FALSE(f.skipped);
    r.push_back(f.r);
    trend.push_back(f.sqrt_m_over_n);
  }
  for (std::size_t i = 1; i < r.size(); ++i) REQUIRE(r[i] <= r[i - 1] + 1e-12);
  REQUIRE(spearman(r, trend) >= 0.9);
  // the fraction tracks the sqrt(m)/n trend within a constant band
  for (std::size_t i = 0; i < r.size(); ++i) {
    REQUIRE(r[i] / trend[i] >= 0.25);
    REQUIRE(r[i] / trend[i] <= 4.0);
  }
}

TEST_CASE("core-method frames analyze the coreness crossing") {
  TimestampedEdgeList tel = elitistic_growth(3, 1);
  FrameSeries series = elite_fraction_series(tel, 10, EliteMethod::core);
  for (const Frame& f : series.frames) {
    if (f.skipped) continue;
    REQUIRE(f.k_sp >= 1);
    REQUIRE(f.k_sp <= f.n);
    REQUIRE(f.r == Approx(double(f.k_sp) / double(f.n)));
  }
}

TEST_CASE("frames with too-small snapshots are skipped") {
  // the first event is a lone self-loop, so early cutoffs see one vertex
  std::vector<TimedEdge> edges{{0, 0, 0}, {0, 1, 10}, {1, 2, 20}};
  TimestampedEdgeList tel(std::move(edges), {"a", "b", "c"});
  FrameSeries series = build_frames(tel, 3);
  analyze_frames(series, tel, EliteMethod::rich, SelfLoopMode::none);
  REQUIRE(series.frames.front().skipped);
  REQUIRE_FALSE(series.frames.back().skipped);
}

TEST_CASE("frame CSV format") {
  TimestampedEdgeList tel = growing_star(6);
  FrameSeries series = elite_fraction_series(tel, 3, EliteMethod::rich);
  std::ostringstream out;
  write_frames_csv(out, series);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "t,cutoff_time,n,m,k_sp,r,sqrt_m_over_n");
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) ++rows;
  REQUIRE(rows == 3);
}

TEST_CASE("empty and unusable inputs are rejected") {
  REQUIRE_THROWS_AS(build_frames(TimestampedEdgeList({}, {}), 20), std::invalid_argument);
  TimestampedEdgeList tel = growing_star(3);
  REQUIRE_THROWS_AS(build_frames(tel, 0), std::invalid_argument);
}
