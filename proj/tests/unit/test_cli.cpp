#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// End-to-end checks of the command-line surface: exit codes, file outputs,
// determinism and pipe composability.

namespace {

namespace fs = std::filesystem;

const std::string cli = CPNET_CLI_PATH;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("cpnet_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("generate | shift pipe, sidecar summary") {
  TempDir tmp;
  std::string csv = tmp.file("d.csv");
  std::string json = tmp.file("d.json");
  int rc = run(cli + " generate elitistic --z 1 --b 1 | " + cli + " shift - --out " + csv +
               " --json " + json);
  REQUIRE(rc == 0);
  auto side = nlohmann::json::parse(slurp(json));
  REQUIRE(side["n"] == 9);
  REQUIRE(side["m_total"] == 18);
  REQUIRE(side["k_sp"] == 3);
  REQUIRE(side["k_sqrt_m"] == 5);
  std::istringstream lines(slurp(csv));
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "k,x,i_ee,i_ep,i_pp,i_ee_frac,i_ep_frac,i_pp_frac");
  std::size_t rows = 0;
  std::string row;
  while (std::getline(lines, row)) ++rows;
  REQUIRE(rows == 10);  // k = 0..9
}

TEST_CASE("shift writes a default sidecar next to the CSV") {
  TempDir tmp;
  std::string graph = tmp.file("g.txt");
  write_file(graph, "a b\nb c\nc a\n");
  std::string csv = tmp.file("out.csv");
  REQUIRE(run(cli + " shift " + graph + " --out " + csv) == 0);
  REQUIRE(fs::exists(csv + ".json"));
}

TEST_CASE("shift error paths and exit codes") {
  TempDir tmp;
  SECTION("missing file is a usage/io error") {
    REQUIRE(run(cli + " shift " + tmp.file("nope.txt") + " --out - > /dev/null 2>&1") == 2);
  }
  SECTION("single-vertex graph is a domain error") {
    std::string graph = tmp.file("loop.txt");
    write_file(graph, "x x\n");
    REQUIRE(run(cli + " --self-loops none shift " + graph + " --out - > /dev/null 2>&1") == 1);
  }
  SECTION("explicit loop in implicit mode is a domain error") {
    std::string graph = tmp.file("loop2.txt");
    write_file(graph, "x x\nx y\n");
    REQUIRE(run(cli + " shift " + graph + " --out - > /dev/null 2>&1") == 1);
  }
  SECTION("unknown subcommand is a usage error") {
    REQUIRE(run(cli + " frobnicate > /dev/null 2>&1") == 2);
  }
}

TEST_CASE("shift accepts a user-supplied ordering file") {
  TempDir tmp;
  std::string graph = tmp.file("g.txt");
  write_file(graph, "a b\nb c\nc a\nc d\n");
  std::string order = tmp.file("order.txt");
  write_file(order, "d\nc\nb\na\n");
  std::string json = tmp.file("d.json");
  REQUIRE(run(cli + " shift " + graph + " --ordering file:" + order + " --out " +
              tmp.file("d.csv") + " --json " + json) == 0);
  REQUIRE(nlohmann::json::parse(slurp(json)).contains("k_sp"));

  SECTION("partial orderings are rejected") {
    write_file(order, "d\nc\n");
    REQUIRE(run(cli + " shift " + graph + " --ordering file:" + order +
                " --out - > /dev/null 2>&1") == 1);
  }
  SECTION("unknown ordering flag is a usage error") {
    REQUIRE(run(cli + " shift " + graph + " --ordering random --out - > /dev/null 2>&1") == 2);
  }
}

TEST_CASE("axioms subcommand") {
  TempDir tmp;
  std::string graph = tmp.file("el.txt");
  REQUIRE(run(cli + " generate elitistic --z 1 --b 1 --out " + graph) == 0);

  SECTION("rich selector produces the expected report") {
    std::string out = tmp.file("report.json");
    REQUIRE(run(cli + " axioms " + graph + " --elite rich:3 --cd 1 --cr 1 --out " + out) == 0);
    auto report = nlohmann::json::parse(slurp(out));
    REQUIRE(report["a1_pass"] == true);
    REQUIRE(report["a2_pass"] == true);
    REQUIRE(report["compact"] == true);
    REQUIRE(report["i_ee"] == 6);
    REQUIRE(report["c_r"] == "1");
  }
  SECTION("rich:0 is a usage error") {
    REQUIRE(run(cli + " axioms " + graph + " --elite rich:0 > /dev/null 2>&1") == 2);
  }
  SECTION("core threshold beyond the maximum is a domain error, message lists the range") {
    std::string err = tmp.file("err.txt");
    REQUIRE(run(cli + " axioms " + graph + " --elite core:9 2> " + err + " > /dev/null") == 1);
    REQUIRE(slurp(err).find("[1, 2]") != std::string::npos);
  }
  SECTION("elite file selector") {
    std::string elite = tmp.file("elite.txt");
    write_file(elite, "0\n1\n2\n");
    REQUIRE(run(cli + " axioms " + graph + " --elite file:" + elite + " --out - > /dev/null") ==
            0);
  }
  SECTION("bad rational is a usage error") {
    REQUIRE(run(cli + " axioms " + graph + " --elite rich:3 --cd zebra > /dev/null 2>&1") == 2);
  }
}

TEST_CASE("sweep subcommand emits the documented CSV schema") {
  TempDir tmp;
  std::string graph = tmp.file("el.txt");
  REQUIRE(run(cli + " generate elitistic --z 2 --b 1 --out " + graph) == 0);
  std::string out = tmp.file("sweep.csv");
  REQUIRE(run(cli + " sweep " + graph + " --method rich --log-grid --points 32 --out " + out) ==
          0);
  std::istringstream lines(slurp(out));
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "k,x,dom,rob,dns,a1,a2,a4,is_sqrt_m,is_sp");
  bool saw_sqrt = false, saw_sp = false;
  std::string row;
  std::size_t rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    if (row.size() >= 4) {
      saw_sqrt |= row.compare(row.size() - 4, 4, ",1,0") == 0 ||
                  row.compare(row.size() - 4, 4, ",1,1") == 0;
      saw_sp |= row.compare(row.size() - 2, 2, ",1") == 0;
    }
  }
  REQUIRE(rows >= 20);
  REQUIRE(saw_sqrt);
  REQUIRE(saw_sp);
  REQUIRE(run(cli + " sweep " + graph + " --method core --out " + tmp.file("core.csv")) == 0);
}

TEST_CASE("temporal subcommand") {
  TempDir tmp;
  std::string graph = tmp.file("growth.txt");
  REQUIRE(run(cli + " generate growth --z-max 3 --b 1 --out " + graph) == 0);
  std::string out = tmp.file("frames.csv");
  REQUIRE(run(cli + " temporal " + graph + " --frames 20 --out " + out) == 0);
  std::istringstream lines(slurp(out));
  std::string header;
  std::getline(lines, header);
  REQUIRE(header == "t,cutoff_time,n,m,k_sp,r,sqrt_m_over_n");
  std::size_t rows = 0;
  std::string row;
  while (std::getline(lines, row)) ++rows;
  REQUIRE(rows == 20);

  SECTION("static edge list without timestamps is rejected") {
    std::string plain = tmp.file("plain.txt");
    write_file(plain, "a b\nb c\n");
    REQUIRE(run(cli + " temporal " + plain + " --out - > /dev/null 2>&1") == 1);
  }
}

TEST_CASE("generators write parameter headers and are deterministic") {
  TempDir tmp;
  std::string a = tmp.file("a.txt"), b = tmp.file("b.txt");
  REQUIRE(run(cli + " generate config-model --degrees 3,3,2,2,2 --seed 17 --out " + a) == 0);
  REQUIRE(run(cli + " generate config-model --degrees 3,3,2,2,2 --seed 17 --out " + b) == 0);
  REQUIRE(slurp(a) == slurp(b));
  REQUIRE(slurp(a).find("# config-model") != std::string::npos);
  REQUIRE(run(cli + " generate config-model --degrees 3,3,2,2,2 --seed 18 --out " + b) == 0);
  REQUIRE(slurp(a) != slurp(b));

  std::string degrees_file = tmp.file("deg.txt");
  write_file(degrees_file, "3 3 2\n2 2\n");
  REQUIRE(run(cli + " generate config-model --degrees " + degrees_file + " --out " +
              tmp.file("c.txt")) == 0);

  REQUIRE(run(cli + " generate grid --side 3 --out " + tmp.file("grid.txt")) == 0);
  std::string grid = slurp(tmp.file("grid.txt"));
  REQUIRE(grid.find("# grid side=3") != std::string::npos);

  SECTION("odd degree sum is a domain error") {
    REQUIRE(run(cli + " generate config-model --degrees 3,2,2 > /dev/null 2>&1") == 1);
  }
  SECTION("bad degrees spec is a usage error") {
    REQUIRE(run(cli + " generate config-model --degrees nope.bad > /dev/null 2>&1") == 2);
  }
}

TEST_CASE("oracle subcommands") {
  TempDir tmp;
  std::string k4 = tmp.file("k4.txt");
  write_file(k4, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  std::string out = tmp.file("min.json");
  REQUIRE(run(cli + " oracle min-elite " + k4 + " --cd 1 --cr 1 --out " + out) == 0);
  auto result = nlohmann::json::parse(slurp(out));
  REQUIRE(result["found"] == true);
  REQUIRE(result["size"] == 3);

  std::string ec = tmp.file("ec.json");
  REQUIRE(run(cli + " oracle expect-config --degrees 3,3,2,2,2 --i 2 --trials 2000 --seed 3 "
                    "--out " + ec) == 0);
  auto est = nlohmann::json::parse(slurp(ec));
  REQUIRE(est["kappa"] == 2);
  REQUIRE(est["formula"]["e_ep"] == "3");
  double mean_ep = std::stod(est["monte_carlo"]["mean_ep"].get<std::string>());
  REQUIRE(mean_ep > 2.5);
  REQUIRE(mean_ep < 4.0);
}

TEST_CASE("byte-identical reruns") {
  TempDir tmp;
  std::string graph = tmp.file("g.txt");
  REQUIRE(run(cli + " generate elitistic --z 2 --b 1 --out " + graph) == 0);
  std::string a = tmp.file("a.csv"), b = tmp.file("b.csv");
  REQUIRE(run(cli + " shift " + graph + " --out " + a) == 0);
  REQUIRE(run(cli + " shift " + graph + " --out " + b) == 0);
  REQUIRE(slurp(a) == slurp(b));
}
