#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "thzff/cli.hpp"
#include "thzff/linkbudget.hpp"

using namespace thzff;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("thzff_cli_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST_CASE("stationary example") {
  const json doc = run_json({"stationary", "--ptx-dbm", "-10", "--snr-db", "20", "--nf-db", "10",
                             "--temp-k", "296"});
  CHECK(doc["result"]["max_bandwidth_hz"].get<double>() ==
        doctest::Approx(95583964791.4897).epsilon(1e-12));
  CHECK(doc["parameters"]["ptx_dbm"]["value"] == -10.0);
  CHECK(doc["parameters"]["ptx_dbm"]["source"] == "flag");
  CHECK(doc["parameters"]["temp_k"]["value"] == 296.0);
}

TEST_CASE("human output leads with the parameters") {
  const Run r = run({"stationary", "--ptx-dbm", "-10"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("parameters:", 0) == 0);
  CHECK(r.out.find("temp_k") != std::string::npos);
  CHECK(r.out.find("9.5584e+10") != std::string::npos);
}

TEST_CASE("power and mobile examples") {
  const json power = run_json({"power", "--bandwidth-hz", "1e10", "--mobility-m", "50",
                               "--ineq-l", "30", "--snr-db", "20", "--nf-db", "10"});
  CHECK(power["result"]["required_ptx_dbm"].get<double>() ==
        doctest::Approx(32.246392509629).epsilon(1e-12));

  const json mobile = run_json({"mobile", "--ptx-dbm", "32.24", "--mobility-m", "50",
                                "--ineq-l", "30"});
  CHECK(mobile["result"]["total_penalty"].get<double>() ==
        doctest::Approx(160333.506944444).epsilon(1e-12));
  CHECK(mobile["result"]["max_bandwidth_hz"].get<double>() ==
        doctest::Approx(9985291530.19408).epsilon(1e-12));
}

TEST_CASE("fixed receiver example and the no-design case") {
  const json doc = run_json({"mobile-fixed", "--freq-hz", "299792458000", "--dmin-m", "10",
                             "--dmax-m", "100", "--d2-max-m", "0.01"});
  CHECK(doc["result"]["max_bandwidth_hz"].get<double>() ==
        doctest::Approx(781168979410.008).epsilon(1e-9));
  CHECK(doc["result"]["d1_m"].get<double>() == doctest::Approx(0.04).epsilon(1e-12));

  const std::vector<std::string> too_big = {"mobile-fixed", "--dmin-m", "10", "--d2-max-m", "5"};
  const Run lenient = run(too_big);
  CHECK(lenient.code == 0);
  CHECK(lenient.out.find("no far-field design") != std::string::npos);
  std::vector<std::string> strict = too_big;
  strict.push_back("--strict");
  CHECK(run(strict).code == 1);
}

TEST_CASE("fraunhofer boundary") {
  const json doc = run_json({"fraunhofer", "--d1-m", "0.111764719015737", "--d2-m",
                             "0.111764719015737", "--freq-hz", "3e11"});
  CHECK(doc["result"]["fraunhofer_m"].get<double>() == doctest::Approx(200.0).epsilon(1e-12));
}

TEST_CASE("check agrees with the library") {
  const RadioParams radio{23.0, 20.0, 10.0, 296.0};
  const LinkGeometry geom{300e9, 10.0, 40.0};
  for (double d1 : {0.005, 0.02, 0.03}) {
    for (double b : {1e9, 1e12, 1e14}) {
      const json doc = run_json({"check", "--dmin-m", "10", "--dmax-m", "40", "--d1-m",
                                 std::to_string(d1), "--d2-m", "0.02", "--bandwidth-hz",
                                 std::to_string(b)});
      CHECK(doc["result"]["condition1"] == condition1_holds(geom, d1, 0.02));
      CHECK(doc["result"]["condition2"] == condition2_holds(radio, geom, d1, 0.02, b));
    }
  }
  const Run failing = run({"check", "--dmin-m", "10", "--d1-m", "0.04", "--d2-m", "0.04",
                           "--bandwidth-hz", "1e9", "--strict"});
  CHECK(failing.code == 1);
  const Run lenient = run({"check", "--dmin-m", "10", "--d1-m", "0.04", "--d2-m", "0.04",
                           "--bandwidth-hz", "1e9"});
  CHECK(lenient.code == 0);
}

TEST_CASE("flag beats config beats default") {
  TempDir dir;
  const std::string cfg = dir.write("c.json", R"({"temp_k": 290, "nf_db": 7})");
  const json doc = run_json({"stationary", "--config", cfg, "--temp-k", "296"});
  CHECK(doc["parameters"]["temp_k"]["value"] == 296.0);
  CHECK(doc["parameters"]["temp_k"]["source"] == "flag");
  CHECK(doc["parameters"]["temp_k"]["config_value"] == 290.0);
  CHECK(doc["parameters"]["nf_db"]["value"] == 7.0);
  CHECK(doc["parameters"]["nf_db"]["source"] == "config");
  CHECK(doc["parameters"]["snr_db"]["source"] == "default");

  const std::string empty = dir.write("empty.json", "{}");
  const json defaults = run_json({"stationary", "--config", empty});
  const json bare = run_json({"stationary"});
  CHECK(defaults["result"] == bare["result"]);
}

TEST_CASE("bad configs exit with code 2") {
  TempDir dir;
  const Run malformed = run({"stationary", "--config", dir.write("bad.json", "{\n  \"nf_db\": ,\n}")});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("line 2") != std::string::npos);
  CHECK(malformed.err.find("column") != std::string::npos);

  const Run unknown = run({"stationary", "--config", dir.write("u.json", R"({"gain": 3})")});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("gain") != std::string::npos);

  const Run units = run({"stationary", "--config", dir.write("f.json", R"({"freq_ghz": 300})")});
  CHECK(units.code == 2);
  CHECK(units.err.find("freq_hz") != std::string::npos);

  const Run text = run({"stationary", "--config", dir.write("t.json", R"({"nf_db": "ten"})")});
  CHECK(text.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  const Run flag = run({"stationary", "--gain-db", "3"});
  CHECK(flag.code == 2);
  CHECK_FALSE(flag.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"stationary", "--ptx-dbm", "abc"}).code == 2);
  CHECK(run({"stationary", "--temp-k", "-1"}).code == 2);
  CHECK(run({"mobile", "--mobility-m", "0.5"}).code == 2);
  CHECK(run({"sweep", "--scenario", "custom"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("sweep to a file") {
  TempDir dir;
  const std::string path = dir.file("fig4a.csv");
  const Run r = run({"sweep", "--scenario", "fig4a", "--format", "csv", "--out", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("series,", 0) == 0);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 100);
}

TEST_CASE("custom sweep from a config") {
  TempDir dir;
  const std::string cfg = dir.write("s.json", R"({
    "output": "required_power",
    "fixed": {"m": 50, "l": 30},
    "axes": [{"name": "bandwidth_hz", "values": [1e10]}]
  })");
  const Run r = run({"sweep", "--scenario", "custom", "--config", cfg, "--format", "json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["rows"][0]["required_ptx_dbm"].get<double>() ==
        doctest::Approx(32.246392509629).epsilon(1e-12));
}

TEST_CASE("oracle subcommand") {
  const json doc = run_json({"oracle", "--dmin-m", "10", "--grid", "128"});
  CHECK(doc["result"]["relative_gap"].get<double>() <= 5e-3);
  CHECK(doc["parameters"]["d_max_m"]["source"] == "derived");
  CHECK(run({"oracle", "--max-iter", "2"}).code == 1);
  CHECK(run({"oracle", "--grid", "8"}).code == 2);
}
