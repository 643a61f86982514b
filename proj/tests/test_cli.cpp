#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Runs the installed binary through the shell, capturing both streams.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int serial = 0;
  std::string base = "/tmp/mf_cli_" + std::to_string(++serial);
  std::string cmd = env + (env.empty() ? "" : " ") + MF_CLI_PATH + " " + args +
                    " > " + base + ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

}  // namespace

TEST_CASE("construct writes the +/- line", "[cli]") {
  RunResult r = run_cli("construct --family paley --p 13");
  CHECK(r.code == 0);
  CHECK(r.out == "-+-++----++-+\n");
  CHECK(r.err.empty());
}

TEST_CASE("construct --out adds a JSON sidecar", "[cli]") {
  std::string path = "/tmp/mf_cli_seq.txt";
  std::remove(path.c_str());
  std::remove((path + ".json").c_str());
  RunResult r = run_cli("construct --family paley --p 13 --r 3 --t 26 --out " +
                        path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::string line = slurp(path);
  CHECK(line.size() == 27);
  CHECK(line.back() == '\n');
  nlohmann::json side = nlohmann::json::parse(slurp(path + ".json"));
  CHECK(side["r"] == 3);
  CHECK(side["t"] == 26);
  CHECK(side["set"]["family"] == "paley");
  CHECK(side["set"]["n"] == 13);
  std::remove(path.c_str());
  std::remove((path + ".json").c_str());
}

TEST_CASE("mf reports the exact merit factor", "[cli]") {
  RunResult r = run_cli("mf --family sidelnikov --q 27");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "sidelnikov");
  CHECK(j["n"] == 26);
  CHECK(j["q"] == 27);
  CHECK(j["r"] == 0);
  CHECK(j["t"] == 26);
  CHECK(j["sum_sq_acf"] == 141);
  CHECK(j["merit_factor"].get<double>() ==
        Catch::Approx(2.397163120567376).epsilon(1e-12));
}

TEST_CASE("sweep emits the prediction columns", "[cli]") {
  RunResult r = run_cli(
      "sweep --family paley --p 101 --R 0,0.25 --T 0.5,1,2 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "R,T,r,t,F,phi_pred,abs_err");
  struct Want {
    const char* prefix;
    double F;
    double pred;
  };
  // outer loop over R, inner over T; phi_1 at the five finite spots
  const Want want[] = {
      {"0,0.5,0,51,", 2.5752475247524753, 3.0},
      {"0,1,0,101,", 1.4784057971014493, 1.5},
      {"0,2,0,202,", 1.1271200486160986, 1.2},
      {"0.25,0.5,25,51,", 0.8852961198093942, 0.75},
      {"0.25,1,25,101,", 4.990704500978474, 6.0},
      {"0.25,2,25,202,", 1.5403548508871272, 12.0 / 7.0},
  };
  for (const Want& w : want) {
    REQUIRE(std::getline(in, line));
    INFO(line);
    CHECK(line.rfind(w.prefix, 0) == 0);
    std::string rest = line.substr(std::string(w.prefix).size());
    auto comma = rest.find(',');
    REQUIRE(comma != std::string::npos);
    double F = std::stod(rest.substr(0, comma));
    std::string tail = rest.substr(comma + 1);
    comma = tail.find(',');
    REQUIRE(comma != std::string::npos);
    double pred = std::stod(tail.substr(0, comma));
    double err = std::stod(tail.substr(comma + 1));
    CHECK(F == Catch::Approx(w.F).epsilon(1e-10));
    CHECK(pred == Catch::Approx(w.pred).epsilon(1e-10));
    CHECK(err == Catch::Approx(std::abs(w.F - w.pred)).margin(1e-9));
  }
  CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("predict reports the maximum and the pointwise value", "[cli]") {
  {
    RunResult r = run_cli("predict --nu 1 --max");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["phi_max"].get<double>() ==
          Catch::Approx(6.342061719763943).margin(1e-11));
    CHECK(j["T_opt"].get<double>() ==
          Catch::Approx(1.0578279068478237).margin(1e-11));
    CHECK(j["R_opt"].get<double>() ==
          Catch::Approx(0.22108604657608817).margin(1e-11));
  }
  {
    RunResult r = run_cli("predict --nu 1 --R 0.25 --T 1");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["phi"].get<double>() == Catch::Approx(6.0).margin(1e-12));
    CHECK(j["infinite"] == false);
  }
  {
    // a reciprocal that goes negative is reported as unbounded, not a number
    RunResult r = run_cli("predict --nu=-10 --R 0.45 --T 1");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["phi"].is_null());
    CHECK(j["infinite"] == true);
  }
  {
    RunResult r = run_cli("predict --R 0.25 --T 1");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("ConfigError", 0) == 0);
  }
}

TEST_CASE("diagnose prints the deviation schema", "[cli]") {
  RunResult r = run_cli("diagnose --family sidelnikov --q 27");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "sidelnikov");
  CHECK(j["n"] == 26);
  CHECK(j["model"] == "I+K");
  CHECK(j["nu"] == 0.0);
  CHECK(j["max_dev"].get<double>() ==
        Catch::Approx(0.4648726092334007).margin(1e-12));
  CHECK(j["argmax"].size() == 3);
  CHECK(j["bound"].is_number());
  CHECK(j["condition_value"].is_number());
  CHECK(j.size() == 8);

  RunResult p = run_cli("diagnose --family paley --p 13 --periodic");
  REQUIRE(p.code == 0);
  nlohmann::json pj = nlohmann::json::parse(p.out);
  CHECK(pj["values"] == nlohmann::json::array({-3, 1}));
  CHECK(pj["condition_sum_num"] == 156);
  CHECK(pj["hadamard"] == false);
}

TEST_CASE("verify exit status reflects the aggregate", "[cli]") {
  {
    RunResult r = run_cli("verify --suite tables --m 4 --primes 5,13,17");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["total"] == 3);
  }
  {
    // 7 = 3 (mod 4): no quartic-residue table row exists
    RunResult r = run_cli("verify --suite tables --m 4 --primes 7");
    CHECK(r.code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 1);
    CHECK(j["checks"][0]["pass"] == false);
  }
  {
    RunResult r = run_cli("verify --suite charsums --qmax 16");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["failed"] == 0);
    CHECK(j["total"].get<int>() >= 20);
  }
}

TEST_CASE("build errors exit with status 2 and a named reason", "[cli]") {
  {
    RunResult r = run_cli("mf --family paley --p 15");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("NotPrime", 0) == 0);
    CHECK(r.out.empty());
  }
  {
    // 307 = x^2 + 27 has no integer solution
    RunResult r = run_cli("construct --family hall --p 307");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("NotHallPrime", 0) == 0);
  }
  {
    RunResult r = run_cli("mf --family nonesuch --p 7");
    CHECK(r.code == 2);
    CHECK(r.err.rfind("UnknownFamily", 0) == 0);
  }
  {
    RunResult r = run_cli("construct --no-such-flag");
    CHECK(r.code == 2);
  }
}

TEST_CASE("outputs are byte-identical across worker counts", "[cli]") {
  const char* cmds[] = {
      "diagnose --family sidelnikov --q 27",
      "sweep --family paley --p 101 --R 0,0.25 --T 0.5,1,2 --format csv",
      "mf --family gmw --q 64 --s 8 --inner singer",
  };
  for (const char* cmd : cmds) {
    RunResult one = run_cli(cmd, "MERIT_THREADS=1");
    RunResult four = run_cli(cmd, "MERIT_THREADS=4");
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("dump-config round-trips through --config", "[cli]") {
  RunResult first =
      run_cli("--dump-config mf --family sidelnikov --q 27 --t 52");
  REQUIRE(first.code == 0);
  std::string path = "/tmp/mf_cli_cfg.json";
  {
    std::ofstream f(path, std::ios::binary);
    f << first.out;
  }
  RunResult second = run_cli("--config " + path + " --dump-config");
  REQUIRE(second.code == 0);
  CHECK(second.out == first.out);

  // the stored run executes identically to the original flags
  RunResult from_cfg = run_cli("--config " + path);
  RunResult direct = run_cli("mf --family sidelnikov --q 27 --t 52");
  REQUIRE(from_cfg.code == 0);
  CHECK(from_cfg.out == direct.out);
  std::remove(path.c_str());

  RunResult missing = run_cli("--config /tmp/mf_cli_nonexistent.json");
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("ConfigError", 0) == 0);
}
