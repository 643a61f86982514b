// meritfactor: construct +/-1 sequences from difference-set families over
// finite fields, measure exact merit factors, sweep (R,T) grids against the
// asymptotic prediction, evaluate the limiting function and its maximum, and
// run verification suites. All runs are deterministic; MERIT_THREADS (or
// --threads) only changes scheduling, never output bytes.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mf/asym.hpp"
#include "mf/error.hpp"
#include "mf/io.hpp"
#include "mf/seq.hpp"
#include "mf/sets.hpp"
#include "mf/spectral.hpp"
#include "mf/verify.hpp"

namespace {

using mf::ordered_json;

struct RunConfig {
  std::string command;
  std::string family;
  int64_t p = 0;
  int64_t q = 0;
  int64_t m = 0;
  std::vector<int64_t> classes;
  int64_t s = 0;
  std::string inner = "singer";
  int64_t r = 0;
  int64_t t = 0;  // 0 means the full period n
  std::vector<double> R_grid;
  std::vector<double> T_grid;
  bool has_nu = false;
  double nu = 0.0;
  double R_val = std::numeric_limits<double>::quiet_NaN();
  double T_val = std::numeric_limits<double>::quiet_NaN();
  bool do_max = false;
  std::string model;
  int exclude_zero = -1;  // -1 family default, 0 include, 1 exclude
  bool periodic = false;
  std::string suite;
  int64_t qmax = 256;
  std::vector<int64_t> primes;
  std::string out;
  std::string format = "csv";
  int threads = 0;
};

[[noreturn]] void cfg_fail(const std::string& msg) {
  mf::fail("ConfigError", msg);
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["family"] = c.family;
  j["p"] = c.p;
  j["q"] = c.q;
  j["m"] = c.m;
  j["classes"] = c.classes;
  j["s"] = c.s;
  j["inner"] = c.inner;
  j["r"] = c.r;
  j["t"] = c.t;
  j["R"] = c.R_grid;
  j["T"] = c.T_grid;
  if (c.has_nu) j["nu"] = c.nu; else j["nu"] = nullptr;
  if (std::isnan(c.R_val)) j["R_val"] = nullptr; else j["R_val"] = c.R_val;
  if (std::isnan(c.T_val)) j["T_val"] = nullptr; else j["T_val"] = c.T_val;
  j["max"] = c.do_max;
  j["model"] = c.model;
  if (c.exclude_zero < 0) {
    j["exclude_zero"] = nullptr;
  } else {
    j["exclude_zero"] = (c.exclude_zero != 0);
  }
  j["periodic"] = c.periodic;
  j["suite"] = c.suite;
  j["qmax"] = c.qmax;
  j["primes"] = c.primes;
  j["out"] = c.out;
  j["format"] = c.format;
  j["threads"] = c.threads;
  return j;
}

void load_config(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) cfg_fail("cannot open config file " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    cfg_fail(std::string("config parse failure: ") + e.what());
  }
  auto get = [&](const char* key, auto& target) {
    if (j.contains(key) && !j[key].is_null()) {
      j[key].get_to(target);
    }
  };
  get("command", c.command);
  get("family", c.family);
  get("p", c.p);
  get("q", c.q);
  get("m", c.m);
  get("classes", c.classes);
  get("s", c.s);
  get("inner", c.inner);
  get("r", c.r);
  get("t", c.t);
  get("R", c.R_grid);
  get("T", c.T_grid);
  if (j.contains("nu") && !j["nu"].is_null()) {
    c.nu = j["nu"].get<double>();
    c.has_nu = true;
  }
  get("R_val", c.R_val);
  get("T_val", c.T_val);
  get("max", c.do_max);
  get("model", c.model);
  if (j.contains("exclude_zero") && !j["exclude_zero"].is_null()) {
    c.exclude_zero = j["exclude_zero"].get<bool>() ? 1 : 0;
  }
  get("periodic", c.periodic);
  get("suite", c.suite);
  get("qmax", c.qmax);
  get("primes", c.primes);
  get("out", c.out);
  get("format", c.format);
  get("threads", c.threads);
}

void write_output(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) cfg_fail("cannot write " + cfg.out);
  f << content;
}

std::pair<int64_t, int> factor_prime_power(int64_t q) {
  if (q < 2) mf::fail("NotPrime", "q must be a prime power, got " + std::to_string(q));
  for (int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int64_t v = q;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (v != 1) {
      mf::fail("NotPrime", std::to_string(q) + " is not a prime power");
    }
    return {p, k};
  }
  return {q, 1};
}

int log2_exact(int64_t q) {
  int k = 0;
  int64_t v = q;
  while (v > 1 && v % 2 == 0) {
    v /= 2;
    ++k;
  }
  if (v != 1 || k < 1) {
    mf::fail("WrongForm", "q = " + std::to_string(q) + " is not a power of 2");
  }
  return k;
}

mf::FieldCtx make_field_q(int64_t q) {
  auto [p, k] = factor_prime_power(q);
  return k == 1 ? mf::FieldCtx::prime_field(p) : mf::FieldCtx::ext_field(p, k);
}

// Inner-set spec for the product construction: one of
//   trivial | singer | paley | hall | gmw:<s2>[:<spec for B2>]
// paley and hall build the complement of the corresponding additive set in
// Z_{s-1}, read as exponents in GF(s)^*; gmw recurses (3 levels at most).
mf::SubsetOfGroup build_inner(int64_t s, const std::string& spec, int depth) {
  if (depth > 3) mf::fail("BadB", "inner recursion depth capped at 3");
  std::string head = spec;
  std::string rest;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    head = spec.substr(0, colon);
    rest = spec.substr(colon + 1);
  }
  if (head == "trivial" || head == "singer") {
    if (head == "trivial" && s != 2) {
      mf::fail("BadB", "trivial inner set requires s = 2");
    }
    int k = log2_exact(s);
    mf::FieldCtx Fs =
        k == 1 ? mf::FieldCtx::prime_field(2) : mf::FieldCtx::ext_field(2, k);
    return mf::build_trace_one(Fs);
  }
  if (head == "paley" || head == "hall") {
    int64_t pp = s - 1;
    mf::SubsetOfGroup A;
    if (head == "paley") {
      if (!mf::is_prime(pp) || pp % 4 != 3) {
        mf::fail("BadB", "paley inner set needs s-1 prime congruent to 3 mod 4");
      }
      A = mf::build_cyclotomic(mf::FieldCtx::prime_field(pp), 2, {0});
    } else {
      A = mf::build_hall(mf::FieldCtx::prime_field(pp));
    }
    mf::SubsetOfGroup B;
    B.group = mf::GroupKind::Multiplicative;
    B.q = s;
    B.n = s - 1;
    B.family = head;
    B.membership.assign(static_cast<std::size_t>(s - 1), 0);
    for (int64_t e = 0; e < s - 1; ++e) {
      B.membership[static_cast<std::size_t>(e)] =
          A.membership[static_cast<std::size_t>(e)] ? 0 : 1;
    }
    return B;
  }
  if (head == "gmw") {
    auto colon2 = rest.find(':');
    std::string s2_str = colon2 == std::string::npos ? rest : rest.substr(0, colon2);
    std::string spec2 =
        colon2 == std::string::npos ? std::string("singer") : rest.substr(colon2 + 1);
    if (s2_str.empty()) mf::fail("BadB", "gmw inner spec needs a subfield order");
    int64_t s2 = std::strtoll(s2_str.c_str(), nullptr, 10);
    mf::FieldCtx Fs = mf::FieldCtx::ext_field(2, log2_exact(s));
    mf::SubsetOfGroup B2 = build_inner(s2, spec2, depth + 1);
    mf::SubsetOfGroup B = mf::build_gmw(Fs, s2, B2);
    return B;
  }
  mf::fail("BadB", "unknown inner set spec: " + head);
}

mf::SubsetOfGroup build_family(const RunConfig& cfg) {
  const std::string& fam = cfg.family;
  if (fam == "paley") {
    if (cfg.p <= 0) cfg_fail("--p is required for family paley");
    return mf::build_cyclotomic(mf::FieldCtx::prime_field(cfg.p), 2, {0});
  }
  if (fam == "cyclotomic") {
    if (cfg.p <= 0) cfg_fail("--p is required for family cyclotomic");
    if (cfg.m <= 0) cfg_fail("--m is required for family cyclotomic");
    if (cfg.classes.empty()) cfg_fail("--classes is required for family cyclotomic");
    return mf::build_cyclotomic(mf::FieldCtx::prime_field(cfg.p), cfg.m,
                                cfg.classes);
  }
  if (fam == "hall") {
    if (cfg.p <= 0) cfg_fail("--p is required for family hall");
    return mf::build_hall(mf::FieldCtx::prime_field(cfg.p));
  }
  if (fam == "sidelnikov") {
    if (cfg.q <= 0) cfg_fail("--q is required for family sidelnikov");
    return mf::build_sidelnikov(make_field_q(cfg.q));
  }
  if (fam == "gmw") {
    if (cfg.q <= 0) cfg_fail("--q is required for family gmw");
    if (cfg.s <= 0) cfg_fail("--s is required for family gmw");
    mf::FieldCtx F = mf::FieldCtx::ext_field(2, log2_exact(cfg.q));
    mf::SubsetOfGroup B = build_inner(cfg.s, cfg.inner, 1);
    return mf::build_gmw(F, cfg.s, B);
  }
  if (fam.empty()) cfg_fail("--family is required");
  mf::fail("UnknownFamily", fam);
}

int cmd_construct(const RunConfig& cfg) {
  mf::SubsetOfGroup D = build_family(cfg);
  int64_t t = cfg.t > 0 ? cfg.t : D.n;
  mf::LittlewoodSeq f = mf::realize(D, cfg.r, t);
  std::string line = mf::seq_line(f);
  if (cfg.out.empty()) {
    std::fwrite(line.data(), 1, line.size(), stdout);
    return 0;
  }
  {
    std::ofstream fh(cfg.out, std::ios::binary);
    if (!fh) cfg_fail("cannot write " + cfg.out);
    fh << line;
  }
  ordered_json sidecar;
  sidecar["set"] = mf::set_json(D);
  sidecar["r"] = f.r;
  sidecar["t"] = f.t;
  std::ofstream sh(cfg.out + ".json", std::ios::binary);
  if (!sh) cfg_fail("cannot write " + cfg.out + ".json");
  sh << sidecar.dump(2) << "\n";
  return 0;
}

int cmd_mf(const RunConfig& cfg) {
  mf::SubsetOfGroup D = build_family(cfg);
  int64_t t = cfg.t > 0 ? cfg.t : D.n;
  mf::MeritReport rep = mf::merit_factor(D, cfg.r, t);
  write_output(cfg, mf::merit_json(rep).dump(2) + "\n");
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  mf::SubsetOfGroup D = build_family(cfg);
  if (cfg.R_grid.empty() || cfg.T_grid.empty()) {
    cfg_fail("sweep needs nonempty --R and --T grids");
  }
  std::vector<mf::SweepCell> rows = mf::sweep(D, cfg.R_grid, cfg.T_grid);
  double nu = mf::family_nu(D);
  std::vector<double> preds(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    preds[i] = mf::phi(nu, rows[i].R, rows[i].T).value;
  }
  if (cfg.format == "csv") {
    write_output(cfg, mf::sweep_csv(rows, &preds));
    return 0;
  }
  if (cfg.format != "json") cfg_fail("unknown format: " + cfg.format);
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ordered_json r;
    r["R"] = rows[i].R;
    r["T"] = rows[i].T;
    r["r"] = rows[i].r;
    r["t"] = rows[i].t;
    if (rows[i].F) r["F"] = *rows[i].F; else r["F"] = nullptr;
    r["phi_pred"] = preds[i];
    if (rows[i].F) {
      r["abs_err"] = std::abs(*rows[i].F - preds[i]);
    } else {
      r["abs_err"] = nullptr;
    }
    arr.push_back(std::move(r));
  }
  ordered_json out;
  out["family"] = D.family;
  out["n"] = D.n;
  out["nu"] = nu;
  out["rows"] = std::move(arr);
  write_output(cfg, out.dump(2) + "\n");
  return 0;
}

int cmd_predict(const RunConfig& cfg) {
  if (!cfg.has_nu) cfg_fail("predict needs --nu");
  ordered_json j;
  j["nu"] = cfg.nu;
  if (cfg.do_max) {
    mf::MaxResult mr = mf::phi_max(cfg.nu);
    j["phi_max"] = mr.phi_max;
    j["T_opt"] = mr.T_opt;
    j["R_opt"] = mr.R_opt;
  } else {
    if (std::isnan(cfg.R_val) || std::isnan(cfg.T_val)) {
      cfg_fail("predict needs --R and --T (or --max)");
    }
    mf::PhiResult pr = mf::phi(cfg.nu, cfg.R_val, cfg.T_val);
    j["R"] = cfg.R_val;
    j["T"] = cfg.T_val;
    if (pr.infinite) j["phi"] = nullptr; else j["phi"] = pr.value;
    j["infinite"] = pr.infinite;
  }
  write_output(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_diagnose(const RunConfig& cfg) {
  mf::SubsetOfGroup D = build_family(cfg);
  if (cfg.periodic) {
    mf::PeriodicAcfReport rep = mf::periodic_profile(D);
    write_output(cfg, mf::periodic_json(rep).dump(2) + "\n");
    return 0;
  }
  mf::SpectralModel model =
      cfg.model.empty() ? mf::default_model(D) : mf::parse_model(cfg.model);
  double nu = mf::family_nu(D);
  bool excl = cfg.exclude_zero < 0 ? (D.group == mf::GroupKind::Additive)
                                   : (cfg.exclude_zero != 0);
  mf::SpectralReport rep =
      mf::lf_deviation(mf::realize(D, 0, D.n), model, nu, excl);
  write_output(cfg, mf::spectral_json(rep).dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<mf::verify::Check> checks;
  if (cfg.suite == "charsums") {
    checks = mf::verify::charsums_suite(cfg.qmax);
  } else if (cfg.suite == "sets") {
    checks = mf::verify::sets_suite();
  } else if (cfg.suite == "tables") {
    if (cfg.m <= 0) cfg_fail("verify --suite tables needs --m");
    if (cfg.primes.empty()) cfg_fail("verify --suite tables needs --primes");
    checks = mf::verify::tables_suite(cfg.m, cfg.primes);
  } else if (cfg.suite == "spectral") {
    mf::SubsetOfGroup D = build_family(cfg);
    checks = mf::verify::spectral_suite(D);
  } else if (cfg.suite.empty()) {
    cfg_fail("verify needs --suite charsums|sets|tables|spectral");
  } else {
    cfg_fail("unknown suite: " + cfg.suite);
  }
  int failed = 0;
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
    if (!c.pass) ++failed;
  }
  ordered_json j;
  j["suite"] = cfg.suite;
  j["total"] = checks.size();
  j["failed"] = failed;
  j["checks"] = std::move(arr);
  write_output(cfg, j.dump(2) + "\n");
  return failed == 0 ? 0 : 1;
}

void add_family_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family,
                  "paley|cyclotomic|hall|gmw|sidelnikov");
  sub->add_option("--p", cfg.p, "prime modulus (additive families)");
  sub->add_option("--q", cfg.q, "field order (gmw, sidelnikov)");
  sub->add_option("--m", cfg.m, "cyclotomy order");
  sub->add_option("--classes", cfg.classes, "class indices, comma separated")
      ->delimiter(',');
  sub->add_option("--s", cfg.s, "subfield order (gmw)");
  sub->add_option("--inner", cfg.inner,
                  "inner set: trivial|singer|paley|hall|gmw:<s2>[:<spec>]");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    }
  }
  try {
    if (!config_path.empty()) load_config(cfg, config_path);
  } catch (const mf::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  CLI::App app{"merit factors of difference-set +/-1 sequences"};
  app.require_subcommand(0, 1);
  bool dump_config = false;
  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON run configuration file");
  app.add_flag("--dump-config", dump_config,
               "print the resolved configuration as JSON and exit");
  app.add_option("--threads", cfg.threads,
                 "worker threads (MERIT_THREADS overrides)");

  CLI::App* c_construct = app.add_subcommand(
      "construct", "write the +/- line (and a JSON sidecar with --out)");
  add_family_options(c_construct, cfg);
  c_construct->add_option("--r", cfg.r, "rotation");
  c_construct->add_option("--t", cfg.t, "length (default: the period n)");
  c_construct->add_option("--out", cfg.out, "output path");

  CLI::App* c_mf = app.add_subcommand("mf", "exact merit factor report");
  add_family_options(c_mf, cfg);
  c_mf->add_option("--r", cfg.r, "rotation");
  c_mf->add_option("--t", cfg.t, "length (default: the period n)");
  c_mf->add_option("--out", cfg.out, "output path");

  CLI::App* c_sweep =
      app.add_subcommand("sweep", "merit factors over an (R,T) grid");
  add_family_options(c_sweep, cfg);
  c_sweep->add_option("--R", cfg.R_grid, "rotation fractions, comma separated")
      ->delimiter(',');
  c_sweep->add_option("--T", cfg.T_grid, "length fractions, comma separated")
      ->delimiter(',');
  c_sweep->add_option("--out", cfg.out, "output path");
  c_sweep->add_option("--format", cfg.format, "csv|json");

  CLI::App* c_predict =
      app.add_subcommand("predict", "limiting merit factor phi_nu");
  CLI::Option* opt_nu = c_predict->add_option("--nu", cfg.nu, "family parameter");
  c_predict->add_option("--R", cfg.R_val, "rotation fraction");
  c_predict->add_option("--T", cfg.T_val, "length fraction");
  c_predict->add_flag("--max", cfg.do_max, "report the global maximum instead");
  c_predict->add_option("--out", cfg.out, "output path");

  CLI::App* c_diagnose = app.add_subcommand(
      "diagnose", "spectral deviation report (or --periodic profile)");
  add_family_options(c_diagnose, cfg);
  c_diagnose->add_option("--model", cfg.model, "I|I+nJ|I+K (default: family)");
  c_diagnose->add_flag("--exclude-zero{1},--include-zero{0}", cfg.exclude_zero,
                       "count or skip the (0,0,0) triple");
  c_diagnose->add_flag("--periodic", cfg.periodic,
                       "periodic autocorrelation profile instead");
  c_diagnose->add_option("--out", cfg.out, "output path");

  CLI::App* c_verify =
      app.add_subcommand("verify", "run a verification suite");
  c_verify->add_option("--suite", cfg.suite, "charsums|sets|tables|spectral");
  c_verify->add_option("--qmax", cfg.qmax, "largest field order (charsums)");
  c_verify->add_option("--primes", cfg.primes, "primes, comma separated (tables)")
      ->delimiter(',');
  add_family_options(c_verify, cfg);
  c_verify->add_option("--out", cfg.out, "output path");

  for (CLI::App* sub :
       {c_construct, c_mf, c_sweep, c_predict, c_diagnose, c_verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
  }
  if (opt_nu->count() > 0) cfg.has_nu = true;

  if (cfg.threads > 0 && std::getenv("MERIT_THREADS") == nullptr) {
    setenv("MERIT_THREADS", std::to_string(cfg.threads).c_str(), 0);
  }

  try {
    if (dump_config) {
      std::string s = config_json(cfg).dump(2) + "\n";
      std::fwrite(s.data(), 1, s.size(), stdout);
      return 0;
    }
    if (cfg.command == "construct") return cmd_construct(cfg);
    if (cfg.command == "mf") return cmd_mf(cfg);
    if (cfg.command == "sweep") return cmd_sweep(cfg);
    if (cfg.command == "predict") return cmd_predict(cfg);
    if (cfg.command == "diagnose") return cmd_diagnose(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    cfg_fail(cfg.command.empty() ? "no subcommand given"
                                 : "unknown command: " + cfg.command);
  } catch (const mf::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "InternalError: %s\n", e.what());
    return 2;
  }
}
