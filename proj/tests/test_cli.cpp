#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(ISOSPEC_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("help and usage errors") {
  const Run help = run("--help");
  CHECK(help.code == 0);
  for (const char* cmd : {"catalog", "verify-clifford", "sample", "certify", "spectrum", "exact"})
    CHECK(help.out.find(cmd) != std::string::npos);
  const Run sh = run("spectrum --help");
  CHECK(sh.code == 0);
  for (const char* flag : {"--family", "--points", "--bandwidth", "--nev", "--normalization", "--out", "--meta"})
    CHECK(sh.out.find(flag) != std::string::npos);

  CHECK(run("catalog --bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("nonsense").code == 2);
  CHECK(run("sample --family fkm --m 1 --k 3 --m1 1 --m2 1 --level 0 --out x").code == 2);
  CHECK(run("sample --family fkm --m 1 --k 3 --level 0.2 --focal M1 --out x").code == 2);

  const Run bad = run("spectrum --family fkm --m 1 --k 1 --focal M2 --points 100");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("--m1 1 --m2 1") != std::string::npos);
  CHECK(bad.out.find("--m 1 --k 3") != std::string::npos);
}

TEST_CASE("exact spectra") {
  const Run q3 = run("exact quotient --k 3");
  CHECK(q3.code == 0);
  CHECK(q3.out.find("lambda1 = 4 ") != std::string::npos);
  const Run q1 = run("exact quotient --k 1");
  CHECK(q1.out.find("lambda1 = 3 multiplicity = 6") != std::string::npos);
  const Run s = run("exact sphere --dim 2 --out exact_s2.json");
  CHECK(s.code == 0);
  const json j = json::parse(slurp("exact_s2.json"));
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("spectrum").at("lambda1") == 2.0);
  const Run torus = run("exact product --p 1 --q 1");
  const auto at = torus.out.find("lambda1 = ");
  REQUIRE(at != std::string::npos);
  CHECK(std::stod(torus.out.substr(at + 10)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(torus.out.find("multiplicity = 4") != std::string::npos);
}

TEST_CASE("catalog and Clifford verification") {
  const Run c = run("catalog --max-sum 15 --facts --out catalog.json");
  CHECK(c.code == 0);
  const json j = json::parse(slurp("catalog.json"));
  CHECK(j.at("schema_version") == 1);
  bool has78 = false;
  for (const json& e : j.at("pairs")) has78 = has78 || (e.at("m1") == 7 && e.at("m2") == 8);
  CHECK(has78);
  CHECK(!j.at("facts").empty());
  CHECK(run("catalog --format csv").out.rfind("g,m1,m2", 0) == 0);

  const Run v = run("verify-clifford --all --out verify.json");
  CHECK(v.code == 0);
  CHECK(json::parse(slurp("verify.json")).at("pass") == true);
  const Run one = run("verify-clifford --m 2 --k 1 --matrices");
  CHECK(one.code == 0);
  CHECK(json::parse(one.out).at("results")[0].at("system").at("matrices").size() == 3);
}

TEST_CASE("certify") {
  const Run all = run("certify --g4 --all --max-sum 64 --out certs.json --csv certs.csv");
  CHECK(all.code == 0);
  const json j = json::parse(slurp("certs.json"));
  REQUIRE(j.is_array());
  CHECK(j.size() > 50);
  for (const json& c : j) {
    CHECK(c.at("schema_version") == 1);
    CHECK(c.at("verdict") == "pass");
  }
  CHECK(slurp("certs.csv").rfind("m1,m2,n,K1", 0) == 0);

  const Run f = run("certify --focal --m1 4 --m2 5");
  CHECK(f.code == 0);
  const json fj = json::parse(f.out);
  CHECK(fj.size() == 4);
  CHECK(run("certify --focal --m1 1 --m2 2").code == 3);
  CHECK(run("certify --g4 --m1 1 --m2 2").code == 2);
  CHECK(run("certify --g4 --m1 2 --m2 4").code == 2);
}

TEST_CASE("sampling and spectra are reproducible") {
  const Run s = run("--seed 5 sample --family fkm --m1 1 --m2 1 --focal M2 --points 300 --out m2cloud");
  CHECK(s.code == 0);
  const json side = json::parse(slurp("m2cloud.json"));
  CHECK(side.at("seed") == 5);
  CHECK(side.at("count") == 300);
  CHECK(fs::file_size("m2cloud.bin") == 300 * 6 * 8);
  CHECK(run("sample --family sphere --dim 2 --points 50 --format csv --out s2cloud", "ISOSPEC_SEED=9").code == 0);
  CHECK(json::parse(slurp("s2cloud.json")).at("seed") == 9);

  const std::string args = "spectrum --family torus --points 1500 --nev 8";
  CHECK(run("--threads 1 " + args + " --out spec1.csv --meta meta1.json").code == 0);
  CHECK(run("--threads 3 " + args + " --out spec3.csv --meta meta3.json").code == 0);
  CHECK(slurp("spec1.csv") == slurp("spec3.csv"));
  CHECK(slurp("meta1.json") == slurp("meta3.json"));
  CHECK(run(args + " --out spec_scalar.csv", "ISOSPEC_SIMD=scalar").code == 0);
  CHECK(slurp("spec1.csv") == slurp("spec_scalar.csv"));
  const json meta = json::parse(slurp("meta1.json"));
  CHECK(meta.at("schema_version") == 1);
  CHECK(meta.at("estimate").at("parameters").at("seed") == 1);
  CHECK(meta.at("exact_lambda1").get<double>() == doctest::Approx(2.0).epsilon(1e-14));

  const Run fromcloud = run("spectrum --cloud m2cloud.json --nev 6");
  CHECK(fromcloud.code == 0);
  CHECK(fromcloud.out.find("lambda1 = ") != std::string::npos);
}
