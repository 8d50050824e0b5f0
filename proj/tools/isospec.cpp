// Command-line front end. Exit codes: 0 success, 1 failure, 2 usage, 3 inconclusive.

#include "isospec/catalog.hpp"
#include "isospec/certificates.hpp"
#include "isospec/clifford.hpp"
#include "isospec/error.hpp"
#include "isospec/fkm.hpp"
#include "isospec/io.hpp"
#include "isospec/manifolds.hpp"
#include "isospec/spectra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace isospec;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

/// Bad flag combinations detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json envelope(const std::string& kind) { return {{"schema_version", io::kSchemaVersion}, {"kind", kind}}; }

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_text(path, text);
}

FocalSide parse_side(const std::string& s) {
  if (s == "M1" || s == "m1") return FocalSide::kM1;
  if (s == "M2" || s == "m2") return FocalSide::kM2;
  throw UsageError("--focal must be M1 or M2");
}

struct FamilyFlags {
  std::string family;
  std::optional<int> m, k, m1, m2;
  std::optional<double> level;
  std::string focal;
  int dim = 2;
  int p = 1;
  int q = 1;
  std::optional<double> r1, r2;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
  cmd->add_option("--family", f.family, "Manifold family")
      ->required()
      ->check(CLI::IsMember({"fkm", "sphere", "torus", "product"}));
  auto* om = cmd->add_option("--m", f.m, "FKM: number of Clifford matrices minus one");
  auto* ok = cmd->add_option("--k", f.k, "FKM: number of irreducible copies, l = k delta(m)");
  auto* om1 = cmd->add_option("--m1", f.m1, "FKM: first multiplicity (alternative to --m/--k)");
  auto* om2 = cmd->add_option("--m2", f.m2, "FKM: second multiplicity");
  om->excludes(om1)->excludes(om2);
  ok->excludes(om1)->excludes(om2);
  auto* ol = cmd->add_option("--level", f.level, "FKM: regular level f = t, |t| < 1");
  auto* of = cmd->add_option("--focal", f.focal, "FKM: focal submanifold M1 or M2");
  ol->excludes(of);
  cmd->add_option("--dim", f.dim, "sphere: dimension of S^dim")->check(CLI::PositiveNumber);
  cmd->add_option("--p", f.p, "product: dimension of the first factor")->check(CLI::PositiveNumber);
  cmd->add_option("--q", f.q, "product: dimension of the second factor")->check(CLI::PositiveNumber);
  cmd->add_option("--r1", f.r1, "product: first radius (default sqrt(p/(p+q)))")->check(CLI::PositiveNumber);
  cmd->add_option("--r2", f.r2, "product: second radius (default sqrt(q/(p+q)))")->check(CLI::PositiveNumber);
}

/// (m, k) with k delta(m) - m - 1 >= 1.
std::pair<int, int> resolve_clifford(const FamilyFlags& f) {
  if (f.m1 || f.m2) {
    if (!f.m1 || !f.m2) throw UsageError("--m1 and --m2 must be given together");
    const int m1 = *f.m1;
    const int m2 = *f.m2;
    if (m1 < 1 || m2 < 1) throw UsageError("--m1 and --m2 must be positive");
    const std::int64_t d = delta(m1);
    if ((m1 + m2 + 1) % d != 0) {
      std::string msg = "(" + std::to_string(m1) + "," + std::to_string(m2) +
                        ") is not an OT-FKM pair with m = " + std::to_string(m1) + ": m1 + m2 + 1 must be a multiple of delta(" +
                        std::to_string(m1) + ") = " + std::to_string(d);
      if ((m1 + m2 + 1) % delta(m2) == 0)
        msg += "; try --m1 " + std::to_string(m2) + " --m2 " + std::to_string(m1);
      throw UsageError(msg);
    }
    return {m1, static_cast<int>((m1 + m2 + 1) / d)};
  }
  if (!f.m || !f.k) throw UsageError("fkm needs --m and --k, or --m1 and --m2");
  const int m = *f.m;
  const int k = *f.k;
  if (m < 1 || k < 1) throw UsageError("--m and --k must be positive");
  if (m > 40) throw UsageError("--m must be at most 40");
  const std::int64_t d = delta(m);
  const std::int64_t m2 = k * d - m - 1;
  if (m2 < 1) {
    const std::int64_t kmin = (m + 2 + d - 1) / d;
    const std::int64_t m2min = kmin * d - m - 1;
    throw UsageError("--m " + std::to_string(m) + " --k " + std::to_string(k) + " gives l = k delta(m) = " +
                     std::to_string(k * d) + " and m2 = " + std::to_string(m2) + " < 1. The smallest admissible k is " +
                     std::to_string(kmin) + ", the pair (" + std::to_string(m) + "," + std::to_string(m2min) +
                     "): use --m " + std::to_string(m) + " --k " + std::to_string(kmin) + " or --m1 " +
                     std::to_string(m) + " --m2 " + std::to_string(m2min));
  }
  return {m, k};
}

ManifoldSpec resolve_manifold(const FamilyFlags& f) {
  if (f.family == "sphere") return ManifoldSpec::sphere(f.dim);
  if (f.family == "torus") return ManifoldSpec::clifford_torus();
  if (f.family == "product") {
    const double n = f.p + f.q;
    return ManifoldSpec::product(f.p, f.r1.value_or(std::sqrt(f.p / n)), f.q, f.r2.value_or(std::sqrt(f.q / n)));
  }
  const auto [m, k] = resolve_clifford(f);
  if (!f.focal.empty()) return ManifoldSpec::fkm_focal(m, k, parse_side(f.focal));
  if (!f.level) throw UsageError("fkm needs --level t or --focal M1|M2");
  if (!(std::abs(*f.level) < 1.0)) throw UsageError("--level must satisfy |t| < 1; use --focal for t = +-1");
  return ManifoldSpec::fkm_level(m, k, *f.level);
}

// ---- catalog ----

struct CatalogFlags {
  int max_sum = 64;
  std::string format = "json";
  std::string out;
  bool facts = false;
};

int run_catalog(const CatalogFlags& c) {
  const std::vector<MultiplicityPair> pairs = enumerate_admissible(c.max_sum);
  if (c.format == "csv") {
    emit(io::catalog_csv(pairs), c.out);
    return kExitOk;
  }
  json j = envelope("catalog");
  j["max_sum"] = c.max_sum;
  json arr = json::array();
  for (const MultiplicityPair& p : pairs) arr.push_back(io::catalog_entry(p));
  j["pairs"] = std::move(arr);
  if (c.facts) {
    json facts = json::array();
    for (const KnownEigenvalueFact& f : known_eigenvalue_facts()) facts.push_back(io::to_json(f));
    j["facts"] = std::move(facts);
  }
  emit(j.dump(2) + "\n", c.out);
  return kExitOk;
}

// ---- verify-clifford ----

struct VerifyFlags {
  std::optional<int> m, k;
  bool all = false;
  bool matrices = false;
  std::string out;
};

int run_verify(const VerifyFlags& v) {
  std::vector<std::pair<int, int>> cases;
  if (v.all) {
    for (int m = 1; m <= 8; ++m)
      for (int k = 1; k <= 2; ++k)
        if (k * delta(m) - m - 1 >= 1) cases.emplace_back(m, k);
  } else {
    if (!v.m || !v.k) throw UsageError("verify-clifford needs --m and --k, or --all");
    if (*v.m < 1 || *v.k < 1) throw UsageError("--m and --k must be positive");
    cases.emplace_back(*v.m, *v.k);
  }
  json j = envelope("verify-clifford");
  json results = json::array();
  bool all_pass = true;
  for (const auto& [m, k] : cases) {
    const CliffordSystem sys = build_system(m, k);
    const VerificationReport rep = verify_system(sys);
    all_pass = all_pass && rep.pass;
    json r{{"m", m}, {"k", k}, {"l", sys.l}, {"ambient_dim", 2 * sys.l}, {"report", io::to_json(rep)}};
    if (k * delta(m) - m - 1 >= 1) r["pair"] = io::catalog_entry(fkm_pair(m, k));
    if (v.matrices) r["system"] = io::to_json(sys);
    results.push_back(std::move(r));
    if (!v.out.empty())
      std::printf("m=%d k=%d l=%d %s\n", m, k, sys.l, rep.pass ? "pass" : ("FAIL: " + rep.violation).c_str());
  }
  j["results"] = std::move(results);
  j["pass"] = all_pass;
  emit(j.dump(2) + "\n", v.out);
  return all_pass ? kExitOk : kExitFail;
}

// ---- sample ----

struct SampleFlags {
  FamilyFlags family;
  std::size_t points = 1000;
  std::string out;
  std::string format = "bin";
};

int run_sample(const SampleFlags& s, std::uint64_t seed, unsigned threads) {
  const ManifoldSpec spec = resolve_manifold(s.family);
  const PointCloud cloud = sample_manifold(spec, s.points, seed, threads);
  io::write_point_cloud(cloud, s.out, s.format);
  std::printf("%s: %zu points in R^%d, seed %llu -> %s.%s\n", spec.describe().c_str(), cloud.size(), cloud.dim,
              static_cast<unsigned long long>(seed), s.out.c_str(), s.format.c_str());
  return kExitOk;
}

// ---- certify ----

struct CertifyFlags {
  bool g4 = false;
  bool all = false;
  int max_sum = 64;
  std::optional<int> m1, m2;
  bool focal = false;
  int digits = 40;
  std::string out;
  std::string csv;
};

int run_certify(const CertifyFlags& c) {
  std::vector<MultiplicityPair> pairs;
  if (c.all) {
    if (c.m1 || c.m2) throw UsageError("--all excludes --m1/--m2");
    pairs = enumerate_admissible(c.max_sum);
  } else {
    if (!c.m1 || !c.m2) throw UsageError("certify needs --all or both --m1 and --m2");
    pairs.push_back({4, *c.m1, *c.m2});
    validate(pairs.back());
  }

  bool any_fail = false;
  bool any_inconclusive = false;
  json arr = json::array();

  if (c.focal) {
    // Both focal submanifolds of each oriented pair.
    std::vector<MultiplicityPair> oriented;
    for (const MultiplicityPair& p : pairs) {
      oriented.push_back(p);
      if (p.m1 != p.m2) oriented.push_back({p.g, p.m2, p.m1});
    }
    int certified = 0;
    for (const MultiplicityPair& p : oriented)
      for (FocalSide side : {FocalSide::kM1, FocalSide::kM2}) {
        const FocalCertificate fc = certify_focal(p, side);
        json e = io::to_json(fc);
        e["schema_version"] = io::kSchemaVersion;
        arr.push_back(std::move(e));
        if (fc.certified())
          ++certified;
        else
          any_inconclusive = true;
      }
    if (!c.out.empty())
      std::printf("focal: %d of %zu certified with lambda1 = dim\n", certified, arr.size());
  } else {
    if (!c.g4 && !c.all && !(c.m1 && c.m2)) throw UsageError("certify needs --g4");
    std::vector<HypersurfaceCertificate> certs;
    for (const MultiplicityPair& p : pairs) {
      if (std::min(p.m1, p.m2) < 2) {
        if (c.all) continue;
        throw UsageError("hypersurface certificates need min(m1, m2) >= 2");
      }
      certs.push_back(certify_hypersurface(p, c.digits));
    }
    int passed = 0;
    for (const HypersurfaceCertificate& hc : certs) {
      json e = io::to_json(hc);
      e["schema_version"] = io::kSchemaVersion;
      arr.push_back(std::move(e));
      if (!hc.paths_agree || hc.overall == Verdict::kInconclusive)
        any_inconclusive = true;
      else if (hc.overall == Verdict::kFail)
        any_fail = true;
      else
        ++passed;
    }
    if (!c.csv.empty()) io::write_text(c.csv, io::certificates_csv(certs));
    if (!c.out.empty()) std::printf("hypersurface: %d of %zu pairs pass\n", passed, certs.size());
  }
  emit(arr.dump(2) + "\n", c.out);
  if (any_fail) return kExitFail;
  return any_inconclusive ? kExitInconclusive : kExitOk;
}

// ---- spectrum ----

struct SpectrumFlags {
  FamilyFlags family;
  std::string cloud;
  std::size_t points = 4000;
  std::optional<double> bandwidth;
  int nev = 12;
  double gap_tol = 0.15;
  std::string normalization = "random-walk";
  std::vector<double> trend{1.0};
  std::string out;
  std::string meta;
};

int run_spectrum(const SpectrumFlags& s, std::uint64_t seed, unsigned threads) {
  EstimatorOptions opts;
  opts.graph.bandwidth = s.bandwidth;
  opts.graph.threads = threads;
  opts.graph.normalization = normalization_from_string(s.normalization);
  opts.nev = s.nev;
  opts.gap_tol = s.gap_tol;
  opts.trend_fractions = s.trend;

  SpectrumEstimate est;
  std::string description;
  std::optional<double> exact;
  if (!s.cloud.empty()) {
    if (!s.family.family.empty()) throw UsageError("--cloud excludes --family");
    const PointCloud cloud = io::read_point_cloud(s.cloud);
    est = estimate_spectrum(cloud, opts);
    description = cloud.family;
  } else {
    if (s.family.family.empty()) throw UsageError("spectrum needs --family or --cloud");
    const ManifoldSpec spec = resolve_manifold(s.family);
    est = estimate_lambda1(spec, s.points, seed, opts);
    description = spec.describe();
    exact = spec.exact_lambda1();
  }

  if (!s.out.empty()) io::write_text(s.out, io::spectrum_csv(est));
  json j = envelope("spectrum");
  j["manifold"] = description;
  j["estimate"] = io::to_json(est);
  j["exact_lambda1"] = exact ? json(*exact) : json(nullptr);
  if (!s.meta.empty()) io::write_text(s.meta, j.dump(2) + "\n");
  if (s.out.empty() && s.meta.empty()) std::cout << io::spectrum_csv(est);
  std::printf("%s: lambda1 = %s multiplicity = %d (N = %zu, t = %s, seed %llu)\n", description.c_str(),
              io::format_double(est.lambda1).c_str(), est.multiplicity, est.points,
              io::format_double(est.bandwidth).c_str(), static_cast<unsigned long long>(est.seed));
  return kExitOk;
}

// ---- exact ----

struct ExactFlags {
  int dim = 2;
  int p = 1;
  int q = 1;
  std::optional<double> r1, r2;
  int k = 1;
  std::optional<double> cutoff;
  std::string out;
  std::string csv;
};

int report_exact(const ExactSpectrum& s, const std::string& name, const ExactFlags& e) {
  const SpectrumLevel first = s.first_positive();
  json j = envelope("exact");
  j["manifold"] = name;
  j["spectrum"] = io::to_json(s);
  if (!e.out.empty()) io::write_text(e.out, j.dump(2) + "\n");
  if (!e.csv.empty()) io::write_text(e.csv, io::exact_spectrum_csv(s));
  std::printf("%s: lambda1 = %s multiplicity = %lld\n", name.c_str(), io::format_double(first.value).c_str(),
              static_cast<long long>(first.multiplicity));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isoparametric spectral toolkit: catalog, Clifford systems, sampling, certificates and spectra"};
  app.require_subcommand(1);

  unsigned threads = 0;
  std::uint64_t seed = 1;
  app.add_option("--threads", threads, "Worker threads, 0 = all cores; results do not depend on it");
  app.add_option("--seed", seed, "Random seed (default from ISOSPEC_SEED, else 1)")->envname("ISOSPEC_SEED");

  CatalogFlags cat;
  auto* c_cat = app.add_subcommand("catalog", "Admissible g = 4 multiplicity pairs and known eigenvalue facts");
  c_cat->add_option("--max-sum", cat.max_sum, "Largest m1 + m2")->check(CLI::Range(2, 100000));
  c_cat->add_option("--format", cat.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  c_cat->add_option("--out", cat.out, "Output file (default stdout)");
  c_cat->add_flag("--facts", cat.facts, "Include catalogued first-eigenvalue facts (json)");

  VerifyFlags ver;
  auto* c_ver = app.add_subcommand("verify-clifford", "Build and exactly verify symmetric Clifford systems");
  auto* v_m = c_ver->add_option("--m", ver.m, "Number of matrices minus one");
  auto* v_k = c_ver->add_option("--k", ver.k, "Irreducible copies");
  auto* v_all = c_ver->add_flag("--all", ver.all, "Every m in 1..8, k in 1..2 with m2 >= 1");
  v_all->excludes(v_m)->excludes(v_k);
  c_ver->add_flag("--matrices", ver.matrices, "Include the matrices as (row, col, value) triplets");
  c_ver->add_option("--out", ver.out, "Output file (default stdout)");

  SampleFlags smp;
  auto* c_smp = app.add_subcommand("sample", "Sample a point cloud on a manifold");
  add_family_flags(c_smp, smp.family);
  c_smp->add_option("--points", smp.points, "Number of points")->check(CLI::PositiveNumber);
  c_smp->add_option("--out", smp.out, "Output base path; writes <base>.bin|csv and <base>.json")->required();
  c_smp->add_option("--format", smp.format, "bin (float64 little-endian) or csv")->check(CLI::IsMember({"bin", "csv"}));

  CertifyFlags cer;
  auto* c_cer = app.add_subcommand("certify", "Certify first-eigenvalue inequalities");
  c_cer->add_flag("--g4", cer.g4, "Hypersurface certificates for g = 4");
  auto* ce_all = c_cer->add_flag("--all", cer.all, "Every admissible pair up to --max-sum");
  c_cer->add_option("--max-sum", cer.max_sum, "Largest m1 + m2 with --all")->check(CLI::Range(2, 100000));
  auto* ce_m1 = c_cer->add_option("--m1", cer.m1, "First multiplicity");
  auto* ce_m2 = c_cer->add_option("--m2", cer.m2, "Second multiplicity");
  ce_all->excludes(ce_m1)->excludes(ce_m2);
  c_cer->add_flag("--focal", cer.focal, "Focal submanifold certificates instead of hypersurface ones");
  c_cer->add_option("--digits", cer.digits, "Decimal digits of the exact enclosures")->check(CLI::Range(20, 100));
  c_cer->add_option("--out", cer.out, "JSON array output (default stdout)");
  c_cer->add_option("--csv", cer.csv, "CSV summary output");

  SpectrumFlags spc;
  auto* c_spc = app.add_subcommand("spectrum", "Estimate low Laplace-Beltrami eigenvalues from a point cloud");
  add_family_flags(c_spc, spc.family);
  c_spc->get_option("--family")->required(false);
  c_spc->add_option("--cloud", spc.cloud, "Point cloud sidecar written by sample")->check(CLI::ExistingFile);
  c_spc->add_option("--points", spc.points, "Number of points")->check(CLI::PositiveNumber);
  c_spc->add_option("--bandwidth", spc.bandwidth, "Heat-kernel time t (default: squared mean 12-NN distance)")
      ->check(CLI::PositiveNumber);
  c_spc->add_option("--nev", spc.nev, "Number of eigenvalues")->check(CLI::Range(2, 200));
  c_spc->add_option("--gap-tol", spc.gap_tol, "Relative gap separating multiplicity clusters")->check(CLI::PositiveNumber);
  c_spc->add_option("--normalization", spc.normalization, "random-walk or symmetric")
      ->check(CLI::IsMember({"random-walk", "symmetric"}));
  c_spc->add_option("--trend", spc.trend, "Sample-size fractions in (0, 1]; the last one is reported")->expected(1, -1);
  c_spc->add_option("--out", spc.out, "CSV: index, eigenvalue, cluster_id");
  c_spc->add_option("--meta", spc.meta, "JSON metadata");

  ExactFlags exa;
  auto* c_exa = app.add_subcommand("exact", "Closed-form spectra");
  c_exa->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cutoff", exa.cutoff, "Largest eigenvalue listed")->check(CLI::PositiveNumber);
    cmd->add_option("--out", exa.out, "JSON output");
    cmd->add_option("--csv", exa.csv, "CSV output: value, multiplicity");
  };
  auto* e_sph = c_exa->add_subcommand("sphere", "Round unit sphere S^dim");
  e_sph->add_option("--dim", exa.dim, "Dimension")->check(CLI::PositiveNumber);
  add_common(e_sph);
  auto* e_prd = c_exa->add_subcommand("product", "S^p(r1) x S^q(r2)");
  e_prd->add_option("--p", exa.p, "First dimension")->check(CLI::PositiveNumber);
  e_prd->add_option("--q", exa.q, "Second dimension")->check(CLI::PositiveNumber);
  e_prd->add_option("--r1", exa.r1, "First radius (default sqrt(p/(p+q)))")->check(CLI::PositiveNumber);
  e_prd->add_option("--r2", exa.r2, "Second radius (default sqrt(q/(p+q)))")->check(CLI::PositiveNumber);
  add_common(e_prd);
  auto* e_quo = c_exa->add_subcommand("quotient", "(S^1 x S^(k+1)) / Z_2, the focal M2 of the (1, k) family");
  e_quo->add_option("--k", exa.k, "k >= 1")->check(CLI::PositiveNumber);
  add_common(e_quo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_cat) return run_catalog(cat);
    if (*c_ver) return run_verify(ver);
    if (*c_smp) return run_sample(smp, seed, threads);
    if (*c_cer) return run_certify(cer);
    if (*c_spc) return run_spectrum(spc, seed, threads);
    if (*e_sph) {
      return report_exact(exact_sphere_spectrum(exa.dim, exa.cutoff.value_or(2.0 * exa.dim + 2.0)),
                          "S^" + std::to_string(exa.dim), exa);
    }
    if (*e_prd) {
      const double n = exa.p + exa.q;
      const double r1 = exa.r1.value_or(std::sqrt(exa.p / n));
      const double r2 = exa.r2.value_or(std::sqrt(exa.q / n));
      const double cutoff = exa.cutoff.value_or(4.0 * std::max(1.0 / (r1 * r1), 1.0 / (r2 * r2)) * n);
      return report_exact(exact_product_sphere_spectrum(exa.p, r1, exa.q, r2, cutoff),
                          "S^" + std::to_string(exa.p) + "(" + io::format_double(r1) + ") x S^" +
                              std::to_string(exa.q) + "(" + io::format_double(r2) + ")",
                          exa);
    }
    if (*e_quo) {
      return report_exact(exact_quotient_spectrum(exa.k, exa.cutoff.value_or(10.0)),
                          "(S^1 x S^" + std::to_string(exa.k + 1) + ")/Z2", exa);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitUsage;
}
