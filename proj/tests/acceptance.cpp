// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "isospec/catalog.hpp"
#include "isospec/certificates.hpp"
#include "isospec/clifford.hpp"
#include "isospec/fkm.hpp"
#include "isospec/manifolds.hpp"
#include "isospec/random.hpp"
#include "isospec/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace isospec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
}

std::vector<std::pair<int, int>> built_families() {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; m <= 8; ++m)
    for (int k = 1; k <= 2; ++k)
      if (k * delta(m) - m - 1 >= 1) out.emplace_back(m, k);
  return out;
}

Outcome clifford_exactness() {
  const auto t0 = Clock::now();
  int count = 0;
  for (auto [m, k] : built_families()) {
    const VerificationReport r = verify_system(build_system(m, k));
    if (!r.pass)
      return {false, "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + r.violation};
    ++count;
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << count << " systems verified exactly in " << dt << " s (limit 10 s)";
  return {dt < 10.0, os.str()};
}

Outcome munzner_identities() {
  const auto t0 = Clock::now();
  double worst_grad = 0.0, worst_lap = 0.0;
  int families = 0;
  for (auto [m, k] : built_families()) {
    const FkmFamily fam(m, k);
    const int dim = fam.ambient_dim();
    const double lap = 8.0 * (fam.pair().m2 - fam.pair().m1);
    std::mt19937_64 rng = stream_rng(2024, static_cast<std::uint64_t>(m * 16 + k));
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    std::vector<double> x(dim);
    for (int i = 0; i < 1000; ++i) {
      const double s = scale(rng);
      for (double& v : x) v = s * nd(rng);
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      const double r6 = r2 * r2 * r2;
      double g2 = 0.0;
      for (double v : grad_F(fam, x)) g2 += v * v;
      worst_grad = std::max(worst_grad, std::abs(g2 - 16.0 * r6) / r6);
      const double d = laplacian_F_fd(fam, x, 1e-2 * std::sqrt(r2));
      worst_lap = std::max(worst_lap, std::abs(d - lap * r2) / r2);
    }
    ++families;
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << families << " families x 1000 points: max grad residual " << worst_grad << " (< 1e-9), max Laplacian residual "
     << worst_lap << " (< 1e-6), " << dt << " s (limit 30 s)";
  return {worst_grad < 1e-9 && worst_lap < 1e-6 && dt < 30.0, os.str()};
}

Outcome certificate_suite() {
  const auto t0 = Clock::now();
  int count = 0;
  std::string bad;
  for (const MultiplicityPair& p : enumerate_admissible(64)) {
    if (std::min(p.m1, p.m2) < 2) continue;
    const HypersurfaceCertificate c = certify_hypersurface(p);
    ++count;
    bool ok = c.overall == Verdict::kPass && c.paths_agree;
    for (const Check& ch : c.checks) ok = ok && ch.float_verdict == Verdict::kPass && ch.exact_verdict == Verdict::kPass;
    if (!ok && bad.empty()) bad = "(" + std::to_string(p.m1) + "," + std::to_string(p.m2) + ")";
  }
  const double s22 = compute_S({4, 2, 2});
  const double s22_err = std::abs(s22 - 8.0 / (3.0 * std::numbers::pi));
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << count << " pairs certified";
  if (!bad.empty()) os << ", first failure " << bad;
  os << "; |S(2,2) - 8/(3 pi)| = " << s22_err << " (< 1e-12); " << dt << " s (limit 60 s)";
  return {bad.empty() && count > 0 && s22_err < 1e-12 && dt < 60.0, os.str()};
}

Outcome dual_evaluation() {
  double worst_g = 0.0, worst_k = 0.0;
  int count = 0;
  for (const MultiplicityPair& p : enumerate_admissible(64)) {
    if (std::min(p.m1, p.m2) < 2) continue;
    worst_g = std::max(worst_g, compute_G(p).relative_difference());
    const KValue k1 = compute_K_alpha(p, 1, minimal_theta1(p).theta1);
    if (!k1.closed_form) return {false, "missing closed form for K1"};
    worst_k = std::max(worst_k, std::abs(k1.value - *k1.closed_form) / std::abs(*k1.closed_form));
    ++count;
  }
  std::ostringstream os;
  os << count << " pairs: max relative difference G " << worst_g << ", K1 " << worst_k << " (< 1e-9)";
  return {worst_g < 1e-9 && worst_k < 1e-9, os.str()};
}

Outcome focal_certificates() {
  std::ostringstream os;
  bool ok = true;
  for (MultiplicityPair p : {MultiplicityPair{4, 4, 5}, MultiplicityPair{4, 7, 8}})
    for (FocalSide side : {FocalSide::kM1, FocalSide::kM2}) {
      const FocalCertificate c = certify_focal(p, side);
      const bool good = c.certified() && c.lambda1 && *c.lambda1 == c.dim;
      ok = ok && good;
      os << "(" << p.m1 << "," << p.m2 << ") " << to_string(side) << " lambda1=" << (c.lambda1 ? *c.lambda1 : -1)
         << "=dim " << c.dim << (good ? "; " : " NOT CERTIFIED; ");
    }
  const std::vector<MultiplicityPair> expected{{4, 1, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 4},
                                               {4, 4, 7}, {4, 5, 10}, {4, 8, 15}};
  const std::vector<MultiplicityPair> got = focal_leftovers(FocalSide::kM2);
  const bool list_ok = got == expected;
  os << "M2 leftovers:";
  for (const auto& p : got) os << " (" << p.m1 << "," << p.m2 << ")";
  os << (list_ok ? " match" : " MISMATCH");
  return {ok && list_ok, os.str()};
}

Outcome quotient_spectrum() {
  std::ostringstream os;
  for (int k = 1; k <= 20; ++k) {
    const double l1 = exact_quotient_spectrum(k, 10.0).first_positive().value;
    if (l1 != std::min(4, k + 2)) {
      os << "k=" << k << " gives " << l1;
      return {false, os.str()};
    }
  }
  return {true, "lambda1 = min{4, k+2} for k = 1..20"};
}

struct SpectralCase {
  const char* name;
  ManifoldSpec spec;
  std::size_t points;
  double target;
  double tol;
  int multiplicity;  // 0: not required
};

Outcome numerical_spectra(std::vector<double>& torus_eigs) {
  const auto t0 = Clock::now();
  const SpectralCase cases[] = {
      {"S2", ManifoldSpec::sphere(2), 16000, 2.0, 0.05, 3},
      {"S3", ManifoldSpec::sphere(3), 16000, 3.0, 0.05, 4},
      {"Clifford torus", ManifoldSpec::clifford_torus(), 20000, 2.0, 0.10, 4},
      {"FKM (1,1) M2", ManifoldSpec::fkm_focal(1, 3, FocalSide::kM2), 20000, 3.0, 0.15, 0},
  };
  bool ok = true;
  std::ostringstream os;
  for (const SpectralCase& c : cases) {
    EstimatorOptions opts;
    opts.trend_fractions = {1.0};
    const auto t1 = Clock::now();
    const SpectrumEstimate e = estimate_lambda1(c.spec, c.points, 7, opts);
    const double rel = std::abs(e.lambda1 - c.target) / c.target;
    const bool good = rel < c.tol && (c.multiplicity == 0 || e.multiplicity == c.multiplicity);
    ok = ok && good;
    if (c.spec.kind == ManifoldSpec::Kind::kProductSpheres) torus_eigs = e.eigenvalues;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s N=%zu lambda1=%.4f (rel err %.3f < %.2f) mult %d%s%s [%.1fs]; ", c.name, c.points,
                  e.lambda1, rel, c.tol, e.multiplicity,
                  c.multiplicity ? (" (want " + std::to_string(c.multiplicity) + ")").c_str() : "", good ? "" : " FAIL",
                  seconds_since(t1));
    os << buf;
  }
  const double dt = seconds_since(t0);
  os << "total " << dt << " s (limit 600 s)";
  return {ok && dt < 600.0, os.str()};
}

Outcome determinism(const std::vector<double>& reference) {
  if (reference.empty()) return {false, "criterion 7(b) did not produce a reference run"};
  std::ostringstream os;
  bool ok = true;
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  for (unsigned threads : {1u, 3u, hw}) {
    EstimatorOptions opts;
    opts.trend_fractions = {1.0};
    opts.graph.threads = threads;
    const SpectrumEstimate e = estimate_lambda1(ManifoldSpec::clifford_torus(), 20000, 7, opts);
    const bool same = e.eigenvalues.size() == reference.size() &&
                      std::memcmp(e.eigenvalues.data(), reference.data(), reference.size() * sizeof(double)) == 0;
    ok = ok && same;
    os << "threads=" << threads << (same ? " identical; " : " DIFFERENT; ");
  }
  os << reference.size() << " eigenvalues compared bitwise";
  return {ok, os.str()};
}

}  // namespace

int main() {
  report(1, "Clifford exactness", clifford_exactness);
  report(2, "Munzner identities", munzner_identities);
  report(3, "certificate suite", certificate_suite);
  report(4, "dual evaluation", dual_evaluation);
  report(5, "focal certificates", focal_certificates);
  report(6, "exact quotient spectrum", quotient_spectrum);
  std::vector<double> torus;
  report(7, "numerical spectra", [&] { return numerical_spectra(torus); });
  report(8, "determinism", [&] { return determinism(torus); });
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
