#include "isospec/io.hpp"

#include "isospec/error.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace isospec::io {

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json to_json(const Surd& s) {
  const Surd::IntegerForm f = s.integer_form();
  return {{"num", json::array({to_json(f.num_a), to_json(f.num_b)})},
          {"den", to_json(f.den)},
          {"surd", to_json(f.radicand)},
          {"value", s.to_double()}};
}

json catalog_entry(const MultiplicityPair& pair) {
  json j{{"g", pair.g}, {"m1", pair.m1}, {"m2", pair.m2}, {"n", dimension(pair)}};
  if (pair.g == 4) {
    const auto [d1, d2] = focal_dims(pair);
    j["dim_M1"] = d1;
    j["dim_M2"] = d2;
  } else {
    j["dim_M1"] = dimension(pair) - pair.m1;
    j["dim_M2"] = dimension(pair) - pair.m2;
  }
  if (pair.g % 2 == 0) {
    const MinimalAngle a = minimal_theta1(pair);
    j["theta1"] = a.theta1;
    j["sin2_theta1"] = a.sin2_exact ? to_json(*a.sin2_exact) : json{{"value", a.sin2_theta1}};
  }
  return j;
}

json to_json(const KnownEigenvalueFact& fact) {
  json j{{"id", to_string(fact.id)}, {"name", fact.name}, {"ambient", fact.ambient}};
  j["dimension"] = fact.dimension ? json(*fact.dimension) : json(nullptr);
  if (fact.lambda1) {
    j["lambda1"] = to_string(*fact.lambda1);
  } else {
    j["lambda1"] = nullptr;
  }
  j["lambda1_formula"] = fact.lambda1_formula;
  j["multiplicity"] = fact.multiplicity ? json(*fact.multiplicity) : json(nullptr);
  j["multiplicity_formula"] = fact.multiplicity_formula;
  return j;
}

json to_json(const CliffordSystem& sys) {
  json mats = json::array();
  for (const IntMatrix& p : sys.matrices) {
    json triplets = json::array();
    for (int r = 0; r < p.rows(); ++r)
      for (int c = 0; c < p.cols(); ++c)
        if (p(r, c) != 0) triplets.push_back(json::array({r, c, p(r, c)}));
    mats.push_back(std::move(triplets));
  }
  return {{"m", sys.m}, {"l", sys.l}, {"matrices", std::move(mats)}};
}

json to_json(const VerificationReport& r) {
  json j{{"pass", r.pass}};
  if (!r.pass) {
    j["violation"] = r.violation;
    j["i"] = r.i;
    j["j"] = r.j;
  }
  return j;
}

namespace {

json check_json(const Check& c) {
  return {{"name", c.name},       {"lhs", c.lhs},
          {"rhs", c.rhs},         {"strict", c.strict},
          {"margin", c.margin()}, {"error_bound", c.error},
          {"float", to_string(c.float_verdict)}, {"exact", to_string(c.exact_verdict)}};
}

json pair_json(const MultiplicityPair& p) { return {{"g", p.g}, {"m1", p.m1}, {"m2", p.m2}}; }

}  // namespace

json to_json(const HypersurfaceCertificate& c) {
  json k = json::array();
  for (const KValue& v : c.K) {
    json e{{"alpha", v.alpha}, {"value", v.value}, {"error_bound", v.error}};
    if (v.closed_form) e["closed_form"] = *v.closed_form;
    k.push_back(std::move(e));
  }
  json checks = json::array();
  for (const Check& ch : c.checks) checks.push_back(check_json(ch));
  return {{"pair", pair_json(c.pair)},
          {"n", c.n},
          {"theta1", c.theta1},
          {"sin2_theta1", to_json(c.sin2_theta1)},
          {"K", std::move(k)},
          {"G", {{"closed_form", c.G.closed_form}, {"quadrature", c.G.quadrature}, {"error_bound", c.G.quadrature_error}}},
          {"S", c.S},
          {"S_mirror", c.S_mirror},
          {"A", {{"value", c.A.value}, {"exact", to_json(c.A.exact)}, {"polynomial_check", c.A.polynomial_check}}},
          {"A_mirror",
           {{"value", c.A_mirror.value},
            {"exact", to_json(c.A_mirror.exact)},
            {"polynomial_check", c.A_mirror.polynomial_check}}},
          {"ratios", c.ratios},
          {"checks", std::move(checks)},
          {"digits", c.digits},
          {"paths_agree", c.paths_agree},
          {"verdict", to_string(c.overall)}};
}

json to_json(const FocalCertificate& c) {
  json j{{"pair", pair_json(c.pair)},
         {"which", to_string(c.which)},
         {"n", c.n},
         {"dim", c.dim},
         {"bound", to_string(c.bound)},
         {"bound_value", to_double(c.bound)},
         {"inequality_holds", c.inequality_holds},
         {"condition_met", c.condition_met},
         {"dimension_hypothesis", c.dimension_hypothesis},
         {"certified", c.certified()}};
  j["solomon_upper"] = c.solomon_upper ? json(*c.solomon_upper) : json(nullptr);
  j["lambda1"] = c.lambda1 ? json(*c.lambda1) : json(nullptr);
  return j;
}

json to_json(const SolomonReport& r) {
  json j{{"pair", pair_json(r.pair)}, {"m", r.m},           {"k", r.k},
         {"upper", r.upper},          {"dim_M2", r.dim_M2}, {"class", to_string(r.classification)}};
  j["quotient_lambda1"] = r.quotient_lambda1 ? json(*r.quotient_lambda1) : json(nullptr);
  return j;
}

json to_json(const ExactSpectrum& s) {
  json levels = json::array();
  for (const SpectrumLevel& l : s.levels) levels.push_back({{"value", l.value}, {"multiplicity", l.multiplicity}});
  json j{{"source", to_string(s.source)}, {"levels", std::move(levels)}};
  for (const SpectrumLevel& l : s.levels)
    if (l.value > 0.0) {
      j["lambda1"] = l.value;
      j["lambda1_multiplicity"] = l.multiplicity;
      break;
    }
  return j;
}

json to_json(const SpectrumEstimate& e) {
  json clusters = json::array();
  for (const Cluster& c : e.clusters)
    clusters.push_back({{"mean", c.mean}, {"min", c.min}, {"max", c.max}, {"first", c.first}, {"size", c.size}});
  json trend = json::array();
  for (const TrendPoint& t : e.trend)
    trend.push_back({{"points", t.points}, {"lambda1", t.lambda1}, {"multiplicity", t.multiplicity}});
  return {{"eigenvalues", e.eigenvalues},
          {"clusters", std::move(clusters)},
          {"lambda1", e.lambda1},
          {"multiplicity", e.multiplicity},
          {"parameters",
           {{"points", e.points},
            {"bandwidth", e.bandwidth},
            {"radius", e.radius},
            {"mean_degree", e.mean_degree},
            {"normalization", to_string(e.normalization)},
            {"lanczos_iterations", e.lanczos_iterations},
            {"seed", e.seed}}},
          {"trend", std::move(trend)}};
}

json to_json(const ShapeSpectrum& s) {
  json clusters = json::array();
  for (const CurvatureCluster& c : s.clusters)
    clusters.push_back({{"value", c.value}, {"target", c.target}, {"multiplicity", c.multiplicity}});
  return {{"raw", s.raw}, {"clusters", std::move(clusters)}, {"theta_alpha", s.theta_alpha}, {"ambiguous", s.ambiguous}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string certificates_csv(const std::vector<HypersurfaceCertificate>& certs) {
  std::ostringstream os;
  os << "m1,m2,n,K1,K2,K3,K4,G,S,A";
  if (!certs.empty())
    for (const Check& c : certs.front().checks) os << ",\"" << c.name << "\"";
  os << ",verdict\n";
  for (const HypersurfaceCertificate& c : certs) {
    os << c.pair.m1 << ',' << c.pair.m2 << ',' << c.n;
    for (const KValue& k : c.K) os << ',' << format_double(k.value);
    os << ',' << format_double(c.G.closed_form) << ',' << format_double(c.S) << ',' << format_double(c.A.value);
    for (const Check& ch : c.checks)
      os << ',' << (ch.float_verdict == ch.exact_verdict ? to_string(ch.exact_verdict) : "disagree");
    os << ',' << to_string(c.overall) << '\n';
  }
  return os.str();
}

std::string spectrum_csv(const SpectrumEstimate& e) {
  std::ostringstream os;
  os << "index,eigenvalue,cluster_id\n";
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i)
    os << i << ',' << format_double(e.eigenvalues[i]) << ',' << e.cluster_id[i] << '\n';
  return os.str();
}

std::string catalog_csv(const std::vector<MultiplicityPair>& pairs) {
  std::ostringstream os;
  os << "g,m1,m2,n,dim_M1,dim_M2,sin2_theta1\n";
  for (const MultiplicityPair& p : pairs) {
    const auto [d1, d2] = focal_dims(p);
    os << p.g << ',' << p.m1 << ',' << p.m2 << ',' << dimension(p) << ',' << d1 << ',' << d2 << ','
       << format_double(minimal_theta1(p).sin2_theta1) << '\n';
  }
  return os.str();
}

std::string exact_spectrum_csv(const ExactSpectrum& s) {
  std::ostringstream os;
  os << "value,multiplicity\n";
  for (const SpectrumLevel& l : s.levels) os << format_double(l.value) << ',' << l.multiplicity << '\n';
  return os.str();
}

json point_cloud_sidecar(const PointCloud& cloud, const std::string& format, const std::string& data_file) {
  json level{{"kind", cloud.level.kind == LevelKind::kRegular ? "regular" : cloud.level.label()}};
  if (cloud.level.kind == LevelKind::kRegular) level["t"] = cloud.level.t;
  return {{"schema_version", kSchemaVersion},
          {"family", cloud.family},
          {"m", cloud.m},
          {"k", cloud.k},
          {"level", std::move(level)},
          {"seed", cloud.seed},
          {"tolerance", cloud.tolerance},
          {"count", cloud.size()},
          {"dim", cloud.dim},
          {"format", format},
          {"data", data_file}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

void write_point_cloud(const PointCloud& cloud, const std::filesystem::path& base, const std::string& format) {
  std::filesystem::path data = base;
  if (format == "bin") {
    data += ".bin";
    std::ofstream out(data, std::ios::binary);
    if (!out) throw Error("cannot open " + data.string() + " for writing");
    for (double v : cloud.coords) {
      std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
      if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
      out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
    }
  } else if (format == "csv") {
    data += ".csv";
    std::ostringstream os;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      const auto p = cloud.point(i);
      for (std::size_t d = 0; d < p.size(); ++d) os << (d ? "," : "") << format_double(p[d]);
      os << '\n';
    }
    write_text(data, os.str());
  } else {
    throw DomainError("point cloud format must be bin or csv");
  }
  std::filesystem::path side = base;
  side += ".json";
  write_text(side, point_cloud_sidecar(cloud, format, data.filename().string()).dump(2) + "\n");
}

PointCloud read_point_cloud(const std::filesystem::path& sidecar) {
  std::ifstream in(sidecar);
  if (!in) throw Error("cannot open " + sidecar.string());
  const json meta = json::parse(in);
  PointCloud cloud;
  cloud.dim = meta.at("dim").get<int>();
  cloud.family = meta.at("family").get<std::string>();
  cloud.m = meta.at("m").get<int>();
  cloud.k = meta.at("k").get<int>();
  cloud.seed = meta.at("seed").get<std::uint64_t>();
  cloud.tolerance = meta.at("tolerance").get<double>();
  const std::string kind = meta.at("level").at("kind").get<std::string>();
  if (kind == "M1")
    cloud.level = Level::focal_m1();
  else if (kind == "M2")
    cloud.level = Level::focal_m2();
  else
    cloud.level = Level::regular(meta.at("level").at("t").get<double>());
  const std::size_t count = meta.at("count").get<std::size_t>();
  const std::filesystem::path data = sidecar.parent_path() / meta.at("data").get<std::string>();
  cloud.coords.resize(count * static_cast<std::size_t>(cloud.dim));
  if (meta.at("format").get<std::string>() == "bin") {
    std::ifstream bin(data, std::ios::binary);
    for (double& v : cloud.coords) {
      std::uint64_t bits = 0;
      bin.read(reinterpret_cast<char*>(&bits), sizeof bits);
      if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
      v = std::bit_cast<double>(bits);
    }
    if (!bin) throw Error("truncated point cloud file " + data.string());
  } else {
    std::ifstream csv(data);
    for (double& v : cloud.coords) {
      csv >> v;
      csv.ignore(1);
    }
    if (!csv) throw Error("truncated point cloud file " + data.string());
  }
  return cloud;
}

}  // namespace isospec::io
