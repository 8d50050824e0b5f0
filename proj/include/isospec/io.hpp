#pragma once

// JSON and CSV renderings of the library's records, and point-cloud files.

#include "isospec/catalog.hpp"
#include "isospec/certificates.hpp"
#include "isospec/clifford.hpp"
#include "isospec/fkm.hpp"
#include "isospec/manifolds.hpp"
#include "isospec/spectra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace isospec::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const BigInt& v);
/// {"num": [a, b], "den": d, "surd": r} for (a + b sqrt(r)) / d.
json to_json(const Surd& s);
json catalog_entry(const MultiplicityPair& pair);
json to_json(const KnownEigenvalueFact& fact);
json to_json(const CliffordSystem& sys);
json to_json(const VerificationReport& r);
json to_json(const HypersurfaceCertificate& c);
json to_json(const FocalCertificate& c);
json to_json(const SolomonReport& r);
json to_json(const ExactSpectrum& s);
json to_json(const SpectrumEstimate& e);
json to_json(const ShapeSpectrum& s);

/// %.17g
std::string format_double(double v);

/// pair, n, K1..K4, G, S, A, one column per check verdict, overall.
std::string certificates_csv(const std::vector<HypersurfaceCertificate>& certs);
/// index, eigenvalue, cluster_id
std::string spectrum_csv(const SpectrumEstimate& e);
std::string catalog_csv(const std::vector<MultiplicityPair>& pairs);
std::string exact_spectrum_csv(const ExactSpectrum& s);

/// Metadata written next to the coordinates.
json point_cloud_sidecar(const PointCloud& cloud, const std::string& format, const std::string& data_file);

/// Writes base + ".bin" (little-endian float64, row-major) or base + ".csv", and base + ".json".
void write_point_cloud(const PointCloud& cloud, const std::filesystem::path& base, const std::string& format);
/// Reads a cloud back from its JSON sidecar.
PointCloud read_point_cloud(const std::filesystem::path& sidecar);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace isospec::io
