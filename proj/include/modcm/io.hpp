#pragma once

// JSON and CSV encodings. Big integers always travel as decimal strings.

#include "modcm/census.hpp"
#include "modcm/cmscan.hpp"
#include "modcm/hecke.hpp"
#include "modcm/modpoly.hpp"
#include "modcm/singular_moduli.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace modcm::io {

using json = nlohmann::ordered_json;

/// {"D": int, "coeffs": ["c0", "c1", ...]} (low to high).
json to_json(const HilbertClassPoly& H);

/// {"n": n, "terms": [[i, j, "c"], ...], "symmetric": bool}. When the
/// polynomial is symmetric only terms with i >= j are listed. Terms are in
/// (i, j) lexicographic order.
json bipoly_to_json(const BiPoly& P, int n);

/// Inverse of bipoly_to_json; "n" and "symmetric" are optional. Throws
/// InvalidArgument on malformed input.
BiPoly bipoly_from_json(const json& j);

/// Parses a curve file's text.
BiPoly bipoly_from_text(const std::string& text);

json to_json(const ClassGroupSummary& s);
json to_json(const ContainmentCertificate& c);
json to_json(const ModularityReport& r);
json to_json(const SplitPrimeCertificate& c);
json to_json(const FieldReport& r);

/// Top-level keys one per line; arrays of arrays or objects one element per
/// line; everything deeper compact. Ends with a newline.
std::string dump(const json& j);

/// Fixed-format decimal rendering for CSV and JSON floats.
std::string format_double(double v);

void write_cm_csv(std::ostream& out, const std::vector<CMPointRecord>& records);
void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);
void write_siegel_csv(std::ostream& out, const std::vector<SiegelRow>& rows);

} // namespace modcm::io
