#pragma once

#include "modcm/hecke.hpp"
#include "modcm/modpoly.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace modcm::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,
    kInputError = 2,
    kInconclusive = 3,
    kVerifyFailed = 4,
};

enum class Format { Json, Csv };

struct RunConfig {
    mp::Precision precision = 256;
    int modpoly_ceiling = kDefaultModPolyCeiling;
    std::int64_t dmax = 0;
    std::int64_t dmin = 0;
    std::int64_t samples = 0;
    /// 0 means the command's own default.
    int tolerance_bits = 0;
    std::uint64_t seed = 1;
    Format format = Format::Json;
    bool format_given = false;
    std::string output;
    bool verify = false;
    int d1 = 1;
    int d2 = 1;
    std::vector<double> xs;

    /// Throws InvalidArgument when a field is out of range.
    void validate() const;
    ModPolyOptions modpoly_options() const;
};

/// Thrown by --verify checks.
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_classgroup(std::int64_t D, const RunConfig& cfg, std::ostream& out);
int cmd_hilbert(std::int64_t D, const RunConfig& cfg, std::ostream& out);
int cmd_modpoly(int n, const RunConfig& cfg, std::ostream& out);
int cmd_hecke_image(const std::string& curve_path, int n, const RunConfig& cfg, std::ostream& out);
int cmd_certify(const std::string& curve_path, const RunConfig& cfg, std::ostream& out);
int cmd_cmscan(const std::string& curve_path, const RunConfig& cfg, std::ostream& out);
int cmd_split_prime(std::int64_t D, const RunConfig& cfg, std::ostream& out);
int cmd_census(const RunConfig& cfg, std::ostream& out);
int cmd_siegel(const RunConfig& cfg, std::ostream& out);

/// Reads a curve file ("-" for stdin) in the sparse bivariate JSON schema.
BiPoly read_curve(const std::string& path);

} // namespace modcm::cli
