#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "pauliest/harness.hpp"

namespace pauliest {

enum class ReportFormat { Csv, Json };

/// File-system failure, carrying the offending path in its message.
class IoError : public std::runtime_error {
 public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what) {}
};

inline constexpr const char* kCsvHeader = "p_true,estimator,counts,trials,mean,std,bound,seed";
inline constexpr const char* kBellCsvHeader = "t1,t2,t3,T,p0,p1,p2,p3,psi-,phi-,phi+,psi+";

/// Shortest round-trip decimal representation, '.' as decimal point.
std::string format_number(double value);

/// One row per (p-value, estimator, budget). Bell-probability reports use
/// kBellCsvHeader with one row per timing configuration instead.
std::string report_to_csv(const MonteCarloReport& report);

nlohmann::json report_to_json(const MonteCarloReport& report);
MonteCarloReport report_from_json(const nlohmann::json& j);

std::string render_report(const MonteCarloReport& report, ReportFormat format);

/// Writes to a sibling temporary file and renames it into place, so a
/// failed write never leaves a partial file at `path`. Throws IoError.
void emit_report(const MonteCarloReport& report, const std::filesystem::path& path,
                 ReportFormat format);

ReportFormat parse_report_format(const std::string& s);

}  // namespace pauliest
