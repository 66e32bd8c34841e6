#pragma once

#include <string>

#include <json.hpp>

#include "ostrowski/gap_series.hpp"
#include "ostrowski/harness.hpp"

namespace ostrowski {

/// Significant digits used for every reported real.
inline constexpr int kReportDigits = 17;

/// level,p_n,q_n,metric_name,value,pass
std::string to_csv(const CheckReport& report);
/// target,metric,level,n,value,threshold,pass
std::string to_csv(const ConvergenceReport& report);
/// Same schema as ConvergenceReport; one row per n, level column 0.
std::string to_csv(const GrowthReport& report, const std::string& target);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const ConvergenceReport& report);
nlohmann::json to_json(const GrowthReport& report);
/// {m, j, s, witness_n, sup, pass}
nlohmann::json to_json(const MembershipCertificate& cert);

}  // namespace ostrowski
