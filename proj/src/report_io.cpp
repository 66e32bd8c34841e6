#include "ostrowski/report_io.hpp"

#include <sstream>

namespace ostrowski {

namespace {

std::string fmt(const Real& x) { return x.to_string(kReportDigits); }
const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string to_csv(const CheckReport& report) {
  std::ostringstream out;
  out << "level,p_n,q_n,metric_name,value,pass\n";
  for (const auto& row : report.rows) {
    out << row.level << ',' << row.p_n << ',' << row.q_n << ',' << row.metric << ',' << fmt(row.value) << ','
        << flag(row.pass) << '\n';
  }
  return out.str();
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << "target,metric,level,n,value,threshold,pass\n";
  for (const auto& row : report.rows) {
    out << row.target << ',' << row.metric << ',' << row.level << ',' << row.n << ',' << fmt(row.value) << ','
        << fmt(row.threshold) << ',' << flag(row.pass) << '\n';
  }
  return out.str();
}

std::string to_csv(const GrowthReport& report, const std::string& target) {
  std::ostringstream out;
  out << "target,metric,level,n,value,threshold,pass\n";
  for (std::size_t n = 1; n <= report.v.size(); ++n) {
    out << target << ",v_n,0," << n << ',' << fmt(report.v[n - 1]) << ',' << fmt(report.rho) << ','
        << flag(report.within(report.v[n - 1])) << '\n';
  }
  out << target << ",tail_max,0," << report.tail_start << ',' << fmt(report.tail_max) << ',' << fmt(report.rho) << ','
      << flag(report.pass) << '\n';
  return out.str();
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"level", row.level},
                    {"p_n", row.p_n},
                    {"q_n", row.q_n},
                    {"metric_name", row.metric},
                    {"value", fmt(row.value)},
                    {"threshold", fmt(row.threshold)},
                    {"pass", row.pass},
                    {"vacuous", row.vacuous}});
  }
  return {{"check", report.check}, {"pass", report.pass}, {"rows", rows}, {"notes", report.notes}};
}

nlohmann::json to_json(const ConvergenceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"target", row.target},
                    {"metric", row.metric},
                    {"level", row.level},
                    {"n", row.n},
                    {"value", fmt(row.value)},
                    {"threshold", fmt(row.threshold)},
                    {"pass", row.pass}});
  }
  return {{"target", report.target},
          {"precision_bits", report.precision.bits},
          {"schedule", {{"p", report.p}, {"q", report.q}}},
          {"pass", report.pass},
          {"rows", rows},
          {"notes", report.notes}};
}

nlohmann::json to_json(const GrowthReport& report) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : report.v) v.push_back(fmt(x));
  return {{"rho", fmt(report.rho)},
          {"radius", fmt(report.radius)},
          {"tail_start", report.tail_start},
          {"tail_max", fmt(report.tail_max)},
          {"pass", report.pass},
          {"v", v}};
}

nlohmann::json to_json(const MembershipCertificate& cert) {
  return {{"m", cert.m},     {"j", cert.j},           {"s", cert.s},
          {"witness_n", cert.witness_n}, {"sup", fmt(cert.sup)}, {"pass", cert.pass}};
}

}  // namespace ostrowski
