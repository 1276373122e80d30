#include "json.hpp"

#include "trisq/verify.hpp"

namespace trisq {

namespace {

using nlohmann::ordered_json;

ordered_json fields_to_json(const ReportFields& fields) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, value] : fields) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  ordered_json j;
  j["claim"] = report.claim;
  j["params"] = fields_to_json(report.params);
  j["status"] = std::string(name(report.status));
  j["witness"] = report.witness ? ordered_json(*report.witness) : ordered_json(nullptr);
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.table) {
    ordered_json r = ordered_json::array({row.index, to_string(row.lhs), to_string(row.rhs)});
    if (row.approx) r.push_back(*row.approx);
    rows.push_back(std::move(r));
  }
  j["table"] = std::move(rows);
  if (!report.summary.empty()) j["summary"] = fields_to_json(report.summary);
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j.dump(indent);
}

}  // namespace trisq
