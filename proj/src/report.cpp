#include "nli/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace nli {

std::string format_sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_report_csv(const StudyReport& report, std::ostream& os) {
  os << "param1,param2,quantity,order\n";
  for (const auto& row : report.rows) {
    os << format_sig6(row.param1) << ',' << format_sig6(row.param2) << ','
       << format_sig6(row.quantity) << ',';
    if (row.order) os << format_sig6(*row.order);
    os << '\n';
  }
}

void write_report_json(const StudyReport& report, std::ostream& os) {
  using nlohmann::json;
  const auto& s = report.setup;
  auto quad = [](const Quadratic& q) { return json::array({q.c0, q.c1, q.c2}); };
  json config = {
      {"kappa1", s.material.kappa1},
      {"kappa2", s.material.kappa2},
      {"kernel", std::string(to_string(s.family))},
      {"f1", s.source.f1},
      {"f2", s.source.f2},
      {"g1", quad(s.constraints.g1)},
      {"g2", quad(s.constraints.g2)},
      {"a", s.layout.a},
      {"x_gamma", s.layout.x_gamma},
      {"b", s.layout.b},
  };
  switch (report.kind) {
    case StudyKind::Delta:
    case StudyKind::JumpDelta:
      config["h"] = report.fixed_h;
      break;
    case StudyKind::H:
      config["h_fine"] = report.h_fine;
      [[fallthrough]];
    case StudyKind::JumpH:
      config["delta1"] = report.fixed_delta1;
      config["delta2"] = report.fixed_delta2;
      break;
  }
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"param1", r.param1},
                    {"param2", r.param2},
                    {"quantity", r.quantity},
                    {"order", r.order ? json(*r.order) : json(nullptr)}});
  }
  json doc = {{"study", std::string(to_string(report.kind))}, {"config", config}, {"rows", rows}};
  os << doc.dump(2) << '\n';
}

}  // namespace nli
