#pragma once

#include <iosfwd>
#include <string>

#include "nli/analysis.hpp"

namespace nli {

/// CSV with header `param1,param2,quantity,order`, six significant digits; the
/// order field is empty on the first row.
void write_report_csv(const StudyReport& report, std::ostream& os);

/// JSON sidecar with the configuration snapshot and full-precision rows.
void write_report_json(const StudyReport& report, std::ostream& os);

/// "%.6g"
std::string format_sig6(double v);

}  // namespace nli
