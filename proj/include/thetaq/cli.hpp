#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thetaq {

/// Version tag carried by every structured report.
inline constexpr const char* kReportSchema = "thetaq.report/1";

/// Runs one command line (without the program name). Returns the exit status:
/// 0 when every item passed, 1 when some item failed, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thetaq
