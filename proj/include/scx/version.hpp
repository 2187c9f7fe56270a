#pragma once

namespace scx {

inline constexpr const char* kToolName = "semicross";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "semicross-report/1";

}  // namespace scx
