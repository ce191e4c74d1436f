#pragma once

namespace gptk {

// embedded in every CLI report; a schema change bumps the major number
inline constexpr const char* kReportSchemaVersion = "1.0.0";

} // namespace gptk
