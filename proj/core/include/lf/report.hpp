#pragma once

#include <string>

#include "lf/analyzer.hpp"

namespace lf {

/// Pretty-printed JSON with sorted keys; identical inputs give identical text.
std::string report_to_json(const AnalysisReport& report);
std::string report_to_json(const EnumerationReport& report);

/// 64-bit FNV-1a over the elimination trace, as 16 hex digits.
std::string trace_digest(const FreeCertificate& cert);

}  // namespace lf
