#pragma once

#include <json.hpp>

#include "crit2/signature.hpp"

namespace crit2 {

struct ReportOptions {
  bool witnesses = false;  // attach colourings, cover, decomposition, drawing
};

// One JSON object with every invariant of the graph built from s.
nlohmann::json full_report(const Signature& s, const ReportOptions& opt = {});

// Mutual consistency of report fields; empty when fine.
std::string check_report(const nlohmann::json& r);

}  // namespace crit2
