#pragma once

#include <string>
#include <utility>
#include <vector>

namespace crossehr {

// Outcome of one executable identity check. lhs/rhs hold the exact values
// (decimal strings or bracketed vectors); witness_count is the number of
// enumerated objects or instances the check covered.
struct VerifyReport {
  std::string identity;
  std::vector<std::pair<std::string, long>> params;
  std::string lhs;
  std::string rhs;
  long witness_count = 0;
  bool pass = false;
};

std::string report_json(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

}  // namespace crossehr
