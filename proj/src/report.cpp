#include "crossehr/report.hpp"

#include <sstream>

#include "json.hpp"

namespace crossehr {

std::string report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["witness_count"] = r.witness_count;
  j["pass"] = r.pass;
  return j.dump();
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << (r.pass ? "pass" : "FAIL") << " " << r.identity;
  for (const auto& [name, value] : r.params) os << " " << name << "=" << value;
  os << ": lhs=" << r.lhs << " rhs=" << r.rhs << " witnesses=" << r.witness_count;
  return os.str();
}

}  // namespace crossehr
