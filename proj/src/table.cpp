#include "khroma/table.hpp"

#include <sstream>

namespace khroma {

std::string HomologyTable::json(const std::string& first_key) const {
  std::ostringstream os;
  os << "{";
  if (first_key == "i") os << "\"construction\":\"" << construction << "\",";
  os << "\"D\":" << D << ",\"entries\":[";
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (!first) os << ",";
    first = false;
    os << "{\"" << first_key << "\":" << std::get<0>(k)
       << ",\"a\":" << std::get<1>(k) << ",\"d\":" << std::get<2>(k)
       << ",\"dim\":" << v << "}";
  }
  os << "]}";
  return os.str();
}

std::string HomologyTable::str(const std::string& first_key) const {
  std::ostringstream os;
  os << first_key << "\ta\td\tdim\n";
  for (const auto& [k, v] : entries)
    os << std::get<0>(k) << "\t" << std::get<1>(k) << "\t" << std::get<2>(k)
       << "\t" << v << "\n";
  if (entries.empty()) os << "(zero)\n";
  return os.str();
}

std::string EulerReport::str() const {
  std::ostringstream os;
  os << "a\td\tchain\thomology\texpected\tstatus\n";
  for (const EulerRow& r : rows)
    os << r.a << "\t" << r.d << "\t" << r.chain_sum.get_str() << "\t"
       << r.homology_sum.get_str() << "\t" << r.expected.get_str() << "\t"
       << (r.pass ? "ok" : "MISMATCH") << "\n";
  os << (pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace khroma
