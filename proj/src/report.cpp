#include "nlogic/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nlogic {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& data) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string RunReport::render(ReportFormat fmt) const {
  std::ostringstream os;
  if (fmt == ReportFormat::Human) {
    os << "# " << command << "  input:" << input_digest << "\n";
    for (auto& r : records) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
      if (!r.detail.empty()) os << "  " << r.detail;
      os << "\n";
    }
    return os.str();
  }
  for (auto& r : records) {
    nlohmann::json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["id"] = r.id;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace nlogic
