#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nlogic {

// FNV-1a content digest, printed in report headers for provenance.
std::uint64_t fnv1a(const std::string& data);
std::string digest_hex(const std::string& data);

enum class ReportFormat { Human, JsonLines };

struct RunReport {
  std::string command;
  std::string input_digest;
  struct Record {
    std::string id;
    bool pass = true;
    std::string detail;
  };
  std::vector<Record> records;
  double elapsed_seconds = 0.0;

  bool all_pass() const {
    for (auto& r : records)
      if (!r.pass) return false;
    return true;
  }
  void add(const std::string& id, bool pass, const std::string& detail = "") {
    records.push_back({id, pass, detail});
  }
  // Human output is one line per record; json-lines carries the same content
  // plus the header fields on every record.
  std::string render(ReportFormat fmt) const;
};

}  // namespace nlogic
