#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ivkit::cli {

struct VerifyEntry {
  std::string id;
  std::string statement;
  bool pass = false;
  std::int64_t elapsed_us = 0;
  std::string detail;  // filled on failure
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool pass() const;
};

/// Replays every golden fact in a fixed order.
VerifyReport verify_all();

nlohmann::json to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

}  // namespace ivkit::cli
