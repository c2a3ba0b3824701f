#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lz {

// Accumulated results of a batch run. Two renderings of the same content:
// the machine format is line-oriented `key: value` records separated by
// blank lines; the human format presents the same fields readably.
struct Report {
  struct Record {
    std::vector<std::pair<std::string, std::string>> fields;
    void add(std::string key, std::string value) {
      fields.emplace_back(std::move(key), std::move(value));
    }
  };

  std::vector<Record> records;
  bool ok = true;

  Record& fresh() {
    records.emplace_back();
    return records.back();
  }
  void fail() { ok = false; }

  std::string render_machine() const;
  std::string render_human() const;
};

}  // namespace lz
