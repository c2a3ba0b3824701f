#include "lz/script.hpp"

#include <sstream>

namespace lz {

std::string Report::render_machine() const {
  std::ostringstream os;
  for (size_t i = 0; i < records.size(); ++i) {
    if (i) os << '\n';
    for (const auto& [key, value] : records[i].fields)
      os << key << ": " << value << '\n';
  }
  return os.str();
}

std::string Report::render_human() const {
  std::ostringstream os;
  for (const auto& record : records) {
    bool first = true;
    for (const auto& [key, value] : record.fields) {
      if (first) {
        os << key << ": " << value << '\n';
        first = false;
      } else {
        os << "  " << key << ": " << value << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace lz
