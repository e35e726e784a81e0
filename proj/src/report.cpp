#include "paw/report.hpp"

namespace paw {

void Report::add(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
}

std::string Report::render() const {
  std::string out;
  for (const auto& [key, value] : fields_) {
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace paw
