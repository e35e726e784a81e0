#pragma once

#include <string>
#include <utility>
#include <vector>

namespace paw {

// Machine-readable key: value block; rendered in insertion order so repeated
// runs are bit-identical.
class Report {
 public:
  void add(std::string key, std::string value);
  std::string render() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace paw
