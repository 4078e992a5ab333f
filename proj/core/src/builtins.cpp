#include "bis/builtins.hpp"

#include "bis/free_bias.hpp"

namespace bis {

std::optional<Group> builtin_group(const std::string& name) {
  if (name == "triv") return trivial_group();
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name.size() >= 2 && name[0] == 'Z') {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      n = n * 10 + (name[i] - '0');
    }
    if (n >= 1) return cyclic_group(n);
  }
  return std::nullopt;
}

std::optional<Bias> builtin_bias(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'I') {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return std::nullopt;
      n = n * 10 + (name[i] - '0');
    }
    if (n >= 1 && n <= 4) return symmetric_bias(n);
  }
  return std::nullopt;
}

}  // namespace bis
