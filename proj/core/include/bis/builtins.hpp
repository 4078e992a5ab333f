#ifndef BIS_BUILTINS_HPP
#define BIS_BUILTINS_HPP

#include <optional>
#include <string>

#include "bis/bias.hpp"

namespace bis {

// Named structures for short invocations: triv, Z2, Z3, Z4, S3 for groups;
// I1..I4 (and In up to the cap) for partial-injection structures.
std::optional<Group> builtin_group(const std::string& name);
std::optional<Bias> builtin_bias(const std::string& name);

}  // namespace bis

#endif
