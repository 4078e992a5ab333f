#ifndef BIS_JSON_IO_HPP
#define BIS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "bis/bias.hpp"
#include "bis/partial_injection.hpp"
#include "bis/rook.hpp"
#include "bis/variety.hpp"

namespace bis {

using nlohmann::json;

// {"n":k, "map":[[s,t],...]}, pairs sorted by source
json to_json(const PartialInjection& p);
PartialInjection partial_injection_from_json(const json& j);

// {"elements":[names], "mul":[[idx]], "inv":[idx], "zero":idx?, "one":idx?}
json to_json(const InverseSemigroup& s);
InverseSemigroup semigroup_from_json(const json& j);

// {"elements":[names], "mul":[[idx]]} or
// {"degree":d, "permutation_generators":[[[points...]...]...]}
json to_json(const Group& g);
Group group_from_json(const json& j);

// {"generators":[{"n":k, "group":<group json or builtin name>}]}
json to_json(const VarietySpec& v);
VarietySpec variety_from_json(const json& j);

// {"n":k, "base":<identifier>, "entries":[[elem-idx]]}; the zero element
// index encodes empty cells
json rook_to_json(const RookMatrix& m, const std::string& base_id);
RookMatrix rook_from_json(const json& j, const Bias& base, std::string* base_id = nullptr);

json load_json_file(const std::string& path);

}  // namespace bis

#endif
