#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "wsa/state.hpp"

namespace wsa {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json state_to_json(const State& s);
State state_from_json(const Json& j, const Algebra& alg);

// Cache of generators W^{(r)}_{i,j}, keyed by "r,i,j".
struct WCache {
  Instance inst;
  std::map<std::string, State> entries;
};

Json wcache_to_json(const WCache& w);
WCache wcache_from_json(const Json& j, const Algebra& alg);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace wsa
