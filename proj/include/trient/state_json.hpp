#pragma once

#include <string>

#include <json.hpp>

#include "trient/states.hpp"

namespace trient {

// On-disk state format:
//   { "n": <int>, "amplitudes": [[re, im], ...] }  with 4n entries.
// Serialization writes full-precision doubles; parsing accepts unnormalized
// vectors (the state constructor normalizes) and reports the violated
// constraint on malformed input.
nlohmann::ordered_json state_to_json(const TripartitePureState& s);
TripartitePureState state_from_json(const nlohmann::json& j);

TripartitePureState load_state_file(const std::string& path);
void save_state_file(const TripartitePureState& s, const std::string& path);

}  // namespace trient
