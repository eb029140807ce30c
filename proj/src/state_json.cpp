#include "trient/state_json.hpp"

#include <cmath>
#include <fstream>

namespace trient {

nlohmann::ordered_json state_to_json(const TripartitePureState& s) {
  nlohmann::ordered_json amps = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
    const Complex& a = s.amplitudes()[i];
    amps.push_back({a.real(), a.imag()});
  }
  return {{"n", s.n()}, {"amplitudes", std::move(amps)}};
}

TripartitePureState state_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("state file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field \"n\" must be an integer");
  const long long n = j["n"].get<long long>();
  if (n < 1) throw ParseError("field \"n\" must be >= 1");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw ParseError("field \"amplitudes\" must be an array");
  const auto& arr = j["amplitudes"];
  if (static_cast<long long>(arr.size()) != 4 * n)
    throw ParseError("amplitudes length must be 4n = " +
                     std::to_string(4 * n) + ", got " +
                     std::to_string(arr.size()));
  Eigen::VectorXcd amps(4 * n);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw ParseError("amplitude " + std::to_string(i) +
                       " must be a [re, im] pair of numbers");
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw ParseError("amplitude " + std::to_string(i) + " is not finite");
    amps[static_cast<Eigen::Index>(i)] = Complex(re, im);
  }
  try {
    return make_state(static_cast<int>(n), amps);
  } catch (const ZeroVector&) {
    throw ParseError("state vector has zero norm");
  }
}

TripartitePureState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return state_from_json(j);
}

void save_state_file(const TripartitePureState& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << state_to_json(s).dump(2) << '\n';
}

}  // namespace trient
