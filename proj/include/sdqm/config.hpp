#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "sdqm/models.hpp"
#include "sdqm/polyop.hpp"

namespace sdqm {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plain-text key-value config: one `key = value` per line, `#`
/// comments, blank lines ignored. Values are exact rationals
/// ("3/2", "-1", "0.25"); complex parameters use `<name>_re` /
/// `<name>_im` key pairs.
struct Config {
  std::map<std::string, std::string> kv;
  bool has(const std::string& k) const { return kv.count(k) > 0; }
  std::string get(const std::string& k) const;
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::filesystem::path& path);

/// family = <name> plus the family's parameters.
Model model_from_config(const Config& c);

/// Quasi-exact-solvability spec: coordinate = <family name> (giving
/// eta and the shift kind), the coordinate's own parameters (d, q),
/// L, M, and the v coefficients as v<k>0 / v<k>1 keys.
struct QesConfigData {
  Coordinate coord;
  PotentialCoefficients coeffs;
  int M;
};
QesConfigData qes_from_config(const Config& c);

/// Round-trippable key-value text for a QES spec.
std::string qes_to_config(const QesConfigData& q);

}  // namespace sdqm
