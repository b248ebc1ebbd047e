#include "sdqm/config.hpp"

#include <fstream>
#include <sstream>

namespace sdqm {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string Config::get(const std::string& k) const {
  auto it = kv.find(k);
  if (it == kv.end()) throw ConfigError("missing config key: " + k);
  return it->second;
}

Config parse_config_text(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    if (c.kv.count(key))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " + key);
    c.kv[key] = value;
  }
  return c;
}

Config parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

Scalar scalar_value(const Config& c, const std::string& name) {
  if (c.has(name + "_re") || c.has(name + "_im")) {
    const mpq_class re = c.has(name + "_re") ? parse_rational(c.get(name + "_re")) : mpq_class(0);
    const mpq_class im = c.has(name + "_im") ? parse_rational(c.get(name + "_im")) : mpq_class(0);
    return Scalar::gaussian(re, im);
  }
  return Scalar(parse_rational(c.get(name)));
}

bool has_scalar(const Config& c, const std::string& name) {
  return c.has(name) || c.has(name + "_re") || c.has(name + "_im");
}

std::map<std::string, Scalar> collect_params(const Config& c, Family f) {
  std::map<std::string, Scalar> p;
  auto grab = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
      if (!has_scalar(c, k)) throw ConfigError(std::string("missing config key: ") + k);
      p[k] = scalar_value(c, k);
    }
  };
  switch (f) {
    case Family::Hermite: break;
    case Family::Laguerre: grab({"g"}); break;
    case Family::Jacobi: grab({"g", "h"}); break;
    case Family::ContHahn: grab({"a1", "a2"}); break;
    case Family::Wilson: grab({"a1", "a2", "a3", "a4"}); break;
    case Family::AskeyWilson: grab({"a1", "a2", "a3", "a4", "q"}); break;
    case Family::Hahn: grab({"a", "b", "N"}); break;
    case Family::Racah: grab({"a", "b", "d", "N"}); break;
    case Family::QRacah: grab({"a", "b", "d", "q", "N"}); break;
  }
  return p;
}

}  // namespace

Model model_from_config(const Config& c) {
  const std::string fname = c.get("family");
  const auto f = family_from_name(fname);
  if (!f) throw ConfigError("unknown family: " + fname);
  return make_model(*f, collect_params(c, *f));
}

QesConfigData qes_from_config(const Config& c) {
  const std::string cname = c.get("coordinate");
  const auto f = family_from_name(cname);
  if (!f) throw ConfigError("unknown coordinate family: " + cname);
  std::map<std::string, Scalar> cp;
  if (*f == Family::Racah) cp["d"] = scalar_value(c, "d");
  if (*f == Family::QRacah) {
    cp["d"] = scalar_value(c, "d");
    cp["q"] = scalar_value(c, "q");
  }
  if (*f == Family::AskeyWilson) cp["q"] = scalar_value(c, "q");
  QesConfigData q{Coordinate(*f, std::move(cp)), PotentialCoefficients{}, 0};
  const int L = static_cast<int>(parse_rational(c.get("L")).get_num().get_si());
  q.coeffs.L = L;
  q.coeffs.v0.assign(L + 1, Scalar(0));
  q.coeffs.v1.assign(L, Scalar(0));
  for (int k = 0; k <= L; ++k) {
    const std::string key = "v" + std::to_string(k) + "0";
    if (c.has(key)) q.coeffs.v0[k] = Scalar(parse_rational(c.get(key)));
  }
  for (int k = 0; k < L; ++k) {
    const std::string key = "v" + std::to_string(k) + "1";
    if (c.has(key)) q.coeffs.v1[k] = Scalar(parse_rational(c.get(key)));
  }
  q.M = static_cast<int>(parse_rational(c.get("M")).get_num().get_si());
  return q;
}

std::string qes_to_config(const QesConfigData& q) {
  std::string out = "coordinate = " + std::string(family_name(q.coord.family())) + "\n";
  const Family f = q.coord.family();
  auto param = [&](const char* k) {
    out += std::string(k) + " = " + q.coord.params().at(k).str() + "\n";
  };
  if (f == Family::Racah || f == Family::QRacah) param("d");
  if (f == Family::QRacah || f == Family::AskeyWilson) param("q");
  out += "L = " + std::to_string(q.coeffs.L) + "\n";
  out += "M = " + std::to_string(q.M) + "\n";
  for (int k = 0; k <= q.coeffs.L; ++k)
    if (!q.coeffs.v(k, 0).is_zero())
      out += "v" + std::to_string(k) + "0 = " + q.coeffs.v(k, 0).str() + "\n";
  for (int k = 0; k < q.coeffs.L; ++k)
    if (!q.coeffs.v(k, 1).is_zero())
      out += "v" + std::to_string(k) + "1 = " + q.coeffs.v(k, 1).str() + "\n";
  return out;
}

}  // namespace sdqm
