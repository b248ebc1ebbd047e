#include "sdqm/poly.hpp"

namespace sdqm {

std::string Poly1::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[k].str();
    if (k >= 1) {
      out += "*";
      out += var_;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace sdqm
