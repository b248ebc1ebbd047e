#include "sdqm/scalar.hpp"

#include <cctype>

namespace sdqm {

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty rational literal");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point away
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw DomainError("bad rational literal: " + text);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  try {
    mpq_class q(s, 10);
    q.canonicalize();
    if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal: " + text);
  }
}

}  // namespace sdqm
