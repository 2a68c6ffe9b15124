#include "czds/rational.hpp"

#include <cctype>

namespace czds {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts more formats than we want (whitespace, base prefixes);
  // restrict to [-]digits[/digits].
  std::size_t i = 0;
  auto expect_digits = [&](std::size_t from) {
    if (from >= s.size() || (s[from] == '-' && from + 1 >= s.size()))
      throw std::invalid_argument("malformed rational: " + s);
    std::size_t j = from;
    if (s[j] == '-') ++j;
    if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed rational: " + s);
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  i = expect_digits(0);
  if (i != s.size()) {
    if (s[i] != '/') throw std::invalid_argument("malformed rational: " + s);
    std::size_t j = expect_digits(i + 1);
    if (j != s.size()) throw std::invalid_argument("malformed rational: " + s);
    if (s[i + 1] == '-') throw std::invalid_argument("negative denominator: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace czds
