#include "ncg/rational.hpp"

namespace ncg {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  std::string num = text, den = "1";
  if (auto pos = text.find('/'); pos != std::string::npos) {
    num = text.substr(0, pos);
    den = text.substr(pos + 1);
  }
  if (!valid_integer(num) || !valid_integer(den))
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  Rat r{Int(num), Int(den)};
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& r, unsigned long e) {
  Rat out = 1;
  Rat base = r;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace ncg
