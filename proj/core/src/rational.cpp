#include "daha/rational.hpp"

#include <stdexcept>

namespace daha {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    Int num = std::stoll(s.substr(0, slash));
    Int den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

Int to_int(const Rat& r) {
  if (r.denominator() != 1)
    throw std::runtime_error("expected integer, got " + to_string(r));
  return r.numerator();
}

}  // namespace daha
