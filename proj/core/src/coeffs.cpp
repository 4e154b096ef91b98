#include "daha/coeffs.hpp"

#include <sstream>
#include <stdexcept>

namespace daha {

Laurent Laurent::rational(const Rat& r) {
  Laurent l;
  l.add_term(ExpKey{}, r);
  return l;
}

Laurent Laurent::q_pow(const Rat& exp) {
  Laurent l;
  l.add_term(ExpKey{exp, 0, 0}, Rat(1));
  return l;
}

Laurent Laurent::t_pow(TClass cls, Int half_units) {
  Laurent l;
  ExpKey k;
  (cls == TClass::Short ? k.ts2 : k.tl2) = half_units;
  l.add_term(k, Rat(1));
  return l;
}

Laurent Laurent::t_unit(TClass cls) {
  return t_pow(cls, 1) - t_pow(cls, -1);
}

Laurent Laurent::monomial(const ExpKey& k, const Rat& coeff) {
  Laurent l;
  l.add_term(k, coeff);
  return l;
}

void Laurent::add_term(const ExpKey& k, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  // monomial factors only shift exponents, which preserves the term order,
  // so the result can be rebuilt with hinted inserts
  if (o.terms_.size() == 1) {
    const auto& [kb, cb] = *o.terms_.begin();
    Laurent r;
    for (const auto& [ka, ca] : terms_)
      r.terms_.emplace_hint(r.terms_.end(),
                            ExpKey{ka.q + kb.q, ka.ts2 + kb.ts2, ka.tl2 + kb.tl2},
                            ca * cb);
    return r;
  }
  if (terms_.size() == 1) return o * *this;
  Laurent r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ExpKey{ka.q + kb.q, ka.ts2 + kb.ts2, ka.tl2 + kb.tl2}, ca * cb);
  return r;
}

Laurent Laurent::scaled(const Rat& s) const {
  if (s == 0) return Laurent();
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(ExpKey{-k.q, -k.ts2, -k.tl2}, c);
  return r;
}

Laurent Laurent::swap_t_classes() const {
  Laurent r;
  for (const auto& [k, c] : terms_)
    r.terms_.emplace(ExpKey{k.q, k.tl2, k.ts2}, c);
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpKey{} &&
         terms_.begin()->second == 1;
}

Laurent Laurent::monomial_inverse() const {
  if (terms_.size() != 1)
    throw std::runtime_error("monomial_inverse: not a monomial");
  const auto& [k, c] = *terms_.begin();
  Laurent r;
  r.terms_.emplace(ExpKey{-k.q, -k.ts2, -k.tl2}, Rat(1) / c);
  return r;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat coeff = c;
    if (!first) os << (coeff > 0 ? " + " : " - ");
    if (!first && coeff < 0) coeff = -coeff;
    std::vector<std::string> factors;
    if (k.q != 0) factors.push_back("q^" + to_string(k.q));
    auto tfac = [&](const char* name, Int half) {
      if (half == 0) return;
      if (half == 2)
        factors.emplace_back(name);
      else
        factors.push_back(std::string(name) + "^" + to_string(Rat(half, 2)));
    };
    tfac("ts", k.ts2);
    tfac("tl", k.tl2);
    if (factors.empty()) {
      os << to_string(coeff);
    } else {
      std::string head;
      if (coeff != 1) head = to_string(coeff) + "*";
      os << head;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace daha
