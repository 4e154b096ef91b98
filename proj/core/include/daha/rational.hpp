#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace boost {

// Under C++20 rewritten-candidate rules the reversed heterogeneous
// operator== template in <boost/rational.hpp> can select itself and
// recurse.  These non-template overloads win overload resolution for
// rational-vs-integer comparisons and terminate.
inline bool operator==(const rational<long long>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<long long>& a, int b) {
  return a == static_cast<long long>(b);
}

}  // namespace boost

namespace daha {

using Int = long long;
using Rat = boost::rational<Int>;
using IntVec = std::vector<Int>;

std::string to_string(const Rat& r);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

/// Requires r integral; throws otherwise.
Int to_int(const Rat& r);

}  // namespace daha
