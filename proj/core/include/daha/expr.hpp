#pragma once

#include "daha/hecke.hpp"
#include "daha/weyl.hpp"

#include <stdexcept>
#include <string>

namespace daha {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses an algebra expression over the generators:
///   T0..Tn      generators of the Hecke part
///   Ti'         inverse of Ti
///   X[c1,...,cn;k]   X_beta with beta = sum c_j alpha_j + k delta
///   Y[c1,...,cn]     Y_mu with mu = sum c_j A_j
///   q^a, ts^b, tl^c  coefficient monomials (rational exponents)
///   rational scalars, juxtaposition products, +, -, parentheses
DahaElement parse_daha_expr(const AffineCartanDatum& d, const std::string& text);

/// Parses an affine Weyl group expression: products of s0..sn and
/// translations l[c1,...,cn] (coordinates in the A_j basis), parentheses.
AffineWeylElement parse_weyl_expr(const AffineCartanDatum& d,
                                  const std::string& text);

}  // namespace daha
