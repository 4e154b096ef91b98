#pragma once

#include "daha/hecke.hpp"

#include <string>
#include <vector>

namespace daha {

/// One verification check: exact symbolic equality, with the nonzero
/// difference rendered as the witness on failure.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::string label;
  std::string iota_label;
  std::vector<Check> checks;

  bool all_pass() const;
  void record(const std::string& name, const DahaElement& diff);
  void record_bool(const std::string& name, bool ok, const std::string& w = "");
};

/// The duality map between an algebra and its iota-dual, defined on
/// generator words:  T_j -> (T_j^i)^{-1} (j >= 1),  Y_mu -> X^i_{psi_x(mu)},
/// X_beta -> Y^i_{psi_y(beta)},  X_delta -> q,  coefficients -> bar
/// (with the node length classes swapped when p != 1).  T_0 is first
/// eliminated through Y_{-theta} = T_{s_theta} T_0.
struct PhiMap {
  AffineCartanDatum src;
  AffineCartanDatum tgt;

  Laurent map_coeff(const Laurent& c) const;
  GeneratorWord map_token(const GenToken& tok) const;
  GeneratorWord map_word(const GeneratorWord& w) const;
  DahaElement apply(const GeneratorWord& w) const;
};

PhiMap make_phi(const AffineCartanDatum& d);

/// Transports every defining relation of the source presentation through
/// the duality map and checks the image identity exactly in the target
/// algebra: braid relations, quadratic relations, lattice axioms, the
/// cross relations for both lattices, the affine cross relation, the
/// rank-one Y-conjugation identities, the double composite on generators,
/// and the affine-node case split.
Report verify_theorem2(const AffineCartanDatum& d);

/// Samples `count` random generator-word pairs (a, b) and checks
/// phi(a.b) = phi(a).phi(b) exactly, plus coefficient compatibility
/// phi(c.a) = bar(c).phi(a).
Report verify_homomorphism_samples(const AffineCartanDatum& d, int count,
                                   std::uint64_t seed);

}  // namespace daha
