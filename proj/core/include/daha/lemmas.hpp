#pragma once

#include "daha/hecke.hpp"

#include <string>
#include <vector>

namespace daha {

/// Result of one combinatorial verification.  Status is "pass", "fail" or
/// "not-applicable" (the latter only when the hypothesis p != 1 fails).
/// Notes carry canonically rendered witnesses (words, sets, elements);
/// failures append the offending difference.
struct LemmaReport {
  std::string id;
  std::string label;
  std::string status = "pass";
  std::vector<std::string> notes;

  bool passed() const { return status == "pass"; }
  bool applicable() const { return status != "not-applicable"; }
};

/// Y_{-theta_s^vee} = T_{s_{theta_s}} T_0 T_{s_{theta-theta_s}} T_0,
/// together with the supporting length identities.
LemmaReport verify_lemma_3_1(const AffineCartanDatum& d);

/// Pi(s_{theta-theta_s}) - {theta-theta_s} lies in
/// {alpha > 0 | (alpha^vee, theta-theta_s) = 1}, plus the p = 2
/// scalar-product table.
LemmaReport verify_lemma_3_2(const AffineCartanDatum& d);

/// T_{w^{-1}}^{-1} X_{theta-theta_s} = X_{alpha_{j0}} T_w for the minimal
/// conjugator w, with the intermediate pairing identities.
LemmaReport verify_lemma_3_3(const AffineCartanDatum& d);

/// E - E^{-1} = t_s^{1/2} - t_s^{-1/2} for
/// E = T_{theta-theta_s}^{-1} X_{theta-theta_s}.
LemmaReport verify_prop_3_4(const AffineCartanDatum& d);

/// The affine-node case split of the duality map: the p = 1 closed form,
/// or the p != 1 chain through the conjugated quadratic relation.
LemmaReport verify_case_analysis(const AffineCartanDatum& d);

std::vector<LemmaReport> verify_all_lemmas(const AffineCartanDatum& d);

}  // namespace daha
