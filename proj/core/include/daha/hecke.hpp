#pragma once

#include "daha/cartan.hpp"
#include "daha/coeffs.hpp"
#include "daha/weyl.hpp"

#include <map>
#include <random>
#include <variant>
#include <vector>

namespace daha {

/// One PBW basis index: X_beta T_u with beta in Qhat (alpha-coordinates) and
/// u in W stored by its canonical reduced word.  X_delta never appears
/// explicitly; its powers are folded into the coefficient as q^{-k}.
struct DahaTermKey {
  IntVec beta;
  std::vector<int> word;

  bool operator<(const DahaTermKey& o) const {
    if (beta != o.beta) return beta < o.beta;
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
  bool operator==(const DahaTermKey& o) const {
    return beta == o.beta && word == o.word;
  }
};

/// Element of the double affine Hecke algebra in PBW normal form.
struct DahaElement {
  std::map<DahaTermKey, Laurent> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const DahaElement& o) const { return terms == o.terms; }
  void add_term(const DahaTermKey& k, const Laurent& c);
  std::string str() const;
};

DahaElement daha_zero();
DahaElement daha_one(const AffineCartanDatum& d);
DahaElement daha_scalar(const AffineCartanDatum& d, const Laurent& c);

DahaElement add(const DahaElement& a, const DahaElement& b);
DahaElement sub(const DahaElement& a, const DahaElement& b);
DahaElement scale(const DahaElement& a, const Laurent& c);

/// t-class of node j (t_0 identified through d_0).
TClass t_class(const AffineCartanDatum& d, int j);
/// t_j^{1/2} - t_j^{-1/2}
Laurent t_unit_of_node(const AffineCartanDatum& d, int j);

// generators
DahaElement t_generator(const AffineCartanDatum& d, int j);  // 0..n
DahaElement t_inverse(const AffineCartanDatum& d, int j);
/// X_beta for beta in Q (n alpha-coords + delta coefficient).
DahaElement x_monomial(const AffineCartanDatum& d, const IntVec& beta_delta);
DahaElement x_monomial_finite(const AffineCartanDatum& d, const IntVec& beta);

/// T_j X_beta in normal form (the exact quotient of the cross relation).
DahaElement push_x_through_t(const AffineCartanDatum& d, int j,
                             const IntVec& beta_delta);

/// Right multiplication by T_j or T_j^{-1}.
DahaElement mul_t(const AffineCartanDatum& d, const DahaElement& a, int j,
                  bool inv);
/// Right multiplication by X_beta.
DahaElement mul_x(const AffineCartanDatum& d, const DahaElement& a,
                  const IntVec& beta_delta);
DahaElement multiply(const AffineCartanDatum& d, const DahaElement& a,
                     const DahaElement& b);

DahaElement t_word(const AffineCartanDatum& d, const AffineWeylElement& w);
DahaElement t_word_inverse(const AffineCartanDatum& d, const AffineWeylElement& w);
DahaElement t_word_finite(const AffineCartanDatum& d, const FiniteWeylElement& w);
DahaElement t_word_finite_inverse(const AffineCartanDatum& d,
                                  const FiniteWeylElement& w);

/// Y_mu for mu in M (A_j coordinates), via an antidominant decomposition.
DahaElement y_element(const AffineCartanDatum& d, const IntVec& mu_m);

/// Bernstein basis index (mu in M, finite reduced word of w).
using BernsteinKey = std::pair<IntVec, std::vector<int>>;
/// Change of basis for elements of the affine subalgebra (no X part).
std::map<BernsteinKey, Laurent> to_bernstein(const AffineCartanDatum& d,
                                             const DahaElement& h);
DahaElement from_bernstein(const AffineCartanDatum& d,
                           const std::map<BernsteinKey, Laurent>& b);

// ------------------------------------------------------------ generator words

struct TGen {
  int j;
  bool inv = false;
  bool operator==(const TGen&) const = default;
};
struct XMon {
  IntVec beta_delta;  // n coords + delta coefficient
  bool operator==(const XMon&) const = default;
};
struct YMon {
  IntVec mu_m;
  bool operator==(const YMon&) const = default;
};
struct ScalarTok {
  Laurent c;
  bool operator==(const ScalarTok&) const = default;
};
using GenToken = std::variant<TGen, XMon, YMon, ScalarTok>;
using GeneratorWord = std::vector<GenToken>;

DahaElement evaluate(const AffineCartanDatum& d, const GeneratorWord& word);

/// Random generator word for property sampling (T's, small X's and Y's).
GeneratorWord random_word(const AffineCartanDatum& d, std::mt19937_64& rng,
                          int len);

}  // namespace daha
