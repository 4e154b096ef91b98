#pragma once

#include "daha/cartan.hpp"

#include <vector>

namespace daha {

/// Element of the finite Weyl group, stored as the integer matrix of its
/// linear action on the basis (alpha_1..alpha_n).  mat[r][c] is the
/// coefficient of alpha_{r+1} in the image of alpha_{c+1}.
struct FiniteWeylElement {
  std::vector<IntVec> mat;

  static FiniteWeylElement identity(int n);
  bool is_identity() const;
  bool operator==(const FiniteWeylElement& o) const { return mat == o.mat; }
  bool operator<(const FiniteWeylElement& o) const { return mat < o.mat; }

  IntVec act(const IntVec& alpha_coords) const;
};

FiniteWeylElement mul(const FiniteWeylElement& a, const FiniteWeylElement& b);
FiniteWeylElement inverse(const FiniteWeylElement& a);

/// w = fin . lambda_mu, mu in M (coordinates in the A_j basis).
struct AffineWeylElement {
  FiniteWeylElement fin;
  IntVec mu;

  static AffineWeylElement identity(int n);
  bool is_identity() const;
  bool operator==(const AffineWeylElement& o) const {
    return fin == o.fin && mu == o.mu;
  }
  bool operator<(const AffineWeylElement& o) const {
    if (!(fin == o.fin)) return fin < o.fin;
    return mu < o.mu;
  }
};

/// g = w . tau_beta . tau_delta^k, beta in Qhat (alpha-coordinates).
struct DoubleAffineWeylElement {
  AffineWeylElement w;
  IntVec beta;
  Int k = 0;

  static DoubleAffineWeylElement identity(int n);
  bool operator==(const DoubleAffineWeylElement& o) const {
    return w == o.w && beta == o.beta && k == o.k;
  }
};

// generators
FiniteWeylElement simple_finite(const AffineCartanDatum& d, int j);  // 1..n
/// reflection by a finite root (alpha-coordinates)
FiniteWeylElement reflection(const AffineCartanDatum& d, const IntVec& root);
AffineWeylElement simple_affine(const AffineCartanDatum& d, int j);  // 0..n
AffineWeylElement translation(const AffineCartanDatum& d, const IntVec& mu_m);

// group arithmetic
AffineWeylElement mul(const AffineCartanDatum& d, const AffineWeylElement& a,
                      const AffineWeylElement& b);
AffineWeylElement inverse(const AffineCartanDatum& d, const AffineWeylElement& a);
DoubleAffineWeylElement mul(const AffineCartanDatum& d,
                            const DoubleAffineWeylElement& a,
                            const DoubleAffineWeylElement& b);
DoubleAffineWeylElement inverse(const AffineCartanDatum& d,
                                const DoubleAffineWeylElement& a);

// actions
/// Level-zero action on h*_0; requires zero Lambda_0 component.
WeightVector act_level0(const AffineCartanDatum& d, const AffineWeylElement& w,
                        const WeightVector& v);
/// Level-zero action on Q = Qhat + Z delta, integer coordinates
/// (n alpha-coords followed by the delta coefficient).
IntVec act_level0_q(const AffineCartanDatum& d, const AffineWeylElement& w,
                    const IntVec& beta_delta);
/// Level-one affine action on the finite part of h*.
WeightVector act_level1(const AffineCartanDatum& d, const AffineWeylElement& w,
                        const WeightVector& v);

// length machinery
int length(const AffineCartanDatum& d, const AffineWeylElement& w);
int length_finite(const AffineCartanDatum& d, const FiniteWeylElement& w);
/// Closed-form length of fin . lambda_mu (sum over positive roots).
Int length_formula(const AffineCartanDatum& d, const FiniteWeylElement& fin,
                   const IntVec& mu_m);
/// Deterministic reduced word (lexicographically smallest descent each step).
std::vector<int> reduced_word(const AffineCartanDatum& d,
                              const AffineWeylElement& w);
std::vector<int> reduced_word_finite(const AffineCartanDatum& d,
                                     const FiniteWeylElement& w);
/// Positive real roots inverted by w, as Q-coordinates (n + delta coeff).
std::vector<IntVec> inversion_set(const AffineCartanDatum& d,
                                  const AffineWeylElement& w);

AffineWeylElement from_word(const AffineCartanDatum& d,
                            const std::vector<int>& word);
FiniteWeylElement from_word_finite(const AffineCartanDatum& d,
                                   const std::vector<int>& word);

/// All elements of W with length <= maxlen.
std::vector<AffineWeylElement> enumerate_by_length(const AffineCartanDatum& d,
                                                   int maxlen);
/// Every reduced word of w (exhaustive; for short elements).
std::vector<std::vector<int>> all_reduced_words(const AffineCartanDatum& d,
                                                const AffineWeylElement& w);

/// Minimal-length finite w with w(root) simple, ties broken by lexicographic
/// reduced word; returns (w, j0) with w(root) = alpha_{j0}.
std::pair<FiniteWeylElement, int> minimal_conjugator(const AffineCartanDatum& d,
                                                     const IntVec& root);

/// The Weyl-level involution: fixes the finite part, swaps lambda and tau
/// lattices through the coordinate-identity psi maps, inverts tau_delta.
DoubleAffineWeylElement phi_weyl(const AffineCartanDatum& src,
                                 const AffineCartanDatum& tgt,
                                 const DoubleAffineWeylElement& g);

/// Integer pairing (beta, mu) for beta in Qhat, mu in M.
Int pair_qhat_m(const AffineCartanDatum& d, const IntVec& beta, const IntVec& mu);

}  // namespace daha
