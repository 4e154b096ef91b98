#pragma once

#include "daha/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace daha {

/// Exact coordinates in the basis (alpha_1..alpha_n, delta, Lambda_0) of h*.
struct WeightVector {
  std::vector<Rat> c;  // size n + 2

  WeightVector() = default;
  explicit WeightVector(int n) : c(n + 2, Rat(0)) {}

  int rank() const { return static_cast<int>(c.size()) - 2; }
  Rat& delta_coord() { return c[c.size() - 2]; }
  const Rat& delta_coord() const { return c[c.size() - 2]; }
  Rat& lambda_coord() { return c[c.size() - 1]; }
  const Rat& lambda_coord() const { return c[c.size() - 1]; }

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-(const WeightVector& o) const;
  WeightVector operator-() const;
  WeightVector operator*(const Rat& s) const;
  bool operator==(const WeightVector& o) const { return c == o.c; }
  bool is_zero() const;

  /// Canonical rendering, e.g. "3*a1+2*a2", "d-L0", "0".
  std::string str() const;
};

struct UnknownTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExcludedTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All numerical data of one supported affine Cartan type.
///
/// Conventions: node 0 is the affine node, a_{jk} is the affine Cartan
/// matrix, d_j = a_j / a_j^vee, e_j = max{1/a_0, d_j}, p = e_s.  The
/// bilinear form lives on the basis (alpha_1..alpha_n, delta, Lambda_0)
/// and is determined by (alpha_j, alpha_k) = a_{jk}/d_j, (delta, .) = 0
/// on roots, (Lambda_0, delta) = 1, (Lambda_0, Lambda_0) = 0.
struct AffineCartanDatum {
  std::string label;
  /// Structural fingerprint (label + Cartan matrix).  Distinct data can share
  /// a label -- G2~ and its dual differ only in which node is short -- so
  /// memoization must never key on the label alone.
  std::string cache_key;
  int n = 0;                             // rank of the finite part
  std::vector<IntVec> a;                 // (n+1) x (n+1)
  IntVec marks;                          // a_0..a_n
  IntVec comarks;                        // a_0^vee..a_n^vee
  std::vector<Rat> d;                    // d_j, 0..n
  std::vector<Rat> e;                    // e_j, 0..n (e_0 by length class)
  Int p = 1;                             // e_s
  Int m = 1;                             // LCD of the q-exponent grid
  std::vector<std::vector<Rat>> gram;    // (n+2) x (n+2)
  WeightVector theta;                    // delta - a_0 alpha_0
  WeightVector theta_s;                  // highest short root
  std::vector<IntVec> pos_roots;         // finite positive roots, alpha-coords
  IntVec antidominant_gen;               // strictly antidominant element of M

  // basis vectors and embeddings
  WeightVector alpha(int j) const;       // 0 <= j <= n
  WeightVector delta() const;
  WeightVector lambda0() const;
  WeightVector from_qhat(const IntVec& beta) const;        // coords in {alpha_j}, j>=1
  WeightVector from_q(const IntVec& beta_delta) const;     // (n coords, delta coeff)
  WeightVector from_m(const IntVec& mu) const;             // coords in {A_j = e_j alpha_j}

  bool two_lengths() const { return p != 1; }
  /// e-value of a finite root, by length class.
  Rat e_of_root(const IntVec& beta) const;
  /// true if the node's simple root is short (single-length types count as short)
  bool node_short(int j) const;

  IntVec theta_coords() const;           // finite alpha-coords of theta
  IntVec theta_s_coords() const;
  /// theta as an element of M; requires e_theta = 1.
  IntVec theta_m_coords() const;

  bool same_structure(const AffineCartanDatum& o) const {
    return n == o.n && a == o.a && marks == o.marks && comarks == o.comarks;
  }
};

/// Loads a supported type from the compiled-in table.
/// Throws UnknownTypeError / ExcludedTypeError (A_{2n}^{(2)} family).
AffineCartanDatum load_cartan_datum(const std::string& label);

std::vector<std::string> supported_labels();

Rat inner_product(const WeightVector& v, const WeightVector& w,
                  const AffineCartanDatum& datum);

/// (v, alpha_j^vee) for 0 <= j <= n.
Rat pair_coroot(const WeightVector& v, int j, const AffineCartanDatum& datum);

/// Finite positive roots of the associated finite root system
/// (reflection-closure of the simple roots).
std::vector<WeightVector> positive_roots(const AffineCartanDatum& datum);

/// The iota-dual datum.  The lattice correspondences
///   psi_X : M -> Qhat^iota  (A_j -> alpha_j^iota)
///   psi_Y : Qhat -> M^iota  (alpha_j -> A_j^iota)
/// are the identity on integer coordinate vectors, so no separate map
/// object is needed; sqrt(p) never materializes.
AffineCartanDatum iota_datum(const AffineCartanDatum& datum);

/// theta_s^vee = p * theta_s as an element of M (A_j coordinates).
IntVec theta_s_vee_m_coords(const AffineCartanDatum& datum);

/// psi maps; coordinate-identity, kept as named functions for clarity.
inline IntVec psi_x(const IntVec& mu_m_coords) { return mu_m_coords; }
inline IntVec psi_y(const IntVec& beta_qhat_coords) { return beta_qhat_coords; }

}  // namespace daha
