#include "daha/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace daha {

namespace {

Rat len2_qhat(const AffineCartanDatum& d, const IntVec& beta) {
  Rat acc(0);
  for (int j = 0; j < d.n; ++j)
    for (int k = 0; k < d.n; ++k)
      if (beta[j] != 0 && beta[k] != 0)
        acc += Rat(beta[j] * beta[k]) * d.gram[j][k];
  return acc;
}

Rat pair_qhat(const AffineCartanDatum& d, const IntVec& x, const IntVec& y) {
  Rat acc(0);
  for (int j = 0; j < d.n; ++j)
    for (int k = 0; k < d.n; ++k)
      if (x[j] != 0 && y[k] != 0) acc += Rat(x[j] * y[k]) * d.gram[j][k];
  return acc;
}

/// Action of a finite element on M coordinates (A_j basis).
IntVec act_m(const AffineCartanDatum& d, const FiniteWeylElement& f,
             const IntVec& mu) {
  int n = d.n;
  IntVec alpha(n, 0);
  for (int j = 0; j < n; ++j) alpha[j] = mu[j] * to_int(d.e[j + 1]);
  IntVec img = f.act(alpha);
  IntVec out(n, 0);
  for (int j = 0; j < n; ++j) out[j] = to_int(Rat(img[j]) / d.e[j + 1]);
  return out;
}

bool q_negative(const IntVec& beta_delta) {
  Int k = beta_delta.back();
  if (k != 0) return k < 0;
  for (size_t j = 0; j + 1 < beta_delta.size(); ++j)
    if (beta_delta[j] != 0) return beta_delta[j] < 0;
  return false;  // zero vector, caller's problem
}

/// alpha_j as a Q-vector (n coords + delta coefficient).
IntVec simple_root_q(const AffineCartanDatum& d, int j) {
  IntVec v(d.n + 1, 0);
  if (j == 0) {
    IntVec th = d.theta_coords();
    for (int r = 0; r < d.n; ++r) v[r] = -th[r];
    v[d.n] = 1;  // alpha_0 = delta - theta (a_0 = 1 for supported types)
  } else {
    v[j - 1] = 1;
  }
  return v;
}

/// true iff l(w s_j) < l(w)
bool is_descent(const AffineCartanDatum& d, const AffineWeylElement& w, int j) {
  return q_negative(act_level0_q(d, w, simple_root_q(d, j)));
}

}  // namespace

// --------------------------------------------------------------- finite group

FiniteWeylElement FiniteWeylElement::identity(int n) {
  FiniteWeylElement f;
  f.mat.assign(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) f.mat[j][j] = 1;
  return f;
}

bool FiniteWeylElement::is_identity() const {
  int n = static_cast<int>(mat.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (mat[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

IntVec FiniteWeylElement::act(const IntVec& x) const {
  int n = static_cast<int>(mat.size());
  IntVec out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += mat[r][c] * x[c];
  return out;
}

FiniteWeylElement mul(const FiniteWeylElement& a, const FiniteWeylElement& b) {
  int n = static_cast<int>(a.mat.size());
  FiniteWeylElement r;
  r.mat.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.mat[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) r.mat[i][j] += a.mat[i][k] * b.mat[k][j];
    }
  return r;
}

FiniteWeylElement inverse(const FiniteWeylElement& a) {
  // Gaussian elimination over Q; entries of the result are integers.
  int n = static_cast<int>(a.mat.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = Rat(a.mat[r][c]);
    m[r][n + r] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular Weyl matrix");
    std::swap(m[col], m[piv]);
    Rat diag = m[col][col];
    for (auto& x : m[col]) x /= diag;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  FiniteWeylElement out;
  out.mat.assign(n, IntVec(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.mat[r][c] = to_int(m[r][n + c]);
  return out;
}

FiniteWeylElement simple_finite(const AffineCartanDatum& d, int j) {
  if (j < 1 || j > d.n) throw std::invalid_argument("simple_finite: bad index");
  FiniteWeylElement f = FiniteWeylElement::identity(d.n);
  for (int c = 0; c < d.n; ++c) f.mat[j - 1][c] -= d.a[j][c + 1];
  return f;
}

FiniteWeylElement reflection(const AffineCartanDatum& d, const IntVec& root) {
  Rat len2 = len2_qhat(d, root);
  if (len2 == 0) throw std::invalid_argument("reflection: zero vector");
  Rat droot = Rat(2) / len2;
  int n = d.n;
  FiniteWeylElement f = FiniteWeylElement::identity(n);
  for (int c = 0; c < n; ++c) {
    IntVec unit(n, 0);
    unit[c] = 1;
    Rat pairing = pair_qhat(d, unit, root) * droot;  // (alpha_{c+1}, root^vee)
    for (int r = 0; r < n; ++r)
      f.mat[r][c] -= to_int(pairing * Rat(root[r]));
  }
  return f;
}

// --------------------------------------------------------------- affine group

AffineWeylElement AffineWeylElement::identity(int n) {
  return {FiniteWeylElement::identity(n), IntVec(n, 0)};
}

bool AffineWeylElement::is_identity() const {
  return fin.is_identity() &&
         std::all_of(mu.begin(), mu.end(), [](Int x) { return x == 0; });
}

AffineWeylElement simple_affine(const AffineCartanDatum& d, int j) {
  if (j == 0) {
    if (d.marks[0] != 1)
      throw std::runtime_error("a_0 != 1: type not supported");
    IntVec mu = d.theta_m_coords();
    for (auto& x : mu) x = -x;
    return {reflection(d, d.theta_coords()), mu};
  }
  return {simple_finite(d, j), IntVec(d.n, 0)};
}

AffineWeylElement translation(const AffineCartanDatum& d, const IntVec& mu_m) {
  return {FiniteWeylElement::identity(d.n), mu_m};
}

AffineWeylElement mul(const AffineCartanDatum& d, const AffineWeylElement& a,
                      const AffineWeylElement& b) {
  // (f1 . l_mu1)(f2 . l_mu2) = f1 f2 . l_{f2^{-1}(mu1) + mu2}
  FiniteWeylElement f2inv = inverse(b.fin);
  IntVec mu = act_m(d, f2inv, a.mu);
  for (int j = 0; j < d.n; ++j) mu[j] += b.mu[j];
  return {mul(a.fin, b.fin), mu};
}

AffineWeylElement inverse(const AffineCartanDatum& d, const AffineWeylElement& a) {
  IntVec mu = act_m(d, a.fin, a.mu);
  for (auto& x : mu) x = -x;
  return {inverse(a.fin), mu};
}

Int pair_qhat_m(const AffineCartanDatum& d, const IntVec& beta, const IntVec& mu) {
  Rat acc(0);
  for (int j = 0; j < d.n; ++j)
    for (int k = 0; k < d.n; ++k)
      if (beta[j] != 0 && mu[k] != 0)
        acc += Rat(beta[j] * mu[k]) * d.e[k + 1] * d.gram[j][k];
  return to_int(acc);
}

// -------------------------------------------------------------------- actions

IntVec act_level0_q(const AffineCartanDatum& d, const AffineWeylElement& w,
                    const IntVec& beta_delta) {
  IntVec beta(beta_delta.begin(), beta_delta.end() - 1);
  Int k = beta_delta.back();
  k -= pair_qhat_m(d, beta, w.mu);
  IntVec img = w.fin.act(beta);
  img.push_back(k);
  return img;
}

WeightVector act_level0(const AffineCartanDatum& d, const AffineWeylElement& w,
                        const WeightVector& v) {
  if (v.lambda_coord() != 0)
    throw std::invalid_argument("act_level0: nonzero Lambda_0 component");
  int n = d.n;
  WeightVector out(n);
  // delta coefficient: k - (v, mu)
  Rat pairing = inner_product(v, d.from_m(w.mu), d);
  out.delta_coord() = v.delta_coord() - pairing;
  for (int r = 0; r < n; ++r) {
    Rat acc(0);
    for (int c = 0; c < n; ++c) acc += Rat(w.fin.mat[r][c]) * v.c[c];
    out.c[r] = acc;
  }
  return out;
}

WeightVector act_level1(const AffineCartanDatum& d, const AffineWeylElement& w,
                        const WeightVector& v) {
  if (v.lambda_coord() != 0 || v.delta_coord() != 0)
    throw std::invalid_argument("act_level1: expects a finite-part vector");
  int n = d.n;
  WeightVector shifted = v + d.from_m(w.mu);
  WeightVector out(n);
  for (int r = 0; r < n; ++r) {
    Rat acc(0);
    for (int c = 0; c < n; ++c) acc += Rat(w.fin.mat[r][c]) * shifted.c[c];
    out.c[r] = acc;
  }
  return out;
}

// -------------------------------------------------------- double affine group

DoubleAffineWeylElement DoubleAffineWeylElement::identity(int n) {
  return {AffineWeylElement::identity(n), IntVec(n, 0), 0};
}

DoubleAffineWeylElement mul(const AffineCartanDatum& d,
                            const DoubleAffineWeylElement& a,
                            const DoubleAffineWeylElement& b) {
  // w1 t_b1 d^k1 . w2 t_b2 d^k2 = w1 w2 . t_{w2^{-1}(b1)} t_b2 d^{k1+k2+shift}
  AffineWeylElement w2inv = inverse(d, b.w);
  IntVec q = a.beta;
  q.push_back(0);
  IntVec moved = act_level0_q(d, w2inv, q);
  IntVec beta(moved.begin(), moved.end() - 1);
  for (int j = 0; j < d.n; ++j) beta[j] += b.beta[j];
  return {mul(d, a.w, b.w), beta, a.k + b.k + moved.back()};
}

DoubleAffineWeylElement inverse(const AffineCartanDatum& d,
                                const DoubleAffineWeylElement& a) {
  IntVec q(d.n + 1, 0);
  for (int j = 0; j < d.n; ++j) q[j] = -a.beta[j];
  IntVec moved = act_level0_q(d, a.w, q);
  IntVec beta(moved.begin(), moved.end() - 1);
  return {inverse(d, a.w), beta, -a.k + moved.back()};
}

// ------------------------------------------------------------ length machinery

std::vector<int> reduced_word(const AffineCartanDatum& d,
                              const AffineWeylElement& w) {
  std::vector<int> collected;
  AffineWeylElement cur = w;
  while (!cur.is_identity()) {
    int found = -1;
    for (int j = 0; j <= d.n; ++j)
      if (is_descent(d, cur, j)) {
        found = j;
        break;
      }
    if (found < 0) throw std::runtime_error("no descent for non-identity element");
    cur = mul(d, cur, simple_affine(d, found));
    collected.push_back(found);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

int length(const AffineCartanDatum& d, const AffineWeylElement& w) {
  int l = 0;
  AffineWeylElement cur = w;
  while (!cur.is_identity()) {
    int found = -1;
    for (int j = 0; j <= d.n; ++j)
      if (is_descent(d, cur, j)) {
        found = j;
        break;
      }
    if (found < 0) throw std::runtime_error("no descent for non-identity element");
    cur = mul(d, cur, simple_affine(d, found));
    ++l;
  }
  return l;
}

int length_finite(const AffineCartanDatum& d, const FiniteWeylElement& w) {
  return length(d, AffineWeylElement{w, IntVec(d.n, 0)});
}

std::vector<int> reduced_word_finite(const AffineCartanDatum& d,
                                     const FiniteWeylElement& w) {
  return reduced_word(d, AffineWeylElement{w, IntVec(d.n, 0)});
}

Int length_formula(const AffineCartanDatum& d, const FiniteWeylElement& fin,
                   const IntVec& mu_m) {
  WeightVector muv = d.from_m(mu_m);
  Int total = 0;
  for (const auto& root : d.pos_roots) {
    Rat droot = Rat(2) / len2_qhat(d, root);
    // (mu, alpha^vee) / e_alpha
    Rat num(0);
    for (int j = 0; j < d.n; ++j)
      for (int k = 0; k < d.n; ++k)
        if (root[k] != 0) num += muv.c[j] * Rat(root[k]) * d.gram[j][k];
    Rat val = num * droot / d.e_of_root(root);
    IntVec img = fin.act(root);
    bool inverted = std::all_of(img.begin(), img.end(), [](Int x) { return x <= 0; });
    Rat term = inverted ? val + 1 : val;
    if (!is_integer(term))
      throw std::runtime_error("length_formula: non-integer pairing");
    total += std::abs(to_int(term));
  }
  return total;
}

std::vector<IntVec> inversion_set(const AffineCartanDatum& d,
                                  const AffineWeylElement& w) {
  std::vector<int> word = reduced_word(d, w);
  int l = static_cast<int>(word.size());
  std::vector<IntVec> out;
  AffineWeylElement suffix = AffineWeylElement::identity(d.n);
  for (int k = l; k >= 1; --k) {
    out.push_back(act_level0_q(d, suffix, simple_root_q(d, word[k - 1])));
    suffix = mul(d, suffix, simple_affine(d, word[k - 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AffineWeylElement from_word(const AffineCartanDatum& d,
                            const std::vector<int>& word) {
  AffineWeylElement w = AffineWeylElement::identity(d.n);
  for (int j : word) w = mul(d, w, simple_affine(d, j));
  return w;
}

FiniteWeylElement from_word_finite(const AffineCartanDatum& d,
                                   const std::vector<int>& word) {
  FiniteWeylElement w = FiniteWeylElement::identity(d.n);
  for (int j : word) w = mul(w, simple_finite(d, j));
  return w;
}

std::vector<AffineWeylElement> enumerate_by_length(const AffineCartanDatum& d,
                                                   int maxlen) {
  std::vector<AffineWeylElement> out;
  std::set<AffineWeylElement> seen;
  std::deque<AffineWeylElement> frontier;
  AffineWeylElement e = AffineWeylElement::identity(d.n);
  seen.insert(e);
  frontier.push_back(e);
  out.push_back(e);
  for (int l = 0; l < maxlen; ++l) {
    std::deque<AffineWeylElement> next;
    for (const auto& w : frontier)
      for (int j = 0; j <= d.n; ++j) {
        if (is_descent(d, w, j)) continue;  // length would drop
        AffineWeylElement ws = mul(d, w, simple_affine(d, j));
        if (seen.insert(ws).second) {
          next.push_back(ws);
          out.push_back(ws);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> all_reduced_words(const AffineCartanDatum& d,
                                                const AffineWeylElement& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int j = 0; j <= d.n; ++j) {
    if (!is_descent(d, w, j)) continue;
    AffineWeylElement ws = mul(d, w, simple_affine(d, j));
    for (auto word : all_reduced_words(d, ws)) {
      word.push_back(j);
      out.push_back(word);
    }
  }
  return out;
}

std::pair<FiniteWeylElement, int> minimal_conjugator(const AffineCartanDatum& d,
                                                     const IntVec& root) {
  bool found_root = std::find(d.pos_roots.begin(), d.pos_roots.end(), root) !=
                    d.pos_roots.end();
  if (!found_root) throw std::invalid_argument("minimal_conjugator: not a positive root");
  // BFS in lexicographic word order; first hit is minimal length, lex smallest.
  std::set<FiniteWeylElement> seen;
  std::deque<FiniteWeylElement> frontier;
  FiniteWeylElement e = FiniteWeylElement::identity(d.n);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    FiniteWeylElement w = frontier.front();
    frontier.pop_front();
    IntVec img = w.act(root);
    for (int j = 1; j <= d.n; ++j) {
      IntVec unit(d.n, 0);
      unit[j - 1] = 1;
      if (img == unit) return {w, j};
    }
    for (int j = 1; j <= d.n; ++j) {
      FiniteWeylElement ws = mul(w, simple_finite(d, j));
      if (seen.insert(ws).second) frontier.push_back(ws);
    }
  }
  throw std::runtime_error("minimal_conjugator: no conjugator found");
}

// ------------------------------------------------------------------- phi_weyl

DoubleAffineWeylElement phi_weyl(const AffineCartanDatum& src,
                                 const AffineCartanDatum& tgt,
                                 const DoubleAffineWeylElement& g) {
  int n = src.n;
  // finite part in the alpha^iota basis: conjugate by diag(e_j)
  FiniteWeylElement fin;
  fin.mat.assign(n, IntVec(n, 0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      fin.mat[r][c] =
          to_int(Rat(g.w.fin.mat[r][c]) * src.e[c + 1] / src.e[r + 1]);

  DoubleAffineWeylElement res{{fin, IntVec(n, 0)}, psi_x(g.w.mu), 0};
  DoubleAffineWeylElement lam{{FiniteWeylElement::identity(n), psi_y(g.beta)},
                              IntVec(n, 0), 0};
  DoubleAffineWeylElement taud{AffineWeylElement::identity(n), IntVec(n, 0), -g.k};
  return mul(tgt, mul(tgt, res, lam), taud);
}

}  // namespace daha
