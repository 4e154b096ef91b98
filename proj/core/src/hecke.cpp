#include "daha/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace daha {

namespace {

bool q_negative(const IntVec& beta_delta) {
  Int k = beta_delta.back();
  if (k != 0) return k < 0;
  for (size_t j = 0; j + 1 < beta_delta.size(); ++j)
    if (beta_delta[j] != 0) return beta_delta[j] < 0;
  return false;
}

const IntVec& simple_root_q(const AffineCartanDatum& d, int j) {
  thread_local std::map<std::pair<std::string, int>, IntVec> cache;
  auto it = cache.find({d.cache_key, j});
  if (it != cache.end()) return it->second;
  IntVec v(d.n + 1, 0);
  if (j == 0) {
    IntVec th = d.theta_coords();
    for (int r = 0; r < d.n; ++r) v[r] = -th[r];
    v[d.n] = 1;
  } else {
    v[j - 1] = 1;
  }
  return cache.emplace(std::pair{d.cache_key, j}, std::move(v)).first->second;
}

bool is_descent(const AffineCartanDatum& d, const AffineWeylElement& w, int j) {
  return q_negative(act_level0_q(d, w, simple_root_q(d, j)));
}

/// (beta, alpha_j^vee) for beta in Q (delta part pairs to zero).
Int pair_q_coroot(const AffineCartanDatum& d, const IntVec& beta_delta, int j) {
  WeightVector v = d.from_q(beta_delta);
  return to_int(pair_coroot(v, j, d));
}

/// Folds a Q-vector into a PBW key contribution: X_{beta + k delta} becomes
/// q^{-k} X_beta.
std::pair<IntVec, Laurent> fold_x(const IntVec& beta_delta) {
  IntVec beta(beta_delta.begin(), beta_delta.end() - 1);
  return {beta, Laurent::q_pow(Rat(-beta_delta.back()))};
}

IntVec unfold_x(const IntVec& beta) {
  IntVec q = beta;
  q.push_back(0);
  return q;
}

/// One letter of Hecke multiplication at the Weyl level: the canonical
/// reduced word of s_j u (or u s_j) together with the descent flag that
/// decides whether the quadratic relation contributes a second term.
/// Memoized per type: the same short words recur for every term of every
/// product.  The cache is thread-local, so results never depend on shared
/// state.
struct StepEntry {
  std::vector<int> word;
  bool down = false;
};

using StepKey = std::pair<int, std::vector<int>>;

const StepEntry& left_step(const AffineCartanDatum& d, int j,
                           const std::vector<int>& word) {
  thread_local std::map<std::string, std::map<StepKey, StepEntry>> cache;
  auto& percfg = cache[d.cache_key];
  auto it = percfg.find({j, word});
  if (it == percfg.end()) {
    AffineWeylElement v = from_word(d, word);
    StepEntry e;
    e.down = q_negative(act_level0_q(d, inverse(d, v), simple_root_q(d, j)));
    e.word = reduced_word(d, mul(d, simple_affine(d, j), v));
    it = percfg.emplace(StepKey{j, word}, std::move(e)).first;
  }
  return it->second;
}

const StepEntry& right_step(const AffineCartanDatum& d, int j,
                            const std::vector<int>& word) {
  thread_local std::map<std::string, std::map<StepKey, StepEntry>> cache;
  auto& percfg = cache[d.cache_key];
  auto it = percfg.find({j, word});
  if (it == percfg.end()) {
    AffineWeylElement u = from_word(d, word);
    StepEntry e;
    e.down = is_descent(d, u, j);
    e.word = reduced_word(d, mul(d, u, simple_affine(d, j)));
    it = percfg.emplace(StepKey{j, word}, std::move(e)).first;
  }
  return it->second;
}

/// T_{u} X_beta in normal form, u given by a reduced word.  Letters are
/// consumed right to left over the whole intermediate element, so shared
/// X-monomials are pushed through only once.
DahaElement t_times_x_uncached(const AffineCartanDatum& d,
                               const std::vector<int>& word,
                               const IntVec& beta_delta);

/// Memoized front end: products keep pushing the same small set of lattice
/// monomials through the same T-words (Y-element words especially), so the
/// expansion is worth keeping.  Thread-local, hence state-independent results.
const DahaElement& t_times_x(const AffineCartanDatum& d,
                             const std::vector<int>& word,
                             const IntVec& beta_delta) {
  using Key = std::pair<std::vector<int>, IntVec>;
  thread_local std::map<std::string, std::map<Key, DahaElement>> cache;
  auto& percfg = cache[d.cache_key];
  Key key{word, beta_delta};
  auto it = percfg.find(key);
  if (it == percfg.end())
    it = percfg.emplace(std::move(key), t_times_x_uncached(d, word, beta_delta))
             .first;
  return it->second;
}

DahaElement t_times_x_uncached(const AffineCartanDatum& d,
                               const std::vector<int>& word,
                               const IntVec& beta_delta) {
  DahaElement e = x_monomial(d, beta_delta);
  for (auto lit = word.rbegin(); lit != word.rend(); ++lit) {
    int j = *lit;
    Laurent unit = t_unit_of_node(d, j);
    DahaElement next;
    for (const auto& [key, c] : e.terms) {
      DahaElement pushed = push_x_through_t(d, j, unfold_x(key.beta));
      // T-part data, needed only when a T_j survives the push
      const StepEntry* st = nullptr;
      for (const auto& [k2, c2] : pushed.terms) {
        Laurent cc = c * c2;
        if (k2.word.empty()) {
          next.add_term(DahaTermKey{k2.beta, key.word}, cc);
          continue;
        }
        if (!st) st = &left_step(d, j, key.word);
        next.add_term(DahaTermKey{k2.beta, st->word}, cc);
        if (st->down) next.add_term(DahaTermKey{k2.beta, key.word}, cc * unit);
      }
    }
    e = std::move(next);
  }
  return e;
}

}  // namespace

// -------------------------------------------------------------------- element

void DahaElement::add_term(const DahaTermKey& k, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string DahaElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << "  +  ";
    os << "(" << c.str() << ")";
    bool has_x = std::any_of(k.beta.begin(), k.beta.end(),
                             [](Int x) { return x != 0; });
    if (has_x) {
      os << "*X[";
      for (size_t i = 0; i < k.beta.size(); ++i) {
        if (i) os << ",";
        os << k.beta[i];
      }
      os << "]";
    }
    if (!k.word.empty()) {
      os << "*T[";
      for (size_t i = 0; i < k.word.size(); ++i) {
        if (i) os << " ";
        os << k.word[i];
      }
      os << "]";
    }
    first = false;
  }
  return os.str();
}

DahaElement daha_zero() { return {}; }

DahaElement daha_one(const AffineCartanDatum& d) {
  DahaElement e;
  e.add_term(DahaTermKey{IntVec(d.n, 0), {}}, Laurent::one());
  return e;
}

DahaElement daha_scalar(const AffineCartanDatum& d, const Laurent& c) {
  DahaElement e;
  e.add_term(DahaTermKey{IntVec(d.n, 0), {}}, c);
  return e;
}

DahaElement add(const DahaElement& a, const DahaElement& b) {
  DahaElement r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k, c);
  return r;
}

DahaElement sub(const DahaElement& a, const DahaElement& b) {
  DahaElement r = a;
  for (const auto& [k, c] : b.terms) r.add_term(k, -c);
  return r;
}

DahaElement scale(const DahaElement& a, const Laurent& c) {
  if (c.is_zero()) return {};
  DahaElement r;
  for (const auto& [k, x] : a.terms) r.add_term(k, x * c);
  return r;
}

TClass t_class(const AffineCartanDatum& d, int j) {
  return d.node_short(j) ? TClass::Short : TClass::Long;
}

Laurent t_unit_of_node(const AffineCartanDatum& d, int j) {
  static const Laurent kShort = Laurent::t_unit(TClass::Short);
  static const Laurent kLong = Laurent::t_unit(TClass::Long);
  return d.node_short(j) ? kShort : kLong;
}

// ------------------------------------------------------------------ generators

DahaElement t_generator(const AffineCartanDatum& d, int j) {
  DahaElement e;
  e.add_term(DahaTermKey{IntVec(d.n, 0), {j}}, Laurent::one());
  return e;
}

DahaElement t_inverse(const AffineCartanDatum& d, int j) {
  return sub(t_generator(d, j), daha_scalar(d, t_unit_of_node(d, j)));
}

DahaElement x_monomial(const AffineCartanDatum& d, const IntVec& beta_delta) {
  if (static_cast<int>(beta_delta.size()) != d.n + 1)
    throw std::invalid_argument("x_monomial: expected n+1 coordinates");
  auto [beta, c] = fold_x(beta_delta);
  DahaElement e;
  e.add_term(DahaTermKey{beta, {}}, c);
  return e;
}

DahaElement x_monomial_finite(const AffineCartanDatum& d, const IntVec& beta) {
  IntVec q = beta;
  q.push_back(0);
  return x_monomial(d, q);
}

DahaElement push_x_through_t(const AffineCartanDatum& d, int j,
                             const IntVec& beta_delta) {
  // memoized: the letter sweeps in t_times_x hit the same (j, beta) pairs
  // constantly; the cache is thread-local, so results are state-independent
  using Key = std::pair<int, IntVec>;
  thread_local std::map<std::string, std::map<Key, DahaElement>> cache;
  auto& percfg = cache[d.cache_key];
  Key ck{j, beta_delta};
  if (auto it = percfg.find(ck); it != percfg.end()) return it->second;
  Int k = pair_q_coroot(d, beta_delta, j);
  AffineWeylElement sj = simple_affine(d, j);
  IntVec sbeta = act_level0_q(d, sj, beta_delta);
  IntVec alpha_j = simple_root_q(d, j);
  Laurent unit = t_unit_of_node(d, j);

  DahaElement res;
  {
    auto [b, c] = fold_x(sbeta);
    res.add_term(DahaTermKey{b, {j}}, c);
  }
  if (k > 0) {
    // + (t^1/2 - t^-1/2) * X_beta * sum_{i=0}^{k-1} X_{-i alpha_j}
    for (Int i = 0; i < k; ++i) {
      IntVec v = beta_delta;
      for (int r = 0; r <= d.n; ++r) v[r] -= i * alpha_j[r];
      auto [b, c] = fold_x(v);
      res.add_term(DahaTermKey{b, {}}, c * unit);
    }
  } else if (k < 0) {
    for (Int i = 0; i < -k; ++i) {
      IntVec v = sbeta;
      for (int r = 0; r <= d.n; ++r) v[r] -= i * alpha_j[r];
      auto [b, c] = fold_x(v);
      res.add_term(DahaTermKey{b, {}}, -(c * unit));
    }
  }
  return percfg.emplace(std::move(ck), std::move(res)).first->second;
}

// --------------------------------------------------------------- multiplication

DahaElement mul_t(const AffineCartanDatum& d, const DahaElement& a, int j,
                  bool inv) {
  DahaElement res;
  Laurent unit = t_unit_of_node(d, j);
  for (const auto& [key, c] : a.terms) {
    const StepEntry& st = right_step(d, j, key.word);
    res.add_term(DahaTermKey{key.beta, st.word}, c);
    if (st.down && !inv) res.add_term(DahaTermKey{key.beta, key.word}, c * unit);
    if (!st.down && inv)
      res.add_term(DahaTermKey{key.beta, key.word}, -(c * unit));
  }
  return res;
}

DahaElement mul_x(const AffineCartanDatum& d, const DahaElement& a,
                  const IntVec& beta_delta) {
  DahaElement res;
  for (const auto& [key, c] : a.terms) {
    const DahaElement& part = t_times_x(d, key.word, beta_delta);
    // prepend X_{key.beta}
    for (const auto& [k2, c2] : part.terms) {
      IntVec b = k2.beta;
      for (int r = 0; r < d.n; ++r) b[r] += key.beta[r];
      res.add_term(DahaTermKey{b, k2.word}, c * c2);
    }
  }
  return res;
}

DahaElement multiply(const AffineCartanDatum& d, const DahaElement& a,
                     const DahaElement& b) {
  DahaElement res;
  for (const auto& [key, c] : b.terms) {
    DahaElement part = mul_x(d, a, unfold_x(key.beta));
    for (int j : key.word) part = mul_t(d, part, j, false);
    for (const auto& [k2, c2] : part.terms) res.add_term(k2, c2 * c);
  }
  return res;
}

// -------------------------------------------------------------------- T-words

DahaElement t_word(const AffineCartanDatum& d, const AffineWeylElement& w) {
  DahaElement e;
  e.add_term(DahaTermKey{IntVec(d.n, 0), reduced_word(d, w)}, Laurent::one());
  return e;
}

DahaElement t_word_inverse(const AffineCartanDatum& d,
                           const AffineWeylElement& w) {
  std::vector<int> word = reduced_word(d, w);
  DahaElement e = daha_one(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    e = mul_t(d, e, *it, true);
  return e;
}

DahaElement t_word_finite(const AffineCartanDatum& d, const FiniteWeylElement& w) {
  return t_word(d, AffineWeylElement{w, IntVec(d.n, 0)});
}

DahaElement t_word_finite_inverse(const AffineCartanDatum& d,
                                  const FiniteWeylElement& w) {
  return t_word_inverse(d, AffineWeylElement{w, IntVec(d.n, 0)});
}

// ------------------------------------------------------------------ Y elements

namespace {

bool is_antidominant(const AffineCartanDatum& d, const IntVec& mu_m) {
  WeightVector v = d.from_m(mu_m);
  for (int j = 1; j <= d.n; ++j)
    if (pair_coroot(v, j, d) > 0) return false;
  return true;
}

}  // namespace

DahaElement y_element(const AffineCartanDatum& d, const IntVec& mu_m) {
  // memoized per type: products and the sampling suites reuse a small set
  // of lattice points, and each Y expansion costs many Hecke steps
  thread_local std::map<std::string, std::map<IntVec, DahaElement>> cache;
  auto& percfg = cache[d.cache_key];
  if (auto it = percfg.find(mu_m); it != percfg.end()) return it->second;
  // mu = nu1 - nu2 with nu1, nu2 antidominant; nu2 = N * a_star
  const IntVec& astar = d.antidominant_gen;
  Int N = 0;
  IntVec nu1 = mu_m;
  while (!is_antidominant(d, nu1)) {
    ++N;
    for (int j = 0; j < d.n; ++j) nu1[j] = mu_m[j] + N * astar[j];
    if (N > 1000) throw std::runtime_error("y_element: decomposition failure");
  }
  IntVec nu2(d.n, 0);
  for (int j = 0; j < d.n; ++j) nu2[j] = N * astar[j];
  DahaElement e = t_word(d, translation(d, nu1));
  if (N > 0) {
    std::vector<int> w2 = reduced_word(d, translation(d, nu2));
    for (auto it = w2.rbegin(); it != w2.rend(); ++it) e = mul_t(d, e, *it, true);
  }
  percfg.emplace(mu_m, e);
  return e;
}

// -------------------------------------------------------------- Bernstein basis

std::map<BernsteinKey, Laurent> to_bernstein(const AffineCartanDatum& d,
                                             const DahaElement& h) {
  for (const auto& [k, c] : h.terms)
    if (std::any_of(k.beta.begin(), k.beta.end(), [](Int x) { return x != 0; }))
      throw std::invalid_argument("to_bernstein: element has a nonzero X part");

  std::map<BernsteinKey, Laurent> out;
  if (h.is_zero()) return out;

  // The T-expansion of Y_nu T_x is triangular in l(x) only when nu is
  // strictly antidominant: then Y_nu = T_{t_nu} exactly, lengths subtract
  // (l(t_nu x') = l(t_nu) - l(x') for every x' <= x), and every Hecke step
  // is a descent, so the support is {T_{t_nu x'} : x' <= x} with a monomial
  // coefficient on x' = x.  Shift the whole element into that regime by a
  // multiple of the strictly antidominant generator and shift the keys back
  // at the end.
  Int N = 1;
  for (const auto& [k, c] : h.terms) {
    AffineWeylElement u = from_word(d, k.word);
    WeightVector v = d.from_m(u.mu);
    for (const auto& r : d.pos_roots) {
      WeightVector rv = d.from_qhat(r);
      Rat pairing = inner_product(v, rv, d) * 2 / inner_product(rv, rv, d);
      if (pairing >= Rat(N)) N = to_int(pairing) + 1;
    }
  }
  IntVec lambda(d.n);
  for (int j = 0; j < d.n; ++j) lambda[j] = N * d.antidominant_gen[j];
  DahaElement g = multiply(d, y_element(d, lambda), h);

  int guard = 0;
  while (!g.is_zero()) {
    if (++guard > 100000) throw std::runtime_error("to_bernstein: no progress");
    // term with finite part of maximal length
    const DahaTermKey* top = nullptr;
    AffineWeylElement top_u;
    std::vector<int> top_fin;
    for (const auto& [k, c] : g.terms) {
      AffineWeylElement u = from_word(d, k.word);
      std::vector<int> fin = reduced_word_finite(d, u.fin);
      if (!top || fin.size() > top_fin.size()) {
        top = &k;
        top_u = u;
        top_fin = std::move(fin);
      }
    }
    // group elements decompose as fin . lambda_mu, but the basis element is
    // Y_nu T_x = T_{t_nu x} + lower, i.e. t_nu x = x . lambda_{x^{-1} nu}:
    // recover nu = x(mu) through the level-zero action on Q-coordinates
    IntVec nu(d.n);
    {
      IntVec q(d.n + 1, 0);
      for (int j = 0; j < d.n; ++j) q[j] = to_int(Rat(top_u.mu[j]) * d.e[j + 1]);
      IntVec nuq = act_level0_q(
          d, AffineWeylElement{top_u.fin, IntVec(d.n, 0)}, q);
      for (int j = 0; j < d.n; ++j) nu[j] = to_int(Rat(nuq[j]) / d.e[j + 1]);
    }
    DahaElement basis = y_element(d, nu);
    for (int j : top_fin) basis = mul_t(d, basis, j, false);
    auto it = basis.terms.find(*top);
    if (it == basis.terms.end() || !it->second.is_monomial())
      throw std::runtime_error("to_bernstein: leading term not triangular");
    Laurent factor = g.terms.at(*top) * it->second.monomial_inverse();
    IntVec mu = nu;
    for (int j = 0; j < d.n; ++j) mu[j] -= lambda[j];
    BernsteinKey bk{mu, top_fin};
    g = sub(g, scale(basis, factor));
    auto oit = out.find(bk);
    if (oit == out.end())
      out.emplace(bk, factor);
    else {
      oit->second = oit->second + factor;
      if (oit->second.is_zero()) out.erase(oit);
    }
  }
  return out;
}

DahaElement from_bernstein(const AffineCartanDatum& d,
                           const std::map<BernsteinKey, Laurent>& b) {
  DahaElement res;
  for (const auto& [k, c] : b) {
    DahaElement e = y_element(d, k.first);
    for (int j : k.second) e = mul_t(d, e, j, false);
    res = add(res, scale(e, c));
  }
  return res;
}

// ------------------------------------------------------------- generator words

DahaElement evaluate(const AffineCartanDatum& d, const GeneratorWord& word) {
  DahaElement e = daha_one(d);
  for (const auto& tok : word) {
    if (const auto* t = std::get_if<TGen>(&tok)) {
      if (t->j < 0 || t->j > d.n)
        throw std::invalid_argument("evaluate: T index out of range");
      e = mul_t(d, e, t->j, t->inv);
    } else if (const auto* x = std::get_if<XMon>(&tok)) {
      e = mul_x(d, e, x->beta_delta);
    } else if (const auto* y = std::get_if<YMon>(&tok)) {
      e = multiply(d, e, y_element(d, y->mu_m));
    } else {
      e = scale(e, std::get<ScalarTok>(tok).c);
    }
  }
  return e;
}

GeneratorWord random_word(const AffineCartanDatum& d, std::mt19937_64& rng,
                          int len) {
  GeneratorWord w;
  // At most one lattice letter per word, and lattice letters are single
  // generators (+- alpha_j, delta, +- A_j): denser lattice points make the
  // element supports -- and hence every subsequent exact product -- blow up
  // combinatorially without exercising any additional relation, and a few
  // pathological draws would dominate the whole sampling budget.
  std::uniform_int_distribution<int> node(0, d.n);
  std::uniform_int_distribution<int> fin_node(1, d.n);
  std::uniform_int_distribution<int> sign(0, 1);
  int lat_pos = std::uniform_int_distribution<int>(0, 2 * len - 1)(rng);
  for (int i = 0; i < len; ++i) {
    if (i == lat_pos) {
      if (sign(rng)) {
        IntVec b(d.n + 1, 0);
        b[node(rng)] = sign(rng) ? 1 : -1;  // index n is the delta slot
        w.push_back(XMon{b});
      } else {
        IntVec mu(d.n, 0);
        mu[fin_node(rng) - 1] = sign(rng) ? 1 : -1;
        w.push_back(YMon{mu});
      }
    } else {
      w.push_back(TGen{node(rng), sign(rng) == 1});
    }
  }
  return w;
}

}  // namespace daha
