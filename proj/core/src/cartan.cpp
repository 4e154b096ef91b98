#include "daha/cartan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace daha {

extern const char* kCartanTableText;  // generated from data/cartan_types.txt

// ---------------------------------------------------------------- WeightVector

WeightVector WeightVector::operator+(const WeightVector& o) const {
  WeightVector r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

WeightVector WeightVector::operator-(const WeightVector& o) const {
  WeightVector r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

WeightVector WeightVector::operator-() const {
  WeightVector r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

WeightVector WeightVector::operator*(const Rat& s) const {
  WeightVector r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

bool WeightVector::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

std::string WeightVector::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& coeff, const std::string& name) {
    if (coeff == 0) return;
    if (coeff > 0 && !first) os << "+";
    if (coeff == -1)
      os << "-";
    else if (coeff != 1)
      os << to_string(coeff) << "*";
    os << name;
    first = false;
  };
  int n = rank();
  for (int j = 1; j <= n; ++j) emit(c[j - 1], "a" + std::to_string(j));
  emit(delta_coord(), "d");
  emit(lambda_coord(), "L0");
  if (first) os << "0";
  return os.str();
}

// ----------------------------------------------------------------- table text

namespace {

struct RawRecord {
  std::string label;
  int n;
  std::vector<IntVec> a;
  IntVec marks, comarks;
};

std::vector<RawRecord> parse_table(const std::string& text) {
  std::vector<RawRecord> out;
  std::istringstream in(text);
  std::string line;
  RawRecord cur;
  bool open = false;
  auto flush = [&] {
    if (open) out.push_back(cur);
    cur = RawRecord{};
    open = false;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "type") {
      flush();
      ls >> cur.label >> key >> cur.n;  // "type <label> rank <n>"
      open = true;
    } else if (key == "row") {
      IntVec row;
      Int x;
      while (ls >> x) row.push_back(x);
      cur.a.push_back(row);
    } else if (key == "marks") {
      Int x;
      while (ls >> x) cur.marks.push_back(x);
    } else if (key == "comarks") {
      Int x;
      while (ls >> x) cur.comarks.push_back(x);
    }
  }
  flush();
  return out;
}

const std::vector<RawRecord>& table() {
  static const std::vector<RawRecord> t = parse_table(kCartanTableText);
  return t;
}

Int lcm_int(Int a, Int b) { return std::lcm(a, b); }

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("datum inconsistency: " + what);
}

IntVec dominant_rep(const std::vector<IntVec>& roots, const AffineCartanDatum& d,
                    const Rat& len2) {
  // the unique dominant root of the given squared length
  for (const auto& r : roots) {
    WeightVector v = d.from_qhat(r);
    if (inner_product(v, v, d) != len2) continue;
    bool dom = true;
    for (int j = 1; j <= d.n && dom; ++j)
      if (pair_coroot(v, j, d) < 0) dom = false;
    if (dom) return r;
  }
  throw std::runtime_error("no dominant root of requested length");
}

AffineCartanDatum build_datum(const RawRecord& rec) {
  AffineCartanDatum d;
  d.label = rec.label;
  d.cache_key = rec.label;
  for (const auto& row : rec.a)
    for (Int v : row) d.cache_key += '|' + std::to_string(v);
  d.n = rec.n;
  d.a = rec.a;
  d.marks = rec.marks;
  d.comarks = rec.comarks;
  int n = d.n;
  require(static_cast<int>(d.a.size()) == n + 1, "matrix size");
  for (auto& row : d.a) require(static_cast<int>(row.size()) == n + 1, "row size");
  require(static_cast<int>(d.marks.size()) == n + 1, "marks size");
  require(static_cast<int>(d.comarks.size()) == n + 1, "comarks size");

  // null-vector property
  for (int j = 0; j <= n; ++j) {
    Int row = 0, col = 0;
    for (int k = 0; k <= n; ++k) {
      row += d.a[j][k] * d.marks[k];
      col += d.comarks[k] * d.a[k][j];
    }
    require(row == 0, "a*marks != 0");
    require(col == 0, "comarks*a != 0");
  }

  d.d.resize(n + 1);
  d.e.resize(n + 1);
  Rat a0inv(1, d.marks[0]);
  for (int j = 0; j <= n; ++j) {
    d.d[j] = Rat(d.marks[j], d.comarks[j]);
    d.e[j] = std::max(a0inv, d.d[j]);
  }

  // gram matrix on (alpha_1..alpha_n, delta, Lambda_0)
  d.gram.assign(n + 2, std::vector<Rat>(n + 2, Rat(0)));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) d.gram[j - 1][k - 1] = Rat(d.a[j][k]) / d.d[j];
  d.gram[n][n + 1] = d.gram[n + 1][n] = Rat(1);  // (delta, Lambda_0)
  for (int j = 0; j < n + 2; ++j)
    for (int k = 0; k < n + 2; ++k)
      require(d.gram[j][k] == d.gram[k][j], "gram not symmetric");

  // theta = delta - a_0 alpha_0 = sum_{j>=1} a_j alpha_j
  d.theta = WeightVector(n);
  for (int j = 1; j <= n; ++j) d.theta.c[j - 1] = Rat(d.marks[j]);

  // finite positive roots by reflection closure of the simple roots
  std::set<IntVec> seen;
  std::vector<IntVec> frontier;
  for (int j = 1; j <= n; ++j) {
    IntVec unit(n, 0);
    unit[j - 1] = 1;
    seen.insert(unit);
    frontier.push_back(unit);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& r : frontier) {
      for (int j = 1; j <= n; ++j) {
        Int pairing = 0;
        for (int k = 1; k <= n; ++k) pairing += d.a[j][k] * r[k - 1];
        IntVec rr = r;
        rr[j - 1] -= pairing;
        if (seen.insert(rr).second) next.push_back(rr);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](Int x) { return x >= 0; }))
      d.pos_roots.push_back(r);
  std::sort(d.pos_roots.begin(), d.pos_roots.end());

  // p = e_s, shortest-root e-value
  Rat min_len2 = Rat(0);
  for (const auto& r : d.pos_roots) {
    WeightVector v = d.from_qhat(r);
    Rat len2 = inner_product(v, v, d);
    if (min_len2 == 0 || len2 < min_len2) min_len2 = len2;
  }
  Rat e_s(0);
  for (int j = 1; j <= n; ++j) {
    WeightVector v = d.alpha(j);
    if (inner_product(v, v, d) == min_len2) e_s = d.e[j];
  }
  require(e_s != 0 && is_integer(e_s), "e_s");
  d.p = to_int(e_s);
  require(d.p >= 1 && d.p <= 3, "p not in {1,2,3}");

  // theta_s: the dominant short root
  d.theta_s = d.from_qhat(dominant_rep(d.pos_roots, d, min_len2));
  require(d.theta == d.from_qhat(dominant_rep(d.pos_roots, d, Rat(2))),
          "theta not the dominant long root");

  // m: LCD of the denominators of {(alpha_j, A_k)} and {(alpha_j, alpha_k)}
  Int m = 1;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      m = lcm_int(m, (d.gram[j - 1][k - 1]).denominator());
      m = lcm_int(m, (d.gram[j - 1][k - 1] * d.e[k]).denominator());
    }
  d.m = m;

  // strictly antidominant generator of M: search an iteratively widened
  // coordinate box and keep the candidate whose translation has minimal
  // length (the closed-form sum over positive roots), so Y-element
  // decompositions stay short.
  IntVec best;
  Rat best_len(0);
  auto translation_length = [&](const WeightVector& v) {
    Rat acc(0);
    for (const auto& root : d.pos_roots) {
      WeightVector av = d.from_qhat(root);
      Rat len2(0);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (root[j] != 0 && root[k] != 0)
            len2 += Rat(root[j] * root[k]) * d.gram[j][k];
      Rat pr(0);
      for (int j = 0; j < n; ++j)
        if (root[j] != 0)
          for (int k = 0; k < n; ++k) pr += v.c[k] * Rat(root[j]) * d.gram[k][j];
      Rat val = pr * 2 / len2 / d.e_of_root(root);
      acc += (val < Rat(0)) ? -val : val;
    }
    return acc;
  };
  for (Int radius = 1; radius <= 12 && best.empty(); ++radius) {
    std::function<void(IntVec&, int)> search = [&](IntVec& cur, int pos) {
      if (pos == n) {
        WeightVector v = d.from_m(cur);
        for (int j = 1; j <= n; ++j)
          if (pair_coroot(v, j, d) > -1) return;
        Rat len = translation_length(v);
        if (best.empty() || len < best_len) {
          best = cur;
          best_len = len;
        }
        return;
      }
      for (Int x = -radius; x <= radius; ++x) {
        cur[pos] = x;
        search(cur, pos + 1);
      }
    };
    IntVec cur(n, 0);
    search(cur, 0);
  }
  require(!best.empty(), "no strictly antidominant generator found");
  d.antidominant_gen = best;
  return d;
}

}  // namespace

// --------------------------------------------------------------- datum access

WeightVector AffineCartanDatum::alpha(int j) const {
  WeightVector v(n);
  if (j == 0) {
    // alpha_0 = (delta - theta)/a_0
    v = (delta() - theta) * Rat(1, marks[0]);
  } else {
    v.c[j - 1] = Rat(1);
  }
  return v;
}

WeightVector AffineCartanDatum::delta() const {
  WeightVector v(n);
  v.delta_coord() = Rat(1);
  return v;
}

WeightVector AffineCartanDatum::lambda0() const {
  WeightVector v(n);
  v.lambda_coord() = Rat(1);
  return v;
}

WeightVector AffineCartanDatum::from_qhat(const IntVec& beta) const {
  WeightVector v(n);
  for (int j = 0; j < n; ++j) v.c[j] = Rat(beta[j]);
  return v;
}

WeightVector AffineCartanDatum::from_q(const IntVec& beta_delta) const {
  WeightVector v(n);
  for (int j = 0; j < n; ++j) v.c[j] = Rat(beta_delta[j]);
  v.delta_coord() = Rat(beta_delta[n]);
  return v;
}

WeightVector AffineCartanDatum::from_m(const IntVec& mu) const {
  WeightVector v(n);
  for (int j = 0; j < n; ++j) v.c[j] = Rat(mu[j]) * e[j + 1];
  return v;
}

Rat AffineCartanDatum::e_of_root(const IntVec& beta) const {
  WeightVector v = from_qhat(beta);
  Rat len2;
  {
    Rat acc(0);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) acc += v.c[j] * v.c[k] * gram[j][k];
    len2 = acc;
  }
  for (int j = 1; j <= n; ++j) {
    WeightVector s = alpha(j);
    Rat sl(0);
    for (int a1 = 0; a1 < n; ++a1)
      for (int b1 = 0; b1 < n; ++b1) sl += s.c[a1] * s.c[b1] * gram[a1][b1];
    if (sl == len2) return e[j];
  }
  throw std::runtime_error("e_of_root: not a root length");
}

bool AffineCartanDatum::node_short(int j) const {
  Rat dmax(0);
  for (int k = 0; k <= n; ++k) dmax = std::max(dmax, d[k]);
  return d[j] == dmax;
}

IntVec AffineCartanDatum::theta_coords() const {
  IntVec r(n);
  for (int j = 0; j < n; ++j) r[j] = to_int(theta.c[j]);
  return r;
}

IntVec AffineCartanDatum::theta_s_coords() const {
  IntVec r(n);
  for (int j = 0; j < n; ++j) r[j] = to_int(theta_s.c[j]);
  return r;
}

IntVec AffineCartanDatum::theta_m_coords() const {
  if (e_of_root(theta_coords()) != 1)
    throw std::runtime_error("theta not in M (e_theta != 1) for type " + label);
  IntVec r(n);
  for (int j = 0; j < n; ++j) r[j] = to_int(theta.c[j] / e[j + 1]);
  return r;
}

// ------------------------------------------------------------------ operations

AffineCartanDatum load_cartan_datum(const std::string& label) {
  for (const auto& rec : table())
    if (rec.label == label) return build_datum(rec);
  // A_{2n}^{(2)} family, in either common spelling
  if (label.rfind("A", 0) == 0 &&
      (label.find("^(2)") != std::string::npos ||
       label.find("(2)") != std::string::npos)) {
    throw ExcludedTypeError("type " + label +
                            " (A_{2n}^(2) family) is excluded by paper restriction");
  }
  throw UnknownTypeError("unknown affine type label: " + label);
}

std::vector<std::string> supported_labels() {
  std::vector<std::string> out;
  for (const auto& rec : table()) out.push_back(rec.label);
  return out;
}

Rat inner_product(const WeightVector& v, const WeightVector& w,
                  const AffineCartanDatum& datum) {
  Rat acc(0);
  int dim = datum.n + 2;
  for (int j = 0; j < dim; ++j) {
    if (v.c[j] == 0) continue;
    for (int k = 0; k < dim; ++k)
      if (w.c[k] != 0) acc += v.c[j] * w.c[k] * datum.gram[j][k];
  }
  return acc;
}

Rat pair_coroot(const WeightVector& v, int j, const AffineCartanDatum& datum) {
  return inner_product(v, datum.alpha(j), datum) * datum.d[j];
}

std::vector<WeightVector> positive_roots(const AffineCartanDatum& datum) {
  std::vector<WeightVector> out;
  for (const auto& r : datum.pos_roots) out.push_back(datum.from_qhat(r));
  return out;
}

AffineCartanDatum iota_datum(const AffineCartanDatum& d) {
  int n = d.n;
  // e-values of the finite nodes as integers (untwisted: e_j = d_j)
  std::vector<Int> ev(n + 1);
  for (int j = 1; j <= n; ++j) ev[j] = to_int(d.e[j]);

  // finite part: a^i_{jk} = (e_k/e_j) a_{jk}
  std::vector<IntVec> ai(n + 1, IntVec(n + 1, 0));
  ai[0][0] = 2;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      ai[j][k] = to_int(Rat(d.a[j][k]) * Rat(ev[k], ev[j]));

  // theta^i = sqrt(p) theta_s: coords in the alpha^i basis are p*c_j/e_j
  IntVec ts = d.theta_s_coords();
  IntVec ti(n);
  for (int j = 0; j < n; ++j) ti[j] = to_int(Rat(ts[j]) * Rat(d.p, ev[j + 1]));

  // d^i_j = p/e_j; gram^i_{jk} = e_j e_k gram_{jk} / p
  std::vector<Rat> di(n + 1);
  di[0] = Rat(1);
  for (int j = 1; j <= n; ++j) di[j] = Rat(d.p, ev[j]);
  auto gi = [&](int j, int k) {  // 1-based finite indices
    return d.gram[j - 1][k - 1] * Rat(ev[j] * ev[k], d.p);
  };
  for (int k = 1; k <= n; ++k) {
    Rat v0k(0), vk0(0);
    for (int j = 1; j <= n; ++j) {
      v0k += Rat(ti[j - 1]) * gi(j, k);
    }
    ai[0][k] = to_int(-v0k);            // d^i_0 = 1
    ai[k][0] = to_int(-v0k * di[k]);    // symmetric form: (alpha^i_k, theta^i) = v0k
  }

  IntVec marks(n + 1), comarks(n + 1);
  marks[0] = 1;
  comarks[0] = 1;
  for (int j = 1; j <= n; ++j) {
    marks[j] = ti[j - 1];
    comarks[j] = to_int(Rat(marks[j]) / di[j]);
  }

  std::string label = d.label;
  if (d.p != 1 && !label.empty() && (label[0] == 'B' || label[0] == 'C'))
    label[0] = (label[0] == 'B') ? 'C' : 'B';

  RawRecord rec{label, n, ai, marks, comarks};
  return build_datum(rec);
}

IntVec theta_s_vee_m_coords(const AffineCartanDatum& datum) {
  IntVec ts = datum.theta_s_coords();
  IntVec out(datum.n);
  for (int j = 0; j < datum.n; ++j)
    out[j] = to_int(Rat(ts[j]) * Rat(datum.p) / datum.e[j + 1]);
  return out;
}

}  // namespace daha
