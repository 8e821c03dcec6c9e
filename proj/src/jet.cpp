#include "charkin/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace charkin {

namespace {

void enumerate(int n_vars, int degree, int axis, JetExp cur, int used, std::vector<JetExp>& out) {
  if (axis == n_vars) {
    out.push_back(cur);
    return;
  }
  for (int p = 0; p + used <= degree; ++p) {
    cur[axis] = static_cast<uint8_t>(p);
    enumerate(n_vars, degree, axis + 1, cur, used + p, out);
  }
  cur[axis] = 0;
}

int total_degree(const JetExp& e) {
  int t = 0;
  for (uint8_t x : e) t += x;
  return t;
}

}  // namespace

JetSpace::JetSpace(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
  if (n_vars < 1 || n_vars > kJetMaxVars) throw ConfigError("jet: unsupported variable count");
  if (degree < 0 || degree > 12) throw ConfigError("jet: unsupported degree");
  enumerate(n_vars, degree, 0, JetExp{}, 0, monomials_);
  // Order degree-major so powers of low-degree jets fill in naturally.
  std::stable_sort(monomials_.begin(), monomials_.end(),
                   [](const JetExp& a, const JetExp& b) { return total_degree(a) < total_degree(b); });

  lookup_.assign(static_cast<std::size_t>(std::pow(degree + 1, n_vars)), -1);
  for (int i = 0; i < size(); ++i) lookup_[pack(monomials_[i])] = i;

  product_.resize(static_cast<std::size_t>(size()) * size());
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      JetExp e{};
      int t = 0;
      for (int v = 0; v < n_vars_; ++v) {
        e[v] = static_cast<uint8_t>(monomials_[i][v] + monomials_[j][v]);
        t += e[v];
      }
      product_[static_cast<std::size_t>(i) * size() + j] = (t <= degree_) ? index_of(e) : -1;
    }
  }

  fact_.resize(size());
  for (int i = 0; i < size(); ++i) {
    double f = 1.0;
    for (int v = 0; v < n_vars_; ++v)
      for (int p = 2; p <= monomials_[i][v]; ++p) f *= p;
    fact_[i] = f;
  }
}

int JetSpace::pack(const JetExp& e) const {
  int key = 0;
  for (int v = 0; v < n_vars_; ++v) key = key * (degree_ + 1) + e[v];
  return key;
}

int JetSpace::index_of(const JetExp& e) const {
  if (total_degree(e) > degree_) return -1;
  for (int v = 0; v < n_vars_; ++v)
    if (e[v] > degree_) return -1;
  return lookup_[pack(e)];
}

std::shared_ptr<const JetSpace> JetSpace::get(int n_vars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n_vars, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto sp = std::make_shared<const JetSpace>(n_vars, degree);
  cache.emplace(key, sp);
  return sp;
}

void Jet::set_zero() { std::fill(coef_.begin(), coef_.end(), cplx{}); }

void Jet::add_term(int axis, int power, cplx c) {
  JetExp e{};
  e[axis] = static_cast<uint8_t>(power);
  int i = space_->index_of(e);
  if (i < 0) throw ConfigError("jet: term exceeds degree cap");
  coef_[i] += c;
}

Jet& Jet::operator+=(const Jet& o) {
  for (int i = 0; i < size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& c : coef_) c *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r(a.space_);
  const JetSpace& sp = *a.space_;
  int n = sp.size();
  for (int i = 0; i < n; ++i) {
    if (a.coef_[i] == cplx{}) continue;
    for (int j = 0; j < n; ++j) {
      int k = sp.product(i, j);
      if (k >= 0) r.coef_[k] += a.coef_[i] * b.coef_[j];
    }
  }
  return r;
}

Jet Jet::derivative(int axis) const {
  Jet r(space_);
  const JetSpace& sp = *space_;
  for (int i = 0; i < size(); ++i) {
    const JetExp& e = sp.exponent(i);
    if (e[axis] == 0) continue;
    JetExp d = e;
    d[axis] -= 1;
    int k = sp.index_of(d);
    r.coef_[k] += coef_[i] * static_cast<double>(e[axis]);
  }
  return r;
}

cplx Jet::partial(const JetExp& e) const {
  int i = space_->index_of(e);
  if (i < 0) return {};
  return coef_[i] * space_->factorial(i);
}

namespace {

/// Series Σ a_m Q^m for a jet Q with Q(0)=0 (nilpotent under truncation).
Jet nilpotent_series(const Jet& q, const std::vector<cplx>& a) {
  Jet acc(q.space_ptr());
  acc.add_constant(a[0]);
  Jet qpow(q.space_ptr());
  qpow.add_constant(1.0);
  for (std::size_t m = 1; m < a.size(); ++m) {
    qpow = qpow * q;
    Jet term = qpow;
    term *= a[m];
    acc += term;
  }
  return acc;
}

}  // namespace

Jet jet_exp(const Jet& p) {
  cplx c = p.value_at_zero();
  Jet q = p;
  q.add_constant(-c);
  int d = p.space().degree();
  std::vector<cplx> a(d + 1);
  double f = 1.0;
  for (int m = 0; m <= d; ++m) {
    if (m > 0) f *= m;
    a[m] = 1.0 / f;
  }
  Jet r = nilpotent_series(q, a);
  r *= std::exp(c);
  return r;
}

Jet jet_sin(const Jet& p) {
  cplx c = p.value_at_zero();
  Jet q = p;
  q.add_constant(-c);
  int d = p.space().degree();
  // sin(c+Q) = sin(c)·cos(Q) + cos(c)·sin(Q)
  std::vector<cplx> a(d + 1);
  cplx sc = std::sin(c), cc = std::cos(c);
  double f = 1.0;
  for (int m = 0; m <= d; ++m) {
    if (m > 0) f *= m;
    switch (m % 4) {
      case 0: a[m] = sc / f; break;
      case 1: a[m] = cc / f; break;
      case 2: a[m] = -sc / f; break;
      case 3: a[m] = -cc / f; break;
    }
  }
  return nilpotent_series(q, a);
}

}  // namespace charkin
