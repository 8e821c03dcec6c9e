#include "charkin/ladder.hpp"

#include <algorithm>
#include <cmath>

namespace charkin {

namespace {

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

void LadderPoly::merge(const LadderTerm& t) {
  if (t.c == cplx{}) return;
  for (auto& u : terms_) {
    if (u.dag == t.dag && u.ann == t.ann) {
      u.c += t.c;
      return;
    }
  }
  terms_.push_back(t);
}

void LadderPoly::add_term(const LadderTerm& t) { merge(t); }

void LadderPoly::add_monomial(uint32_t mode, int dag, int ann, cplx c) {
  LadderTerm t;
  t.dag[mode] = static_cast<uint8_t>(dag);
  t.ann[mode] = static_cast<uint8_t>(ann);
  t.c = c;
  merge(t);
}

LadderPoly& LadderPoly::operator+=(const LadderPoly& o) {
  for (const auto& t : o.terms_) merge(t);
  return *this;
}

LadderPoly& LadderPoly::operator*=(cplx s) {
  for (auto& t : terms_) t.c *= s;
  return *this;
}

LadderPoly operator*(const LadderPoly& a, const LadderPoly& b) {
  LadderPoly r(a.modes_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      // Per mode: a^{k1} a†^{j2} = Σ_m binom(k1,m) binom(j2,m) m! a†^{j2−m} a^{k1−m};
      // modes commute, so expansions combine as an outer product.
      std::vector<LadderTerm> partial{LadderTerm{{}, {}, ta.c * tb.c}};
      for (uint32_t mode = 0; mode < a.modes_; ++mode) {
        int j1 = ta.dag[mode], k1 = ta.ann[mode];
        int j2 = tb.dag[mode], k2 = tb.ann[mode];
        std::vector<LadderTerm> next;
        for (const auto& pt : partial) {
          for (int m = 0; m <= std::min(k1, j2); ++m) {
            LadderTerm t = pt;
            t.dag[mode] = static_cast<uint8_t>(j1 + j2 - m);
            t.ann[mode] = static_cast<uint8_t>(k1 + k2 - m);
            t.c *= binom(k1, m) * binom(j2, m) * factorial(m);
            next.push_back(t);
          }
        }
        partial = std::move(next);
      }
      for (const auto& t : partial) r.merge(t);
    }
  }
  return r;
}

LadderPoly LadderPoly::adjoint() const {
  LadderPoly r(modes_);
  for (const auto& t : terms_) {
    LadderTerm u;
    u.dag = t.ann;
    u.ann = t.dag;
    u.c = std::conj(t.c);
    r.merge(u);
  }
  return r;
}

int LadderPoly::degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (uint32_t m = 0; m < modes_; ++m) s += t.dag[m] + t.ann[m];
    d = std::max(d, s);
  }
  return d;
}

double LadderPoly::hermiticity_defect() const {
  double defect = 0.0;
  for (const auto& t : terms_) {
    cplx mirror{};
    for (const auto& u : terms_) {
      if (u.dag == t.ann && u.ann == t.dag) {
        mirror = u.c;
        break;
      }
    }
    defect = std::max(defect, std::abs(t.c - std::conj(mirror)));
  }
  return defect;
}

std::vector<LadderTerm> LadderPoly::s_ordered_coefficients(double t) const {
  // {a†^j a^k}_{s=1} = Σ_m binom(j,m) binom(k,m) m! ((t−1)/2)^m {a†^{j−m} a^{k−m}}_t,
  // applied independently per mode.
  double g = (t - 1.0) / 2.0;
  std::vector<LadderTerm> out;
  auto merge_out = [&out](const LadderTerm& term) {
    if (term.c == cplx{}) return;
    for (auto& u : out) {
      if (u.dag == term.dag && u.ann == term.ann) {
        u.c += term.c;
        return;
      }
    }
    out.push_back(term);
  };
  for (const auto& term : terms_) {
    std::vector<LadderTerm> partial{LadderTerm{{}, {}, term.c}};
    for (uint32_t mode = 0; mode < modes_; ++mode) {
      int j = term.dag[mode], k = term.ann[mode];
      std::vector<LadderTerm> next;
      for (const auto& pt : partial) {
        for (int m = 0; m <= std::min(j, k); ++m) {
          LadderTerm u = pt;
          u.dag[mode] = static_cast<uint8_t>(j - m);
          u.ann[mode] = static_cast<uint8_t>(k - m);
          u.c *= binom(j, m) * binom(k, m) * factorial(m) * std::pow(g, m);
          next.push_back(u);
        }
      }
      partial = std::move(next);
    }
    for (const auto& u : partial) merge_out(u);
  }
  return out;
}

LadderPoly ladder_a(uint32_t modes, uint32_t mode) {
  LadderPoly r(modes);
  r.add_monomial(mode, 0, 1, 1.0);
  return r;
}

LadderPoly ladder_adag(uint32_t modes, uint32_t mode) {
  LadderPoly r(modes);
  r.add_monomial(mode, 1, 0, 1.0);
  return r;
}

LadderPoly ladder_number(uint32_t modes, uint32_t mode) {
  LadderPoly r(modes);
  r.add_monomial(mode, 1, 1, 1.0);
  return r;
}

LadderPoly ladder_identity(uint32_t modes) {
  LadderPoly r(modes);
  r.add_monomial(0, 0, 0, 1.0);
  return r;
}

LadderPoly ladder_x(uint32_t modes, uint32_t mode, double hbar, double omega) {
  double s = std::sqrt(hbar / (2.0 * omega));
  LadderPoly r(modes);
  r.add_monomial(mode, 1, 0, s);
  r.add_monomial(mode, 0, 1, s);
  return r;
}

LadderPoly ladder_p(uint32_t modes, uint32_t mode, double hbar, double omega) {
  cplx is(0.0, std::sqrt(hbar * omega / 2.0));
  LadderPoly r(modes);
  r.add_monomial(mode, 1, 0, is);
  r.add_monomial(mode, 0, 1, -is);
  return r;
}

// ---------------------------------------------------------------------------

void PhasePoly::add_monomial(const std::array<uint8_t, 2>& xe, const std::array<uint8_t, 2>& pe, cplx c) {
  if (c == cplx{}) return;
  for (auto& t : terms_) {
    if (t.xe == xe && t.pe == pe) {
      t.c += c;
      return;
    }
  }
  terms_.push_back({xe, pe, c});
}

void PhasePoly::add_monomial_1d(int xpow, int ppow, cplx c) {
  add_monomial({static_cast<uint8_t>(xpow), 0}, {static_cast<uint8_t>(ppow), 0}, c);
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  for (const auto& t : o.terms_) add_monomial(t.xe, t.pe, t.c);
  return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly r(a.dims_);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      std::array<uint8_t, 2> xe{}, pe{};
      for (int d = 0; d < 2; ++d) {
        xe[d] = static_cast<uint8_t>(ta.xe[d] + tb.xe[d]);
        pe[d] = static_cast<uint8_t>(ta.pe[d] + tb.pe[d]);
      }
      r.add_monomial(xe, pe, ta.c * tb.c);
    }
  }
  return r;
}

PhasePoly PhasePoly::derivative(const std::array<uint8_t, 2>& xo, const std::array<uint8_t, 2>& po) const {
  PhasePoly r(dims_);
  for (const auto& t : terms_) {
    cplx c = t.c;
    std::array<uint8_t, 2> xe{}, pe{};
    bool dead = false;
    for (uint32_t d = 0; d < dims_ && !dead; ++d) {
      if (t.xe[d] < xo[d] || t.pe[d] < po[d]) {
        dead = true;
        break;
      }
      for (int q = 0; q < xo[d]; ++q) c *= static_cast<double>(t.xe[d] - q);
      for (int q = 0; q < po[d]; ++q) c *= static_cast<double>(t.pe[d] - q);
      xe[d] = static_cast<uint8_t>(t.xe[d] - xo[d]);
      pe[d] = static_cast<uint8_t>(t.pe[d] - po[d]);
    }
    if (!dead) r.add_monomial(xe, pe, c);
  }
  return r;
}

PhasePoly PhasePoly::derivative_1d(int xo, int po) const {
  return derivative({static_cast<uint8_t>(xo), 0}, {static_cast<uint8_t>(po), 0});
}

cplx PhasePoly::eval(const double* x, const double* p) const {
  cplx v{};
  for (const auto& t : terms_) {
    cplx m = t.c;
    for (uint32_t d = 0; d < dims_; ++d) {
      for (int q = 0; q < t.xe[d]; ++q) m *= x[d];
      for (int q = 0; q < t.pe[d]; ++q) m *= p[d];
    }
    v += m;
  }
  return v;
}

int PhasePoly::degree() const {
  int deg = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (uint32_t d = 0; d < dims_; ++d) s += t.xe[d] + t.pe[d];
    deg = std::max(deg, s);
  }
  return deg;
}

double PhasePoly::max_imag_coefficient() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.c.imag()));
  return m;
}

PhasePoly weyl_symbol(const LadderPoly& op, double hbar, double omega) {
  auto weyl = op.s_ordered_coefficients(0.0);
  uint32_t dims = op.modes();
  double ax = omega / std::sqrt(2.0 * hbar * omega);
  double bp = 1.0 / std::sqrt(2.0 * hbar * omega);
  // α = ax·x + i bp·p, ᾱ = ax·x − i bp·p per mode.
  PhasePoly out(dims);
  for (const auto& t : weyl) {
    PhasePoly mono(dims);
    mono.add_monomial({}, {}, t.c);
    for (uint32_t d = 0; d < dims; ++d) {
      for (int q = 0; q < t.dag[d]; ++q) {  // ᾱ_d factors
        PhasePoly f(dims);
        std::array<uint8_t, 2> xe{}, pe{};
        xe[d] = 1;
        f.add_monomial(xe, {}, ax);
        pe[d] = 1;
        f.add_monomial({}, pe, cplx(0.0, -bp));
        mono = mono * f;
      }
      for (int q = 0; q < t.ann[d]; ++q) {  // α_d factors
        PhasePoly f(dims);
        std::array<uint8_t, 2> xe{}, pe{};
        xe[d] = 1;
        f.add_monomial(xe, {}, ax);
        pe[d] = 1;
        f.add_monomial({}, pe, cplx(0.0, bp));
        mono = mono * f;
      }
    }
    out += mono;
  }
  return out;
}

}  // namespace charkin
