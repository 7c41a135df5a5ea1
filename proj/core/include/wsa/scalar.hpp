#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace wsa {

using Rational = mpq_class;

// Index of the symbolic variables a scalar may depend on.
//   VarAlpha : the shifted level alpha = k + (l-1)(m-n)
//   VarC     : the inner-product parameter c
//   VarEps   : the Yangian parameter eps_1 (used by the evaluation-map suites)
enum Var : int { VarAlpha = 0, VarC = 1, VarEps = 2 };

// Exact element of Q[alpha, c, eps1], stored as a sparse monomial -> rational map.
// No zero coefficients are ever stored, so operator== is normal-form equality.
class Scalar {
 public:
  using Mono = std::array<int, 3>;

  Scalar() = default;
  Scalar(long v) { if (v != 0) terms_[{0, 0, 0}] = v; }
  Scalar(const Rational& v) {
    Rational q = v;
    q.canonicalize();
    if (q != 0) terms_[{0, 0, 0}] = q;
  }

  static Scalar var(Var x, int power = 1) {
    Scalar s;
    Mono m{0, 0, 0};
    m[x] = power;
    s.terms_[m] = 1;
    return s;
  }
  static Scalar alpha() { return var(VarAlpha); }
  static Scalar c() { return var(VarC); }
  static Scalar eps() { return var(VarEps); }

  bool is_zero() const { return terms_.empty(); }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, q);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    for (const auto& [m, q] : o.terms_) add_term(m, -q);
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  Scalar operator-() const {
    Scalar r;
    for (const auto& [m, q] : terms_) r.terms_[m] = -q;
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ma, qa] : a.terms_)
      for (const auto& [mb, qb] : b.terms_)
        r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, qa * qb);
    return r;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Division by a nonzero rational constant (used for binomial denominators and
  // the fixed rational values of hbar).
  Scalar div(const Rational& q) const {
    Scalar r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c / q;
    return r;
  }

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

  // Ring map substituting the variable x by the rational value v.
  Scalar subst(Var x, const Rational& v) const {
    Scalar r;
    for (const auto& [m, q] : terms_) {
      Rational coeff = q;
      for (int k = 0; k < m[x]; ++k) coeff *= v;
      Mono mm = m;
      mm[x] = 0;
      r.add_term(mm, coeff);
    }
    return r;
  }
  Scalar specialize_c0() const { return subst(VarC, 0); }

  // Exact division by alpha^k; returns false if not divisible.
  bool divide_alpha_power(int k, Scalar* out) const {
    Scalar r;
    for (const auto& [m, q] : terms_) {
      if (m[VarAlpha] < k) return false;
      Mono mm = m;
      mm[VarAlpha] -= k;
      r.add_term(mm, q);
    }
    *out = r;
    return true;
  }

  const std::map<Mono, Rational>& terms() const { return terms_; }
  void set_term(const Mono& m, const Rational& q) {
    if (q == 0) terms_.erase(m);
    else terms_[m] = q;
  }

  std::string str() const;

 private:
  void add_term(const Mono& m, const Rational& q) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (q != 0) terms_.emplace(m, q);
    } else {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Mono, Rational> terms_;
};

// Binomial coefficient C(a, r) for arbitrary integer a and r >= 0, as an exact rational.
Rational binomial(long a, long r);

}  // namespace wsa
